#pragma once

// Divisor classes on the space of degree-d genus-0 stable maps to the plane.
//
// Pic tensor Q is spanned by H (maps whose image meets a fixed point) and the
// boundary components K^i, 1 <= i <= d/2, where the domain splits into two
// rational curves of degrees i and d - i.

#include <map>
#include <vector>

#include "enumcount/exactnum.hpp"
#include "enumcount/kontsevich.hpp"

namespace enumcount {

class DivisorClass {
public:
    /// The zero class in degree d >= 2.
    explicit DivisorClass(long degree);

    static DivisorClass hyperplane(long degree);
    static DivisorClass boundary(long degree, long i);

    long degree() const { return degree_; }
    long max_boundary_index() const { return degree_ / 2; }

    const ExactRational& coef_H() const { return coef_h_; }
    /// Coefficient of K^i; zero when unset. PreconditionError outside 1..d/2.
    ExactRational coef_K(long i) const;

    DivisorClass& set_coef_H(ExactRational c);
    DivisorClass& set_coef_K(long i, ExactRational c);

    DivisorClass& operator+=(const DivisorClass& rhs);
    DivisorClass& operator*=(const ExactRational& s);
    friend DivisorClass operator+(DivisorClass lhs, const DivisorClass& rhs) { return lhs += rhs; }
    friend DivisorClass operator*(const ExactRational& s, DivisorClass c) { return c *= s; }

    friend bool operator==(const DivisorClass& a, const DivisorClass& b);

private:
    void check_index(long i) const;

    long degree_;
    ExactRational coef_h_;
    std::map<long, ExactRational> coef_k_;  // zero entries are erased
};

/// K^i . H^{3d-2}; halved when i == d/2 since the two branches are then
/// indistinguishable.
ExactRational boundary_intersection(long d, long i, const CurveCountTable& counts);

/// Top intersection class . H^{3d-2}, linear in the class with H^{3d-1} = N_d.
ExactRational intersect_top(const DivisorClass& cls, const CurveCountTable& counts);

/// Coefficients of the triple-point divisor  Z = a H + sum_i a_i K^i.
struct DegenerationCoefficients {
    long degree = 0;
    ExactRational a;
    std::vector<ExactRational> a_i;  // a_i[i - 1] for i = 1 .. degree/2

    DivisorClass as_class() const;
};

/// a_i as determined separately by the x_i and y_i coefficient equations.
struct BoundaryDetermination {
    long i = 0;
    ExactRational from_x;
    ExactRational from_y;
};

/// Both determinations of every a_i, before they are reconciled.
std::vector<BoundaryDetermination> triple_point_determinations(long d);

/// Solves for the triple-point divisor class by matching the k, x_i and y_i
/// coefficients of two expressions for C . lambda^* Z on a one-parameter family:
///
///   2adk - sum a (i^2 x_i + (d-i)^2 y_i) + sum a_i (x_i + y_i)
///     = (d-1)(d-2)(d-3) k + sum r(i) x_i + sum r(d-i) y_i,
///   r(j) = -j^2 d^2 / 2 + 3 j^2 d - j d / 2 - 1 + 3 j - 5 j^2.
///
/// Each a_i is fixed twice (by x_i and by y_i); InconsistencyError if the
/// two disagree. d >= 3.
DegenerationCoefficients triple_point_coefficient_solve(long d);

/// Closed forms a = (d-1)(d-2)(d-3)/(2d), a_i = -(i(d-i)(d-6) + 2d)/(2d).
DegenerationCoefficients triple_point_coefficients_closed_form(long d);

/// Number of rational degree-d plane curves through 3d - 2 general points
/// with one triple point and otherwise only nodes:
///
///   a N_d - sum_{d1+d2=d, ordered} (d1 d2 (d-6) + 2d)/(4d) C(3d-2, 3d1-1) d1 d2 N_d1 N_d2.
///
/// Requires 3 <= d <= counts.d_max(); IntegralityError if the value is not a
/// nonnegative integer.
ExactInteger triple_point_curve_count(long d, const CurveCountTable& counts);

/// The correction sum of triple_point_curve_count (the ordered-pair sum,
/// without the leading a N_d).
ExactRational triple_point_correction(long d, const CurveCountTable& counts);

}  // namespace enumcount
