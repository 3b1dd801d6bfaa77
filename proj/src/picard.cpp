#include "enumcount/picard.hpp"

#include <string>

#include "enumcount/errors.hpp"

namespace enumcount {

namespace {

void require_degree(long d, long min_degree, const char* what) {
    if (d < min_degree)
        throw PreconditionError(std::string(what) + " requires d >= " + std::to_string(min_degree) + ", got " +
                                std::to_string(d));
}

void require_table(long d, const CurveCountTable& counts) {
    if (d > counts.d_max())
        throw TableTooShortError("degree " + std::to_string(d) + " exceeds count table d_max = " +
                                 std::to_string(counts.d_max()));
}

// Right-hand coefficient of x_i (j = i) or y_i (j = d - i) from the
// triple-point formula.
ExactRational triple_point_rhs(long j, long d) {
    const ExactRational half = rational(1, 2);
    return -half * ExactRational(j * j * d * d) + ExactRational(3 * j * j * d) - half * ExactRational(j * d) -
           ExactRational(1) + ExactRational(3 * j) - ExactRational(5 * j * j);
}

}  // namespace

DivisorClass::DivisorClass(long degree) : degree_(degree) { require_degree(degree, 2, "DivisorClass"); }

DivisorClass DivisorClass::hyperplane(long degree) { return DivisorClass(degree).set_coef_H(1); }

DivisorClass DivisorClass::boundary(long degree, long i) {
    DivisorClass c(degree);
    c.set_coef_K(i, 1);
    return c;
}

void DivisorClass::check_index(long i) const {
    if (i < 1 || i > max_boundary_index())
        throw PreconditionError("boundary index " + std::to_string(i) + " outside 1.." +
                                std::to_string(max_boundary_index()) + " for degree " + std::to_string(degree_));
}

ExactRational DivisorClass::coef_K(long i) const {
    check_index(i);
    const auto it = coef_k_.find(i);
    return it == coef_k_.end() ? ExactRational() : it->second;
}

DivisorClass& DivisorClass::set_coef_H(ExactRational c) {
    coef_h_ = std::move(c);
    return *this;
}

DivisorClass& DivisorClass::set_coef_K(long i, ExactRational c) {
    check_index(i);
    if (c.sign() == 0)
        coef_k_.erase(i);
    else
        coef_k_[i] = std::move(c);
    return *this;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& rhs) {
    if (rhs.degree_ != degree_) throw PreconditionError("adding divisor classes of different degree");
    coef_h_ += rhs.coef_h_;
    for (const auto& [i, c] : rhs.coef_k_) set_coef_K(i, coef_K(i) + c);
    return *this;
}

DivisorClass& DivisorClass::operator*=(const ExactRational& s) {
    coef_h_ *= s;
    if (s.sign() == 0) {
        coef_k_.clear();
        return *this;
    }
    for (auto& [i, c] : coef_k_) c *= s;
    return *this;
}

bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.degree_ == b.degree_ && a.coef_h_ == b.coef_h_ && a.coef_k_ == b.coef_k_;
}

ExactRational boundary_intersection(long d, long i, const CurveCountTable& counts) {
    require_degree(d, 2, "boundary_intersection");
    if (i < 1 || i > d / 2)
        throw PreconditionError("boundary index " + std::to_string(i) + " outside 1.." + std::to_string(d / 2));
    require_table(d, counts);
    const ExactInteger full = binomial(3 * d - 2, 3 * i - 1) * ExactInteger(i * (d - i)) * counts[i] * counts[d - i];
    if (2 * i == d) return rational(full, 2);
    return full;
}

ExactRational intersect_top(const DivisorClass& cls, const CurveCountTable& counts) {
    const long d = cls.degree();
    require_table(d, counts);
    ExactRational total = cls.coef_H() * ExactRational(counts[d]);
    for (long i = 1; i <= cls.max_boundary_index(); ++i) {
        const ExactRational c = cls.coef_K(i);
        if (c.sign() != 0) total += c * boundary_intersection(d, i, counts);
    }
    return total;
}

DivisorClass DegenerationCoefficients::as_class() const {
    DivisorClass c(degree);
    c.set_coef_H(a);
    for (std::size_t i = 0; i < a_i.size(); ++i) c.set_coef_K(static_cast<long>(i) + 1, a_i[i]);
    return c;
}

std::vector<BoundaryDetermination> triple_point_determinations(long d) {
    require_degree(d, 3, "triple_point_coefficient_solve");
    // k-coefficient: 2 a d = (d-1)(d-2)(d-3)
    const ExactRational a = rational((d - 1) * (d - 2) * (d - 3), 2 * d);
    std::vector<BoundaryDetermination> out;
    for (long i = 1; i <= d / 2; ++i) {
        // x_i: a_i - a i^2 = r(i);  y_i: a_i - a (d-i)^2 = r(d-i)
        out.push_back({i, triple_point_rhs(i, d) + a * ExactRational(i * i),
                       triple_point_rhs(d - i, d) + a * ExactRational((d - i) * (d - i))});
    }
    return out;
}

DegenerationCoefficients triple_point_coefficient_solve(long d) {
    DegenerationCoefficients out;
    out.degree = d;
    out.a = rational((d - 1) * (d - 2) * (d - 3), 2 * d);
    for (auto& det : triple_point_determinations(d)) {
        if (det.from_x != det.from_y)
            throw InconsistencyError("degree " + std::to_string(d) + ": a_" + std::to_string(det.i) + " is " +
                                     det.from_x.to_string() + " from x_i but " + det.from_y.to_string() +
                                     " from y_i");
        out.a_i.push_back(std::move(det.from_x));
    }
    return out;
}

DegenerationCoefficients triple_point_coefficients_closed_form(long d) {
    require_degree(d, 3, "triple_point_coefficients_closed_form");
    DegenerationCoefficients out;
    out.degree = d;
    out.a = rational((d - 1) * (d - 2) * (d - 3), 2 * d);
    for (long i = 1; i <= d / 2; ++i) out.a_i.push_back(-rational(i * (d - i) * (d - 6) + 2 * d, 2 * d));
    return out;
}

ExactRational triple_point_correction(long d, const CurveCountTable& counts) {
    require_degree(d, 3, "triple_point_correction");
    require_table(d, counts);
    ExactRational sum;
    for (long d1 = 1; d1 < d; ++d1) {
        const long d2 = d - d1;
        const ExactInteger term =
            binomial(3 * d - 2, 3 * d1 - 1) * ExactInteger(d1 * d2) * counts[d1] * counts[d2];
        sum += rational(d1 * d2 * (d - 6) + 2 * d, 4 * d) * ExactRational(term);
    }
    return sum;
}

ExactInteger triple_point_curve_count(long d, const CurveCountTable& counts) {
    require_degree(d, 3, "triple_point_curve_count");
    require_table(d, counts);
    const ExactRational value =
        rational((d - 1) * (d - 2) * (d - 3), 2 * d) * ExactRational(counts[d]) - triple_point_correction(d, counts);
    if (!value.is_integer() || value.sign() < 0)
        throw IntegralityError("triple-point count for d = " + std::to_string(d) +
                               " is not a nonnegative integer: " + value.to_string());
    return value.to_integer();
}

}  // namespace enumcount
