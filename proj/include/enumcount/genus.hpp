#pragma once

// Genus-2 plane curve counts with fixed generic complex structure, and the
// all-positive-degree term of the higher-genus count.

#include "enumcount/exactnum.hpp"
#include "enumcount/kontsevich.hpp"

namespace enumcount {

/// |Aut| of the degenerate genus-2 curve (two rational components meeting in
/// three points) and of a generic genus-2 curve.
inline constexpr long kAutDegenerateGenus2 = 2;
inline constexpr long kAutGenericGenus2 = 2;

/// The count assembled from the two kinds of limit stable maps on the
/// degenerate curve: both components mapping with positive degree (case_i),
/// or one component contracted onto a triple point (case_ii).
struct Genus2Breakdown {
    long degree = 0;
    ExactRational case_i;
    ExactRational case_ii;
    ExactRational moduli_intersection;  // case_i + case_ii
    long aut_c0 = kAutDegenerateGenus2;
    long aut_generic = kAutGenericGenus2;
    ExactInteger total;  // aut_c0 / aut_generic * moduli_intersection
};

/// N_{2,d} = (d-1)(d-2)(d-3)/(2d) N_d
///         + sum_{d1+d2=d, ordered} (p(p d - 6d + 18) - 4d)/(12d) C(3d-2, 3d1-1) p N_d1 N_d2,
/// with p = d1 d2. Requires 4 <= d <= counts.d_max().
ExactInteger genus2_count(long d, const CurveCountTable& counts);

/// Same number via case_i = 1/2 sum_{ordered} C(d1 d2, 3) C(3d-2, 3d1-1) N_d1 N_d2
/// and case_ii = 1/2 * 2 * (triple-point count).
Genus2Breakdown genus2_breakdown(long d, const CurveCountTable& counts);

/// (3d - 2(g-1))! * sum over ordered compositions d_1 + ... + d_{2(g-1)} = d,
/// d_i >= 1, of prod d_i^3 N_{d_i} / (3 d_i - 1)!.
/// Requires g >= 2 and 2(g-1) <= d <= counts.d_max().
ExactInteger leading_genus_term(long g, long d, const CurveCountTable& counts);

}  // namespace enumcount
