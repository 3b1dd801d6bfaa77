#include "enumcount/genus.hpp"

#include <string>
#include <vector>

#include "enumcount/errors.hpp"
#include "enumcount/picard.hpp"

namespace enumcount {

namespace {

void require_genus2_range(long d, const CurveCountTable& counts) {
    if (d < 4) throw PreconditionError("genus-2 count requires d >= 4, got " + std::to_string(d));
    if (d > counts.d_max())
        throw TableTooShortError("degree " + std::to_string(d) + " exceeds count table d_max = " +
                                 std::to_string(counts.d_max()));
}

ExactInteger positive_integer(const ExactRational& value, const std::string& what) {
    if (!value.is_integer() || value.sign() <= 0)
        throw IntegralityError(what + " is not a positive integer: " + value.to_string());
    return value.to_integer();
}

}  // namespace

ExactInteger genus2_count(long d, const CurveCountTable& counts) {
    require_genus2_range(d, counts);
    ExactRational value = rational((d - 1) * (d - 2) * (d - 3), 2 * d) * ExactRational(counts[d]);
    for (long d1 = 1; d1 < d; ++d1) {
        const long d2 = d - d1;
        const long p = d1 * d2;
        const ExactInteger term = binomial(3 * d - 2, 3 * d1 - 1) * ExactInteger(p) * counts[d1] * counts[d2];
        value += rational(p * (p * d - 6 * d + 18) - 4 * d, 12 * d) * ExactRational(term);
    }
    return positive_integer(value, "N_{2," + std::to_string(d) + "}");
}

Genus2Breakdown genus2_breakdown(long d, const CurveCountTable& counts) {
    require_genus2_range(d, counts);
    Genus2Breakdown out;
    out.degree = d;

    ExactInteger pairs;
    for (long d1 = 1; d1 < d; ++d1) {
        const long d2 = d - d1;
        pairs += binomial(d1 * d2, 3) * binomial(3 * d - 2, 3 * d1 - 1) * counts[d1] * counts[d2];
    }
    const ExactRational inv_aut = rational(1, out.aut_c0);
    out.case_i = inv_aut * ExactRational(pairs);
    out.case_ii = inv_aut * ExactRational(2) * ExactRational(triple_point_curve_count(d, counts));
    out.moduli_intersection = out.case_i + out.case_ii;
    out.total = positive_integer(rational(out.aut_c0, out.aut_generic) * out.moduli_intersection,
                                 "genus-2 breakdown total for d = " + std::to_string(d));
    return out;
}

ExactInteger leading_genus_term(long g, long d, const CurveCountTable& counts) {
    if (g < 2) throw PreconditionError("leading_genus_term requires g >= 2, got " + std::to_string(g));
    const long parts = 2 * (g - 1);
    if (d < parts)
        throw PreconditionError("leading_genus_term requires d >= 2(g-1) = " + std::to_string(parts) + ", got " +
                                std::to_string(d));
    if (d > counts.d_max())
        throw TableTooShortError("degree " + std::to_string(d) + " exceeds count table d_max = " +
                                 std::to_string(counts.d_max()));

    // Multiplying through by (3d - parts)! = (sum (3 d_i - 1))! turns each
    // composition's product into a multinomial coefficient times prod d_i^3 N_{d_i}.
    // Accumulate over compositions by dynamic programming on (parts used, degree
    // used) with the denominators kept as exact rationals.
    std::vector<ExactRational> weight(static_cast<std::size_t>(d) + 1);
    for (long k = 1; k <= d; ++k)
        weight[k] = rational(ExactInteger(k * k * k) * counts[k], factorial(3 * k - 1));

    // layer[s] = sum over compositions of s into the parts placed so far
    std::vector<ExactRational> layer(static_cast<std::size_t>(d) + 1);
    layer[0] = 1;
    for (long part = 0; part < parts; ++part) {
        std::vector<ExactRational> next(static_cast<std::size_t>(d) + 1);
        // remaining parts each need degree >= 1
        const long remaining = parts - part - 1;
        for (long s = part; s + remaining < d; ++s) {
            if (layer[s].sign() == 0) continue;
            for (long k = 1; s + k + remaining <= d; ++k) next[s + k] += layer[s] * weight[k];
        }
        layer = std::move(next);
    }
    const ExactRational value = ExactRational(factorial(3 * d - parts)) * layer[d];
    if (!value.is_integer() || value.sign() <= 0)
        throw IntegralityError("leading genus term (g = " + std::to_string(g) + ", d = " + std::to_string(d) +
                               ") is not a positive integer: " + value.to_string());
    return value.to_integer();
}

}  // namespace enumcount
