#include "enumcount/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "enumcount/errors.hpp"
#include "enumcount/genus.hpp"
#include "enumcount/picard.hpp"

namespace enumcount {

namespace {

// check(d) returns an empty string on success, otherwise a description.
using DegreeCheck = std::function<std::string(long)>;

IdentityResult run_check(std::string name, std::string description, long first, long last,
                         const DegreeCheck& check) {
    IdentityResult r{std::move(name), std::move(description), first, last, std::nullopt, {}};
    for (long d = first; d <= last; ++d) {
        std::string failure;
        try {
            failure = check(d);
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        if (!failure.empty()) {
            r.first_failing_d = d;
            r.detail = std::move(failure);
            break;
        }
    }
    return r;
}

std::string mismatch(const std::string& lhs, const std::string& rhs) { return lhs + " != " + rhs; }

}  // namespace

ExactInteger rational_count_unordered_sum(long d, const CurveCountTable& counts) {
    // With C(3d-4, 3d2-2) = C(3d-4, 3d1-2) and C(3d-4, 3d2-1) = C(3d-4, 3d1-3),
    // twice the symmetrized summand of (d1, d2) is
    //   2 d1^2 d2^2 C(3d-4, 3d1-2) - d1 d2 [d1^2 C(3d-4, 3d1-1) + d2^2 C(3d-4, 3d1-3)].
    ExactRational sum;
    for (long d1 = 1; 2 * d1 <= d; ++d1) {
        const long d2 = d - d1;
        const ExactInteger twice_sym =
            ExactInteger(2 * d1 * d1 * d2 * d2) * binomial(3 * d - 4, 3 * d1 - 2) -
            ExactInteger(d1 * d2) * (ExactInteger(d1 * d1) * binomial(3 * d - 4, 3 * d1 - 1) +
                                     ExactInteger(d2 * d2) * binomial(3 * d - 4, 3 * d1 - 3));
        const ExactRational multiplicity = (d1 == d2) ? rational(1, 2) : ExactRational(1);
        sum += multiplicity * ExactRational(twice_sym * counts[d1] * counts[d2]);
    }
    return sum.to_integer();
}

ExactInteger genus2_leading_binomial_sum(long d, const CurveCountTable& counts) {
    ExactInteger sum;
    for (long d1 = 1; d1 < d; ++d1) {
        const long d2 = d - d1;
        sum += binomial(3 * d - 2, 3 * d1 - 1) * ExactInteger(d1 * d2).pow(3) * counts[d1] * counts[d2];
    }
    return sum;
}

std::vector<IdentityResult> verify_identities(long d_max, const CurveCountTable& counts) {
    if (d_max < 1) throw PreconditionError("verify requires d_max >= 1");
    if (d_max > counts.d_max()) throw TableTooShortError("count table shorter than verification range");

    std::vector<IdentityResult> out;

    out.push_back(run_check("binomial-pascal", "C(n,k) = C(n-1,k-1) + C(n-1,k) for n <= 3d", 1, d_max, [](long d) {
        for (long n = 1; n <= 3 * d; ++n)
            for (long k = 0; k <= n; ++k)
                if (binomial(n, k) != binomial(n - 1, k - 1) + binomial(n - 1, k))
                    return "n = " + std::to_string(n) + ", k = " + std::to_string(k);
        return std::string();
    }));

    out.push_back(run_check("counts-forced-values", "N_1 = N_2 = 1", 1, std::min(d_max, 2L), [&](long d) {
        return counts[d] == ExactInteger(1) ? std::string() : mismatch(counts[d].to_string(), "1");
    }));

    out.push_back(run_check("counts-symmetrization", "ordered-pair recursion equals unordered-pair form", 2, d_max,
                            [&](long d) {
                                const auto unordered = rational_count_unordered_sum(d, counts);
                                return unordered == counts[d]
                                           ? std::string()
                                           : mismatch(counts[d].to_string(), unordered.to_string());
                            }));

    out.push_back(run_check("counts-monotone", "N_{d+1} > N_d for d >= 3", 3, d_max - 1, [&](long d) {
        return counts[d + 1] > counts[d] ? std::string() : "N_" + std::to_string(d + 1) + " <= N_" + std::to_string(d);
    }));

    out.push_back(run_check("coefficients-overdetermined", "x_i and y_i determinations of a_i agree", 3, d_max,
                            [](long d) {
                                for (const auto& det : triple_point_determinations(d))
                                    if (det.from_x != det.from_y)
                                        return "a_" + std::to_string(det.i) + ": " +
                                               mismatch(det.from_x.to_string(), det.from_y.to_string());
                                return std::string();
                            }));

    out.push_back(run_check("coefficients-closed-form", "solved (a, a_i) equal the closed forms", 3, d_max, [](long d) {
        const auto solved = triple_point_coefficient_solve(d);
        const auto closed = triple_point_coefficients_closed_form(d);
        if (solved.a != closed.a) return "a: " + mismatch(solved.a.to_string(), closed.a.to_string());
        for (std::size_t i = 0; i < closed.a_i.size(); ++i)
            if (solved.a_i[i] != closed.a_i[i])
                return "a_" + std::to_string(i + 1) + ": " +
                       mismatch(solved.a_i[i].to_string(), closed.a_i[i].to_string());
        return std::string();
    }));

    out.push_back(run_check("triple-two-route", "triple-point count equals Z . H^{3d-2}", 3, d_max, [&](long d) {
        const ExactRational direct = triple_point_curve_count(d, counts);
        const ExactRational via_class = intersect_top(triple_point_coefficient_solve(d).as_class(), counts);
        return direct == via_class ? std::string() : mismatch(direct.to_string(), via_class.to_string());
    }));

    out.push_back(run_check("triple-sum-convention", "ordered-pair correction equals K^i-indexed correction", 3,
                            d_max, [&](long d) {
                                const auto coeffs = triple_point_coefficients_closed_form(d);
                                ExactRational indexed;
                                for (long i = 1; i <= d / 2; ++i)
                                    indexed -= coeffs.a_i[i - 1] * boundary_intersection(d, i, counts);
                                const auto ordered = triple_point_correction(d, counts);
                                return ordered == indexed ? std::string()
                                                          : mismatch(ordered.to_string(), indexed.to_string());
                            }));

    out.push_back(run_check("triple-integrality", "triple-point count is a nonnegative integer", 3, d_max,
                            [&](long d) {
                                const auto n = triple_point_curve_count(d, counts);
                                return n.sign() >= 0 ? std::string() : "negative: " + n.to_string();
                            }));

    out.push_back(run_check("genus2-weight-algebra",
                            "d p^2 - 6pd + 18p - 4d = d(p-1)(p-2) - 3p(d-6) - 6d for 1 <= p <= d^2/4", 4, d_max,
                            [](long d) {
                                for (long p = 1; 4 * p <= d * d; ++p) {
                                    const ExactInteger lhs(d * p * p - 6 * p * d + 18 * p - 4 * d);
                                    const ExactInteger rhs(d * (p - 1) * (p - 2) - 3 * p * (d - 6) - 6 * d);
                                    if (lhs != rhs) return "p = " + std::to_string(p);
                                }
                                return std::string();
                            }));

    out.push_back(run_check("genus2-decomposition", "case (i) + case (ii) total equals the closed formula", 4, d_max,
                            [&](long d) {
                                const auto b = genus2_breakdown(d, counts);
                                if (b.moduli_intersection != b.case_i + b.case_ii) return std::string("sum");
                                const auto direct = genus2_count(d, counts);
                                return b.total == direct ? std::string()
                                                         : mismatch(b.total.to_string(), direct.to_string());
                            }));

    out.push_back(run_check("genus2-positivity", "N_{2,d} > 0", 4, d_max, [&](long d) {
        const auto n = genus2_count(d, counts);
        return n.sign() > 0 ? std::string() : "not positive: " + n.to_string();
    }));

    out.push_back(run_check("gterm-g2-collapse", "multinomial sum for g = 2 equals the binomial sum", 2, d_max,
                            [&](long d) {
                                const auto term = leading_genus_term(2, d, counts);
                                const auto binom = genus2_leading_binomial_sum(d, counts);
                                return term == binom ? std::string() : mismatch(term.to_string(), binom.to_string());
                            }));

    out.push_back(run_check("gterm-distinct-from-case-i", "C(p,3) weight differs from p^3/6 weight at d = 4", 4,
                            std::min(d_max, 4L), [&](long d) {
                                ExactRational binomial_weight;
                                for (long d1 = 1; d1 < d; ++d1) {
                                    const long d2 = d - d1;
                                    binomial_weight += ExactRational(binomial(d1 * d2, 3) *
                                                                     binomial(3 * d - 2, 3 * d1 - 1) * counts[d1] *
                                                                     counts[d2]);
                                }
                                const ExactRational cube_weight =
                                    rational(genus2_leading_binomial_sum(d, counts), 6);
                                return binomial_weight != cube_weight ? std::string() : "weights coincide";
                            }));

    out.push_back(run_check("table-round-trip", "write/read of the count table is the identity", 1, d_max,
                            [&](long d) {
                                const auto t = counts.truncated(d);
                                std::stringstream buf;
                                write_table(t, buf);
                                return read_table(buf) == t ? std::string() : "round trip differs";
                            }));

    return out;
}

}  // namespace enumcount
