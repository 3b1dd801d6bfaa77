#pragma once

// Internal consistency identities between the count formulas, checked over a
// range of degrees.

#include <optional>
#include <string>
#include <vector>

#include "enumcount/kontsevich.hpp"

namespace enumcount {

struct IdentityResult {
    std::string name;
    std::string description;
    long first_d = 0;  // checked range, inclusive; empty when first_d > last_d
    long last_d = 0;
    std::optional<long> first_failing_d;
    std::string detail;  // what went wrong at first_failing_d

    bool passed() const { return !first_failing_d; }
};

/// Runs every identity for degrees up to d_max. counts must reach d_max.
std::vector<IdentityResult> verify_identities(long d_max, const CurveCountTable& counts);

/// The recursion for N_d summed over unordered pairs {d1, d2}: each pair with
/// d1 < d2 weighted twice by the symmetrized summand, d1 == d2 once.
ExactInteger rational_count_unordered_sum(long d, const CurveCountTable& counts);

/// sum_{d1+d2=d, ordered} C(3d-2, 3d1-1) d1^3 d2^3 N_d1 N_d2.
ExactInteger genus2_leading_binomial_sum(long d, const CurveCountTable& counts);

}  // namespace enumcount
