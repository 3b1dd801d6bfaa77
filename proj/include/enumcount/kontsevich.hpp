#pragma once

// Rational plane curve counts N_d: the number of rational degree-d plane
// curves through 3d - 1 general points.

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "enumcount/exactnum.hpp"

namespace enumcount {

/// N_1 .. N_{d_max}. Immutable once built.
class CurveCountTable {
public:
    /// Validates: nonempty, N_1 = N_2 = 1, every entry positive.
    /// Throws InvariantError otherwise.
    explicit CurveCountTable(std::vector<ExactInteger> values);

    long d_max() const { return static_cast<long>(values_.size()); }

    /// N_d for 1 <= d <= d_max(); TableTooShortError past the end.
    const ExactInteger& at(long d) const;
    const ExactInteger& operator[](long d) const { return values_[d - 1]; }

    /// Entries for d = 1 .. d_max().
    std::span<const ExactInteger> values() const { return values_; }

    /// First n entries as a table of its own.
    CurveCountTable truncated(long n) const;

    friend bool operator==(const CurveCountTable&, const CurveCountTable&) = default;

private:
    std::vector<ExactInteger> values_;
};

/// N_d = sum over ordered (d1, d2), d1 + d2 = d, of
///   N_d1 N_d2 [d1^2 d2^2 C(3d-4, 3d1-2) - d1^3 d2 C(3d-4, 3d1-1)].
CurveCountTable rational_counts(long d_max);

/// The summand of the recursion for one ordered split (d1, d - d1), without
/// the N_d1 N_d2 factor.
ExactInteger recursion_weight(long d1, long d2);

inline constexpr const char* kTableHeader = "curvecount-table v1";

void write_table(const CurveCountTable& table, std::ostream& out);
CurveCountTable read_table(std::istream& in);

void save_table(const CurveCountTable& table, const std::filesystem::path& path);
/// Throws ParseError on malformed input, InvariantError on a table that
/// parses but contradicts the recursion's forced values.
CurveCountTable load_table(const std::filesystem::path& path);

}  // namespace enumcount
