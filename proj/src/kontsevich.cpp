#include "enumcount/kontsevich.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "enumcount/errors.hpp"

namespace enumcount {

CurveCountTable::CurveCountTable(std::vector<ExactInteger> values) : values_(std::move(values)) {
    if (values_.empty()) throw InvariantError("count table is empty");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        const long d = static_cast<long>(i) + 1;
        if (values_[i].sign() <= 0)
            throw InvariantError("N_" + std::to_string(d) + " = " + values_[i].to_string() + " is not positive");
        if (d <= 2 && values_[i] != ExactInteger(1))
            throw InvariantError("N_" + std::to_string(d) + " must be 1, got " + values_[i].to_string());
    }
}

const ExactInteger& CurveCountTable::at(long d) const {
    if (d < 1 || d > d_max())
        throw TableTooShortError("N_" + std::to_string(d) + " requested from a table with d_max = " +
                                 std::to_string(d_max()));
    return values_[d - 1];
}

CurveCountTable CurveCountTable::truncated(long n) const {
    if (n < 1 || n > d_max()) throw TableTooShortError("cannot truncate table to d_max = " + std::to_string(n));
    return CurveCountTable({values_.begin(), values_.begin() + n});
}

ExactInteger recursion_weight(long d1, long d2) {
    const long d = d1 + d2;
    const ExactInteger a = ExactInteger(d1 * d1 * d2 * d2) * binomial(3 * d - 4, 3 * d1 - 2);
    const ExactInteger b = ExactInteger(d1 * d1 * d1 * d2) * binomial(3 * d - 4, 3 * d1 - 1);
    return a - b;
}

CurveCountTable rational_counts(long d_max) {
    if (d_max < 1) throw PreconditionError("d_max must be at least 1");
    std::vector<ExactInteger> n;
    n.reserve(static_cast<std::size_t>(d_max));
    n.emplace_back(1);
    for (long d = 2; d <= d_max; ++d) {
        ExactInteger sum;
        for (long d1 = 1; d1 < d; ++d1) {
            const long d2 = d - d1;
            sum += recursion_weight(d1, d2) * n[d1 - 1] * n[d2 - 1];
        }
        n.push_back(std::move(sum));
    }
    return CurveCountTable(std::move(n));
}

void write_table(const CurveCountTable& table, std::ostream& out) {
    out << kTableHeader << '\n';
    long d = 1;
    for (const auto& v : table.values()) out << d++ << '\t' << v.to_string() << '\n';
}

CurveCountTable read_table(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    std::vector<ExactInteger> values;

    auto next_line = [&]() -> bool {
        if (!std::getline(in, line)) return false;
        ++lineno;
        if (in.eof()) throw ParseError(lineno, "truncated: missing final newline");
        return true;
    };

    if (!next_line()) throw ParseError(1, "empty file, expected header '" + std::string(kTableHeader) + "'");
    if (line != kTableHeader) throw ParseError(lineno, "bad header '" + line + "'");

    while (next_line()) {
        const auto tab = line.find('\t');
        if (tab == std::string::npos) throw ParseError(lineno, "expected 'd<TAB>N_d'");
        const std::string_view d_field(line.data(), tab);
        const std::string_view n_field(line.data() + tab + 1, line.size() - tab - 1);

        ExactInteger d;
        ExactInteger value;
        try {
            d = ExactInteger::from_decimal(d_field);
        } catch (const std::invalid_argument&) {
            throw ParseError(lineno, "field 1 (d): not a decimal integer: '" + std::string(d_field) + "'");
        }
        try {
            value = ExactInteger::from_decimal(n_field);
        } catch (const std::invalid_argument&) {
            throw ParseError(lineno, "field 2 (N_d): not a decimal integer: '" + std::string(n_field) + "'");
        }
        const auto expected = static_cast<long>(values.size()) + 1;
        if (d != ExactInteger(expected))
            throw InvariantError("line " + std::to_string(lineno) + ": expected d = " + std::to_string(expected) +
                                 ", got " + d.to_string() + " (table must be contiguous from 1)");
        values.push_back(std::move(value));
    }
    if (values.empty()) throw ParseError(0, "table has no entries");
    return CurveCountTable(std::move(values));
}

void save_table(const CurveCountTable& table, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    write_table(table, out);
    out.flush();
    if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

CurveCountTable load_table(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return read_table(in);
}

}  // namespace enumcount
