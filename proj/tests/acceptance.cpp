// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "enumcount/cli.hpp"
#include "enumcount/genus.hpp"
#include "enumcount/kontsevich.hpp"
#include "enumcount/picard.hpp"
#include "enumcount/verify.hpp"

using namespace enumcount;

namespace {

struct Criterion {
    std::string name;
    std::function<std::string()> check;  // empty string = pass
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string expect(bool ok, const std::string& what) { return ok ? std::string() : what; }

// N_3, N_4, N_5 from tests/oracle/oracle.py.
std::string counts_regression() {
    const auto start = std::chrono::steady_clock::now();
    const auto t = rational_counts(100);
    const double elapsed = seconds_since(start);
    if (t[1] != ExactInteger(1) || t[2] != ExactInteger(1)) return "forced values N_1, N_2";
    if (t[3] != ExactInteger(12)) return "N_3 = " + t[3].to_string();
    if (t[4] != ExactInteger(620)) return "N_4 = " + t[4].to_string();
    if (t[5] != ExactInteger(87304)) return "N_5 = " + t[5].to_string();
    return expect(elapsed < 10.0, "d <= 100 took " + std::to_string(elapsed) + " s (limit 10 s)");
}

std::string coefficient_solve() {
    for (long d = 3; d <= 40; ++d) {
        for (const auto& det : triple_point_determinations(d))
            if (det.from_x != det.from_y) return "x/y inconsistent at d = " + std::to_string(d);
        const auto solved = triple_point_coefficient_solve(d);
        const auto closed = triple_point_coefficients_closed_form(d);
        if (solved.a != closed.a || solved.a_i != closed.a_i) return "closed form mismatch at d = " + std::to_string(d);
    }
    return {};
}

std::string triple_point_counts() {
    const auto t = rational_counts(25);
    if (triple_point_curve_count(3, t) != ExactInteger(0)) return "Ntilde_3 != 0";
    if (triple_point_curve_count(4, t) != ExactInteger(60)) return "Ntilde_4 != 60";
    if (triple_point_curve_count(5, t) != ExactInteger(56400)) return "Ntilde_5 != 56400";
    for (long d = 3; d <= 25; ++d) {
        const auto direct = triple_point_curve_count(d, t);
        if (direct.sign() < 0) return "negative at d = " + std::to_string(d);
        if (intersect_top(triple_point_coefficient_solve(d).as_class(), t) != ExactRational(direct))
            return "routes disagree at d = " + std::to_string(d);
    }
    return {};
}

std::string genus2_identity() {
    const auto start = std::chrono::steady_clock::now();
    const auto t = rational_counts(25);
    for (long d = 4; d <= 25; ++d)
        if (genus2_breakdown(d, t).total != genus2_count(d, t)) return "mismatch at d = " + std::to_string(d);
    if (genus2_count(4, t) != ExactInteger(1104)) return "N_{2,4} != 1104";
    if (genus2_count(5, t) != ExactInteger(558720)) return "N_{2,5} != 558720";
    const double elapsed = seconds_since(start);
    return expect(elapsed < 5.0, "took " + std::to_string(elapsed) + " s (limit 5 s)");
}

std::string higher_genus_term() {
    const auto t = rational_counts(15);
    if (leading_genus_term(2, 2, t) != ExactInteger(6)) return "term(2,2) != 6";
    if (leading_genus_term(3, 4, t) != ExactInteger(2520)) return "term(3,4) != 2520";
    for (long d = 2; d <= 15; ++d)
        if (leading_genus_term(2, d, t) != genus2_leading_binomial_sum(d, t))
            return "g = 2 collapse fails at d = " + std::to_string(d);
    return {};
}

std::string serialization() {
    const auto t = rational_counts(50);
    const auto path = std::filesystem::temp_directory_path() / "enumcount_acceptance_table.txt";
    save_table(t, path);
    const bool same = load_table(path) == t;
    std::ostringstream first;
    write_table(load_table(path), first);
    std::ostringstream second;
    write_table(t, second);
    std::filesystem::remove(path);
    if (!same || first.str() != second.str()) return "round trip not bit-exact";

    std::ostringstream out;
    std::ostringstream err;
    const int status = cli::main_entry({"enumcount", "verify", "15", "--no-header"}, out, err);
    return expect(status == 0, "verify 15 exited " + std::to_string(status) + ": " + err.str());
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"N_d regression (N_1..N_5, d <= 100 under 10 s)", counts_regression},
        {"coefficient solve exact for 3 <= d <= 40", coefficient_solve},
        {"triple-point counts and two-route agreement for 3 <= d <= 25", triple_point_counts},
        {"genus-2 breakdown equals closed formula for 4 <= d <= 25 (under 5 s)", genus2_identity},
        {"higher-genus term values and g = 2 collapse for d <= 15", higher_genus_term},
        {"table round trip at d_max = 50 and verify 15 exits 0", serialization},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        std::string failure;
        try {
            failure = c.check();
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        if (failure.empty()) {
            std::cout << "PASS  " << c.name << '\n';
        } else {
            ++failures;
            std::cout << "FAIL  " << c.name << ": " << failure << '\n';
        }
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
