#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "enumcount/errors.hpp"
#include "enumcount/kontsevich.hpp"
#include "enumcount/verify.hpp"

using namespace enumcount;

namespace {

// Frozen from tests/oracle/oracle.py (plain Python integers).
const char* const kOracleCounts[] = {
    "1",
    "1",
    "12",
    "620",
    "87304",
    "26312976",
    "14616808192",
    "13525751027392",
    "19385778269260800",
    "40739017561997799680",
};
const char* const kOracleN20 = "144283572668576662074341352663659719665386025215315881492480";
const char* const kOracleN30 =
    "10480191498450077690671246927179710304246219778995953860074075465388686636875488974417617104702916473651200";

CurveCountTable parse(const std::string& text) {
    std::istringstream in(text);
    return read_table(in);
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("enumcount_test_" + name);
}

}  // namespace

TEST_CASE("small tables") {
    const auto t = rational_counts(2);
    CHECK(t.d_max() == 2);
    CHECK(t[1] == ExactInteger(1));
    CHECK(t[2] == ExactInteger(1));

    const auto t5 = rational_counts(5);
    CHECK(t5[3] == ExactInteger(12));
    CHECK(t5[4] == ExactInteger(620));
    CHECK(t5[5] == ExactInteger(87304));
}

TEST_CASE("matches the oracle through d = 30") {
    const auto t = rational_counts(30);
    for (long d = 1; d <= 10; ++d) CHECK(t[d].to_string() == kOracleCounts[d - 1]);
    CHECK(t[20].to_string() == kOracleN20);
    CHECK(t[30].to_string() == kOracleN30);
}

TEST_CASE("d_max must be positive") {
    CHECK_THROWS_AS(rational_counts(0), PreconditionError);
    CHECK_THROWS_AS(rational_counts(1).at(2), TableTooShortError);
    CHECK_THROWS_AS(rational_counts(1).at(0), TableTooShortError);
}

TEST_CASE("ordered and unordered pair sums agree for d <= 30") {
    const auto t = rational_counts(30);
    for (long d = 2; d <= 30; ++d) CHECK(rational_count_unordered_sum(d, t) == t[d]);
}

TEST_CASE("growth and determinism") {
    const auto a = rational_counts(40);
    const auto b = rational_counts(40);
    CHECK(a == b);
    for (long d = 3; d < 40; ++d) CHECK(a[d + 1] > a[d]);
    for (long n = 1; n <= 40; n += 7) CHECK(a.truncated(n) == rational_counts(n));
}

TEST_CASE("table invariants") {
    CHECK_THROWS_AS(CurveCountTable({}), InvariantError);
    CHECK_THROWS_AS(CurveCountTable({1, 7}), InvariantError);
    CHECK_THROWS_AS(CurveCountTable({2}), InvariantError);
    CHECK_THROWS_AS(CurveCountTable({1, 1, 0}), InvariantError);
    CHECK_THROWS_AS(CurveCountTable({1, 1, -12}), InvariantError);
    CHECK_NOTHROW(CurveCountTable({1, 1, 12}));
}

TEST_CASE("text format is exact") {
    std::ostringstream out;
    write_table(rational_counts(5), out);
    CHECK(out.str() == "curvecount-table v1\n1\t1\n2\t1\n3\t12\n4\t620\n5\t87304\n");
}

TEST_CASE("save then load is the identity") {
    const auto path = temp_file("roundtrip.txt");
    for (long n : {1L, 5L, 50L}) {
        const auto t = rational_counts(n);
        save_table(t, path);
        CHECK(load_table(path) == t);
    }
    std::filesystem::remove(path);
}

TEST_CASE("load rejects bad files") {
    SUBCASE("forced value contradicted") {
        CHECK_THROWS_AS(parse("curvecount-table v1\n1\t1\n2\t7\n3\t12\n"), InvariantError);
    }
    SUBCASE("truncated mid-line") {
        CHECK_THROWS_AS(parse("curvecount-table v1\n1\t1\n2\t1\n3\t1"), ParseError);
    }
    SUBCASE("header only") {
        CHECK_THROWS_AS(parse("curvecount-table v1\n"), ParseError);
    }
    SUBCASE("empty") {
        CHECK_THROWS_AS(parse(""), ParseError);
    }
    SUBCASE("bad header") {
        CHECK_THROWS_AS(parse("curvecount-table v2\n1\t1\n"), ParseError);
    }
    SUBCASE("gap in d") {
        CHECK_THROWS_AS(parse("curvecount-table v1\n1\t1\n3\t12\n"), InvariantError);
    }
    SUBCASE("exponent notation") {
        try {
            parse("curvecount-table v1\n1\t1\n2\t1\n3\t1.2e1\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 4);
            CHECK(std::string(e.what()).find("field 2") != std::string::npos);
        }
    }
    SUBCASE("space instead of tab") {
        try {
            parse("curvecount-table v1\n1 1\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
        }
    }
    SUBCASE("missing file") {
        CHECK_THROWS(load_table(temp_file("does_not_exist.txt")));
    }
}
