#include <doctest.h>

#include <cstdlib>

#include "helpers.hpp"
#include "runslab/analysis.hpp"
#include "runslab/bounds.hpp"

using namespace runslab;
using runslab::testing::W;

TEST_CASE("rational arithmetic") {
    Rational a(6, -8);
    CHECK(a.numerator() == -3);
    CHECK(a.denominator() == 4);
    CHECK(a.str() == "-3/4");
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) * Rational(3, 7) == Rational(1, 7));
    CHECK(Rational(1, 3) / Rational(2, 3) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 2) < Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
    CHECK(Rational(1, 3).truncated_decimal(5) == "0.33333");
    CHECK(Rational(2, 3).truncated_decimal(3) == "0.666");
    CHECK(Rational(31, 32).truncated_decimal(5) == "0.96875");
    CHECK(Rational(31, 32).terminates_within(5));
    CHECK_FALSE(Rational(31, 32).terminates_within(4));
    CHECK_FALSE(Rational(1, 3).terminates_within(40));
}

TEST_CASE("limit_upper_bound examples") {
    CHECK(limit_upper_bound(1, 63) == Rational(60, 61));
    CHECK(limit_upper_bound(20, 462) == Rational(22, 23));
    for (int d = 1; d < 10; ++d)
        CHECK(limit_upper_bound(d, d + 3) == Rational(1, d + 1));
    CHECK_THROWS_AS(limit_upper_bound(3, 5), DomainError);
    CHECK(limit_upper_bound(3, 6) == Rational(1, 4));
}

TEST_CASE("printed table digits") {
    const auto& rows = published_table();
    REQUIRE(rows.size() == 20);
    for (const auto& row : rows) {
        INFO("d=" << row.d);
        CHECK(matches_printed_decimal(limit_upper_bound(row.d, row.m), row.decimal));
    }
    CHECK(limit_upper_bound(10, 274).truncated_decimal(11) == "0.96323529411");
    CHECK(limit_upper_bound(6, 194) == Rational(31, 32));
    CHECK(limit_upper_bound(9, 258) == Rational(247, 256));
    // a wrong row is caught
    CHECK_FALSE(matches_printed_decimal(limit_upper_bound(10, 275), "0.96323529411..."));
    CHECK_FALSE(matches_printed_decimal(limit_upper_bound(6, 194), "0.96875..."));
    CHECK_FALSE(matches_printed_decimal(limit_upper_bound(1, 63), "0.98360655737"));
    CHECK(published_known_table(3).entries() == std::map<int, int>{{1, 63}, {2, 96}, {3, 126}});
}

TEST_CASE("finite bound certificate") {
    auto table = published_known_table();
    auto cert = check_finite_bound(20, table);
    CHECK(cert.ok);
    CHECK(cert.bound == Rational(22, 23));
    CHECK(cert.bound * Rational(23) == Rational(22));
    CHECK(cert.checks.size() > 20);

    auto one = check_finite_bound(1, table, 12, 3);
    CHECK(one.ok);
    CHECK(one.bound == Rational(60, 61));

    // without the |D'| floor the first window is too dense: 72/73 > 60/61
    auto weak = check_finite_bound(1, table, 12, 0);
    CHECK_FALSE(weak.ok);
    bool found = false;
    for (const auto& ch : weak.checks)
        if (!ch.holds) {
            found = true;
            CHECK(ch.lhs == Rational(72, 73));
        }
    CHECK(found);

    // a tail too long for the shortest long tail
    CHECK_FALSE(check_finite_bound(20, table, 23, 3).ok);

    CHECK_THROWS_AS(check_finite_bound(3, KnownTable{{{1, 63}, {3, 126}}}), ConfigError);
    CHECK_THROWS_AS(check_finite_bound(21, table), ConfigError);
    CHECK_THROWS_AS(check_finite_bound(0, table), DomainError);
}

TEST_CASE("every row certifies its own bound") {
    auto table = published_known_table();
    for (int d = 1; d <= 20; ++d)
        CHECK(check_finite_bound(d, table).ok);
}

TEST_CASE("rho examples") {
    CHECK(rho_brute(1).max_runs == 0);
    CHECK(rho_brute(2).max_runs == 1);
    auto five = rho_brute(5);
    CHECK(five.max_runs == 2);
    std::vector<Word> expect;
    for (const char* s : {"00011", "00100", "00101", "00110", "00111", "01011", "01100"})
        expect.push_back(W(s));
    CHECK(five.witnesses == expect);
    CHECK_THROWS_AS(rho_brute(0), DomainError);
}

TEST_CASE("rho matches independent counts and the serial reference") {
    const int expected[] = {0, 1, 1, 2, 2, 3, 4, 5, 5, 6, 7, 8};
    int prev = 0;
    for (int n = 1; n <= 14; ++n) {
        auto a = rho_brute(n);
        auto b = rho_brute_serial(n);
        CHECK(a.max_runs == b.max_runs);
        CHECK(a.witnesses == b.witnesses);
        if (n <= 12)
            CHECK(a.max_runs == expected[n - 1]);
        CHECK(a.max_runs >= prev);
        CHECK(a.max_runs * 23 < n * 22);
        for (const auto& w : a.witnesses)
            CHECK(static_cast<int>(runs(w).size()) == a.max_runs);
        prev = a.max_runs;
    }
}

TEST_CASE("rho respects the budget") {
    setenv("RUNSLAB_BUDGET", "8", 1);
    CHECK_THROWS_AS(rho_brute(9), BudgetError);
    CHECK_THROWS_AS(rho_brute_serial(9), BudgetError);
    CHECK(rho_brute(8).max_runs == 5);
    unsetenv("RUNSLAB_BUDGET");
}
