#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "runslab/oracle.hpp"
#include "runslab/verify.hpp"

using namespace runslab;
using namespace runslab::oracle;
using runslab::testing::P;
using runslab::testing::W;

namespace {

const PMInterval* find_span(const std::vector<PMInterval>& xs, Interval iv) {
    auto it = std::find_if(xs.begin(), xs.end(), [&](const PMInterval& s) { return s.interval == iv; });
    return it == xs.end() ? nullptr : &*it;
}

} // namespace

TEST_CASE("naive_period_maximal_intervals examples") {
    auto all = naive_period_maximal_intervals(W("1110101101"));
    struct Expect {
        Interval iv;
        Pos p;
    };
    for (auto e : {Expect{{1, 3}, 1}, Expect{{3, 7}, 2}, Expect{{5, 10}, 3}, Expect{{2, 10}, 5}}) {
        auto* s = find_span(all, e.iv);
        REQUIRE(s);
        CHECK(s->period == e.p);
    }

    auto two = naive_period_maximal_intervals(W("01"));
    REQUIRE(two.size() == 3);
    CHECK(two[0].interval == Interval{1, 1});
    CHECK(two[1].interval == Interval{1, 2});
    CHECK(two[2].interval == Interval{2, 2});

    auto one = naive_period_maximal_intervals(W("0"));
    REQUIRE(one.size() == 1);
    CHECK(one[0].interval == Interval{1, 1});
    CHECK(naive_period_maximal_intervals(W("")).empty());
}

TEST_CASE("naive_lroots examples") {
    Word w = W("1110101101");
    auto all = naive_period_maximal_intervals(w);
    auto s4 = naive_lroots(w, *find_span(all, {2, 10}));
    REQUIRE(s4.roots.size() == 1);
    CHECK(s4.roots[0].interval == Interval{4, 8});
    auto s2 = naive_lroots(w, *find_span(all, {3, 7}));
    REQUIRE(s2.roots.size() == 1);
    CHECK(s2.roots[0].interval == Interval{5, 6});

    Word z = W("00");
    auto r = naive_lroots(z, naive_period_maximal_intervals(z).front());
    CHECK(r.B == P({2}));

    PMInterval bogus;
    bogus.interval = {2, 4}; // 110, but 1101 keeps period 3
    bogus.period = 3;
    CHECK_THROWS_AS(naive_lroots(w, bogus), DomainError);
}

TEST_CASE("naive D and D' examples") {
    CHECK(naive_D(W("1110101101")) == P({2}));
    CHECK(naive_D_prime(W("01")) == P({2}));
    CHECK(naive_D(W("")).empty());
    CHECK(naive_D_prime(W("1110101101")) == P({2, 4, 6, 9, 10}));
    CHECK(naive_charged(W("1110101101")) == P({3, 5, 7, 8}));
}

TEST_CASE("naive runs match an independent count of maximal repetitions") {
    // Maximum run counts for n = 1..12, enumerated separately by definition.
    const int expected[] = {0, 1, 1, 2, 2, 3, 4, 5, 5, 6, 7, 8};
    for (int n = 1; n <= 12; ++n) {
        std::size_t best = 0;
        verify::for_each_word(n, n, [&](const Word& w) {
            best = std::max(best, naive_runs(w).size());
            return true;
        });
        CHECK(best == static_cast<std::size_t>(expected[n - 1]));
    }
}

TEST_CASE("fast path agrees with the oracle") {
    auto exhaustive = verify::oracle_agreement(10, 0);
    INFO(exhaustive.counterexample << " " << exhaustive.detail);
    CHECK(exhaustive.pass);
    auto random = verify::oracle_agreement(-1, 300, 200, 99);
    INFO(random.counterexample << " " << random.detail);
    CHECK(random.pass);
    CHECK(random.checked == 300);
}

TEST_CASE("root-start sets are disjoint on short words") {
    auto o = verify::lemma1(9);
    INFO(o.counterexample << " " << o.detail);
    CHECK(o.pass);
    CHECK(o.checked == (1 << 10) - 2);
}
