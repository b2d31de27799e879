#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "runslab/analysis.hpp"
#include "runslab/oracle.hpp"
#include "runslab/verify.hpp"

using namespace runslab;
using runslab::testing::P;
using runslab::testing::W;

namespace {

std::vector<Interval> root_intervals(const LyndonRootSet& set) {
    std::vector<Interval> out;
    for (const auto& r : set.roots)
        out.push_back(r.interval);
    return out;
}

std::vector<Interval> spans(const std::vector<PMInterval>& xs) {
    std::vector<Interval> out;
    for (const auto& x : xs)
        out.push_back(x.interval);
    return out;
}

bool subset(const std::vector<Pos>& a, const std::vector<Pos>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

TEST_CASE("period_maximal_extension examples") {
    auto s = period_maximal_extension(W("1101011"), {2, 3});
    CHECK(s.interval == Interval{2, 6});
    CHECK(s.period == 2);
    CHECK(s.breaking_letter == Letter{1});
    CHECK(s.is_run);
    CHECK_FALSE(s.left_open);
    CHECK_FALSE(s.right_open);

    auto t = period_maximal_extension(W("1110101101"), {5, 5});
    CHECK(t.interval == Interval{5, 5});
    CHECK(t.period == 1);
    CHECK(t.breaking_letter == Letter{0});
    CHECK_FALSE(t.is_run);

    auto u = period_maximal_extension(W("00"), {1, 1});
    CHECK(u.interval == Interval{1, 2});
    CHECK(u.period == 1);
    CHECK(u.right_open);
    CHECK(u.left_open);
    CHECK_FALSE(u.breaking_letter.has_value());
    CHECK(u.is_run);

    CHECK_THROWS_AS(period_maximal_extension(W("00"), {2, 3}), DomainError);
    CHECK_THROWS_AS(period_maximal_extension(W("00"), {2, 1}), DomainError);
}

TEST_CASE("owner_of examples") {
    auto a = owner_of(W("1110101101"), 6);
    REQUIRE(a);
    CHECK(a->owner.interval == Interval{5, 10});
    CHECK(a->owner.period == 3);
    CHECK(a->root.interval == Interval{6, 8});
    CHECK(a->root.tags == OrderTags::only(order0));

    auto b = owner_of(W("1101011"), 2);
    REQUIRE(b);
    CHECK(b->owner.interval == Interval{1, 2});
    CHECK(b->owner.period == 1);
    CHECK(b->root.interval == Interval{2, 2});

    auto c = owner_of(W("0111"), 3);
    REQUIRE(c);
    CHECK(c->owner.interval == Interval{2, 4});
    CHECK(c->owner.period == 1);
    CHECK(c->root.interval == Interval{3, 3});
    CHECK(c->root.tags == OrderTags::both());

    CHECK_FALSE(owner_of(W("0111"), 1));
    CHECK_FALSE(owner_of(W("01"), 2));   // tail (not a) a^+
    CHECK_FALSE(owner_of(W("1000"), 2)); // tail (not a) a^+
    CHECK_THROWS_AS(owner_of(W("01"), 3), DomainError);
    CHECK_THROWS_AS(owner_of(W("01"), 0), DomainError);
}

TEST_CASE("root sets of the ten-letter worked example") {
    auto map = all_intervals_with_roots(W("1110101101"));
    REQUIRE(map.count({1, 3}));
    REQUIRE(map.count({3, 7}));
    REQUIRE(map.count({5, 10}));
    REQUIRE(map.count({2, 10}));
    CHECK(root_intervals(map.at({1, 3})) == std::vector<Interval>{{2, 2}, {3, 3}});
    CHECK(root_intervals(map.at({3, 7})) == std::vector<Interval>{{5, 6}});
    CHECK(root_intervals(map.at({5, 10})) == std::vector<Interval>{{6, 8}, {7, 9}});
    CHECK(root_intervals(map.at({2, 10})) == std::vector<Interval>{{4, 8}});
    CHECK(map.at({1, 3}).owner.period == 1);
    CHECK(map.at({3, 7}).owner.period == 2);
    CHECK(map.at({5, 10}).owner.period == 3);
    CHECK(map.at({2, 10}).owner.period == 5);
    // [6..8] = 011 is Lyndon under 0 < 1, [7..9] = 110 under 1 < 0
    CHECK(map.at({5, 10}).B0 == P({6}));
    CHECK(map.at({5, 10}).B1 == P({7}));

    auto two = all_intervals_with_roots(W("00"));
    REQUIRE(two.size() == 1);
    CHECK(root_intervals(two.at({1, 2})) == std::vector<Interval>{{2, 2}});
    CHECK(all_intervals_with_roots(W("01")).empty());
}

TEST_CASE("runs examples") {
    CHECK(spans(runs(W("1110101101"))) == std::vector<Interval>{{1, 3}, {3, 7}, {5, 10}, {7, 8}});
    CHECK(spans(runs(W("0101"))) == std::vector<Interval>{{1, 4}});
    CHECK(runs(W("0")).empty());
    CHECK(runs(W("")).empty());
}

TEST_CASE("idle_report examples") {
    auto r = idle_report(W("1110101101"));
    CHECK(r.charged == P({3, 5, 7, 8}));
    CHECK(r.idle == P({1, 2, 4, 6, 9, 10}));

    auto one = idle_report(W("0"));
    CHECK(one.charged.empty());
    CHECK(one.idle == P({1}));

    auto two = idle_report(W("00"));
    CHECK(two.charged == P({2}));
    CHECK(two.idle == P({1}));

    auto none = idle_report(W(""));
    CHECK(none.idle.empty());
    CHECK(none.D.empty());
    CHECK(none.Dprime.empty());
}

TEST_CASE("D and D' examples") {
    CHECK(compute_D(W("1110101101")) == P({2}));
    CHECK(compute_D(W("00")).empty());
    CHECK(compute_D(W("")).empty());
    CHECK(compute_D_prime(W("1110101101")) == P({2, 4, 6, 9, 10}));
    CHECK(compute_D_prime(W("01")) == P({2}));
    CHECK(compute_D_prime(W("0")).empty());
    // a closed non-run interval keeps position 3 idle under any extension
    auto d = compute_D(W("1010011"));
    CHECK(std::find(d.begin(), d.end(), 3) != d.end());
}

TEST_CASE("the first position of an interval must be excluded from its roots") {
    Word w = W("1101011");
    // 10 is the longest 1<0 Lyndon factor at position 2 ...
    CHECK(longest_lyndon_start(w, 2, order1) == 3);
    auto s = period_maximal_extension(w, {2, 3});
    REQUIRE(s.interval == Interval{2, 6});
    // ... but [2..3] starts at the start of [2..6], so 2 is not in B([2..6])
    auto roots = oracle::naive_lroots(w, s);
    CHECK(std::find(roots.B.begin(), roots.B.end(), 2) == roots.B.end());
    auto owner = owner_of(w, 2);
    REQUIRE(owner);
    CHECK(owner->owner.interval == Interval{1, 2});

    // Without the exclusion position 2 would sit in two root-start sets.
    auto starts_without_exclusion = [&](const PMInterval& pm) {
        std::vector<Pos> out;
        Pos p = pm.period;
        for (Pos i = pm.interval.start; i + p - 1 <= pm.interval.end; ++i) {
            Word content = w.factor(i, i + p - 1);
            bool ok = pm.breaking_letter ? is_lyndon(content, order_for(*pm.breaking_letter))
                                         : (is_lyndon(content, order0) || is_lyndon(content, order1));
            if (ok)
                out.push_back(i);
        }
        return out;
    };
    int holders = 0;
    for (const auto& pm : oracle::naive_period_maximal_intervals(w)) {
        auto starts = starts_without_exclusion(pm);
        holders += std::count(starts.begin(), starts.end(), 2);
    }
    CHECK(holders >= 2);
}

TEST_CASE("structural invariants, all words up to 12") {
    verify::for_each_word(0, 12, [](const Word& w) {
        auto n = static_cast<Pos>(w.size());
        auto r = idle_report(w);
        REQUIRE(r.charged.size() == r.runs.size());
        REQUIRE(run_count(w) == r.runs.size());
        if (n >= 1) {
            REQUIRE(static_cast<Pos>(r.runs.size()) <= n - 1);
            REQUIRE(r.idle.front() == 1);
        }
        for (Pos k : r.D)
            REQUIRE((k >= 2 && k <= n - 1));
        REQUIRE(subset(r.D, r.Dprime));
        REQUIRE(subset(r.Dprime, r.idle));
        REQUIRE(std::find(r.Dprime.begin(), r.Dprime.end(), 1) == r.Dprime.end());

        for (const auto& [span, set] : all_intervals_with_roots(w)) {
            for (const auto& root : set.roots) {
                REQUIRE(root.interval.length() == set.owner.period);
                REQUIRE(root.interval.start > span.start);
            }
            if (set.owner.period == 1) {
                REQUIRE(set.B0 == set.B);
                REQUIRE(set.B1 == set.B);
            } else {
                std::vector<Pos> both;
                std::set_intersection(set.B0.begin(), set.B0.end(), set.B1.begin(), set.B1.end(),
                                      std::back_inserter(both));
                REQUIRE(both.empty());
                if (set.owner.breaking_letter)
                    REQUIRE(set.B_of(flip(*set.owner.breaking_letter)).empty());
                if (set.owner.is_run && set.owner.right_open) {
                    REQUIRE_FALSE(set.B0.empty());
                    REQUIRE_FALSE(set.B1.empty());
                }
            }
        }
        for (const auto& run : r.runs)
            REQUIRE(all_intervals_with_roots(w).count(run.interval));
        return true;
    });
}

TEST_CASE("complement symmetry, all words up to 12") {
    verify::for_each_word(0, 12, [](const Word& w) {
        auto a = idle_report(w);
        auto b = idle_report(complement(w));
        REQUIRE(spans(a.runs) == spans(b.runs));
        REQUIRE(a.charged == b.charged);
        REQUIRE(a.idle == b.idle);
        REQUIRE(a.D == b.D);
        REQUIRE(a.Dprime == b.Dprime);
        return true;
    });
}

TEST_CASE("right extension never shrinks D, all words up to 13") {
    verify::for_each_word(1, 13, [](const Word& w) {
        auto base = compute_D(w).size();
        for (Letter a = 0; a < 2; ++a) {
            Word wa = w;
            wa.push_back(a);
            REQUIRE(compute_D(wa).size() >= base);
        }
        return true;
    });
}

TEST_CASE("extension resistance on random triples") {
    auto d = verify::extension_D(2000, 11);
    INFO(d.counterexample << " " << d.detail);
    CHECK(d.pass);
    auto dp = verify::extension_D_prime(2000, 12);
    INFO(dp.counterexample << " " << dp.detail);
    CHECK(dp.pass);
}

TEST_CASE("concurrent callers see identical results") {
    std::mt19937_64 rng(5);
    std::vector<Word> words;
    for (int t = 0; t < 64; ++t)
        words.push_back(verify::random_word(rng, 1, 120));
    std::vector<std::vector<Pos>> serial(words.size()), parallel(words.size());
    for (std::size_t i = 0; i < words.size(); ++i)
        serial[i] = compute_D_prime(words[i]);
#pragma omp parallel for num_threads(4)
    for (std::size_t i = 0; i < words.size(); ++i)
        parallel[i] = compute_D_prime(words[i]);
    CHECK(serial == parallel);
}
