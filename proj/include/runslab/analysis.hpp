// Period-maximal intervals, runs, Lyndon-root sets and idle positions.

#ifndef RUNSLAB_ANALYSIS_HPP
#define RUNSLAB_ANALYSIS_HPP

#include <map>
#include <optional>
#include <vector>

#include "runslab/core.hpp"

namespace runslab {

/// Subset of {≺_0, ≺_1}: bit 0 for ≺_0, bit 1 for ≺_1.
struct OrderTags {
    std::uint8_t bits = 0;

    static constexpr OrderTags none() { return {0}; }
    static constexpr OrderTags only(Order o) { return {static_cast<std::uint8_t>(1u << o.smaller)}; }
    static constexpr OrderTags both() { return {3}; }

    constexpr bool has(Order o) const noexcept { return (bits >> o.smaller) & 1u; }
    friend constexpr bool operator==(OrderTags, OrderTags) = default;
};

struct PMInterval {
    Interval interval;
    Pos period = 0;
    bool left_open = false;
    bool right_open = false;
    std::optional<Letter> breaking_letter; // w[j+1] when right-closed
    bool is_run = false;

    bool closed() const noexcept { return !left_open && !right_open; }
    friend bool operator==(const PMInterval&, const PMInterval&) = default;
};

struct LyndonRoot {
    Interval interval;
    OrderTags tags;
    friend bool operator==(const LyndonRoot&, const LyndonRoot&) = default;
};

/// Lroots(s) together with B(s), B_0(s), B_1(s); all position lists ascending.
struct LyndonRootSet {
    PMInterval owner;
    std::vector<LyndonRoot> roots;
    std::vector<Pos> B;
    std::vector<Pos> B0;
    std::vector<Pos> B1;

    const std::vector<Pos>& B_of(Letter a) const { return a ? B1 : B0; }
    friend bool operator==(const LyndonRootSet&, const LyndonRootSet&) = default;
};

/// The unique interval s with k in B(s), and the root starting at k.
struct Ownership {
    PMInterval owner;
    LyndonRoot root;
    friend bool operator==(const Ownership&, const Ownership&) = default;
};

struct IdleReport {
    std::vector<PMInterval> runs;
    std::vector<Pos> charged;
    std::vector<Pos> idle;
    std::vector<Pos> D;
    std::vector<Pos> Dprime;
};

/// Keyed by (start, end); period-maximal intervals are identified by their span.
using RootMap = std::map<Interval, LyndonRootSet>;

/// Maximal interval containing `seed` with the same smallest period.
PMInterval period_maximal_extension(const Word& w, Interval seed);

/// Owner of position k per the Lyndon-root rules; nullopt for k = 1 and for
/// the position k with w[k-1..|w|] of the form (not a) a^+.
std::optional<Ownership> owner_of(const Word& w, Pos k);

/// Every period-maximal interval owning at least one position, with its roots.
RootMap all_intervals_with_roots(const Word& w);

std::vector<PMInterval> runs(const Word& w);
std::vector<Pos> compute_D(const Word& w);
std::vector<Pos> compute_D_prime(const Word& w);
IdleReport idle_report(const Word& w);

/// Number of runs, computed through the charging map.
std::size_t run_count(const Word& w);

} // namespace runslab

#endif // RUNSLAB_ANALYSIS_HPP
