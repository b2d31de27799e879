// Literal reference implementations. These avoid the Lyndon-root shortcuts
// of the analysis module entirely: every interval is enumerated, every
// period found by definition, every Lyndon test done suffix by suffix.

#ifndef RUNSLAB_ORACLE_HPP
#define RUNSLAB_ORACLE_HPP

#include <vector>

#include "runslab/analysis.hpp"

namespace runslab::oracle {

/// Scans p = 1..|u| and returns the first period.
Pos naive_smallest_period(const Word& u);

/// Compares u against every nonempty proper suffix.
bool naive_is_lyndon(const Word& u, Order order);

/// Tries every end position k'.
Pos naive_longest_lyndon_start(const Word& w, Pos k, Order order);

/// Smallest periods of every factor, period(i, j) 1-based.
class PeriodTable {
public:
    explicit PeriodTable(const Word& w);
    Pos operator()(Pos i, Pos j) const { return table_[(i - 1) * n_ + (j - 1)]; }
    bool period_maximal(Interval s) const;

private:
    std::vector<Pos> table_;
    Pos n_;
};

/// All period-maximal intervals, sorted by (start, end).
std::vector<PMInterval> naive_period_maximal_intervals(const Word& w);

/// Lroots(s) evaluated straight from its definition. Throws DomainError when
/// s is not period-maximal in w.
LyndonRootSet naive_lroots(const Word& w, const PMInterval& s);

/// Root sets of every period-maximal interval with a nonempty root set.
RootMap naive_root_map(const Word& w);

std::vector<PMInterval> naive_runs(const Word& w);
std::vector<Pos> naive_charged(const Word& w);
std::vector<Pos> naive_D(const Word& w);
std::vector<Pos> naive_D_prime(const Word& w);

/// Same fields as analysis::idle_report, computed from the oracle.
IdleReport naive_idle_report(const Word& w);

} // namespace runslab::oracle

#endif // RUNSLAB_ORACLE_HPP
