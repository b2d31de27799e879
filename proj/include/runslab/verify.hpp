// Exhaustive and randomized property suites behind `runslab verify`.

#ifndef RUNSLAB_VERIFY_HPP
#define RUNSLAB_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <string>

#include "runslab/bounds.hpp"
#include "runslab/search.hpp"

namespace runslab::verify {

struct Outcome {
    bool pass = true;
    std::int64_t checked = 0;
    std::string counterexample; // first failing word, if any
    std::string detail;
};

/// Calls fn on every binary word of length lo..hi, stopping early when fn
/// returns false.
void for_each_word(int lo, int hi, const std::function<bool(const Word&)>& fn);

Word random_word(std::mt19937_64& rng, int min_len, int max_len);

/// Pairwise disjointness of B(s) over all period-maximal intervals
/// (computed from the definition), and agreement of owner_of with it.
Outcome lemma1(int maxlen);

/// Fast path vs. oracle on root maps, runs, charged, idle, D and D':
/// exhaustive up to maxlen, then `random` words of length 1..random_maxlen.
Outcome oracle_agreement(int maxlen, int random = 0, int random_maxlen = 200, std::uint64_t seed = 1);

/// Two-sided extension resistance of D on random (u, w, v).
Outcome extension_D(int trials, std::uint64_t seed = 2);

/// Left extension resistance of D' on random (u, w): positions shift by |u|
/// and the counting form holds.
Outcome extension_D_prime(int trials, std::uint64_t seed = 3);

/// min |D'| over words of the given length is at least `floor`.
Outcome dprime_floor_at_least(int length, int floor);

/// Entries of `table` against the published m_d and bound digits; entries
/// with d <= recompute_up_to are also recomputed by search.
Outcome table(const KnownTable& table, int recompute_up_to = 0);

/// Floor of |D'| at length t+1 followed by check_finite_bound.
Outcome bound(int d, const KnownTable& table, int t, int c, BoundCertificate* cert = nullptr);

} // namespace runslab::verify

#endif // RUNSLAB_VERIFY_HPP
