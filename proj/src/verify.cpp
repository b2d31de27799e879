#include "runslab/verify.hpp"

#include <algorithm>
#include <map>

#include "runslab/analysis.hpp"
#include "runslab/oracle.hpp"

namespace runslab::verify {

void for_each_word(int lo, int hi, const std::function<bool(const Word&)>& fn) {
    for (int n = std::max(lo, 0); n <= hi; ++n) {
        const std::uint64_t total = std::uint64_t{1} << n;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            Word w;
            for (int k = n - 1; k >= 0; --k)
                w.push_back(static_cast<Letter>((idx >> k) & 1u));
            if (!fn(w))
                return;
        }
    }
}

Word random_word(std::mt19937_64& rng, int min_len, int max_len) {
    std::uniform_int_distribution<int> len(min_len, max_len);
    int n = len(rng);
    Word w;
    for (int k = 0; k < n; ++k)
        w.push_back(static_cast<Letter>(rng() & 1u));
    return w;
}

namespace {

Outcome fail(Outcome out, std::string counterexample, std::string detail) {
    out.pass = false;
    out.counterexample = std::move(counterexample);
    out.detail = std::move(detail);
    return out;
}

// Returns the name of the first differing field, or "".
std::string compare_with_oracle(const Word& w) {
    if (all_intervals_with_roots(w) != oracle::naive_root_map(w))
        return "root map";
    auto fast = idle_report(w);
    auto slow = oracle::naive_idle_report(w);
    if (fast.runs != slow.runs || runs(w) != slow.runs)
        return "runs";
    if (fast.charged != slow.charged)
        return "charged";
    if (fast.idle != slow.idle)
        return "idle";
    if (fast.D != slow.D || compute_D(w) != slow.D)
        return "D";
    if (fast.Dprime != slow.Dprime || compute_D_prime(w) != slow.Dprime)
        return "D'";
    return "";
}

std::size_t count_in(const std::vector<Pos>& ps, Pos lo, Pos hi) {
    return static_cast<std::size_t>(
        std::count_if(ps.begin(), ps.end(), [lo, hi](Pos k) { return lo <= k && k <= hi; }));
}

} // namespace

Outcome lemma1(int maxlen) {
    Outcome out;
    for_each_word(1, maxlen, [&](const Word& w) {
        ++out.checked;
        std::map<Pos, Interval> holder;
        for (const auto& [span, set] : oracle::naive_root_map(w))
            for (Pos k : set.B) {
                auto [it, fresh] = holder.emplace(k, span);
                if (!fresh) {
                    out = fail(out, w.str(),
                               "position " + std::to_string(k) + " lies in B" + to_string(it->second) +
                                   " and B" + to_string(span));
                    return false;
                }
            }
        for (Pos k = 1; k <= static_cast<Pos>(w.size()); ++k) {
            auto own = owner_of(w, k);
            auto it = holder.find(k);
            bool agree = own ? (it != holder.end() && it->second == own->owner.interval &&
                                own->root.interval.start == k)
                             : it == holder.end();
            if (!agree) {
                out = fail(out, w.str(), "owner_of disagrees with the definition at position " + std::to_string(k));
                return false;
            }
        }
        return true;
    });
    return out;
}

Outcome oracle_agreement(int maxlen, int random, int random_maxlen, std::uint64_t seed) {
    Outcome out;
    for_each_word(0, maxlen, [&](const Word& w) {
        ++out.checked;
        auto field = compare_with_oracle(w);
        if (!field.empty()) {
            out = fail(out, w.str(), field + " differs from the oracle");
            return false;
        }
        return true;
    });
    if (!out.pass)
        return out;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < random; ++t) {
        Word w = random_word(rng, 1, random_maxlen);
        ++out.checked;
        auto field = compare_with_oracle(w);
        if (!field.empty())
            return fail(out, w.str(), field + " differs from the oracle");
    }
    return out;
}

Outcome extension_D(int trials, std::uint64_t seed) {
    Outcome out;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        Word u = random_word(rng, 0, 24);
        Word w = random_word(rng, 1, 48);
        Word v = random_word(rng, 0, 24);
        auto base = compute_D(w).size();
        auto big = compute_D(u.concat(w).concat(v));
        auto lo = static_cast<Pos>(u.size()) + 2;
        auto hi = static_cast<Pos>(u.size() + w.size()) - 1;
        ++out.checked;
        if (count_in(big, lo, hi) < base)
            return fail(out, "u=" + u.str() + " w=" + w.str() + " v=" + v.str(),
                        "|D(uwv) ∩ [|u|+2..|uw|-1]| < |D(w)|");
        for (Letter a = 0; a < 2; ++a) {
            Word wa = w;
            wa.push_back(a);
            if (compute_D(wa).size() < base)
                return fail(out, "w=" + w.str() + " a=" + std::to_string(a), "|D(wa)| < |D(w)|");
        }
    }
    return out;
}

Outcome extension_D_prime(int trials, std::uint64_t seed) {
    Outcome out;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        Word u = random_word(rng, 0, 24);
        Word w = random_word(rng, 1, 48);
        auto small = compute_D_prime(w);
        auto big = compute_D_prime(u.concat(w));
        auto shift = static_cast<Pos>(u.size());
        ++out.checked;
        for (Pos k : small)
            if (!std::binary_search(big.begin(), big.end(), shift + k))
                return fail(out, "u=" + u.str() + " w=" + w.str(),
                            "k=" + std::to_string(k) + " in D'(w) but |u|+k not in D'(uw)");
        if (count_in(big, shift + 2, static_cast<Pos>(u.size() + w.size())) < small.size())
            return fail(out, "u=" + u.str() + " w=" + w.str(), "|D'(uw) ∩ [|u|+2..|uw|]| < |D'(w)|");
    }
    return out;
}

Outcome dprime_floor_at_least(int length, int floor) {
    Outcome out;
    auto r = dprime_floor(length);
    out.checked = std::int64_t{1} << (length - 1);
    out.detail = "minimum |D'| at length " + std::to_string(length) + " is " + std::to_string(r.minimum);
    if (r.minimum < floor)
        return fail(out, r.witness.str(), out.detail + ", below " + std::to_string(floor));
    return out;
}

Outcome table(const KnownTable& tbl, int recompute_up_to) {
    Outcome out;
    std::map<int, const PublishedRow*> published;
    for (const auto& row : published_table())
        published[row.d] = &row;
    for (auto [d, m] : tbl.entries()) {
        ++out.checked;
        auto it = published.find(d);
        if (it == published.end())
            return fail(out, "", "no published row for d=" + std::to_string(d));
        if (it->second->m != m)
            return fail(out, "", "m_" + std::to_string(d) + " = " + std::to_string(m) + ", published " +
                                     std::to_string(it->second->m));
        auto bound = limit_upper_bound(d, m);
        if (!matches_printed_decimal(bound, it->second->decimal))
            return fail(out, "", "bound " + bound.str() + " does not match printed " + it->second->decimal);
        if (d <= recompute_up_to) {
            std::map<int, int> below;
            for (auto [dk, mk] : tbl.entries())
                if (dk < d)
                    below[dk] = mk;
            auto r = compute_m_d(d, KnownTable(below));
            if (r.m_d != m)
                return fail(out, r.deepest_word.str(),
                            "recomputed m_" + std::to_string(d) + " = " + std::to_string(r.m_d));
        }
    }
    out.detail = std::to_string(out.checked) + " rows match";
    return out;
}

Outcome bound(int d, const KnownTable& tbl, int t, int c, BoundCertificate* cert) {
    Outcome out = dprime_floor_at_least(t + 1, c);
    if (!out.pass)
        return out;
    auto result = check_finite_bound(d, tbl, t, c);
    out.checked += static_cast<std::int64_t>(result.checks.size());
    if (cert)
        *cert = result;
    for (const auto& ch : result.checks)
        if (!ch.holds)
            return fail(out, "", "fails: " + ch.label + ": " + ch.lhs.str() + " < " + ch.rhs.str());
    out.detail = "bound " + result.bound.str();
    return out;
}

} // namespace runslab::verify
