#include "runslab/oracle.hpp"

#include <algorithm>
#include <set>

namespace runslab::oracle {

Pos naive_smallest_period(const Word& u) {
    if (u.empty())
        throw DomainError("naive_smallest_period of the empty word");
    auto n = static_cast<Pos>(u.size());
    for (Pos p = 1; p <= n; ++p) {
        bool ok = true;
        for (Pos i = 1; i + p <= n && ok; ++i)
            ok = u[i] == u[i + p];
        if (ok)
            return p;
    }
    return n;
}

bool naive_is_lyndon(const Word& u, Order order) {
    if (u.empty())
        throw DomainError("naive_is_lyndon of the empty word");
    auto n = static_cast<Pos>(u.size());
    for (Pos s = 2; s <= n; ++s)
        if (compare(u, u.factor(s, n), order) != std::strong_ordering::less)
            return false;
    return true;
}

Pos naive_longest_lyndon_start(const Word& w, Pos k, Order order) {
    auto n = static_cast<Pos>(w.size());
    if (k < 1 || k > n)
        throw DomainError("naive_longest_lyndon_start: position out of range");
    Pos best = k;
    for (Pos e = k; e <= n; ++e)
        if (naive_is_lyndon(w.factor(k, e), order))
            best = e;
    return best;
}

PeriodTable::PeriodTable(const Word& w) : n_(static_cast<Pos>(w.size())) {
    table_.assign(static_cast<std::size_t>(n_) * n_, 0);
    auto s = w.letters();
    std::vector<Pos> border(n_ + 1);
    for (Pos i = 0; i < n_; ++i) {
        // failure function of s[i..n)
        border[0] = -1;
        for (Pos len = 1; i + len <= n_; ++len) {
            Pos b = border[len - 1];
            while (b >= 0 && s[i + b] != s[i + len - 1])
                b = border[b];
            border[len] = b + 1;
            table_[i * n_ + (i + len - 1)] = len - border[len];
        }
    }
}

bool PeriodTable::period_maximal(Interval s) const {
    if (s.start < 1 || s.end > n_ || s.start > s.end)
        return false;
    Pos p = (*this)(s.start, s.end);
    if (s.start > 1 && (*this)(s.start - 1, s.end) == p)
        return false;
    if (s.end < n_ && (*this)(s.start, s.end + 1) == p)
        return false;
    return true;
}

namespace {

PMInterval describe(const Word& w, Interval s, Pos p) {
    auto n = static_cast<Pos>(w.size());
    PMInterval out;
    out.interval = s;
    out.period = p;
    out.left_open = s.start == 1;
    out.right_open = s.end == n;
    if (s.end < n)
        out.breaking_letter = w[s.end + 1];
    out.is_run = s.length() >= 2 * p;
    return out;
}

// w[i..j] smaller than each of its proper suffixes w[s..j], compared letter
// by letter in place.
bool lyndon_in_place(const Word& w, Pos i, Pos j, Order o) {
    for (Pos s = i + 1; s <= j; ++s) {
        Pos x = i;
        Pos y = s;
        while (y <= j && w[x] == w[y]) {
            ++x;
            ++y;
        }
        // suffix exhausted: it is a prefix of w[i..j], hence smaller
        if (y > j || o.rank(w[y]) < o.rank(w[x]))
            return false;
    }
    return true;
}

LyndonRootSet lroots_unchecked(const Word& w, const PMInterval& s) {
    LyndonRootSet set;
    set.owner = s;
    Pos p = s.period;
    for (Pos start = s.interval.start + 1; start + p - 1 <= s.interval.end; ++start) {
        OrderTags tags;
        for (Order o : {order0, order1})
            if (lyndon_in_place(w, start, start + p - 1, o))
                tags.bits |= static_cast<std::uint8_t>(1u << o.smaller);
        bool admitted = s.breaking_letter ? tags.has(order_for(*s.breaking_letter)) : tags.bits != 0;
        if (!admitted)
            continue;
        set.roots.push_back({{start, start + p - 1}, tags});
        set.B.push_back(start);
        if (tags.has(order0))
            set.B0.push_back(start);
        if (tags.has(order1))
            set.B1.push_back(start);
    }
    return set;
}

std::vector<Pos> without_max(const std::vector<Pos>& b) {
    if (b.empty())
        return {};
    return {b.begin(), b.end() - 1};
}

} // namespace

std::vector<PMInterval> naive_period_maximal_intervals(const Word& w) {
    auto n = static_cast<Pos>(w.size());
    PeriodTable period(w);
    std::vector<PMInterval> out;
    for (Pos i = 1; i <= n; ++i)
        for (Pos j = i; j <= n; ++j)
            if (period.period_maximal({i, j}))
                out.push_back(describe(w, {i, j}, period(i, j)));
    return out;
}

LyndonRootSet naive_lroots(const Word& w, const PMInterval& s) {
    PeriodTable period(w);
    if (!period.period_maximal(s.interval))
        throw DomainError("naive_lroots: " + to_string(s.interval) + " is not period-maximal");
    return lroots_unchecked(w, describe(w, s.interval, period(s.interval.start, s.interval.end)));
}

namespace {

// Every period-maximal interval with its Lyndon-root set, computed once.
std::vector<LyndonRootSet> all_sets(const Word& w) {
    std::vector<LyndonRootSet> out;
    for (const auto& s : naive_period_maximal_intervals(w))
        out.push_back(lroots_unchecked(w, s));
    return out;
}

std::vector<Pos> charged_of(const std::vector<LyndonRootSet>& sets) {
    std::set<Pos> charged;
    for (const auto& set : sets)
        if (set.owner.is_run && !set.B.empty())
            charged.insert(set.B.back());
    return {charged.begin(), charged.end()};
}

std::vector<Pos> d_of(const std::vector<LyndonRootSet>& sets) {
    std::set<Pos> d;
    for (const auto& set : sets) {
        const auto& s = set.owner;
        if (!s.is_run) {
            if (s.closed())
                d.insert(set.B.begin(), set.B.end()); // (a)
            continue;
        }
        Letter a = 0;
        if (s.breaking_letter) {
            a = *s.breaking_letter; // (b)
        } else if (s.period > 1) {
            // (c): min B_a >= min B_{not a}
            if (set.B0.empty() || set.B1.empty())
                a = set.B0.empty() ? 1 : 0;
            else
                a = set.B0.front() >= set.B1.front() ? 0 : 1;
        }
        for (Pos k : without_max(set.B_of(a)))
            d.insert(k);
    }
    return {d.begin(), d.end()};
}

std::vector<Pos> dprime_of(const Word& w, const std::vector<LyndonRootSet>& sets) {
    std::set<Pos> d;
    auto n = static_cast<Pos>(w.size());
    for (const auto& set : sets) {
        if (set.B.empty())
            continue;
        if (!set.owner.left_open && !set.owner.is_run)
            d.insert(set.B.back()); // (A)
        for (Pos k : without_max(set.B))
            d.insert(k); // (B)
    }
    for (Pos k = 2; k <= n; ++k) {
        // (C): w[k-1..n] = (not a) a^+
        Letter a = w[k];
        bool shape = w[k - 1] != a;
        for (Pos x = k; x <= n && shape; ++x)
            shape = w[x] == a;
        if (shape)
            d.insert(k);
    }
    return {d.begin(), d.end()};
}

} // namespace

RootMap naive_root_map(const Word& w) {
    RootMap out;
    for (auto& set : all_sets(w))
        if (!set.roots.empty()) {
            auto key = set.owner.interval;
            out.emplace(key, std::move(set));
        }
    return out;
}

std::vector<PMInterval> naive_runs(const Word& w) {
    std::vector<PMInterval> out;
    for (const auto& s : naive_period_maximal_intervals(w))
        if (s.is_run)
            out.push_back(s);
    return out;
}

std::vector<Pos> naive_charged(const Word& w) { return charged_of(all_sets(w)); }
std::vector<Pos> naive_D(const Word& w) { return d_of(all_sets(w)); }
std::vector<Pos> naive_D_prime(const Word& w) { return dprime_of(w, all_sets(w)); }

IdleReport naive_idle_report(const Word& w) {
    auto sets = all_sets(w);
    IdleReport r;
    for (const auto& set : sets)
        if (set.owner.is_run)
            r.runs.push_back(set.owner);
    r.charged = charged_of(sets);
    for (Pos k = 1; k <= static_cast<Pos>(w.size()); ++k)
        if (!std::binary_search(r.charged.begin(), r.charged.end(), k))
            r.idle.push_back(k);
    r.D = d_of(sets);
    r.Dprime = dprime_of(w, sets);
    return r;
}

} // namespace runslab::oracle
