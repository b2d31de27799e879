#include "runslab/analysis.hpp"

#include <algorithm>
#include <cassert>

#include "runslab/kernel.hpp"

namespace runslab {

namespace {

PMInterval make_pm(Pos i, Pos j, Pos p, const Word& w) {
    PMInterval s;
    s.interval = {i, j};
    s.period = p;
    s.left_open = i == 1;
    s.right_open = j == static_cast<Pos>(w.size());
    if (!s.right_open)
        s.breaking_letter = w[j + 1];
    s.is_run = j - i + 1 >= 2 * p;
    return s;
}

PMInterval from_kernel(const kernel::Owner& o, const Word& w) {
    return make_pm(o.i + 1, o.j + 1, o.p, w);
}

std::vector<Pos> marked_positions(const std::vector<std::uint8_t>& marks, std::size_t n) {
    std::vector<Pos> out;
    for (std::size_t k = 0; k < n; ++k)
        if (marks[k])
            out.push_back(static_cast<Pos>(k + 1));
    return out;
}

} // namespace

PMInterval period_maximal_extension(const Word& w, Interval seed) {
    auto n = static_cast<Pos>(w.size());
    if (seed.start < 1 || seed.end > n || seed.start > seed.end)
        throw DomainError("period_maximal_extension: seed " + to_string(seed) +
                          " is not an interval of a word of length " + std::to_string(n));
    Pos p = smallest_period(w.factor(seed.start, seed.end));
    auto letters = w.letters();
    std::int32_t i = seed.start - 1;
    std::int32_t j = seed.end - 1;
    kernel::extend_period(letters.data(), n, p, i, j);
#ifndef NDEBUG
    assert(smallest_period(w.factor(i + 1, j + 1)) == p);
#endif
    return make_pm(i + 1, j + 1, p, w);
}

std::optional<Ownership> owner_of(const Word& w, Pos k) {
    auto n = static_cast<Pos>(w.size());
    if (k < 1 || k > n)
        throw DomainError("owner_of: position " + std::to_string(k) + " outside [1.." +
                          std::to_string(n) + "]");
    auto letters = w.letters();
    auto o = kernel::owner_at(letters.data(), n, k - 1, kernel::tail_position(letters.data(), n));
    if (!o.tags)
        return std::nullopt;
    Ownership out;
    out.owner = from_kernel(o, w);
    out.root = {{k, k + o.p - 1}, {o.tags}};
    return out;
}

RootMap all_intervals_with_roots(const Word& w) {
    auto n = static_cast<std::int32_t>(w.size());
    auto letters = w.letters();
    kernel::Scratch s;
    kernel::compute_owners(letters.data(), n, s);
    RootMap out;
    kernel::for_each_group(n, s, [&](const kernel::Owner& o, const std::int32_t* pos, std::int32_t cnt) {
        LyndonRootSet set;
        set.owner = from_kernel(o, w);
        for (std::int32_t t = 0; t < cnt; ++t) {
            Pos k = pos[t] + 1;
            OrderTags tags{s.owners[pos[t]].tags};
            set.roots.push_back({{k, k + o.p - 1}, tags});
            set.B.push_back(k);
            if (tags.has(order0))
                set.B0.push_back(k);
            if (tags.has(order1))
                set.B1.push_back(k);
        }
        out.emplace(set.owner.interval, std::move(set));
    });
    return out;
}

std::vector<PMInterval> runs(const Word& w) {
    // Every run owns at least one position, so the root map lists them all.
    std::vector<PMInterval> out;
    for (const auto& [span, set] : all_intervals_with_roots(w))
        if (set.owner.is_run)
            out.push_back(set.owner);
    std::sort(out.begin(), out.end(), [](const PMInterval& a, const PMInterval& b) {
        return a.interval < b.interval;
    });
    return out;
}

std::vector<Pos> compute_D(const Word& w) {
    auto n = static_cast<std::int32_t>(w.size());
    auto letters = w.letters();
    kernel::Scratch s;
    s.resize(n);
    kernel::compute_idle_sets(letters.data(), n, s, false);
    return marked_positions(s.in_d, w.size());
}

std::vector<Pos> compute_D_prime(const Word& w) {
    auto n = static_cast<std::int32_t>(w.size());
    auto letters = w.letters();
    kernel::Scratch s;
    s.resize(n);
    kernel::compute_idle_sets(letters.data(), n, s, true);
    return marked_positions(s.in_dprime, w.size());
}

IdleReport idle_report(const Word& w) {
    IdleReport r;
    auto n = w.size();
    std::vector<std::uint8_t> is_charged(n, 0);
    for (const auto& [span, set] : all_intervals_with_roots(w)) {
        if (!set.owner.is_run)
            continue;
        r.runs.push_back(set.owner);
        is_charged[set.B.back() - 1] = 1;
    }
    std::sort(r.runs.begin(), r.runs.end(),
              [](const PMInterval& a, const PMInterval& b) { return a.interval < b.interval; });
    for (std::size_t k = 0; k < n; ++k)
        (is_charged[k] ? r.charged : r.idle).push_back(static_cast<Pos>(k + 1));

    auto letters = w.letters();
    kernel::Scratch s;
    s.resize(static_cast<std::int32_t>(n));
    kernel::compute_idle_sets(letters.data(), static_cast<std::int32_t>(n), s, true);
    r.D = marked_positions(s.in_d, n);
    r.Dprime = marked_positions(s.in_dprime, n);
    return r;
}

std::size_t run_count(const Word& w) {
    auto n = static_cast<std::int32_t>(w.size());
    auto letters = w.letters();
    kernel::Scratch s;
    kernel::compute_owners(letters.data(), n, s);
    std::size_t count = 0;
    kernel::for_each_group(n, s, [&](const kernel::Owner& o, const std::int32_t*, std::int32_t) {
        if (o.j - o.i + 1 >= 2 * o.p)
            ++count;
    });
    return count;
}

} // namespace runslab
