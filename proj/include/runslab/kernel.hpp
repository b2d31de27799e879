// Allocation-free owner/D/D' computation over byte letters, shared by the
// analysis module and the search hot loop. Indices are 0-based here.

#ifndef RUNSLAB_KERNEL_HPP
#define RUNSLAB_KERNEL_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "runslab/core.hpp"

namespace runslab::kernel {

/// Owner of one position: period-maximal interval [i..j] with period p and
/// the order tags of the root starting here. tags == 0 means no owner.
struct Owner {
    std::int32_t i = 0;
    std::int32_t j = 0;
    std::int32_t p = 0;
    std::uint8_t tags = 0;
};

inline bool same_owner(const Owner& x, const Owner& y) noexcept { return x.i == y.i && x.j == y.j; }

/// Greedy two-sided growth of [i..j] keeping period p.
inline void extend_period(const Letter* w, std::int32_t n, std::int32_t p, std::int32_t& i,
                          std::int32_t& j) noexcept {
    while (i > 0 && w[i - 1] == w[i - 1 + p])
        --i;
    while (j + 1 < n && w[j + 1] == w[j + 1 - p])
        ++j;
}

/// Position k (0-based) with w[k-1..n) = (not a) a^+, or -1.
inline std::int32_t tail_position(const Letter* w, std::int32_t n) noexcept {
    if (n < 2)
        return -1;
    std::int32_t k = n - 1;
    while (k > 0 && w[k - 1] == w[n - 1])
        --k;
    return k > 0 ? k : -1;
}

/// Owner of position k (0-based); `tail` is tail_position(w, n). A repeated
/// letter belongs to its period-1 run; otherwise the root is the longest
/// Lyndon factor at k under the order ranking w[k] first.
inline Owner owner_at(const Letter* w, std::int32_t n, std::int32_t k, std::int32_t tail) noexcept {
    Owner o;
    if (k == 0)
        return o;
    Letter a = w[k];
    if (w[k - 1] == a) {
        o.i = k;
        o.j = k;
        o.p = 1;
        extend_period(w, n, 1, o.i, o.j);
        o.tags = 3;
        return o;
    }
    if (k == tail)
        return o;
    std::int32_t len = longest_lyndon_prefix(w, n, k, a);
    o.i = k;
    o.j = k + len - 1;
    o.p = len;
    extend_period(w, n, len, o.i, o.j);
    o.tags = static_cast<std::uint8_t>(1u << a);
    return o;
}

/// Reusable buffers for one thread.
struct Scratch {
    std::vector<Owner> owners;
    std::vector<std::int32_t> order;
    std::vector<std::uint8_t> in_d;
    std::vector<std::uint8_t> in_dprime;

    void resize(std::int32_t n) {
        if (static_cast<std::int32_t>(owners.size()) < n) {
            owners.resize(n);
            order.resize(n);
            in_d.resize(n);
            in_dprime.resize(n);
        }
    }
};

inline void compute_owners(const Letter* w, std::int32_t n, Scratch& s) {
    s.resize(n);
    std::int32_t tail = tail_position(w, n);
    for (std::int32_t k = 0; k < n; ++k)
        s.owners[k] = owner_at(w, n, k, tail);
}

/// Visits each owner group as (owner, positions ascending, count). Requires
/// compute_owners to have run; reorders s.order.
template <class Fn>
inline void for_each_group(std::int32_t n, Scratch& s, Fn&& fn) {
    std::int32_t m = 0;
    for (std::int32_t k = 0; k < n; ++k)
        if (s.owners[k].tags)
            s.order[m++] = k;
    const Owner* own = s.owners.data();
    std::sort(s.order.begin(), s.order.begin() + m, [own](std::int32_t x, std::int32_t y) {
        if (own[x].i != own[y].i)
            return own[x].i < own[y].i;
        if (own[x].j != own[y].j)
            return own[x].j < own[y].j;
        return x < y;
    });
    std::int32_t g = 0;
    while (g < m) {
        std::int32_t h = g + 1;
        while (h < m && same_owner(own[s.order[g]], own[s.order[h]]))
            ++h;
        fn(own[s.order[g]], s.order.data() + g, h - g);
        g = h;
    }
}

/// Letter a selecting B_a for case (c): the order whose first root starts
/// later; 0 for period-1 runs.
inline Letter open_run_letter(const Owner& o, const Owner* own, const std::int32_t* pos,
                              std::int32_t cnt) noexcept {
    if (o.p == 1)
        return 0;
    std::int32_t min0 = -1, min1 = -1;
    for (std::int32_t t = 0; t < cnt; ++t) {
        std::uint8_t tags = own[pos[t]].tags;
        if ((tags & 1u) && min0 < 0)
            min0 = pos[t];
        if ((tags & 2u) && min1 < 0)
            min1 = pos[t];
    }
    if (min0 < 0)
        return 1;
    if (min1 < 0)
        return 0;
    return min0 >= min1 ? 0 : 1;
}

/// Marks D(w) in s.in_d and D'(w) in s.in_dprime; returns |D(w)|.
inline std::int32_t compute_idle_sets(const Letter* w, std::int32_t n, Scratch& s,
                                      bool with_dprime = true) {
    compute_owners(w, n, s);
    std::fill(s.in_d.begin(), s.in_d.begin() + n, 0);
    if (with_dprime)
        std::fill(s.in_dprime.begin(), s.in_dprime.begin() + n, 0);
    std::int32_t d_count = 0;
    const Owner* own = s.owners.data();
    for_each_group(n, s, [&](const Owner& o, const std::int32_t* pos, std::int32_t cnt) {
        bool run = o.j - o.i + 1 >= 2 * o.p;
        bool left_closed = o.i > 0;
        bool right_closed = o.j + 1 < n;
        if (with_dprime) {
            for (std::int32_t t = 0; t + 1 < cnt; ++t)
                s.in_dprime[pos[t]] = 1;
            if (left_closed && !run)
                s.in_dprime[pos[cnt - 1]] = 1;
        }
        if (!run) {
            if (left_closed && right_closed)
                for (std::int32_t t = 0; t < cnt; ++t)
                    if (!s.in_d[pos[t]]) {
                        s.in_d[pos[t]] = 1;
                        ++d_count;
                    }
            return;
        }
        Letter a = right_closed ? w[o.j + 1] : open_run_letter(o, own, pos, cnt);
        std::uint8_t mask = static_cast<std::uint8_t>(1u << a);
        std::int32_t last = -1;
        for (std::int32_t t = cnt - 1; t >= 0; --t)
            if (own[pos[t]].tags & mask) {
                last = pos[t];
                break;
            }
        for (std::int32_t t = 0; t < cnt; ++t)
            if ((own[pos[t]].tags & mask) && pos[t] != last && !s.in_d[pos[t]]) {
                s.in_d[pos[t]] = 1;
                ++d_count;
            }
    });
    if (with_dprime) {
        std::int32_t k = tail_position(w, n);
        if (k >= 0)
            s.in_dprime[k] = 1;
    }
    return d_count;
}

} // namespace runslab::kernel

#endif // RUNSLAB_KERNEL_HPP
