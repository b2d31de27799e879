// Binary words, the two lexicographic orders, periods and Lyndon predicates.
//
// Positions are 1-based throughout the public surface; an Interval [i..j]
// is inclusive on both ends.

#ifndef RUNSLAB_CORE_HPP
#define RUNSLAB_CORE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace runslab {

using Letter = std::uint8_t;
using Pos = std::int32_t;

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Finite word over {0,1}, stored bit-packed (64 letters per limb).
class Word {
public:
    Word() = default;
    explicit Word(std::size_t length, Letter fill = 0);

    /// Parses a string of '0'/'1'; anything else throws ParseError.
    static Word parse(std::string_view text);

    std::size_t size() const noexcept { return length_; }
    bool empty() const noexcept { return length_ == 0; }

    /// 1-based access, no bounds check.
    Letter operator[](Pos pos) const noexcept {
        auto idx = static_cast<std::size_t>(pos - 1);
        return static_cast<Letter>((limbs_[idx >> 6] >> (idx & 63)) & 1u);
    }
    /// 1-based access; throws DomainError when pos is outside [1..size()].
    Letter at(Pos pos) const;
    void set(Pos pos, Letter a);

    void push_back(Letter a);
    void pop_back();

    /// w[i..j], 1-based inclusive. Requires 1 <= i, j <= size(); i > j yields "".
    Word factor(Pos i, Pos j) const;
    Word concat(const Word& other) const;

    /// Letters unpacked into bytes (0-based), for hot loops.
    std::vector<Letter> letters() const;
    std::string str() const;

    friend bool operator==(const Word& a, const Word& b) noexcept;
    /// Shortlex on the natural 0 < 1 order; used only for canonical sorting.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept;

private:
    std::vector<std::uint64_t> limbs_;
    std::size_t length_ = 0;
};

/// One of the two lexicographic orders on {0,1}: `smaller` precedes its complement.
struct Order {
    Letter smaller = 0;

    /// Rank of a letter under this order (0 for the smaller letter).
    constexpr Letter rank(Letter a) const noexcept { return static_cast<Letter>(a ^ smaller); }
    friend constexpr bool operator==(Order, Order) = default;
};

inline constexpr Order order0{0};
inline constexpr Order order1{1};

constexpr Order order_for(Letter a) noexcept { return Order{a}; }
constexpr Letter flip(Letter a) noexcept { return static_cast<Letter>(a ^ 1u); }

struct Interval {
    Pos start = 0;
    Pos end = 0;

    constexpr Pos length() const noexcept { return end - start + 1; }
    constexpr bool contains(Pos k) const noexcept { return start <= k && k <= end; }
    friend constexpr auto operator<=>(const Interval&, const Interval&) = default;
};

std::string to_string(const Interval& iv);

/// Least p in [1..|u|] such that u is p-periodic. Linear time via a border table.
Pos smallest_period(const Word& u);

/// Lexicographic comparison under `order`; a proper prefix is smaller.
std::strong_ordering compare(const Word& u, const Word& v, Order order);

/// u is strictly smaller than each nonempty proper suffix under `order`.
bool is_lyndon(const Word& u, Order order);

/// Largest k' with w[k..k'] Lyndon under `order`.
Pos longest_lyndon_start(const Word& w, Pos k, Order order);

Word complement(const Word& w);

namespace kernel {

// Byte-array versions used by the analysis and search hot paths. All indices
// here are 0-based; `w` has `n` letters.

/// Length of the longest Lyndon prefix of w[from..n) under the order that
/// ranks letter `smaller` first (Duval's first factor).
inline std::int32_t longest_lyndon_prefix(const Letter* w, std::int32_t n, std::int32_t from,
                                          Letter smaller) noexcept {
    std::int32_t j = from + 1;
    std::int32_t k = from;
    while (j < n) {
        Letter a = w[k] ^ smaller;
        Letter b = w[j] ^ smaller;
        if (a < b) {
            k = from;
        } else if (a == b) {
            ++k;
        } else {
            break;
        }
        ++j;
    }
    return j - k;
}

} // namespace kernel

} // namespace runslab

#endif // RUNSLAB_CORE_HPP
