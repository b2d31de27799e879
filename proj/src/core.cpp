#include "runslab/core.hpp"

#include <algorithm>

namespace runslab {

Word::Word(std::size_t length, Letter fill)
    : limbs_((length + 63) / 64, fill ? ~std::uint64_t{0} : 0), length_(length) {
    if (fill && length % 64 != 0)
        limbs_.back() &= (std::uint64_t{1} << (length % 64)) - 1;
}

Word Word::parse(std::string_view text) {
    Word w;
    for (char c : text) {
        if (c != '0' && c != '1')
            throw ParseError("word contains a character other than '0'/'1'");
        w.push_back(static_cast<Letter>(c - '0'));
    }
    return w;
}

Letter Word::at(Pos pos) const {
    if (pos < 1 || static_cast<std::size_t>(pos) > length_)
        throw DomainError("position " + std::to_string(pos) + " outside [1.." +
                          std::to_string(length_) + "]");
    return (*this)[pos];
}

void Word::set(Pos pos, Letter a) {
    auto idx = static_cast<std::size_t>(pos - 1);
    auto bit = std::uint64_t{1} << (idx & 63);
    if (a)
        limbs_[idx >> 6] |= bit;
    else
        limbs_[idx >> 6] &= ~bit;
}

void Word::push_back(Letter a) {
    if (length_ % 64 == 0)
        limbs_.push_back(0);
    ++length_;
    set(static_cast<Pos>(length_), a);
}

void Word::pop_back() {
    if (length_ == 0)
        return;
    set(static_cast<Pos>(length_), 0);
    --length_;
    if (length_ % 64 == 0)
        limbs_.pop_back();
}

Word Word::factor(Pos i, Pos j) const {
    Word out;
    for (Pos k = i; k <= j; ++k)
        out.push_back((*this)[k]);
    return out;
}

Word Word::concat(const Word& other) const {
    Word out = *this;
    for (Pos k = 1; k <= static_cast<Pos>(other.size()); ++k)
        out.push_back(other[k]);
    return out;
}

std::vector<Letter> Word::letters() const {
    std::vector<Letter> out(length_);
    for (std::size_t i = 0; i < length_; ++i)
        out[i] = (*this)[static_cast<Pos>(i + 1)];
    return out;
}

std::string Word::str() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i)
        s[i] = static_cast<char>('0' + (*this)[static_cast<Pos>(i + 1)]);
    return s;
}

bool operator==(const Word& a, const Word& b) noexcept {
    return a.length_ == b.length_ && a.limbs_ == b.limbs_;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
    if (a.length_ != b.length_)
        return a.length_ <=> b.length_;
    for (Pos k = 1; k <= static_cast<Pos>(a.length_); ++k)
        if (a[k] != b[k])
            return a[k] <=> b[k];
    return std::strong_ordering::equal;
}

std::string to_string(const Interval& iv) {
    return "[" + std::to_string(iv.start) + ".." + std::to_string(iv.end) + "]";
}

Pos smallest_period(const Word& u) {
    if (u.empty())
        throw DomainError("smallest_period of the empty word");
    auto s = u.letters();
    auto n = static_cast<std::int32_t>(s.size());
    // border[i] = length of the longest proper border of s[0..i)
    std::vector<std::int32_t> border(n + 1, 0);
    border[0] = -1;
    for (std::int32_t i = 1; i <= n; ++i) {
        std::int32_t b = border[i - 1];
        while (b >= 0 && s[b] != s[i - 1])
            b = border[b];
        border[i] = b + 1;
    }
    return n - border[n];
}

std::strong_ordering compare(const Word& u, const Word& v, Order order) {
    auto n = static_cast<Pos>(std::min(u.size(), v.size()));
    for (Pos k = 1; k <= n; ++k) {
        auto a = order.rank(u[k]);
        auto b = order.rank(v[k]);
        if (a != b)
            return a <=> b;
    }
    return u.size() <=> v.size();
}

bool is_lyndon(const Word& u, Order order) {
    if (u.empty())
        throw DomainError("is_lyndon of the empty word");
    auto s = u.letters();
    auto n = static_cast<std::int32_t>(s.size());
    return kernel::longest_lyndon_prefix(s.data(), n, 0, order.smaller) == n;
}

Pos longest_lyndon_start(const Word& w, Pos k, Order order) {
    if (k < 1 || static_cast<std::size_t>(k) > w.size())
        throw DomainError("longest_lyndon_start: position out of range");
    auto s = w.letters();
    auto n = static_cast<std::int32_t>(s.size());
    return k - 1 + kernel::longest_lyndon_prefix(s.data(), n, k - 1, order.smaller);
}

Word complement(const Word& w) {
    Word out = w;
    for (Pos k = 1; k <= static_cast<Pos>(w.size()); ++k)
        out.set(k, flip(w[k]));
    return out;
}

} // namespace runslab
