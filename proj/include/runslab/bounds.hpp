// Exact-rational bound arithmetic: the per-window limit bound, the
// finite-word certificate, and brute-force maximum run counts.

#ifndef RUNSLAB_BOUNDS_HPP
#define RUNSLAB_BOUNDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "runslab/core.hpp"
#include "runslab/search.hpp"

namespace runslab {

/// Reduced fraction with positive denominator. Never touches floating point.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    std::int64_t numerator() const;
    std::int64_t denominator() const;

    /// "p/q", or "p" when the denominator is 1.
    std::string str() const;

    /// First `digits` fractional digits, truncated (not rounded). Requires
    /// 0 <= value < 10. Returns e.g. "0.98360655737".
    std::string truncated_decimal(int digits) const;

    /// Whether the decimal expansion terminates within `digits` fractional digits.
    bool terminates_within(int digits) const;

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend auto operator<=>(const Rational& a, const Rational& b) {
        return a.v_ < b.v_ ? std::strong_ordering::less
                           : (b.v_ < a.v_ ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    using Value = boost::multiprecision::cpp_rational;
    explicit Rational(Value v) : v_(std::move(v)) {}
    Value v_{0};
};

/// (m - 2 - d)/(m - 2). Throws DomainError unless m >= d + 3.
Rational limit_upper_bound(int d, int m);

/// One strict inequality lhs < rhs recorded by a certificate.
struct CheckedInequality {
    std::string label;
    Rational lhs;
    Rational rhs;
    bool holds = false;
};

struct BoundCertificate {
    int d = 0;
    KnownTable table;
    int tail_len = 12;
    int tail_floor = 3;
    Rational bound;
    std::vector<CheckedInequality> checks;
    bool ok = false;
};

/// Verifies that the finite-word density is below (m_d-2-d)/(m_d-2):
///  * short tails x < (m_d-2)/d satisfy (x-1)/x < bound (identity plus
///    every integer x in range);
///  * every tail length at or above that threshold is at least t+1;
///  * for i = 0..d-1,
///    ((m_{i+1}-2+t) - i - c - 1)/(m_{i+1}-2+t) < bound.
/// `c` must be a certified floor of |D'| over words of length t+1.
/// Throws ConfigError when m_1..m_d are not all present.
BoundCertificate check_finite_bound(int d, const KnownTable& table, int t = 12, int c = 3);

struct RhoResult {
    int n = 0;
    int max_runs = 0;
    /// Every maximizing word starting with 0, ascending.
    std::vector<Word> witnesses;
};

/// Maximum run count over all binary words of length n. Refuses (throws
/// BudgetError) when n exceeds enumeration_budget(). Parallel over word
/// ranges with OpenMP.
RhoResult rho_brute(int n);

/// Single-threaded reference for rho_brute.
RhoResult rho_brute_serial(int n);

/// One row of the published table of m_d and the limit bound.
struct PublishedRow {
    int d;
    int m;
    const char* decimal; // as printed; "..." marks a truncated expansion
};

const std::vector<PublishedRow>& published_table();

/// Published rows as a KnownTable for d' <= up_to.
KnownTable published_known_table(int up_to = 20);

/// Checks the printed decimal of one row against the exact bound.
bool matches_printed_decimal(const Rational& value, const std::string& printed);

} // namespace runslab

#endif // RUNSLAB_BOUNDS_HPP
