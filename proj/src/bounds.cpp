#include "runslab/bounds.hpp"

#include <algorithm>
#include <omp.h>

#include "runslab/analysis.hpp"
#include "runslab/kernel.hpp"

namespace runslab {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0)
        throw DomainError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    v_ = cpp_rational(cpp_int(num), cpp_int(den));
}

namespace {

std::int64_t narrow(const cpp_int& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw DomainError("rational component does not fit in 64 bits");
    return v.convert_to<std::int64_t>();
}

} // namespace

std::int64_t Rational::numerator() const { return narrow(boost::multiprecision::numerator(v_)); }
std::int64_t Rational::denominator() const { return narrow(boost::multiprecision::denominator(v_)); }

std::string Rational::str() const {
    auto den = boost::multiprecision::denominator(v_);
    auto num = boost::multiprecision::numerator(v_);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.v_ == 0)
        throw DomainError("rational division by zero");
    return Rational(a.v_ / b.v_);
}

std::string Rational::truncated_decimal(int digits) const {
    if (v_ < 0 || v_ >= 10)
        throw DomainError("truncated_decimal expects a value in [0, 10)");
    cpp_int num = boost::multiprecision::numerator(v_);
    cpp_int den = boost::multiprecision::denominator(v_);
    cpp_int whole = num / den;
    cpp_int rem = num % den;
    std::string out = whole.str() + ".";
    for (int i = 0; i < digits; ++i) {
        rem *= 10;
        out += static_cast<char>('0' + (rem / den).convert_to<int>());
        rem %= den;
    }
    return out;
}

bool Rational::terminates_within(int digits) const {
    cpp_int num = boost::multiprecision::numerator(v_);
    cpp_int den = boost::multiprecision::denominator(v_);
    cpp_int rem = num % den;
    for (int i = 0; i < digits && rem != 0; ++i)
        rem = (rem * 10) % den;
    return rem == 0;
}

Rational limit_upper_bound(int d, int m) {
    if (d < 1)
        throw DomainError("limit_upper_bound: d must be positive");
    if (m < d + 3)
        throw DomainError("limit_upper_bound: m = " + std::to_string(m) + " gives a bound <= 0 for d = " +
                          std::to_string(d));
    return Rational(m - 2 - d, m - 2);
}

BoundCertificate check_finite_bound(int d, const KnownTable& table, int t, int c) {
    if (d < 1)
        throw DomainError("check_finite_bound: d must be positive");
    if (t < 0 || c < 0)
        throw DomainError("check_finite_bound: tail length and floor must be non-negative");
    for (int i = 1; i <= d; ++i)
        if (!table.get(i))
            throw ConfigError("check_finite_bound: table lacks m_" + std::to_string(i));

    BoundCertificate cert;
    cert.d = d;
    cert.table = table;
    cert.tail_len = t;
    cert.tail_floor = c;
    const int md = *table.get(d);
    cert.bound = limit_upper_bound(d, md);
    const Rational M(md - 2);

    auto record = [&cert](std::string label, Rational lhs, Rational rhs) {
        bool holds = lhs < rhs;
        cert.checks.push_back({std::move(label), std::move(lhs), std::move(rhs), holds});
    };

    // Short tails. (x-1)/x < 1 - d/M  <=>  x < M/d, so the bound must equal
    // 1 - d/M exactly and every integer below M/d is checked directly.
    const Rational threshold = M / Rational(d);
    {
        Rational identity = Rational(1) - Rational(d) / M;
        cert.checks.push_back({"bound == 1 - d/(m_d-2)", identity, cert.bound, identity == cert.bound});
    }
    for (int x = 1; Rational(x) < threshold; ++x)
        record("short tail x=" + std::to_string(x), Rational(x - 1, x), cert.bound);

    // Tails of length >= M/d split as z1 z2 with |z2| = t and |z1| >= 1.
    {
        std::int64_t first_long = (threshold.numerator() + threshold.denominator() - 1) / threshold.denominator();
        record("tail split: t < ceil((m_d-2)/d)", Rational(t), Rational(first_long));
    }

    for (int i = 0; i < d; ++i) {
        const int next = *table.get(i + 1);
        const int x = next - 2 + t;
        record("i=" + std::to_string(i) + ": ((m_" + std::to_string(i + 1) + "-2+t)-i-c-1)/(m_" +
                   std::to_string(i + 1) + "-2+t)",
               Rational(x - i - c - 1, x), cert.bound);
    }
    cert.ok = std::all_of(cert.checks.begin(), cert.checks.end(), [](const auto& ch) { return ch.holds; });
    return cert;
}

// ---------------------------------------------------------------- rho

namespace {

void check_rho_budget(int n) {
    if (n < 1)
        throw DomainError("rho_brute: n must be positive");
    int budget = enumeration_budget();
    if (n > budget)
        throw BudgetError("rho_brute: n = " + std::to_string(n) + " exceeds the enumeration budget " +
                          std::to_string(budget) + " (set RUNSLAB_BUDGET to raise it)");
}

void fill_word(Letter* buf, int n, std::uint64_t idx) {
    buf[0] = 0;
    for (int k = 1; k < n; ++k)
        buf[k] = static_cast<Letter>((idx >> (n - 1 - k)) & 1u);
}

Word word_of(int n, std::uint64_t idx) {
    std::vector<Letter> buf(static_cast<std::size_t>(n));
    fill_word(buf.data(), n, idx);
    Word w;
    for (auto a : buf)
        w.push_back(a);
    return w;
}

// Runs are exactly the owner groups of period-maximal intervals that are runs.
int count_runs(const Letter* buf, int n, kernel::Scratch& scratch) {
    kernel::compute_owners(buf, n, scratch);
    int count = 0;
    kernel::for_each_group(n, scratch, [&](const kernel::Owner& o, const std::int32_t*, std::int32_t) {
        if (o.j - o.i + 1 >= 2 * o.p)
            ++count;
    });
    return count;
}

} // namespace

RhoResult rho_brute(int n) {
    check_rho_budget(n);
    const std::uint64_t total = std::uint64_t{1} << (n - 1);
    int best = -1;
    std::vector<std::uint64_t> winners;
#pragma omp parallel
    {
        kernel::Scratch scratch;
        std::vector<Letter> buf(static_cast<std::size_t>(n));
        int local = -1;
        std::vector<std::uint64_t> local_winners;
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(total); ++i) {
            auto idx = static_cast<std::uint64_t>(i);
            fill_word(buf.data(), n, idx);
            int r = count_runs(buf.data(), n, scratch);
            if (r > local) {
                local = r;
                local_winners.clear();
            }
            if (r == local)
                local_winners.push_back(idx);
        }
#pragma omp critical
        {
            if (local > best) {
                best = local;
                winners.clear();
            }
            if (local == best)
                winners.insert(winners.end(), local_winners.begin(), local_winners.end());
        }
    }
    std::sort(winners.begin(), winners.end());
    RhoResult out;
    out.n = n;
    out.max_runs = best;
    for (auto idx : winners)
        out.witnesses.push_back(word_of(n, idx));
    return out;
}

RhoResult rho_brute_serial(int n) {
    check_rho_budget(n);
    const std::uint64_t total = std::uint64_t{1} << (n - 1);
    RhoResult out;
    out.n = n;
    out.max_runs = -1;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Word w = word_of(n, idx);
        int r = static_cast<int>(runs(w).size());
        if (r > out.max_runs) {
            out.max_runs = r;
            out.witnesses.clear();
        }
        if (r == out.max_runs)
            out.witnesses.push_back(w);
    }
    return out;
}

// ---------------------------------------------------------------- published table

const std::vector<PublishedRow>& published_table() {
    static const std::vector<PublishedRow> rows = {
        {1, 63, "0.98360655737..."},  {2, 96, "0.97872340425..."},  {3, 126, "0.97580645161..."},
        {4, 150, "0.97297297297..."}, {5, 172, "0.97058823529..."}, {6, 194, "0.96875"},
        {7, 216, "0.96728971962..."}, {8, 237, "0.96595744680..."}, {9, 258, "0.96484375"},
        {10, 274, "0.96323529411..."}, {11, 295, "0.96245733788..."}, {12, 314, "0.96153846153..."},
        {13, 332, "0.96060606060..."}, {14, 351, "0.95988538681..."}, {15, 369, "0.95912806539..."},
        {16, 388, "0.95854922279..."}, {17, 407, "0.95802469135..."}, {18, 425, "0.95744680851..."},
        {19, 444, "0.95701357466..."}, {20, 462, "0.95652173913..."},
    };
    return rows;
}

KnownTable published_known_table(int up_to) {
    std::map<int, int> entries;
    for (const auto& row : published_table())
        if (row.d <= up_to)
            entries[row.d] = row.m;
    return KnownTable(std::move(entries));
}

bool matches_printed_decimal(const Rational& value, const std::string& printed) {
    static const std::string ellipsis = "...";
    bool truncated = printed.size() > ellipsis.size() &&
                     printed.compare(printed.size() - ellipsis.size(), ellipsis.size(), ellipsis) == 0;
    std::string digits = truncated ? printed.substr(0, printed.size() - ellipsis.size()) : printed;
    auto dot = digits.find('.');
    if (dot == std::string::npos)
        return false;
    int frac = static_cast<int>(digits.size() - dot - 1);
    if (value.truncated_decimal(frac) != digits)
        return false;
    // an exact entry must terminate there; a truncated one must not
    return value.terminates_within(frac) != truncated;
}

} // namespace runslab
