#include "runslab/search.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <mutex>
#include <random>
#include <set>
#include <sstream>

#include <omp.h>

#include <json.hpp>

#include "runslab/analysis.hpp"
#include "runslab/kernel.hpp"

namespace runslab {

int enumeration_budget() {
    const char* env = std::getenv("RUNSLAB_BUDGET");
    if (!env || !*env)
        return 22;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 40)
        throw ConfigError(std::string("RUNSLAB_BUDGET must be an integer in [1, 40], got '") + env + "'");
    return static_cast<int>(v);
}

// ---------------------------------------------------------------- KnownTable

KnownTable::KnownTable(std::map<int, int> entries) : entries_(std::move(entries)) {}

KnownTable KnownTable::parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("known table: invalid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw ConfigError("known table: expected a JSON object mapping d to m_d");
    std::map<int, int> entries;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos)
            throw ConfigError("known table: key '" + key + "' is not a decimal integer");
        if (!it.value().is_number_integer())
            throw ConfigError("known table: value for '" + key + "' is not an integer");
        entries[std::stoi(key)] = it.value().get<int>();
    }
    KnownTable table(std::move(entries));
    table.validate_structure();
    return table;
}

KnownTable KnownTable::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("known table: cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

std::string KnownTable::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (auto [d, m] : entries_)
        j[std::to_string(d)] = m;
    return j.dump();
}

std::optional<int> KnownTable::get(int d) const {
    auto it = entries_.find(d);
    if (it == entries_.end())
        return std::nullopt;
    return it->second;
}

void KnownTable::validate_structure() const {
    int prev = 0;
    for (auto [d, m] : entries_) {
        if (d < 1)
            throw ConfigError("known table: d' must be positive, got " + std::to_string(d));
        // D(w) lies inside [2..|w|-1]
        if (m < d + 2)
            throw ConfigError("known table: m_" + std::to_string(d) + " = " + std::to_string(m) +
                              " is below d' + 2");
        if (m <= prev)
            throw ConfigError("known table: values must increase strictly in d' (m_" +
                              std::to_string(d) + " = " + std::to_string(m) + ")");
        prev = m;
    }
}

void KnownTable::validate_for(int d, int samples) const {
    validate_structure();
    for (auto [dk, mk] : entries_) {
        if (dk >= d)
            throw ConfigError("known table: entry d' = " + std::to_string(dk) +
                              " is not below the target d = " + std::to_string(d));
        if (dk == 1) {
            // cheap enough to recompute outright
            auto exact = compute_m_d(1, {}, SearchOptions{.threads = 1, .known_prune = false});
            if (exact.m_d != mk)
                throw ConfigError("known table: m_1 = " + std::to_string(mk) +
                                  " disagrees with recomputed " + std::to_string(exact.m_d));
            continue;
        }
        std::mt19937_64 rng(0x5eed0000u + static_cast<unsigned>(dk));
        std::vector<Letter> buf(static_cast<std::size_t>(mk));
        kernel::Scratch scratch;
        for (int s = 0; s < samples; ++s) {
            for (auto& a : buf)
                a = static_cast<Letter>(rng() & 1u);
            int c = kernel::compute_idle_sets(buf.data(), mk, scratch, false);
            if (c < dk) {
                std::string word;
                for (auto a : buf)
                    word.push_back(static_cast<char>('0' + a));
                throw ConfigError("known table: m_" + std::to_string(dk) + " = " + std::to_string(mk) +
                                  " is too small; word " + word + " has |D| = " + std::to_string(c));
            }
        }
    }
}

// ---------------------------------------------------------------- Checkpoint

std::string Checkpoint::serialize() const {
    std::string out = "d=" + std::to_string(d) + " best=" + std::to_string(best) + "\n";
    for (const auto& w : pending)
        out += w.str() + "\n";
    return out;
}

Checkpoint Checkpoint::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Checkpoint cp;
    if (!std::getline(in, line) || std::sscanf(line.c_str(), "d=%d best=%d", &cp.d, &cp.best) != 2)
        throw ConfigError("checkpoint: first line must be 'd=<d> best=<m>'");
    if (cp.d < 1 || cp.best < 0)
        throw ConfigError("checkpoint: invalid header '" + line + "'");
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        try {
            cp.pending.push_back(Word::parse(line));
        } catch (const ParseError&) {
            throw ConfigError("checkpoint: bad prefix line '" + line + "'");
        }
    }
    return cp;
}

Checkpoint Checkpoint::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("checkpoint: cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

void Checkpoint::save(const std::filesystem::path& path) const {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            throw ConfigError("checkpoint: cannot write " + tmp.string());
        out << serialize();
    }
    std::filesystem::rename(tmp, path);
}

// ---------------------------------------------------------------- pruning

bool should_prune_known(const std::vector<Pos>& d_of_w, int d, int d_known, int m_known, int m) {
    Pos limit = m - m_known + 1;
    auto hits = std::count_if(d_of_w.begin(), d_of_w.end(), [limit](Pos k) { return k <= limit; });
    return hits >= d - d_known;
}

bool should_prune_known(const Word& w, int d, int d_known, int m_known, int m) {
    return should_prune_known(compute_D(w), d, d_known, m_known, m);
}

// ---------------------------------------------------------------- parallel DFS

namespace {

struct LocalStats {
    std::int64_t nodes = 0;
    std::int64_t basic = 0;
    std::int64_t known = 0;
};

std::string to_bits(const Letter* w, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int k = 0; k < n; ++k)
        s[k] = static_cast<char>('0' + w[k]);
    return s;
}

class Searcher {
public:
    Searcher(int d, const KnownTable& known, const SearchOptions& options)
        : d_(d), options_(options) {
        if (options.known_prune)
            for (auto [dk, mk] : known.entries())
                known_.emplace_back(dk, mk);
    }

    void set_best(int best) { best_.store(best); }

    /// Depth-first Extend from w = buf[0..n). When `split` > 0, prefixes of
    /// that length are queued as tasks instead of being expanded.
    void extend(Letter* buf, int n, kernel::Scratch& scratch, LocalStats& st, int parent_count,
                int split, std::vector<std::string>* tasks) {
        if (split > 0 && n == split) {
            tasks->push_back(to_bits(buf, n));
            return;
        }
        ++st.nodes;
        int best = best_.load(std::memory_order_relaxed);
        while (n > best && !best_.compare_exchange_weak(best, n, std::memory_order_relaxed)) {
        }
        best = std::max(best, n);
        int count = kernel::compute_idle_sets(buf, n, scratch, false);
        assert(count >= parent_count);
        (void)parent_count;
        if (count >= d_) {
            ++st.basic;
            return;
        }
        if (n + 1 >= best)
            record_parent(buf, n);
        if (prune_known(scratch, n, best - 1)) {
            ++st.known;
            return;
        }
        for (Letter a = 0; a < 2; ++a) {
            buf[n] = a;
            extend(buf, n + 1, scratch, st, count, split, tasks);
        }
    }

    SearchResult run(std::vector<std::string> tasks, LocalStats seed_stats) {
        std::vector<char> done(tasks.size(), 0);
        std::atomic<bool> stop{false};
        std::mutex progress_mu;
        std::int64_t nodes_total = seed_stats.nodes;
        std::int64_t last_flush = nodes_total;
        std::int64_t basic_total = seed_stats.basic;
        std::int64_t known_total = seed_stats.known;
        auto n_tasks = static_cast<std::int64_t>(tasks.size());
        int threads = options_.threads > 0 ? options_.threads : omp_get_max_threads();

#pragma omp parallel num_threads(threads)
        {
            kernel::Scratch scratch;
            std::vector<Letter> buf(1024);
#pragma omp for schedule(dynamic, 1)
            for (std::int64_t t = 0; t < n_tasks; ++t) {
                if (stop.load())
                    continue;
                const auto& prefix = tasks[static_cast<std::size_t>(t)];
                for (std::size_t k = 0; k < prefix.size(); ++k)
                    buf[k] = static_cast<Letter>(prefix[k] - '0');
                LocalStats st;
                extend(buf.data(), static_cast<int>(prefix.size()), scratch, st, 0, 0, nullptr);
                std::lock_guard lock(progress_mu);
                done[static_cast<std::size_t>(t)] = 1;
                nodes_total += st.nodes;
                basic_total += st.basic;
                known_total += st.known;
                if (options_.checkpoint_path && nodes_total - last_flush >= options_.checkpoint_every) {
                    make_checkpoint(tasks, done).save(*options_.checkpoint_path);
                    last_flush = nodes_total;
                }
                if (options_.stop_after_nodes >= 0 && nodes_total >= options_.stop_after_nodes)
                    stop.store(true);
            }
        }

        SearchResult result;
        result.d = d_;
        result.m_d = best_.load();
        result.nodes_visited = nodes_total;
        result.pruned = {basic_total, known_total};
        result.complete = !stop.load() ||
                          std::all_of(done.begin(), done.end(), [](char c) { return c != 0; });
        if (options_.checkpoint_path)
            make_checkpoint(tasks, done).save(*options_.checkpoint_path);
        auto it = parents_.find(result.m_d - 1);
        if (it != parents_.end())
            for (const auto& s : it->second)
                result.deepest_parents.push_back(Word::parse(s));
        if (!result.deepest_parents.empty()) {
            result.deepest_word = result.deepest_parents.front();
            result.deepest_word.push_back(0);
        }
        return result;
    }

private:
    bool prune_known(const kernel::Scratch& scratch, int n, int m) const {
        if (n > m)
            return false;
        for (auto [dk, mk] : known_) {
            int limit = m - mk + 1; // positions 1..limit
            if (limit < 1)
                continue;
            int hits = 0;
            int upto = std::min(limit, n);
            for (int k = 0; k < upto; ++k)
                hits += scratch.in_d[k];
            if (hits >= d_ - dk)
                return true;
        }
        return false;
    }

    void record_parent(const Letter* buf, int n) {
        std::lock_guard lock(parents_mu_);
        int best = best_.load();
        for (auto it = parents_.begin(); it != parents_.end() && it->first + 1 < best;)
            it = parents_.erase(it);
        if (n + 1 >= best)
            parents_[n].insert(to_bits(buf, n));
    }

    Checkpoint make_checkpoint(const std::vector<std::string>& tasks, const std::vector<char>& done) {
        Checkpoint cp;
        cp.d = d_;
        cp.best = best_.load();
        std::set<std::string> pending;
        for (std::size_t t = 0; t < tasks.size(); ++t)
            if (!done[t])
                pending.insert(tasks[t]);
        {
            // parents of the deepest words found so far are re-queued so a
            // resumed run rediscovers them
            std::lock_guard lock(parents_mu_);
            auto it = parents_.find(cp.best - 1);
            if (it != parents_.end())
                pending.insert(it->second.begin(), it->second.end());
        }
        for (const auto& s : pending)
            cp.pending.push_back(Word::parse(s));
        return cp;
    }

    int d_;
    SearchOptions options_;
    std::vector<std::pair<int, int>> known_;
    std::atomic<int> best_{0};
    std::mutex parents_mu_;
    std::map<int, std::set<std::string>> parents_;
};

void check_d(int d) {
    if (d < 1)
        throw DomainError("d must be positive");
}

} // namespace

SearchResult compute_m_d(int d, const KnownTable& known, const SearchOptions& options) {
    check_d(d);
    known.validate_for(d);
    if (options.split_depth < 1)
        throw ConfigError("split depth must be positive");
    Searcher searcher(d, known, options);
    std::vector<std::string> tasks;
    LocalStats st;
    kernel::Scratch scratch;
    std::vector<Letter> buf(1024);
    buf[0] = 0;
    searcher.extend(buf.data(), 1, scratch, st, 0, options.split_depth, &tasks);
    return searcher.run(std::move(tasks), st);
}

SearchResult resume_m_d(const Checkpoint& from, const KnownTable& known, const SearchOptions& options) {
    check_d(from.d);
    known.validate_for(from.d);
    Searcher searcher(from.d, known, options);
    searcher.set_best(from.best);
    std::set<std::string> unique;
    for (const auto& w : from.pending) {
        if (w.empty() || w[1] != 0)
            throw ConfigError("checkpoint: pending prefixes must be nonempty and start with 0");
        unique.insert(w.str());
    }
    return searcher.run({unique.begin(), unique.end()}, {});
}

// ---------------------------------------------------------------- serial reference

namespace {

struct SerialSearch {
    int d;
    std::vector<std::pair<int, int>> known;
    int m = 0;
    SearchResult result;

    void extend(Word& w) {
        ++result.nodes_visited;
        int len = static_cast<int>(w.size());
        if (len > m)
            m = len;
        auto dw = compute_D(w);
        if (static_cast<int>(dw.size()) >= d) {
            ++result.pruned.basic;
            return;
        }
        for (auto [dk, mk] : known)
            if (should_prune_known(dw, d, dk, mk, m)) {
                ++result.pruned.known;
                return;
            }
        for (Letter a = 0; a < 2; ++a) {
            w.push_back(a);
            extend(w);
            w.pop_back();
        }
    }
};

} // namespace

SearchResult compute_m_d_serial(int d, const KnownTable& known, bool known_prune) {
    check_d(d);
    known.validate_for(d);
    SerialSearch s{d, {}, 0, {}};
    if (known_prune)
        for (auto [dk, mk] : known.entries())
            s.known.emplace_back(dk, mk);
    Word w = Word::parse("0");
    s.extend(w);
    s.result.d = d;
    s.result.m_d = s.m;
    return s.result;
}

// ---------------------------------------------------------------- |D'| floor

namespace {

void check_floor_length(int length) {
    if (length < 1)
        throw DomainError("dprime_floor: length must be positive");
    int budget = enumeration_budget();
    if (length > budget)
        throw BudgetError("dprime_floor: length " + std::to_string(length) +
                          " exceeds the enumeration budget " + std::to_string(budget) +
                          " (set RUNSLAB_BUDGET to raise it)");
}

// Word number idx: leading 0 followed by the length-1 low bits of idx, most
// significant first, so idx order is lexicographic order.
void fill_word(Letter* buf, int length, std::uint64_t idx) {
    buf[0] = 0;
    for (int k = 1; k < length; ++k)
        buf[k] = static_cast<Letter>((idx >> (length - 1 - k)) & 1u);
}

int dprime_size(const Letter* buf, int length, kernel::Scratch& scratch) {
    kernel::compute_idle_sets(buf, length, scratch, true);
    int c = 0;
    for (int k = 0; k < length; ++k)
        c += scratch.in_dprime[k];
    return c;
}

FloorResult make_floor(int length, int minimum, std::uint64_t idx) {
    FloorResult r;
    r.length = length;
    r.minimum = minimum;
    std::vector<Letter> buf(static_cast<std::size_t>(length));
    fill_word(buf.data(), length, idx);
    for (auto a : buf)
        r.witness.push_back(a);
    return r;
}

} // namespace

FloorResult dprime_floor(int length) {
    check_floor_length(length);
    const std::uint64_t total = std::uint64_t{1} << (length - 1);
    int best = std::numeric_limits<int>::max();
    std::uint64_t best_idx = 0;
#pragma omp parallel
    {
        kernel::Scratch scratch;
        std::vector<Letter> buf(static_cast<std::size_t>(length));
        int local = std::numeric_limits<int>::max();
        std::uint64_t local_idx = 0;
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(total); ++i) {
            auto idx = static_cast<std::uint64_t>(i);
            fill_word(buf.data(), length, idx);
            int c = dprime_size(buf.data(), length, scratch);
            if (c < local) {
                local = c;
                local_idx = idx;
            }
        }
#pragma omp critical
        {
            if (local < best || (local == best && local_idx < best_idx)) {
                best = local;
                best_idx = local_idx;
            }
        }
    }
    return make_floor(length, best, best_idx);
}

FloorResult dprime_floor_serial(int length) {
    check_floor_length(length);
    const std::uint64_t total = std::uint64_t{1} << (length - 1);
    int best = std::numeric_limits<int>::max();
    std::uint64_t best_idx = 0;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Word w;
        std::vector<Letter> buf(static_cast<std::size_t>(length));
        fill_word(buf.data(), length, idx);
        for (auto a : buf)
            w.push_back(a);
        int c = static_cast<int>(compute_D_prime(w).size());
        if (c < best) {
            best = c;
            best_idx = idx;
        }
    }
    return make_floor(length, best, best_idx);
}

} // namespace runslab
