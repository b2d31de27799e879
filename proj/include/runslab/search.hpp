// Exhaustive search for m_d, the length at which every binary word has at
// least d extension-resistant idle positions, and the |D'| floor check.

#ifndef RUNSLAB_SEARCH_HPP
#define RUNSLAB_SEARCH_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "runslab/core.hpp"

namespace runslab {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Largest word length for exhaustive enumerations. Defaults to 22;
/// RUNSLAB_BUDGET overrides.
int enumeration_budget();

/// Previously established m_{d'} values.
class KnownTable {
public:
    KnownTable() = default;
    explicit KnownTable(std::map<int, int> entries);

    /// JSON object mapping decimal d' to m_{d'}, e.g. {"1":63,"2":96}.
    static KnownTable parse_json(const std::string& text);
    static KnownTable load(const std::filesystem::path& path);
    std::string to_json() const;

    const std::map<int, int>& entries() const noexcept { return entries_; }
    std::optional<int> get(int d) const;
    bool empty() const noexcept { return entries_.empty(); }

    /// Keys positive, values strictly increasing in d', m_{d'} >= d' + 2.
    /// Throws ConfigError otherwise.
    void validate_structure() const;

    /// validate_structure, all keys below d, and a sampled recomputation:
    /// `samples` random words of each listed length m_{d'} must have
    /// |D| >= d'. Throws ConfigError on the first inconsistency.
    void validate_for(int d, int samples = 2000) const;

private:
    std::map<int, int> entries_;
};

struct SearchOptions {
    int threads = 0;           // 0: OpenMP default
    int split_depth = 12;      // prefixes at this depth become parallel tasks
    bool known_prune = true;
    std::optional<std::filesystem::path> checkpoint_path;
    std::int64_t checkpoint_every = 1'000'000;
    /// Stop handing out tasks once this many nodes were visited (checkpoint
    /// is written and the result is marked incomplete). Negative: no limit.
    std::int64_t stop_after_nodes = -1;
};

struct PruneCounts {
    std::int64_t basic = 0;  // nodes with |D| >= d
    std::int64_t known = 0;  // nodes cut by the known-table rule
};

struct SearchResult {
    int d = 0;
    int m_d = 0;
    std::int64_t nodes_visited = 0;
    /// Lexicographically least word of length m_d whose prefix of length
    /// m_d - 1 has |D| < d.
    Word deepest_word;
    /// All words of length m_d - 1 starting with 0 with |D| < d, ascending.
    std::vector<Word> deepest_parents;
    PruneCounts pruned;
    bool complete = true;
};

/// Search state between runs: the best length so far and the prefixes whose
/// subtrees are still to be explored.
struct Checkpoint {
    int d = 0;
    int best = 0;
    std::vector<Word> pending;

    /// Line 1 "d=<d> best=<m>", then one 0/1 prefix per line.
    std::string serialize() const;
    static Checkpoint parse(const std::string& text);
    static Checkpoint load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;
};

/// |D(w) ∩ [1..m - m_known + 1]| >= d - d_known, given D(w) ascending.
bool should_prune_known(const std::vector<Pos>& d_of_w, int d, int d_known, int m_known, int m);
bool should_prune_known(const Word& w, int d, int d_known, int m_known, int m);

/// Pruned DFS over words starting with 0, appending letters, parallel over
/// the live prefixes at options.split_depth. The returned m_d and deepest
/// word set do not depend on thread count or pruning toggles.
SearchResult compute_m_d(int d, const KnownTable& known = {}, const SearchOptions& options = {});

/// Continues a search from a checkpoint.
SearchResult resume_m_d(const Checkpoint& from, const KnownTable& known = {},
                        const SearchOptions& options = {});

/// Single-threaded, literal recursion on Word and compute_D. Reference for
/// compute_m_d; only m_d, nodes and prune counts are filled in.
SearchResult compute_m_d_serial(int d, const KnownTable& known = {}, bool known_prune = true);

struct FloorResult {
    int length = 0;
    int minimum = 0;
    Word witness; // lexicographically least minimizer starting with 0
};

/// Minimum of |D'(w)| over all words of the given length (words starting
/// with 0; complement symmetry covers the rest). OpenMP-parallel. Throws
/// BudgetError when length exceeds enumeration_budget().
FloorResult dprime_floor(int length);
FloorResult dprime_floor_serial(int length);

} // namespace runslab

#endif // RUNSLAB_SEARCH_HPP
