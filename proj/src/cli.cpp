#include "runslab/cli.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "runslab/report.hpp"
#include "runslab/verify.hpp"

namespace runslab::cli {

namespace {

using report::Json;

struct AnalyzeArgs {
    std::string word;
    bool text = false;
    bool json = false;
    bool all_intervals = false;
};

struct SearchArgs {
    int d = 0;
    std::string known;
    int threads = 0;
    std::string checkpoint;
    std::int64_t checkpoint_every = 1'000'000;
    std::string resume;
    bool no_known_prune = false;
    int split_depth = 12;
    std::int64_t stop_after = -1;
};

struct VerifyArgs {
    int maxlen = 10;
    int length = 13;
    int min = 3;
    std::string file;
    int recompute = 0;
    int d = 20;
    int t = 12;
    int c = 3;
    int random = 0;
    int random_maxlen = 200;
    std::uint64_t seed = 1;
    int trials = 10000;
};

struct RhoArgs {
    int n = 0;
    bool witnesses = false;
};

Json outcome_json(const std::string& target, const verify::Outcome& o) {
    Json j;
    j["command"] = "verify";
    j["target"] = target;
    j["pass"] = o.pass;
    j["checked"] = o.checked;
    j["detail"] = o.detail;
    j["counterexample"] = o.counterexample.empty() ? Json(nullptr) : Json(o.counterexample);
    return j;
}

int emit_outcome(std::ostream& out, const std::string& target, const verify::Outcome& o, Json extra = {}) {
    Json j = outcome_json(target, o);
    if (extra.is_object())
        for (auto it = extra.begin(); it != extra.end(); ++it)
            j[it.key()] = it.value();
    out << j.dump(2) << "\n";
    return o.pass ? kOk : kFailed;
}

int cmd_analyze(const AnalyzeArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
    if (a.text && a.json) {
        err << "analyze: --json and --text are exclusive\n";
        return kBadInput;
    }
    auto render = [&](const Word& w, bool batch) {
        if (a.text) {
            out << report::analyze_text(w);
            return;
        }
        Json j = report::analyze(w, a.all_intervals);
        j["command"] = "analyze";
        out << (batch ? j.dump() : j.dump(2)) << "\n";
    };
    if (!a.word.empty()) {
        Word w;
        try {
            w = Word::parse(a.word);
        } catch (const ParseError& e) {
            err << "analyze: " << e.what() << "\n";
            return kBadInput;
        }
        render(w, false);
        return kOk;
    }
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        try {
            render(Word::parse(line), true);
        } catch (const ParseError& e) {
            err << "analyze: line " << line_no << ": " << e.what() << "\n";
            return kBadInput;
        }
    }
    return kOk;
}

int cmd_search(const SearchArgs& a, std::ostream& out) {
    SearchOptions opt;
    opt.threads = a.threads;
    opt.split_depth = a.split_depth;
    opt.known_prune = !a.no_known_prune;
    opt.checkpoint_every = a.checkpoint_every;
    opt.stop_after_nodes = a.stop_after;
    if (!a.checkpoint.empty())
        opt.checkpoint_path = a.checkpoint;

    std::optional<Checkpoint> from;
    int d = a.d;
    if (!a.resume.empty()) {
        from = Checkpoint::load(a.resume);
        if (d != 0 && d != from->d)
            throw ConfigError("--d " + std::to_string(d) + " does not match the checkpoint's d=" +
                              std::to_string(from->d));
        d = from->d;
    }
    if (d < 1)
        throw ConfigError("--d must be a positive integer");
    KnownTable known;
    if (!a.known.empty()) {
        // rows at or above the target are not inputs to this search
        KnownTable file = KnownTable::load(a.known);
        std::map<int, int> below;
        for (auto [dk, mk] : file.entries())
            if (dk < d)
                below.emplace(dk, mk);
        known = KnownTable(below);
    }
    SearchResult r = from ? resume_m_d(*from, known, opt) : compute_m_d(d, known, opt);
    Json j = report::to_json(r);
    j["command"] = "search";
    j["known_table"] = Json::parse(known.to_json());
    j["known_prune"] = opt.known_prune;
    j["resumed"] = from.has_value();
    out << j.dump(2) << "\n";
    return kOk;
}

int cmd_rho(const RhoArgs& a, std::ostream& out) {
    auto r = rho_brute(a.n);
    Json j = report::to_json(r, a.witnesses);
    j["command"] = "rho";
    j["ratio"] = Rational(r.max_runs, r.n).str();
    bool below = static_cast<std::int64_t>(r.max_runs) * 23 < static_cast<std::int64_t>(r.n) * 22;
    j["below_22_23"] = below;
    out << j.dump(2) << "\n";
    return below ? kOk : kFailed;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"runslab: runs, Lyndon roots and idle positions in binary words"};
    app.require_subcommand(1);

    AnalyzeArgs aa;
    auto* analyze = app.add_subcommand("analyze", "Period-maximal intervals, Lyndon roots, runs and idle sets");
    analyze->add_option("word", aa.word, "0/1 word; omitted: one word per line on stdin (JSON lines)");
    analyze->add_flag("--json", aa.json, "JSON output (default)");
    analyze->add_flag("--text", aa.text, "Human-readable output");
    analyze->add_flag("--all-intervals", aa.all_intervals, "Also list every period-maximal interval");

    SearchArgs sa;
    auto* search = app.add_subcommand("search", "Compute m_d by exhaustive pruned search");
    search->add_option("--d", sa.d, "Target number of idle positions");
    search->add_option("--known", sa.known, "JSON table of known m_d' values");
    search->add_option("--threads", sa.threads, "Worker threads (0: OpenMP default)");
    search->add_option("--checkpoint", sa.checkpoint, "Checkpoint file to write");
    search->add_option("--checkpoint-every", sa.checkpoint_every, "Nodes between checkpoint flushes");
    search->add_option("--resume", sa.resume, "Resume from a checkpoint file");
    search->add_flag("--no-known-prune", sa.no_known_prune, "Disable known-table pruning");
    search->add_option("--split-depth", sa.split_depth, "Prefix length of parallel tasks");
    search->add_option("--stop-after", sa.stop_after, "Stop after about this many nodes (writes checkpoint)");

    VerifyArgs va;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->require_subcommand(1);
    auto* v_lemma1 = verify_cmd->add_subcommand("lemma1", "Disjointness of root start sets, exhaustive");
    v_lemma1->add_option("--maxlen", va.maxlen, "Longest word length");
    auto* v_floor = verify_cmd->add_subcommand("dprime-floor", "Minimum |D'| at a fixed length");
    v_floor->add_option("--length", va.length, "Word length");
    v_floor->add_option("--min", va.min, "Required minimum");
    auto* v_table = verify_cmd->add_subcommand("table", "Check a table of m_d against the published values");
    v_table->add_option("--file", va.file, "Known-table JSON")->required();
    v_table->add_option("--recompute", va.recompute, "Recompute rows with d <= this by search");
    auto* v_bound = verify_cmd->add_subcommand("bound", "Finite-word density certificate");
    v_bound->add_option("--d", va.d, "Row of the table to certify");
    v_bound->add_option("--table", va.file, "Known-table JSON")->required();
    v_bound->add_option("--t", va.t, "Tail length");
    v_bound->add_option("--c", va.c, "Floor of |D'| on words of length t+1");
    auto* v_oracle = verify_cmd->add_subcommand("oracle", "Fast path against the literal oracle");
    v_oracle->add_option("--maxlen", va.maxlen, "Exhaustive up to this length");
    v_oracle->add_option("--random", va.random, "Additional random words");
    v_oracle->add_option("--random-maxlen", va.random_maxlen, "Longest random word");
    v_oracle->add_option("--seed", va.seed, "Random seed");
    auto* v_ext = verify_cmd->add_subcommand("extension", "Extension resistance of D and D'");
    v_ext->add_option("--trials", va.trials, "Random trials per property");
    v_ext->add_option("--seed", va.seed, "Random seed");

    RhoArgs ra;
    auto* rho = app.add_subcommand("rho", "Maximum number of runs over words of length n");
    rho->add_option("--n", ra.n, "Word length")->required();
    rho->add_flag("--witnesses", ra.witnesses, "List all maximizing words starting with 0");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kBadInput;
    }

    try {
        if (analyze->parsed())
            return cmd_analyze(aa, in, out, err);
        if (search->parsed())
            return cmd_search(sa, out);
        if (rho->parsed())
            return cmd_rho(ra, out);
        if (v_lemma1->parsed())
            return emit_outcome(out, "lemma1", verify::lemma1(va.maxlen));
        if (v_floor->parsed())
            return emit_outcome(out, "dprime-floor", verify::dprime_floor_at_least(va.length, va.min));
        if (v_table->parsed())
            return emit_outcome(out, "table", verify::table(KnownTable::load(va.file), va.recompute));
        if (v_bound->parsed()) {
            BoundCertificate cert;
            auto o = verify::bound(va.d, KnownTable::load(va.file), va.t, va.c, &cert);
            Json extra;
            if (!cert.checks.empty())
                extra["certificate"] = report::to_json(cert);
            return emit_outcome(out, "bound", o, extra);
        }
        if (v_oracle->parsed())
            return emit_outcome(out, "oracle",
                                verify::oracle_agreement(va.maxlen, va.random, va.random_maxlen, va.seed));
        if (v_ext->parsed()) {
            auto d = verify::extension_D(va.trials, va.seed);
            if (!d.pass)
                return emit_outcome(out, "extension", d);
            auto dp = verify::extension_D_prime(va.trials, va.seed + 1);
            dp.checked += d.checked;
            return emit_outcome(out, "extension", dp);
        }
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const BudgetError& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }
    err << app.help();
    return kBadInput;
}

} // namespace runslab::cli
