#include "runslab/report.hpp"

#include <sstream>

#include "runslab/oracle.hpp"

namespace runslab::report {

namespace {

Json orders_of(OrderTags tags) {
    Json out = Json::array();
    for (Order o : {order0, order1})
        if (tags.has(o))
            out.push_back(o.smaller);
    return out;
}

Json positions(const std::vector<Pos>& ps) {
    Json out = Json::array();
    for (Pos k : ps)
        out.push_back(k);
    return out;
}

std::string join(const std::vector<Pos>& ps) {
    std::string out = "{";
    for (std::size_t i = 0; i < ps.size(); ++i)
        out += (i ? "," : "") + std::to_string(ps[i]);
    return out + "}";
}

} // namespace

Json to_json(const Interval& iv) { return Json::array({iv.start, iv.end}); }

Json to_json(const PMInterval& s) {
    Json j;
    j["interval"] = to_json(s.interval);
    j["period"] = s.period;
    j["left_open"] = s.left_open;
    j["right_open"] = s.right_open;
    j["breaking_letter"] = s.breaking_letter ? Json(*s.breaking_letter) : Json(nullptr);
    j["is_run"] = s.is_run;
    return j;
}

Json to_json(const LyndonRootSet& set) {
    Json j = to_json(set.owner);
    Json roots = Json::array();
    for (const auto& r : set.roots)
        roots.push_back({{"interval", to_json(r.interval)}, {"orders", orders_of(r.tags)}});
    j["lroots"] = std::move(roots);
    j["B"] = positions(set.B);
    j["B0"] = positions(set.B0);
    j["B1"] = positions(set.B1);
    return j;
}

Json to_json(const SearchResult& r) {
    Json j;
    j["d"] = r.d;
    j["m_d"] = r.m_d;
    j["nodes_visited"] = r.nodes_visited;
    j["deepest_word"] = r.deepest_word.str();
    Json parents = Json::array();
    for (const auto& w : r.deepest_parents)
        parents.push_back(w.str());
    j["deepest_parents"] = std::move(parents);
    j["pruned"] = {{"basic", r.pruned.basic}, {"known-table", r.pruned.known}};
    j["complete"] = r.complete;
    return j;
}

Json to_json(const BoundCertificate& cert) {
    Json j;
    j["d"] = cert.d;
    j["table"] = Json::parse(cert.table.to_json());
    j["tail_len"] = cert.tail_len;
    j["tail_floor"] = cert.tail_floor;
    j["bound"] = {{"numerator", cert.bound.numerator()}, {"denominator", cert.bound.denominator()}};
    Json checks = Json::array();
    for (const auto& c : cert.checks)
        checks.push_back({{"label", c.label},
                          {"lhs", {c.lhs.numerator(), c.lhs.denominator()}},
                          {"rhs", {c.rhs.numerator(), c.rhs.denominator()}},
                          {"holds", c.holds}});
    j["checks"] = std::move(checks);
    j["ok"] = cert.ok;
    return j;
}

Json to_json(const FloorResult& r) {
    return {{"length", r.length}, {"minimum", r.minimum}, {"witness", r.witness.str()}};
}

Json to_json(const RhoResult& r, bool witnesses) {
    Json j;
    j["n"] = r.n;
    j["rho"] = r.max_runs;
    j["witness_count"] = r.witnesses.size();
    if (witnesses) {
        Json ws = Json::array();
        for (const auto& w : r.witnesses)
            ws.push_back(w.str());
        j["witnesses"] = std::move(ws);
    }
    return j;
}

Json analyze(const Word& w, bool all_intervals) {
    Json j;
    j["word"] = w.str();
    j["length"] = w.size();

    auto roots = all_intervals_with_roots(w);
    Json intervals = Json::array();
    for (const auto& [span, set] : roots)
        intervals.push_back(to_json(set));
    j["intervals"] = std::move(intervals);

    if (all_intervals) {
        Json every = Json::array();
        for (const auto& s : oracle::naive_period_maximal_intervals(w))
            every.push_back(to_json(s));
        j["period_maximal_intervals"] = std::move(every);
    }

    Json ownership = Json::array();
    for (Pos k = 1; k <= static_cast<Pos>(w.size()); ++k) {
        auto own = owner_of(w, k);
        if (!own) {
            ownership.push_back(nullptr);
            continue;
        }
        ownership.push_back({{"position", k},
                             {"owner", to_json(own->owner.interval)},
                             {"root", to_json(own->root.interval)},
                             {"orders", orders_of(own->root.tags)}});
    }
    j["ownership"] = std::move(ownership);

    auto idle = idle_report(w);
    Json rs = Json::array();
    for (const auto& r : idle.runs)
        rs.push_back(to_json(r));
    j["runs"] = std::move(rs);
    j["charged"] = positions(idle.charged);
    j["idle"] = positions(idle.idle);
    j["D"] = positions(idle.D);
    j["Dprime"] = positions(idle.Dprime);
    return j;
}

std::string analyze_text(const Word& w) {
    std::ostringstream out;
    out << "word " << w.str() << " (length " << w.size() << ")\n";
    out << "period-maximal intervals owning positions:\n";
    for (const auto& [span, set] : all_intervals_with_roots(w)) {
        const auto& s = set.owner;
        out << "  " << to_string(s.interval) << " p=" << s.period;
        if (s.is_run)
            out << " run";
        if (s.left_open)
            out << " left-open";
        if (s.right_open)
            out << " right-open";
        if (s.breaking_letter)
            out << " " << int(*s.breaking_letter) << "-broken";
        out << "  lroots={";
        for (std::size_t i = 0; i < set.roots.size(); ++i)
            out << (i ? "," : "") << to_string(set.roots[i].interval);
        out << "} B=" << join(set.B) << " B0=" << join(set.B0) << " B1=" << join(set.B1) << "\n";
    }
    auto idle = idle_report(w);
    out << "runs:";
    for (const auto& r : idle.runs)
        out << " " << to_string(r.interval);
    out << "\n";
    out << "charged " << join(idle.charged) << "\n";
    out << "idle " << join(idle.idle) << "\n";
    out << "D " << join(idle.D) << "\n";
    out << "D' " << join(idle.Dprime) << "\n";
    return out.str();
}

} // namespace runslab::report
