// JSON views of analysis, search and bound results. Keys are sorted and all
// positions are 1-based, so output is deterministic.

#ifndef RUNSLAB_REPORT_HPP
#define RUNSLAB_REPORT_HPP

#include <json.hpp>

#include "runslab/analysis.hpp"
#include "runslab/bounds.hpp"
#include "runslab/search.hpp"

namespace runslab::report {

using Json = nlohmann::json;

Json to_json(const Interval& iv);
Json to_json(const PMInterval& s);
Json to_json(const LyndonRootSet& set);
Json to_json(const SearchResult& r);
Json to_json(const BoundCertificate& cert);
Json to_json(const FloorResult& r);
Json to_json(const RhoResult& r, bool witnesses);

/// Full `analyze` report for one word. With all_intervals, every
/// period-maximal interval is listed, not only those owning positions.
Json analyze(const Word& w, bool all_intervals = false);

/// Human-readable rendering of the same content.
std::string analyze_text(const Word& w);

} // namespace runslab::report

#endif // RUNSLAB_REPORT_HPP
