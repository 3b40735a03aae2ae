#pragma once

#include <span>
#include <string>

#include "hsolab/bounds.hpp"
#include "hsolab/extremal.hpp"
#include "hsolab/monotonicity.hpp"
#include "hsolab/report.hpp"

namespace hsolab {

// Report builders shared by the CLI and the tests. Graphs appear as graph6.

Report index_report(const std::string& source, const Graph& g, std::span<const IndexKind> kinds);
Report bound_report(const std::string& source, const Graph& g, const BoundReport& r);
Report monotonicity_report(const std::string& source, const Graph& g, const MonotonicityReport& r);
Report extremal_report(const ExtremalResult& r);
Report conjecture_report_json(const ConjectureReport& r);
Report sweep_report(const SweepReport& r);

Json describe_class(const GraphClassSpec& cls);

}  // namespace hsolab
