#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubefold/crease_tools.hpp"
#include "cubefold/polyomino.hpp"
#include "cubefold/rules_engine.hpp"

namespace cubefold {

struct ReportOptions {
    bool corroborate = false;   // run the necessary-condition cross-check
    bool run_oracle = false;    // compare against the brute-force oracle
    SearchLimits limits;
    std::size_t oracle_max_squares = 8;
};

struct HoleReport {
    GridPoint anchor;
    HoleClass cls;
};

struct SearchSummary {
    std::uint64_t states = 0;
    bool truncated = false;
    bool covering = false;
};

struct OracleSummary {
    bool ran = false;
    bool agrees = false;
    std::string detail;
};

struct WitnessReport {
    std::vector<std::pair<GridPoint, int>> faces;                   // square -> die number
    std::vector<std::pair<LatticeEdge, CreaseMagnitude>> creases;
};

struct Report {
    int squares = 0;
    Decision decision = Decision::Unknown;
    RuleId provenance = RuleId::SearchInconclusive;
    std::vector<HoleReport> hole_reports;
    std::optional<SearchSummary> search_summary;
    std::optional<WitnessReport> witness;
    std::optional<OracleSummary> oracle;
    bool contradiction = false;
    std::vector<std::string> notes;
    std::uint64_t timing_ms = 0;
};

Report make_report(const Polyomino& p, const ReportOptions& options = {});

/// Stable-keyed JSON rendering:
/// {"decision","provenance","holes","search","witness","timing_ms"} plus
/// "oracle" when the oracle comparison ran. Identical inputs produce
/// identical bytes except for the timing value.
std::string report_to_json(const Report& r);

std::string report_to_text(const Report& r);

} // namespace cubefold
