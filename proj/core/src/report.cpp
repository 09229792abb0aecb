#include "cubefold/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "cubefold/brute_oracle.hpp"
#include "cubefold/errors.hpp"

#include <nlohmann/json.hpp>

namespace cubefold {

namespace {

using ordered_json = nlohmann::ordered_json;

WitnessReport witness_report(const Polyomino& p, const Mapping& m) {
    WitnessReport w;
    for (const auto& [square, placement] : m.entries) {
        w.faces.emplace_back(square, die_number(face_of(placement)));
    }
    w.creases = pattern_of(p, m).magnitudes;
    return w;
}

bool same_witness_sets(std::vector<Mapping> a, std::vector<Mapping> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

} // namespace

Report make_report(const Polyomino& p, const ReportOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    Report r;
    r.squares = p.size();
    for (const Hole& h : holes(p)) {
        r.hole_reports.push_back({h.anchor, classify_hole(h)});
    }

    Verdict verdict;
    if (auto matched = match_rules(p)) {
        verdict = *matched;
        if (options.corroborate) {
            const Corroboration c = corroborate(p, verdict, options.limits);
            r.search_summary = SearchSummary{c.states, c.truncated,
                                             c.outcome == NecessaryOutcome::PassCovering};
            r.contradiction = c.contradiction;
            if (c.witness) verdict.witness = c.witness;
            if (!c.detail.empty()) verdict.notes.push_back(c.detail);
        }
    } else {
        const SearchResult sr = search(p, options.limits);
        r.search_summary = SearchSummary{sr.states_explored, sr.truncated, sr.covering_exists};
        if (sr.truncated) {
            verdict.decision = Decision::Unknown;
            verdict.provenance = RuleId::SearchInconclusive;
            verdict.notes.push_back("search truncated after " +
                                    std::to_string(sr.states_explored) + " states");
        } else if (sr.covering_exists) {
            verdict.decision = Decision::Unknown;
            verdict.provenance = RuleId::SearchPassOnly;
            if (!sr.witnesses.empty()) verdict.witness = sr.witnesses.front();
        } else {
            verdict.decision = Decision::DoesNotFold;
            verdict.provenance = RuleId::SearchFail;
        }
    }

    if (options.run_oracle) {
        OracleSummary oracle;
        if (p.size() <= static_cast<int>(options.oracle_max_squares)) {
            const SearchResult os = brute_force(p, {options.oracle_max_squares});
            SearchLimits wide = options.limits;
            wide.max_witnesses = static_cast<std::size_t>(1) << 20;
            const SearchResult ss = search(p, wide);
            oracle.ran = true;
            oracle.agrees = os.consistent_exists == ss.consistent_exists &&
                            os.covering_exists == ss.covering_exists &&
                            same_witness_sets(os.witnesses, ss.witnesses);
            oracle.detail = oracle.agrees ? "oracle and search agree"
                                          : "CONTRADICTION: oracle and search disagree";
            if (!oracle.agrees) r.contradiction = true;
        } else {
            oracle.ran = false;
            oracle.detail = "skipped: instance exceeds the oracle size limit";
        }
        r.oracle = oracle;
    }

    r.decision = verdict.decision;
    r.provenance = verdict.provenance;
    r.notes = verdict.notes;
    if (verdict.witness) r.witness = witness_report(p, *verdict.witness);

    r.timing_ms = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                                 std::chrono::steady_clock::now() - start)
                                                 .count());
    return r;
}

std::string report_to_json(const Report& r) {
    ordered_json doc;
    doc["decision"] = to_string(r.decision);
    doc["provenance"] = rule_name(r.provenance);
    auto& holes_json = doc["holes"] = ordered_json::array();
    for (const HoleReport& h : r.hole_reports) {
        ordered_json entry;
        entry["anchor"] = {h.anchor.x, h.anchor.y};
        entry["class"] = [&] {
            switch (h.cls.tag) {
                case HoleTag::UnitSquare: return "UnitSquare";
                case HoleTag::Slit1: return "Slit1";
                case HoleTag::StraightSlit2: return "StraightSlit2";
                case HoleTag::LSlit2: return "LSlit2";
                case HoleTag::USlit3: return "USlit3";
                default: return "NonBasic";
            }
        }();
        const std::string orient = orientation_string(h.cls);
        if (orient.empty()) {
            entry["orientation"] = nullptr;
        } else {
            entry["orientation"] = orient;
        }
        holes_json.push_back(std::move(entry));
    }
    if (r.search_summary) {
        doc["search"] = {{"states", r.search_summary->states},
                         {"truncated", r.search_summary->truncated},
                         {"covering", r.search_summary->covering}};
    } else {
        doc["search"] = nullptr;
    }
    if (r.witness) {
        ordered_json w;
        auto& faces = w["faces"] = ordered_json::array();
        for (const auto& [square, die] : r.witness->faces) {
            faces.push_back({square.x, square.y, die});
        }
        auto& creases = w["creases"] = ordered_json::array();
        for (const auto& [edge, mag] : r.witness->creases) {
            creases.push_back({edge.a.x, edge.a.y, edge.b.x, edge.b.y,
                               mag == CreaseMagnitude::Flat ? "flat" : "quarter"});
        }
        doc["witness"] = std::move(w);
    } else {
        doc["witness"] = nullptr;
    }
    if (r.oracle) {
        doc["oracle"] = {{"ran", r.oracle->ran},
                         {"agrees", r.oracle->agrees},
                         {"detail", r.oracle->detail}};
    }
    doc["timing_ms"] = r.timing_ms;
    return doc.dump(2) + "\n";
}

std::string report_to_text(const Report& r) {
    std::ostringstream out;
    out << "squares:    " << r.squares << "\n";
    out << "decision:   " << to_string(r.decision) << "\n";
    out << "provenance: " << rule_name(r.provenance) << "\n";
    out << "holes:      " << r.hole_reports.size() << "\n";
    for (const HoleReport& h : r.hole_reports) {
        out << "  - anchor " << to_string(h.anchor) << "  " << to_string(h.cls) << "\n";
    }
    if (r.search_summary) {
        out << "search:     states=" << r.search_summary->states
            << " truncated=" << (r.search_summary->truncated ? "yes" : "no")
            << " covering=" << (r.search_summary->covering ? "yes" : "no") << "\n";
    }
    if (r.witness) {
        out << "witness:    faces ";
        for (const auto& [square, die] : r.witness->faces) {
            out << to_string(square) << "->" << die << " ";
        }
        out << "\n";
    }
    if (r.oracle) {
        out << "oracle:     " << r.oracle->detail << "\n";
    }
    for (const std::string& n : r.notes) {
        out << "note:       " << n << "\n";
    }
    if (r.contradiction) {
        out << "CONTRADICTION detected\n";
    }
    out << "timing_ms:  " << r.timing_ms << "\n";
    return out.str();
}

} // namespace cubefold
