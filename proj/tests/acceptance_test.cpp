// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criterion 10's byte-identical-report check drives the real CLI
// binary (argv[1]) on a bundled shape file (argv[2] is the data directory).
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cubefold/brute_oracle.hpp"
#include "cubefold/crease_tools.hpp"
#include "cubefold/mapping_search.hpp"
#include "cubefold/polyomino.hpp"
#include "cubefold/report.hpp"
#include "cubefold/rules_engine.hpp"
#include "support/checkers.hpp"
#include "support/shapes.hpp"

using namespace cubefold;
namespace ts = cubefold::testsupport;

namespace {

int criteria_failed = 0;
std::vector<std::pair<Polyomino, Mapping>> collected_witnesses;

class Criterion {
public:
    Criterion(int number, std::string description)
        : number_(number), description_(std::move(description)),
          start_(std::chrono::steady_clock::now()) {}

    void require(bool condition, const std::string& detail) {
        if (!condition) {
            ok_ = false;
            details_.push_back(detail);
        }
    }

    ~Criterion() {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start_)
                            .count();
        std::printf("[%s] criterion %d: %s (%lld ms)\n", ok_ ? "PASS" : "FAIL", number_,
                    description_.c_str(), static_cast<long long>(ms));
        for (const std::string& d : details_) std::printf("       %s\n", d.c_str());
        if (!ok_) ++criteria_failed;
    }

private:
    int number_;
    std::string description_;
    std::chrono::steady_clock::time_point start_;
    bool ok_ = true;
    std::vector<std::string> details_;
};

void collect(const Polyomino& p, const std::vector<Mapping>& witnesses) {
    for (const Mapping& m : witnesses) collected_witnesses.emplace_back(p, m);
}

void criterion1_placement_algebra() {
    Criterion c(1, "placement algebra: 48 placements, 2 consistent extensions per edge");
    const auto placements = all_placements();
    c.require(placements.size() == 48,
              "expected 48 placements, got " + std::to_string(placements.size()));
    std::set<Placement> distinct(placements.begin(), placements.end());
    c.require(distinct.size() == 48, "placements are not distinct");
    for (const Placement& p : placements) {
        c.require(placement_valid(p), "invalid placement in all_placements");
    }
    for (const Placement& p : placements) {
        for (Direction d : kAllDirections) {
            const auto [quarter, flat] = extend_over_edge(p, d);
            std::set<Placement> agreeing;
            for (const Placement& q : placements) {
                if (placements_agree(p, d, q)) agreeing.insert(q);
            }
            c.require(agreeing.size() == 2, "shared-edge filter does not yield two placements");
            c.require(agreeing == std::set<Placement>{quarter, flat},
                      "extensions differ from the shared-edge filter");
        }
    }
}

void criterion2_oracle_equivalence() {
    Criterion c(2, "oracle equivalence on the small corpus (n <= 8)");
    const auto corpus = ts::small_corpus();
    c.require(corpus.size() >= 50,
              "corpus too small: " + std::to_string(corpus.size()) + " shapes");
    bool has_slits = false;
    SearchLimits limits;
    limits.max_witnesses = 1u << 20;
    for (const auto& [name, p] : corpus) {
        has_slits = has_slits || !p.slit_edges().empty();
        c.require(p.size() <= 8, name + ": corpus shape exceeds 8 squares");
        const SearchResult s = search(p, limits);
        const SearchResult o = brute_force(p);
        c.require(!s.truncated, name + ": search truncated");
        c.require(s.consistent_exists == o.consistent_exists, name + ": consistency differs");
        c.require(s.covering_exists == o.covering_exists, name + ": covering differs");
        auto sw = s.witnesses, ow = o.witnesses;
        std::sort(sw.begin(), sw.end());
        std::sort(ow.begin(), ow.end());
        c.require(sw == ow, name + ": witness sets differ");
        collect(p, s.witnesses);
    }
    c.require(has_slits, "corpus has no slit-bearing shapes");
}

void criterion3_rectangles_fail() {
    Criterion c(3, "solid rectangles 2..4 x 2..4 admit no covering mapping");
    for (int w = 2; w <= 4; ++w) {
        for (int h = 2; h <= 4; ++h) {
            const Polyomino p = ts::rect(w, h);
            const NecessaryOutcome outcome = check_necessary(p);
            c.require(outcome == NecessaryOutcome::Fail,
                      std::to_string(w) + "x" + std::to_string(h) + ": expected Fail, got " +
                          to_string(outcome));
        }
    }
}

void criterion4_rect_square_hole() {
    Criterion c(4, "rectangles with one centered unit-square hole do not fold");
    const std::array<Polyomino, 3> instances = {ts::rect(3, 3, {{1, 1}}),
                                                ts::rect(3, 5, {{1, 2}}),
                                                ts::rect(5, 5, {{2, 2}})};
    for (const Polyomino& p : instances) {
        const Verdict v = classify(p);
        c.require(v.decision == Decision::DoesNotFold, "expected does_not_fold");
        c.require(v.provenance == RuleId::ThmRectSqHole,
                  std::string("expected THM_RECT_SQHOLE, got ") + rule_name(v.provenance));
    }
    // The 3x3 case exhaustively, by search and by the oracle.
    const Polyomino ring = ts::rect(3, 3, {{1, 1}});
    c.require(check_necessary(ring) == NecessaryOutcome::Fail, "3x3 ring: search must fail");
    const SearchResult o = brute_force(ring);
    c.require(o.consistent_exists && !o.covering_exists,
              "3x3 ring: oracle expected consistent mappings covering at most 5 faces");
}

void criterion5_rect_slit1() {
    Criterion c(5, "a rectangle with one size-1 slit does not fold");
    const Polyomino p = ts::rect(4, 3, {}, {LatticeEdge{{2, 1}, {2, 2}}});
    const Verdict v = classify(p);
    c.require(v.decision == Decision::DoesNotFold, "expected does_not_fold");
    c.require(v.provenance == RuleId::ThmRectSlit1,
              std::string("expected THM_RECT_SLIT1, got ") + rule_name(v.provenance));
    c.require(check_necessary(p) == NecessaryOutcome::Fail, "search must fail");
}

void criterion6_positive_two_hole_rules() {
    Criterion c(6, "each sufficient two-hole rule fires and is backed by a covering witness");
    const auto instances = ts::rule_instances();
    const RuleId expected[] = {RuleId::Thm2SlitsOddRows, RuleId::ThmASlitAboveEven,
                               RuleId::ThmASlitBelowOdd, RuleId::Thm2UnitSqOdd};
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto& [name, p] = instances[i];
        const Verdict v = classify(p);
        c.require(v.decision == Decision::Folds, name + ": expected folds");
        c.require(v.provenance == expected[i],
                  name + ": unexpected provenance " + rule_name(v.provenance));
        const Corroboration cor = corroborate(p, v);
        c.require(cor.ran, name + ": corroboration truncated");
        c.require(!cor.contradiction,
                  name + ": CONTRADICTION - rule fired without a covering witness");
        c.require(cor.outcome == NecessaryOutcome::PassCovering,
                  name + ": expected PassCovering, got " + to_string(cor.outcome));
        if (cor.witness) collect(p, {*cor.witness});
    }
}

void criterion7_nonbasic_holes_fold() {
    Criterion c(7, "non-basic holes guarantee foldability, witnessed by the search");
    const std::vector<ts::NamedShape> instances = {
        {"domino_hole", ts::rect(4, 4, {{1, 1}, {2, 1}})},
        {"l_tromino_hole", ts::rect(4, 4, {{1, 1}, {2, 1}, {1, 2}})},
        {"straight3_slit", ts::rect(4, 6, {}, ts::vslit(2, 1, 4))},
        {"square_plus_slit", ts::rect(5, 4, {{1, 1}}, {LatticeEdge{{2, 2}, {3, 2}}})},
        {"t_slit", ts::rect(5, 5, {},
                            {LatticeEdge{{2, 1}, {2, 2}}, LatticeEdge{{2, 2}, {2, 3}},
                             LatticeEdge{{2, 2}, {3, 2}}})},
        {"zigzag_slit", ts::rect(4, 4, {},
                                 {LatticeEdge{{2, 1}, {2, 2}}, LatticeEdge{{2, 2}, {3, 2}},
                                  LatticeEdge{{3, 2}, {3, 3}}})},
    };
    c.require(instances.size() >= 5, "need at least five instances");
    for (const auto& [name, p] : instances) {
        const auto hs = holes(p);
        bool nonbasic = false;
        for (const Hole& h : hs) nonbasic = nonbasic || classify_hole(h).tag == HoleTag::NonBasic;
        c.require(nonbasic, name + ": instance lacks a non-basic hole");
        const Verdict v = classify(p);
        c.require(v.decision == Decision::Folds, name + ": expected folds");
        c.require(v.provenance == RuleId::ThmSingleNonBasic,
                  name + ": unexpected provenance " + rule_name(v.provenance));
        const Corroboration cor = corroborate(p, v);
        c.require(cor.ran && !cor.contradiction,
                  name + ": CONTRADICTION - no covering witness found");
        if (cor.witness) collect(p, {*cor.witness});
    }
}

void criterion8_adjacent_slits_fail() {
    Criterion c(8, "two vertical size-2 slits zero or one column apart: search fails");
    // Zero columns between: both slits on one grid line, narrow enclosure.
    const Polyomino zero = ts::rect(4, 8, {}, [] {
        auto e = ts::vslit(2, 1, 3);
        const auto f = ts::vslit(2, 4, 6);
        e.insert(e.end(), f.begin(), f.end());
        return e;
    }());
    // One column between.
    const Polyomino one = ts::rect(5, 8, {}, [] {
        auto e = ts::vslit(2, 1, 3);
        const auto f = ts::vslit(3, 4, 6);
        e.insert(e.end(), f.begin(), f.end());
        return e;
    }());
    for (const auto& [name, p] : {std::pair<const char*, const Polyomino&>{"zero_cols", zero},
                                  {"one_col", one}}) {
        const auto hs = holes(p);
        c.require(hs.size() == 2, std::string(name) + ": expected two slit holes");
        const NecessaryOutcome outcome = check_necessary(p);
        c.require(outcome == NecessaryOutcome::Fail,
                  std::string(name) + ": expected Fail, got " + to_string(outcome));
    }
}

void criterion9_witness_invariants() {
    Criterion c(9, "mapping-level crease invariants hold on every collected witness");
    c.require(!collected_witnesses.empty(), "no witnesses were collected");
    std::size_t violations = 0;
    for (const auto& [p, m] : collected_witnesses) {
        std::string why;
        if (!ts::witness_invariants_ok(p, m, &why)) {
            ++violations;
            c.require(false, "violation: " + why);
            if (violations > 5) break;
        }
    }
    c.require(violations == 0,
              std::to_string(collected_witnesses.size()) + " witnesses checked, " +
                  std::to_string(violations) + " violations");
}

std::string run_capture(const std::string& command, int* exit_code) {
    std::string output;
    FILE* pipe = popen((command + " 2>&1").c_str(), "r");
    if (!pipe) {
        *exit_code = -1;
        return output;
    }
    std::array<char, 4096> buffer;
    std::size_t n;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        output.append(buffer.data(), n);
    }
    const int status = pclose(pipe);
    *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return output;
}

void criterion10_symmetry_determinism(const std::string& cli, const std::string& data_dir) {
    Criterion c(10, "verdicts invariant under symmetry; reports byte-identical across runs");
    auto shapes = ts::small_corpus();
    for (const auto& [name, p] : ts::rule_instances()) shapes.push_back({name, p});
    for (const auto& [name, p] : shapes) {
        const Verdict base = classify(p);
        const NecessaryOutcome base_outcome = check_necessary(p);
        for (Sym s : kAllSyms) {
            const Polyomino q = transform(p, s);
            const Verdict v = classify(q);
            if (v.decision != base.decision || v.provenance != base.provenance) {
                c.require(false, name + ": classify changed under a symmetry");
                break;
            }
            if (check_necessary(q) != base_outcome) {
                c.require(false, name + ": check_necessary changed under a symmetry");
                break;
            }
        }
    }

    // In-process determinism of the report bytes.
    ReportOptions options;
    options.corroborate = true;
    for (const Polyomino& p : {ts::ring_3x3(), ts::cross_hexomino()}) {
        Report a = make_report(p, options);
        Report b = make_report(p, options);
        a.timing_ms = 0;
        b.timing_ms = 0;
        c.require(report_to_json(a) == report_to_json(b), "in-process reports differ");
    }

    // End-to-end determinism through the CLI.
    if (!cli.empty()) {
        const std::string command =
            cli + " check " + data_dir + "/two_vslits_far.json --witness --json";
        auto strip = [](std::string text) {
            return std::regex_replace(text, std::regex(R"("timing_ms": \d+)"),
                                      "\"timing_ms\": 0");
        };
        int code_a = 0, code_b = 0;
        const std::string a = run_capture(command, &code_a);
        const std::string b = run_capture(command, &code_b);
        c.require(code_a == 0 && code_b == 0, "CLI run failed");
        c.require(strip(a) == strip(b), "CLI reports differ across runs");
        c.require(!a.empty(), "CLI produced no output");
    } else {
        c.require(false, "no CLI path provided");
    }
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    const std::string data_dir = argc > 2 ? argv[2] : "";

    criterion1_placement_algebra();
    criterion2_oracle_equivalence();
    criterion3_rectangles_fail();
    criterion4_rect_square_hole();
    criterion5_rect_slit1();
    criterion6_positive_two_hole_rules();
    criterion7_nonbasic_holes_fold();
    criterion8_adjacent_slits_fail();
    criterion9_witness_invariants();
    criterion10_symmetry_determinism(cli, data_dir);

    if (criteria_failed == 0) {
        std::printf("acceptance: all 10 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", criteria_failed);
    return 1;
}
