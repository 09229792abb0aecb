#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubefold/mapping_search.hpp"
#include "cubefold/polyomino.hpp"

namespace cubefold {

enum class Decision { Folds, DoesNotFold, Unknown };

std::string to_string(Decision d);

enum class RuleId {
    ThmSingleNonBasic, // a non-basic hole guarantees foldability
    CorRect,           // solid rectangles never fold
    ThmRectSqHole,     // rectangle with one unit-square hole
    ThmRectSlit1,      // rectangle with one slit of size 1
    ThmTwoHolesEven,   // rectangle, two unit-square holes, same row, even gap
    Thm2SlitsOddRows,  // two vertical size-2 slits, >=2 columns, odd rows
    ThmASlitAboveEven, // A-slit with square/C-slit above, same column, even rows
    ThmASlitBelowOdd,  // A-slit with square/C-slit below, odd rows, any columns
    Thm2UnitSqOdd,     // two unit-square holes, same/adjacent columns, odd rows
    SearchFail,
    SearchPassOnly,
    SearchInconclusive,
};

const char* rule_name(RuleId id);

struct Verdict {
    Decision decision = Decision::Unknown;
    RuleId provenance = RuleId::SearchInconclusive;
    std::optional<Mapping> witness;
    std::vector<std::string> notes;
};

/// Matches the sufficient and impossibility rules (no search). Each rule's
/// pattern is tried under all eight symmetries, so verdicts do not depend on
/// how the shape happens to be oriented; first match in rule order wins.
std::optional<Verdict> match_rules(const Polyomino& p);

/// Full classification: match_rules, then the necessary-condition search as
/// fallback. Search failure yields DoesNotFold, a pass yields Unknown with a
/// covering witness attached when one was collected.
Verdict classify(const Polyomino& p, const SearchLimits& limits = {});

/// One 180° fold of a full band onto its neighbor: material on the fold side
/// of the grid line reflects across it; layers are superimposed, an edge is
/// present in the result when any layer connects there.
struct FoldStep {
    Axis axis = Axis::X; // X: vertical fold line x=line; Y: horizontal y=line
    int line = 0;
    bool fold_low = true; // true: the side below/left of the line folds over
};

Polyomino apply_fold(const Polyomino& p, const FoldStep& step);

struct ReductionTranscript {
    std::vector<FoldStep> steps;
    Polyomino result;
};

/// Single-hole reduction: folds all columns left/right of the hole onto the
/// columns directly adjacent to it, outermost first, then all rows above and
/// below onto the adjacent rows. Replaying the steps on the input yields
/// `result`. Throws NotApplicableError if the hole lacks an adjacent column
/// or row, which cannot happen for a genuine hole.
ReductionTranscript reduce_single_hole(const Polyomino& p, const Hole& h);

struct Corroboration {
    bool ran = false; // search completed within limits
    NecessaryOutcome outcome = NecessaryOutcome::Inconclusive;
    bool agrees = true;
    bool contradiction = false;
    std::optional<Mapping> witness;
    std::uint64_t states = 0;
    bool truncated = false;
    std::string detail;
};

/// Cross-checks a verdict against the necessary-condition search: Folds must
/// be backed by a covering witness, theorem-based DoesNotFold is expected to
/// coincide with search failure. Disagreement is reported as a
/// contradiction, never resolved silently.
Corroboration corroborate(const Polyomino& p, const Verdict& v, const SearchLimits& limits = {});

/// Experiment probe for the size-1-slit conjecture: compares the
/// necessary-condition outcome of `p` with that of `p` plus one extra slit
/// edge. Never consulted by classify.
struct SlitProbe {
    NecessaryOutcome without_slit = NecessaryOutcome::Inconclusive;
    NecessaryOutcome with_slit = NecessaryOutcome::Inconclusive;
};

SlitProbe slit1_probe(const Polyomino& p, const LatticeEdge& slit,
                      const SearchLimits& limits = {});

} // namespace cubefold
