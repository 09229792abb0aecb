#include "cubefold/rules_engine.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "cubefold/errors.hpp"

namespace cubefold {

std::string to_string(Decision d) {
    switch (d) {
        case Decision::Folds: return "folds";
        case Decision::DoesNotFold: return "does_not_fold";
        default: return "unknown";
    }
}

const char* rule_name(RuleId id) {
    switch (id) {
        case RuleId::ThmSingleNonBasic: return "THM_SINGLE_NONBASIC";
        case RuleId::CorRect: return "COR_RECT";
        case RuleId::ThmRectSqHole: return "THM_RECT_SQHOLE";
        case RuleId::ThmRectSlit1: return "THM_RECT_SLIT1";
        case RuleId::ThmTwoHolesEven: return "THM_TWOHOLES_EVEN";
        case RuleId::Thm2SlitsOddRows: return "THM_2SLITS_ODD_ROWS";
        case RuleId::ThmASlitAboveEven: return "THM_ASLIT_ABOVE_EVEN";
        case RuleId::ThmASlitBelowOdd: return "THM_ASLIT_BELOW_ODD";
        case RuleId::Thm2UnitSqOdd: return "THM_2UNITSQ_ODD";
        case RuleId::SearchFail: return "SEARCH_FAIL";
        case RuleId::SearchPassOnly: return "SEARCH_PASS_ONLY";
        default: return "SEARCH_INCONCLUSIVE";
    }
}

namespace {

struct ShapeView {
    Polyomino poly;
    std::vector<Hole> hole_list;
    std::vector<HoleClass> classes;
};

ShapeView view_of(Polyomino p) {
    ShapeView v{std::move(p), {}, {}};
    v.hole_list = holes(v.poly);
    v.classes.reserve(v.hole_list.size());
    for (const Hole& h : v.hole_list) v.classes.push_back(classify_hole(h));
    return v;
}

// True when the squares plus the holes' absent squares tile the bounding box
// exactly and every slit edge belongs to a hole (no boundary cuts).
bool is_rectangle_with_exact_holes(const ShapeView& v) {
    std::set<GridPoint> absent;
    std::set<LatticeEdge> hole_slits;
    for (const Hole& h : v.hole_list) {
        absent.insert(h.absent_squares.begin(), h.absent_squares.end());
        hole_slits.insert(h.slit_edges.begin(), h.slit_edges.end());
    }
    auto [lo, hi] = v.poly.cell_bounds();
    for (int y = lo.y; y <= hi.y; ++y) {
        for (int x = lo.x; x <= hi.x; ++x) {
            const GridPoint c{x, y};
            if (!v.poly.contains(c) && !absent.count(c)) return false;
        }
    }
    for (const LatticeEdge& e : v.poly.slit_edges()) {
        if (!hole_slits.count(e)) return false;
    }
    return true;
}

bool same_column(const Hole& a, const Hole& b) {
    return a.point_min.x == b.point_min.x && a.point_max.x == b.point_max.x;
}

// Gap row count with `upper` strictly above `lower`, when defined.
std::optional<int> rows_above(const Hole& lower, const Hole& upper) {
    if (upper.point_min.y > lower.point_max.y) {
        return upper.point_min.y - lower.point_max.y;
    }
    return std::nullopt;
}

bool match_rule2_rect(const ShapeView& v) {
    return v.hole_list.empty() && v.poly.slit_edges().empty() &&
           is_rectangle_with_exact_holes(v);
}

bool match_rule3_rect_sqhole(const ShapeView& v) {
    return v.hole_list.size() == 1 && v.classes[0].tag == HoleTag::UnitSquare &&
           is_rectangle_with_exact_holes(v);
}

bool match_rule4_rect_slit1(const ShapeView& v) {
    return v.hole_list.size() == 1 && v.classes[0].tag == HoleTag::Slit1 &&
           is_rectangle_with_exact_holes(v);
}

bool match_rule5_two_sqholes_even(const ShapeView& v) {
    if (v.hole_list.size() != 2) return false;
    if (v.classes[0].tag != HoleTag::UnitSquare || v.classes[1].tag != HoleTag::UnitSquare) {
        return false;
    }
    if (!is_rectangle_with_exact_holes(v)) return false;
    const GridPoint a = v.hole_list[0].absent_squares[0];
    const GridPoint b = v.hole_list[1].absent_squares[0];
    if (a.y != b.y) return false;
    const auto cols = gap_metrics(v.hole_list[0], v.hole_list[1]).cols_between;
    return cols.has_value() && *cols % 2 == 0;
}

bool match_rule6_two_vslits(const ShapeView& v) {
    if (v.hole_list.size() != 2) return false;
    for (const HoleClass& c : v.classes) {
        if (c.tag != HoleTag::StraightSlit2 || c.straight_axis() != Axis::Y) return false;
    }
    const GapMetrics g = gap_metrics(v.hole_list[0], v.hole_list[1]);
    return g.cols_between && *g.cols_between >= 2 && g.rows_between && *g.rows_between % 2 == 1;
}

// Rules 7 and 8: an A-slit together with a unit-square hole or C-slit.
bool match_aslit_pair(const ShapeView& v, bool other_above, int parity, bool need_same_column) {
    if (v.hole_list.size() != 2) return false;
    for (int i = 0; i < 2; ++i) {
        const Hole& aslit = v.hole_list[static_cast<std::size_t>(i)];
        const Hole& other = v.hole_list[static_cast<std::size_t>(1 - i)];
        const HoleClass& ac = v.classes[static_cast<std::size_t>(i)];
        const HoleClass& oc = v.classes[static_cast<std::size_t>(1 - i)];
        if (!ac.is_a_slit()) continue;
        if (oc.tag != HoleTag::UnitSquare && oc.tag != HoleTag::USlit3) continue;
        if (need_same_column && !same_column(aslit, other)) continue;
        const auto rows = other_above ? rows_above(aslit, other) : rows_above(other, aslit);
        if (rows && *rows % 2 == parity) return true;
    }
    return false;
}

bool match_rule9_two_sqholes_odd(const ShapeView& v) {
    if (v.hole_list.size() != 2) return false;
    if (v.classes[0].tag != HoleTag::UnitSquare || v.classes[1].tag != HoleTag::UnitSquare) {
        return false;
    }
    const GridPoint a = v.hole_list[0].absent_squares[0];
    const GridPoint b = v.hole_list[1].absent_squares[0];
    if (std::abs(a.x - b.x) > 1) return false;
    const auto rows = gap_metrics(v.hole_list[0], v.hole_list[1]).rows_between;
    return rows.has_value() && *rows % 2 == 1;
}

// Applicability of the two-separated-holes theorem: both holes basic cell
// shapes, at least one row and one column between them, joint bounding box
// otherwise filled. Recorded as a structural note.
bool two_separated_basic_holes(const ShapeView& v) {
    if (v.hole_list.size() != 2) return false;
    for (const HoleClass& c : v.classes) {
        if (c.tag != HoleTag::UnitSquare && c.tag != HoleTag::LSlit2 && c.tag != HoleTag::USlit3) {
            return false;
        }
    }
    const GapMetrics g = gap_metrics(v.hole_list[0], v.hole_list[1]);
    if (!g.rows_between || *g.rows_between < 1) return false;
    if (!g.cols_between || *g.cols_between < 1) return false;
    const int x0 = std::min(v.hole_list[0].point_min.x, v.hole_list[1].point_min.x);
    const int y0 = std::min(v.hole_list[0].point_min.y, v.hole_list[1].point_min.y);
    const int x1 = std::max(v.hole_list[0].point_max.x, v.hole_list[1].point_max.x);
    const int y1 = std::max(v.hole_list[0].point_max.y, v.hole_list[1].point_max.y);
    std::set<GridPoint> absent;
    for (const Hole& h : v.hole_list) {
        absent.insert(h.absent_squares.begin(), h.absent_squares.end());
    }
    for (int y = y0; y < y1; ++y) {
        for (int x = x0; x < x1; ++x) {
            if (!v.poly.contains({x, y}) && !absent.count({x, y})) return false;
        }
    }
    return true;
}

} // namespace

std::optional<Verdict> match_rules(const Polyomino& p) {
    std::vector<ShapeView> views;
    views.reserve(kAllSyms.size());
    views.push_back(view_of(p));
    for (std::size_t i = 1; i < kAllSyms.size(); ++i) {
        views.push_back(view_of(transform(p, kAllSyms[i])));
    }

    std::vector<std::string> notes;
    if (two_separated_basic_holes(views.front())) {
        notes.push_back("two separated basic holes: at most one can fold non-trivially");
    }

    auto verdict = [&](Decision d, RuleId id) {
        return Verdict{d, id, std::nullopt, notes};
    };
    auto any_view = [&](bool (*pred)(const ShapeView&)) {
        return std::any_of(views.begin(), views.end(), pred);
    };

    for (const HoleClass& c : views.front().classes) {
        if (c.tag == HoleTag::NonBasic) {
            return verdict(Decision::Folds, RuleId::ThmSingleNonBasic);
        }
    }
    if (match_rule2_rect(views.front())) {
        return verdict(Decision::DoesNotFold, RuleId::CorRect);
    }
    if (match_rule3_rect_sqhole(views.front())) {
        return verdict(Decision::DoesNotFold, RuleId::ThmRectSqHole);
    }
    if (match_rule4_rect_slit1(views.front())) {
        return verdict(Decision::DoesNotFold, RuleId::ThmRectSlit1);
    }
    if (any_view(match_rule5_two_sqholes_even)) {
        return verdict(Decision::DoesNotFold, RuleId::ThmTwoHolesEven);
    }
    if (any_view(match_rule6_two_vslits)) {
        return verdict(Decision::Folds, RuleId::Thm2SlitsOddRows);
    }
    if (any_view([](const ShapeView& v) { return match_aslit_pair(v, true, 0, true); })) {
        return verdict(Decision::Folds, RuleId::ThmASlitAboveEven);
    }
    if (any_view([](const ShapeView& v) { return match_aslit_pair(v, false, 1, false); })) {
        return verdict(Decision::Folds, RuleId::ThmASlitBelowOdd);
    }
    if (any_view(match_rule9_two_sqholes_odd)) {
        return verdict(Decision::Folds, RuleId::Thm2UnitSqOdd);
    }
    return std::nullopt;
}

Verdict classify(const Polyomino& p, const SearchLimits& limits) {
    if (auto v = match_rules(p)) return *v;

    Verdict v;
    ShapeView sv = view_of(p);
    if (two_separated_basic_holes(sv)) {
        v.notes.push_back("two separated basic holes: at most one can fold non-trivially");
    }
    const SearchResult r = search(p, limits);
    if (r.truncated) {
        v.decision = Decision::Unknown;
        v.provenance = RuleId::SearchInconclusive;
        v.notes.push_back("search truncated after " + std::to_string(r.states_explored) +
                          " states");
        return v;
    }
    if (r.covering_exists) {
        v.decision = Decision::Unknown;
        v.provenance = RuleId::SearchPassOnly;
        if (!r.witnesses.empty()) v.witness = r.witnesses.front();
    } else {
        v.decision = Decision::DoesNotFold;
        v.provenance = RuleId::SearchFail;
    }
    return v;
}

// --- Reduction ------------------------------------------------------------------

Polyomino apply_fold(const Polyomino& p, const FoldStep& fold) {
    const int c = fold.line;
    const bool vertical = fold.axis == Axis::X;

    auto coord = [&](GridPoint q) { return vertical ? q.x : q.y; };
    auto reflect_point = [&](GridPoint q) {
        if (vertical) return GridPoint{2 * c - q.x, q.y};
        return GridPoint{q.x, 2 * c - q.y};
    };
    auto reflect_cell = [&](GridPoint s) {
        if (vertical) return GridPoint{2 * c - s.x - 1, s.y};
        return GridPoint{s.x, 2 * c - s.y - 1};
    };
    auto cell_on_fold_side = [&](GridPoint s) {
        return fold.fold_low ? coord(s) < c : coord(s) >= c;
    };

    std::set<GridPoint> squares;
    for (const GridPoint& s : p.squares()) {
        squares.insert(cell_on_fold_side(s) ? reflect_cell(s) : s);
    }

    // An edge of the folded polyomino is present when any layer has it:
    // either the position itself (keep side or on the line) or its mirror.
    auto present_in_input = [&](const LatticeEdge& e) {
        if (e.vertical()) {
            return p.contains({e.a.x - 1, e.a.y}) && p.contains({e.a.x, e.a.y}) && !p.is_slit(e);
        }
        return p.contains({e.a.x, e.a.y - 1}) && p.contains({e.a.x, e.a.y}) && !p.is_slit(e);
    };
    auto edge_on_line = [&](const LatticeEdge& e) {
        if (vertical) return e.vertical() && e.a.x == c;
        return e.horizontal() && e.a.y == c;
    };
    auto edge_on_fold_side = [&](const LatticeEdge& e) {
        const int m = std::max(coord(e.a), coord(e.b));
        const int lo2 = std::min(coord(e.a), coord(e.b));
        return fold.fold_low ? m <= c && !edge_on_line(e) : lo2 >= c && !edge_on_line(e);
    };
    auto present_in_result = [&](const LatticeEdge& e) {
        if (present_in_input(e)) {
            if (edge_on_line(e) || !edge_on_fold_side(e)) return true;
        }
        const LatticeEdge mirror = LatticeEdge::between(reflect_point(e.a), reflect_point(e.b));
        return edge_on_fold_side(mirror) && present_in_input(mirror);
    };

    std::vector<GridPoint> new_squares(squares.begin(), squares.end());
    std::vector<LatticeEdge> new_slits;
    auto contains = [&](GridPoint s) { return squares.count(s) != 0; };
    for (const GridPoint& s : new_squares) {
        const LatticeEdge east = edge_between(s, Direction::East);
        if (contains(step(s, Direction::East)) && !present_in_result(east)) {
            new_slits.push_back(east);
        }
        const LatticeEdge north = edge_between(s, Direction::North);
        if (contains(step(s, Direction::North)) && !present_in_result(north)) {
            new_slits.push_back(north);
        }
    }
    return Polyomino::create(std::move(new_squares), std::move(new_slits));
}

ReductionTranscript reduce_single_hole(const Polyomino& p, const Hole& h) {
    auto [lo, hi] = p.cell_bounds();
    const int hx0 = h.point_min.x, hx1 = h.point_max.x;
    const int hy0 = h.point_min.y, hy1 = h.point_max.y;
    if (hx0 - 1 < lo.x || hx1 > hi.x || hy0 - 1 < lo.y || hy1 > hi.y) {
        throw NotApplicableError("hole has no adjacent column or row to fold onto");
    }

    ReductionTranscript t{{}, p};
    auto run = [&](const FoldStep& step) {
        t.steps.push_back(step);
        t.result = apply_fold(t.result, step);
    };
    for (int c = lo.x + 1; c <= hx0 - 1; ++c) run({Axis::X, c, true});
    for (int c = hi.x; c >= hx1 + 1; --c) run({Axis::X, c, false});
    for (int c = lo.y + 1; c <= hy0 - 1; ++c) run({Axis::Y, c, true});
    for (int c = hi.y; c >= hy1 + 1; --c) run({Axis::Y, c, false});
    return t;
}

Corroboration corroborate(const Polyomino& p, const Verdict& v, const SearchLimits& limits) {
    Corroboration c;
    if (v.decision == Decision::Unknown) {
        c.ran = false;
        c.witness = v.witness;
        c.detail = "nothing to corroborate for an unknown verdict";
        return c;
    }
    const SearchResult r = search(p, limits);
    c.states = r.states_explored;
    c.truncated = r.truncated;
    c.outcome = outcome_of(r);
    if (r.truncated) {
        c.ran = false;
        c.detail = "search truncated; verdict not corroborated";
        return c;
    }
    c.ran = true;
    if (v.decision == Decision::Folds) {
        c.agrees = c.outcome == NecessaryOutcome::PassCovering;
        c.contradiction = !c.agrees;
        if (c.agrees && !r.witnesses.empty()) c.witness = r.witnesses.front();
        c.detail = c.agrees ? "covering witness found"
                            : "CONTRADICTION: sufficient rule fired but no covering mapping exists";
    } else {
        c.agrees = c.outcome == NecessaryOutcome::Fail;
        c.contradiction = !c.agrees;
        c.detail = c.agrees ? "search confirms: no covering mapping"
                            : "CONTRADICTION: impossibility rule fired but a covering mapping exists";
    }
    return c;
}

SlitProbe slit1_probe(const Polyomino& p, const LatticeEdge& slit, const SearchLimits& limits) {
    std::vector<LatticeEdge> slits = p.slit_edges();
    slits.push_back(slit);
    const Polyomino with_slit = Polyomino::create(p.squares(), std::move(slits));
    SlitProbe probe;
    probe.without_slit = check_necessary(p, limits);
    probe.with_slit = check_necessary(with_slit, limits);
    return probe;
}

} // namespace cubefold
