#include "cubefold/crease_tools.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>

#include "cubefold/errors.hpp"

namespace cubefold {

const CreaseMagnitude* CreasePattern::find(const LatticeEdge& e) const {
    auto it = std::lower_bound(magnitudes.begin(), magnitudes.end(), e,
                               [](const auto& m, const LatticeEdge& q) { return m.first < q; });
    if (it == magnitudes.end() || it->first != e) return nullptr;
    return &it->second;
}

CreasePattern pattern_of(const Polyomino& p, const Mapping& m) {
    CreasePattern pattern;
    for (const GridPoint& s : p.squares()) {
        for (Direction d : {Direction::East, Direction::North}) {
            if (!p.connects(s, d)) continue;
            const Placement* mine = m.find(s);
            const Placement* theirs = m.find(step(s, d));
            assert(mine && theirs);
            const CreaseMagnitude mag = face_of(*mine) == face_of(*theirs)
                                            ? CreaseMagnitude::Flat
                                            : CreaseMagnitude::Quarter;
            pattern.magnitudes.emplace_back(edge_between(s, d), mag);
        }
    }
    std::sort(pattern.magnitudes.begin(), pattern.magnitudes.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return pattern;
}

namespace {

// The unit cell whose boundary carries the basic hole.
GridPoint hole_cell(const Hole& h, const HoleClass& cls) {
    if (cls.tag == HoleTag::UnitSquare) return h.absent_squares.front();
    // For L- and U-slits every slit edge borders the cell, so intersect the
    // edge-incident cell pairs.
    auto cells_of = [](const LatticeEdge& e) -> std::pair<GridPoint, GridPoint> {
        if (e.vertical()) return {{e.a.x - 1, e.a.y}, {e.a.x, e.a.y}};
        return {{e.a.x, e.a.y - 1}, {e.a.x, e.a.y}};
    };
    auto [c1, c2] = cells_of(h.slit_edges.front());
    for (std::size_t i = 1; i < h.slit_edges.size(); ++i) {
        auto [d1, d2] = cells_of(h.slit_edges[i]);
        const bool keep1 = c1 == d1 || c1 == d2;
        const bool keep2 = c2 == d1 || c2 == d2;
        if (keep1 && !keep2) c2 = c1;
        if (keep2 && !keep1) c1 = c2;
    }
    assert(c1 == c2);
    return c1;
}

// Image of a grid point under the mapping, as seen by the material around
// the hole. All incident squares outside the flap agree in a consistent
// mapping; a disagreement means the mapping is broken.
CubeCorner outside_image(const Polyomino& p, const Mapping& m, GridPoint pt,
                         GridPoint exclude_cell) {
    std::optional<CubeCorner> image;
    const GridPoint cells[4] = {
        {pt.x - 1, pt.y - 1}, {pt.x, pt.y - 1}, {pt.x - 1, pt.y}, {pt.x, pt.y}};
    for (const GridPoint& c : cells) {
        if (c == exclude_cell || !p.contains(c)) continue;
        const Placement* pl = m.find(c);
        if (!pl) continue;
        int idx;
        if (pt.x == c.x && pt.y == c.y) idx = 0;
        else if (pt.x == c.x + 1 && pt.y == c.y) idx = 1;
        else if (pt.x == c.x + 1 && pt.y == c.y + 1) idx = 2;
        else idx = 3;
        const CubeCorner img = pl->corners[idx];
        if (image && *image != img) {
            throw InternalInvariantViolation("mapping disagrees on grid point " + to_string(pt));
        }
        image = img;
    }
    if (!image) {
        throw InternalInvariantViolation("no mapped square touches grid point " + to_string(pt));
    }
    return *image;
}

} // namespace

HoleFoldInfo hole_fold_info(const Polyomino& p, const Mapping& m, const Hole& h) {
    const HoleClass cls = classify_hole(h);
    if (cls.tag != HoleTag::UnitSquare && cls.tag != HoleTag::LSlit2 &&
        cls.tag != HoleTag::USlit3) {
        throw std::invalid_argument("hole fold kind applies to unit-square, L-slit and U-slit "
                                    "holes, got " + to_string(cls));
    }
    const GridPoint cell = hole_cell(h, cls);
    const GridPoint sw{cell.x, cell.y}, se{cell.x + 1, cell.y};
    const GridPoint ne{cell.x + 1, cell.y + 1}, nw{cell.x, cell.y + 1};

    // The hole's grid points: all four cell corners for a square or U-slit,
    // the three slit endpoints for an L-slit.
    auto on_hole = [&](GridPoint q) {
        if (cls.tag != HoleTag::LSlit2) return true;
        for (const LatticeEdge& e : h.slit_edges) {
            if (e.a == q || e.b == q) return true;
        }
        return false;
    };

    std::map<GridPoint, CubeCorner> image;
    for (const GridPoint& q : {sw, se, ne, nw}) {
        if (on_hole(q)) image.emplace(q, outside_image(p, m, q, cell));
    }

    auto glued = [&](GridPoint a, GridPoint b) {
        return image.count(a) && image.count(b) && image.at(a) == image.at(b);
    };
    const bool diag1 = glued(sw, ne);
    const bool diag2 = glued(se, nw);
    if (diag1 && diag2) {
        throw InternalInvariantViolation(
            "all hole edges mapped to a single cube edge at cell " + to_string(cell));
    }
    HoleFoldInfo info;
    if (diag1 || diag2) {
        info.kind = HoleFoldKind::LShape;
        info.glued_pair = diag1 ? std::make_pair(sw, ne) : std::make_pair(se, nw);
    }
    return info;
}

HoleFoldKind hole_fold_kind(const Polyomino& p, const Mapping& m, const Hole& h) {
    return hole_fold_info(p, m, h).kind;
}

FaceLabels face_labels(const Mapping& m) {
    FaceLabels out;
    out.labels.reserve(m.entries.size());
    for (const auto& [square, placement] : m.entries) {
        out.labels.emplace_back(square, face_of(placement));
    }
    return out;
}

// --- SVG ----------------------------------------------------------------------

namespace {

constexpr int kCell = 40;
constexpr int kMargin = 20;

struct Canvas {
    int x0, y1; // min cell x, max cell y + 1 (top grid line)

    int sx(int x) const { return kMargin + (x - x0) * kCell; }
    int sy(int y) const { return kMargin + (y1 - y) * kCell; }
};

void line(std::ostringstream& out, const Canvas& c, const LatticeEdge& e, const char* cls,
          const char* style, int dx = 0, int dy = 0) {
    out << "  <line class=\"" << cls << "\" x1=\"" << c.sx(e.a.x) + dx << "\" y1=\""
        << c.sy(e.a.y) + dy << "\" x2=\"" << c.sx(e.b.x) + dx << "\" y2=\"" << c.sy(e.b.y) + dy
        << "\" " << style << "/>\n";
}

} // namespace

std::string render_svg(const Polyomino& p, const CreasePattern* pattern,
                       const FaceLabels* labels) {
    auto [lo, hi] = p.cell_bounds();
    const Canvas canvas{lo.x, hi.y + 1};
    const int width = (hi.x - lo.x + 1) * kCell + 2 * kMargin;
    const int height = (hi.y - lo.y + 1) * kCell + 2 * kMargin;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";

    for (const GridPoint& s : p.squares()) {
        out << "  <rect class=\"cell\" x=\"" << canvas.sx(s.x) << "\" y=\"" << canvas.sy(s.y + 1)
            << "\" width=\"" << kCell << "\" height=\"" << kCell << "\" fill=\"#f5f5f5\"/>\n";
    }

    // Interior present edges: creases when a pattern is given, grid lines
    // otherwise.
    for (const GridPoint& s : p.squares()) {
        for (Direction d : {Direction::East, Direction::North}) {
            if (!p.connects(s, d)) continue;
            const LatticeEdge e = edge_between(s, d);
            if (pattern) {
                const CreaseMagnitude* mag = pattern->find(e);
                if (mag && *mag == CreaseMagnitude::Flat) {
                    line(out, canvas, e, "crease-flat",
                         "stroke=\"#7b3fa0\" stroke-width=\"4\" stroke-dasharray=\"7 4\"");
                } else {
                    line(out, canvas, e, "crease-quarter",
                         "stroke=\"#7b3fa0\" stroke-width=\"1\" stroke-dasharray=\"3 3\"");
                }
            } else {
                line(out, canvas, e, "grid", "stroke=\"#c8c8c8\" stroke-width=\"1\"");
            }
        }
    }

    // Boundary: every unit edge with material on exactly one side.
    std::vector<LatticeEdge> boundary;
    for (const GridPoint& s : p.squares()) {
        for (Direction d : kAllDirections) {
            if (!p.contains(step(s, d))) boundary.push_back(edge_between(s, d));
        }
    }
    std::sort(boundary.begin(), boundary.end());
    boundary.erase(std::unique(boundary.begin(), boundary.end()), boundary.end());
    for (const LatticeEdge& e : boundary) {
        line(out, canvas, e, "boundary", "stroke=\"#000000\" stroke-width=\"3\"");
    }

    // Slit edges as a narrow gap: two offset strokes.
    for (const LatticeEdge& e : p.slit_edges()) {
        const int dx = e.vertical() ? 2 : 0;
        const int dy = e.vertical() ? 0 : 2;
        line(out, canvas, e, "slit", "stroke=\"#000000\" stroke-width=\"2\"", -dx, -dy);
        line(out, canvas, e, "slit", "stroke=\"#000000\" stroke-width=\"2\"", dx, dy);
    }

    if (labels) {
        for (const auto& [square, face] : labels->labels) {
            out << "  <text class=\"face-label\" x=\"" << canvas.sx(square.x) + kCell / 2
                << "\" y=\"" << canvas.sy(square.y + 1) + kCell / 2 + 6
                << "\" font-family=\"sans-serif\" font-size=\"18\" text-anchor=\"middle\">"
                << die_number(face) << "</text>\n";
        }
    }

    out << "</svg>\n";
    return out.str();
}

} // namespace cubefold
