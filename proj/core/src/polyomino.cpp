#include "cubefold/polyomino.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <deque>
#include <map>

#include "cubefold/errors.hpp"

namespace cubefold {

std::string to_string(GridPoint p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

LatticeEdge LatticeEdge::between(GridPoint p, GridPoint q) {
    const int dx = std::abs(p.x - q.x), dy = std::abs(p.y - q.y);
    if (dx + dy != 1) {
        throw ValidationError("edge endpoints " + to_string(p) + " and " + to_string(q) +
                              " are not at unit distance");
    }
    if (q < p) std::swap(p, q);
    return LatticeEdge{p, q};
}

GridPoint step(GridPoint p, Direction d) {
    switch (d) {
        case Direction::North: return {p.x, p.y + 1};
        case Direction::East: return {p.x + 1, p.y};
        case Direction::South: return {p.x, p.y - 1};
        default: return {p.x - 1, p.y};
    }
}

LatticeEdge edge_between(GridPoint s, Direction side) {
    switch (side) {
        case Direction::North: return LatticeEdge{{s.x, s.y + 1}, {s.x + 1, s.y + 1}};
        case Direction::East: return LatticeEdge{{s.x + 1, s.y}, {s.x + 1, s.y + 1}};
        case Direction::South: return LatticeEdge{{s.x, s.y}, {s.x + 1, s.y}};
        default: return LatticeEdge{{s.x, s.y}, {s.x, s.y + 1}};
    }
}

namespace {

// The two unit squares incident to an interior lattice edge.
std::pair<GridPoint, GridPoint> incident_squares(const LatticeEdge& e) {
    if (e.vertical()) {
        return {{e.a.x - 1, e.a.y}, {e.a.x, e.a.y}};
    }
    return {{e.a.x, e.a.y - 1}, {e.a.x, e.a.y}};
}

} // namespace

Polyomino Polyomino::create(std::vector<GridPoint> squares, std::vector<LatticeEdge> slits) {
    if (squares.empty()) throw ValidationError("empty shape");
    std::sort(squares.begin(), squares.end());
    if (std::adjacent_find(squares.begin(), squares.end()) != squares.end()) {
        throw ValidationError("duplicate square");
    }
    std::sort(slits.begin(), slits.end());
    if (std::adjacent_find(slits.begin(), slits.end()) != slits.end()) {
        throw ValidationError("duplicate slit edge");
    }

    Polyomino p;
    p.squares_ = std::move(squares);
    p.slits_ = std::move(slits);

    for (const LatticeEdge& e : p.slits_) {
        auto [s1, s2] = incident_squares(e);
        if (!p.contains(s1) || !p.contains(s2)) {
            throw ValidationError("slit edge " + to_string(e.a) + "-" + to_string(e.b) +
                                  " is not interior");
        }
    }

    // Dual-graph connectivity across present (non-slit) shared edges.
    std::vector<bool> seen(p.squares_.size(), false);
    std::deque<std::size_t> queue;
    queue.push_back(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
        const GridPoint s = p.squares_[queue.front()];
        queue.pop_front();
        for (Direction d : kAllDirections) {
            if (!p.connects(s, d)) continue;
            const GridPoint q = step(s, d);
            const auto it = std::lower_bound(p.squares_.begin(), p.squares_.end(), q);
            const std::size_t idx = static_cast<std::size_t>(it - p.squares_.begin());
            if (!seen[idx]) {
                seen[idx] = true;
                ++reached;
                queue.push_back(idx);
            }
        }
    }
    if (reached != p.squares_.size()) {
        throw ValidationError("dual graph is disconnected");
    }
    return p;
}

bool Polyomino::contains(GridPoint square) const {
    return std::binary_search(squares_.begin(), squares_.end(), square);
}

bool Polyomino::is_slit(const LatticeEdge& e) const {
    return std::binary_search(slits_.begin(), slits_.end(), e);
}

bool Polyomino::connects(GridPoint square, Direction dir) const {
    return contains(step(square, dir)) && !is_slit(edge_between(square, dir));
}

std::pair<GridPoint, GridPoint> Polyomino::cell_bounds() const {
    GridPoint lo = squares_.front(), hi = squares_.front();
    for (const GridPoint& s : squares_) {
        lo.x = std::min(lo.x, s.x);
        lo.y = std::min(lo.y, s.y);
        hi.x = std::max(hi.x, s.x);
        hi.y = std::max(hi.y, s.y);
    }
    return {lo, hi};
}

// --- Holes -----------------------------------------------------------------

namespace {

// Doubled-resolution view of the bounding box. Node (i,j) with both indices
// odd is a unit square, mixed parity is a lattice edge, both even is a grid
// point. Material nodes are exactly the parts of the open region P.
class DoubledGrid {
public:
    explicit DoubledGrid(const Polyomino& p) : poly_(p) {
        auto [lo, hi] = p.cell_bounds();
        origin_ = lo;
        dw_ = 2 * (hi.x - lo.x + 1) + 1;
        dh_ = 2 * (hi.y - lo.y + 1) + 1;
    }

    int width() const { return dw_; }
    int height() const { return dh_; }

    bool in_range(int i, int j) const { return i >= 0 && i < dw_ && j >= 0 && j < dh_; }

    bool material(int i, int j) const {
        if (!in_range(i, j)) return false;
        const bool iodd = i & 1, jodd = j & 1;
        if (iodd && jodd) return poly_.contains(square_at(i, j));
        if (!iodd && !jodd) {
            // Openness: a grid point lies in P only when a full neighborhood
            // does, i.e. all four incident edges are material.
            return material(i - 1, j) && material(i + 1, j) && material(i, j - 1) &&
                   material(i, j + 1);
        }
        const LatticeEdge e = edge_at(i, j);
        auto [s1, s2] = incident_squares(e);
        return poly_.contains(s1) && poly_.contains(s2) && !poly_.is_slit(e);
    }

    GridPoint square_at(int i, int j) const {
        return {origin_.x + (i - 1) / 2, origin_.y + (j - 1) / 2};
    }

    LatticeEdge edge_at(int i, int j) const {
        if ((i & 1) == 0) { // vertical edge
            const GridPoint a{origin_.x + i / 2, origin_.y + (j - 1) / 2};
            return LatticeEdge{a, {a.x, a.y + 1}};
        }
        const GridPoint a{origin_.x + (i - 1) / 2, origin_.y + j / 2};
        return LatticeEdge{a, {a.x + 1, a.y}};
    }

private:
    const Polyomino& poly_;
    GridPoint origin_;
    int dw_ = 0;
    int dh_ = 0;
};

} // namespace

std::vector<Hole> holes(const Polyomino& p) {
    DoubledGrid grid(p);
    const int dw = grid.width(), dh = grid.height();
    auto at = [&](int i, int j) { return static_cast<std::size_t>(j) * dw + i; };

    // 0 = unvisited non-material, 1 = material, 2 = reached from outside,
    // 3 = assigned to a hole.
    std::vector<std::uint8_t> state(static_cast<std::size_t>(dw) * dh, 0);
    for (int j = 0; j < dh; ++j) {
        for (int i = 0; i < dw; ++i) {
            if (grid.material(i, j)) state[at(i, j)] = 1;
        }
    }

    constexpr int di[4] = {1, -1, 0, 0};
    constexpr int dj[4] = {0, 0, 1, -1};
    auto flood = [&](int si, int sj, std::uint8_t mark, std::vector<std::pair<int, int>>* out) {
        std::deque<std::pair<int, int>> queue;
        queue.emplace_back(si, sj);
        state[at(si, sj)] = mark;
        while (!queue.empty()) {
            auto [i, j] = queue.front();
            queue.pop_front();
            if (out) out->emplace_back(i, j);
            for (int k = 0; k < 4; ++k) {
                const int ni = i + di[k], nj = j + dj[k];
                if (!grid.in_range(ni, nj) || state[at(ni, nj)] != 0) continue;
                state[at(ni, nj)] = mark;
                queue.emplace_back(ni, nj);
            }
        }
    };

    // The border of the doubled grid consists of boundary edges and points,
    // all non-material; flooding from it marks the outer component.
    for (int i = 0; i < dw; ++i) {
        if (state[at(i, 0)] == 0) flood(i, 0, 2, nullptr);
        if (state[at(i, dh - 1)] == 0) flood(i, dh - 1, 2, nullptr);
    }
    for (int j = 0; j < dh; ++j) {
        if (state[at(0, j)] == 0) flood(0, j, 2, nullptr);
        if (state[at(dw - 1, j)] == 0) flood(dw - 1, j, 2, nullptr);
    }

    std::vector<Hole> result;
    for (int j = 0; j < dh; ++j) {
        for (int i = 0; i < dw; ++i) {
            if (state[at(i, j)] != 0) continue;
            std::vector<std::pair<int, int>> nodes;
            flood(i, j, 3, &nodes);

            Hole h;
            for (auto [ni, nj] : nodes) {
                const bool iodd = ni & 1, jodd = nj & 1;
                if (iodd && jodd) {
                    h.absent_squares.push_back(grid.square_at(ni, nj));
                } else if (iodd != jodd) {
                    const LatticeEdge e = grid.edge_at(ni, nj);
                    if (p.is_slit(e)) h.slit_edges.push_back(e);
                }
            }
            std::sort(h.absent_squares.begin(), h.absent_squares.end());
            std::sort(h.slit_edges.begin(), h.slit_edges.end());

            // Grid-point extent from the closure of the component.
            bool first = true;
            auto add_point = [&](GridPoint q) {
                if (first) {
                    h.point_min = h.point_max = q;
                    first = false;
                    return;
                }
                h.point_min.x = std::min(h.point_min.x, q.x);
                h.point_min.y = std::min(h.point_min.y, q.y);
                h.point_max.x = std::max(h.point_max.x, q.x);
                h.point_max.y = std::max(h.point_max.y, q.y);
            };
            GridPoint anchor{0, 0};
            bool have_anchor = false;
            auto add_anchor = [&](GridPoint q) {
                if (!have_anchor || q < anchor) {
                    anchor = q;
                    have_anchor = true;
                }
            };
            for (const GridPoint& s : h.absent_squares) {
                for (int dx = 0; dx <= 1; ++dx) {
                    for (int dy = 0; dy <= 1; ++dy) {
                        add_point({s.x + dx, s.y + dy});
                        add_anchor({s.x + dx, s.y + dy});
                    }
                }
            }
            for (const LatticeEdge& e : h.slit_edges) {
                add_point(e.a);
                add_point(e.b);
                add_anchor(e.a);
                add_anchor(e.b);
            }
            assert(have_anchor);
            h.anchor = anchor;
            result.push_back(std::move(h));
        }
    }
    std::sort(result.begin(), result.end(),
              [](const Hole& a, const Hole& b) { return a.anchor < b.anchor; });
    return result;
}

// --- Classification ----------------------------------------------------------

namespace {

bool share_endpoint(const LatticeEdge& e, const LatticeEdge& f, GridPoint* shared) {
    for (const GridPoint& p : {e.a, e.b}) {
        for (const GridPoint& q : {f.a, f.b}) {
            if (p == q) {
                if (shared) *shared = p;
                return true;
            }
        }
    }
    return false;
}

GridPoint other_endpoint(const LatticeEdge& e, GridPoint p) {
    return e.a == p ? e.b : e.a;
}

std::optional<LCorner> l_corner_of(Direction d1, Direction d2) {
    auto has = [&](Direction d) { return d1 == d || d2 == d; };
    if (has(Direction::North) && has(Direction::East)) return LCorner::NE;
    if (has(Direction::South) && has(Direction::East)) return LCorner::SE;
    if (has(Direction::South) && has(Direction::West)) return LCorner::SW;
    if (has(Direction::North) && has(Direction::West)) return LCorner::NW;
    return std::nullopt;
}

Direction direction_of(GridPoint from, GridPoint to) {
    if (to.x == from.x + 1) return Direction::East;
    if (to.x == from.x - 1) return Direction::West;
    if (to.y == from.y + 1) return Direction::North;
    assert(to.y == from.y - 1);
    return Direction::South;
}

HoleClass classify_slit(const std::vector<LatticeEdge>& edges) {
    const std::size_t k = edges.size();
    if (k == 1) return HoleClass::slit1();
    if (k == 2) {
        GridPoint shared;
        if (!share_endpoint(edges[0], edges[1], &shared)) return HoleClass::non_basic();
        if (edges[0].vertical() == edges[1].vertical()) {
            return HoleClass::straight_slit2(edges[0].vertical() ? Axis::Y : Axis::X);
        }
        const Direction d1 = direction_of(shared, other_endpoint(edges[0], shared));
        const Direction d2 = direction_of(shared, other_endpoint(edges[1], shared));
        if (auto corner = l_corner_of(d1, d2)) return HoleClass::l_slit2(*corner);
        return HoleClass::non_basic();
    }
    if (k == 3) {
        // A U-slit is a 3-edge chain: middle edge plus two parallel arms
        // leaving the middle edge's endpoints on the same side.
        for (std::size_t mid = 0; mid < 3; ++mid) {
            const LatticeEdge& m = edges[mid];
            const LatticeEdge& u = edges[(mid + 1) % 3];
            const LatticeEdge& v = edges[(mid + 2) % 3];
            GridPoint su, sv;
            if (!share_endpoint(m, u, &su) || !share_endpoint(m, v, &sv)) continue;
            if (su == sv) continue; // arms attach to distinct ends
            if (u.vertical() == m.vertical() || v.vertical() == m.vertical()) continue;
            const Direction du = direction_of(su, other_endpoint(u, su));
            const Direction dv = direction_of(sv, other_endpoint(v, sv));
            if (du != dv) continue; // zigzag, not a U
            return HoleClass::u_slit3(du);
        }
        return HoleClass::non_basic();
    }
    return HoleClass::non_basic();
}

} // namespace

HoleClass classify_hole(const Hole& h) {
    if (!h.absent_squares.empty()) {
        if (h.absent_squares.size() == 1 && h.slit_edges.empty()) {
            return HoleClass::unit_square();
        }
        return HoleClass::non_basic();
    }
    return classify_slit(h.slit_edges);
}

std::string to_string(const HoleClass& c) {
    switch (c.tag) {
        case HoleTag::UnitSquare: return "UnitSquare";
        case HoleTag::Slit1: return "Slit1";
        case HoleTag::StraightSlit2:
            return std::string("StraightSlit2(") + orientation_string(c) + ")";
        case HoleTag::LSlit2: return std::string("LSlit2(") + orientation_string(c) + ")";
        case HoleTag::USlit3: return std::string("USlit3(") + orientation_string(c) + ")";
        default: return "NonBasic";
    }
}

std::string orientation_string(const HoleClass& c) {
    switch (c.tag) {
        case HoleTag::StraightSlit2:
            return c.straight_axis() == Axis::Y ? "vertical" : "horizontal";
        case HoleTag::LSlit2: {
            static const char* names[] = {"NE", "SE", "SW", "NW"};
            return names[static_cast<int>(c.l_corner())];
        }
        case HoleTag::USlit3: return to_string(c.u_opening());
        default: return "";
    }
}

// --- Symmetries --------------------------------------------------------------

GridPoint apply_sym(Sym s, GridPoint p) {
    switch (s) {
        case Sym::Identity: return p;
        case Sym::Rot90: return {-p.y, p.x};
        case Sym::Rot180: return {-p.x, -p.y};
        case Sym::Rot270: return {p.y, -p.x};
        case Sym::FlipX: return {-p.x, p.y};
        case Sym::FlipY: return {p.x, -p.y};
        case Sym::Transpose: return {p.y, p.x};
        default: return {-p.y, -p.x};
    }
}

Direction apply_sym(Sym s, Direction d) {
    const GridPoint v = step({0, 0}, d);
    const GridPoint w = apply_sym(s, v);
    return direction_of({0, 0}, w);
}

Polyomino transform(const Polyomino& p, Sym s) {
    std::vector<GridPoint> squares;
    squares.reserve(p.squares().size());
    for (const GridPoint& c : p.squares()) {
        const GridPoint a = apply_sym(s, c);
        const GridPoint b = apply_sym(s, {c.x + 1, c.y + 1});
        squares.push_back({std::min(a.x, b.x), std::min(a.y, b.y)});
    }
    std::vector<LatticeEdge> slits;
    slits.reserve(p.slit_edges().size());
    for (const LatticeEdge& e : p.slit_edges()) {
        slits.push_back(LatticeEdge::between(apply_sym(s, e.a), apply_sym(s, e.b)));
    }
    GridPoint lo = squares.front();
    for (const GridPoint& c : squares) {
        lo.x = std::min(lo.x, c.x);
        lo.y = std::min(lo.y, c.y);
    }
    for (GridPoint& c : squares) {
        c.x -= lo.x;
        c.y -= lo.y;
    }
    for (LatticeEdge& e : slits) {
        e.a.x -= lo.x;
        e.a.y -= lo.y;
        e.b.x -= lo.x;
        e.b.y -= lo.y;
    }
    return Polyomino::create(std::move(squares), std::move(slits));
}

HoleClass transform_class(const HoleClass& c, Sym s) {
    switch (c.tag) {
        case HoleTag::StraightSlit2: {
            const bool swaps = s == Sym::Rot90 || s == Sym::Rot270 || s == Sym::Transpose ||
                               s == Sym::AntiTranspose;
            Axis a = c.straight_axis();
            if (swaps) a = a == Axis::X ? Axis::Y : Axis::X;
            return HoleClass::straight_slit2(a);
        }
        case HoleTag::LSlit2: {
            static const Direction arms[4][2] = {
                {Direction::North, Direction::East},
                {Direction::South, Direction::East},
                {Direction::South, Direction::West},
                {Direction::North, Direction::West}};
            const auto& pair = arms[static_cast<int>(c.l_corner())];
            auto corner = l_corner_of(apply_sym(s, pair[0]), apply_sym(s, pair[1]));
            assert(corner.has_value());
            return HoleClass::l_slit2(*corner);
        }
        case HoleTag::USlit3: return HoleClass::u_slit3(apply_sym(s, c.u_opening()));
        default: return c;
    }
}

// --- Gap metrics --------------------------------------------------------------

GapMetrics gap_metrics(const Hole& h1, const Hole& h2) {
    GapMetrics g;
    if (h2.point_min.y > h1.point_max.y) {
        g.rows_between = h2.point_min.y - h1.point_max.y;
    } else if (h1.point_min.y > h2.point_max.y) {
        g.rows_between = h1.point_min.y - h2.point_max.y;
    }
    if (h2.point_min.x > h1.point_max.x) {
        g.cols_between = h2.point_min.x - h1.point_max.x;
    } else if (h1.point_min.x > h2.point_max.x) {
        g.cols_between = h1.point_min.x - h2.point_max.x;
    }
    return g;
}

} // namespace cubefold
