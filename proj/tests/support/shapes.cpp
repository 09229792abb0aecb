#include "shapes.hpp"

#include <algorithm>

namespace cubefold::testsupport {

Polyomino rect(int w, int h, const std::set<std::pair<int, int>>& removed,
               std::vector<LatticeEdge> slits) {
    std::vector<GridPoint> squares;
    for (int x = 0; x < w; ++x) {
        for (int y = 0; y < h; ++y) {
            if (!removed.count({x, y})) squares.push_back({x, y});
        }
    }
    return Polyomino::create(std::move(squares), std::move(slits));
}

std::vector<LatticeEdge> vslit(int x, int y0, int y1) {
    std::vector<LatticeEdge> edges;
    for (int y = y0; y < y1; ++y) edges.push_back(LatticeEdge{{x, y}, {x, y + 1}});
    return edges;
}

std::vector<LatticeEdge> hslit(int y, int x0, int x1) {
    std::vector<LatticeEdge> edges;
    for (int x = x0; x < x1; ++x) edges.push_back(LatticeEdge{{x, y}, {x + 1, y}});
    return edges;
}

std::vector<LatticeEdge> u_slit(GridPoint cell, Direction opening) {
    const int x = cell.x, y = cell.y;
    const LatticeEdge west{{x, y}, {x, y + 1}};
    const LatticeEdge east{{x + 1, y}, {x + 1, y + 1}};
    const LatticeEdge south{{x, y}, {x + 1, y}};
    const LatticeEdge north{{x, y + 1}, {x + 1, y + 1}};
    switch (opening) {
        case Direction::South: return {west, north, east};
        case Direction::North: return {west, south, east};
        case Direction::East: return {west, south, north};
        default: return {east, south, north};
    }
}

namespace {

using Cells = std::vector<GridPoint>;

Cells normalize(Cells c) {
    int mx = c[0].x, my = c[0].y;
    for (const GridPoint& p : c) {
        mx = std::min(mx, p.x);
        my = std::min(my, p.y);
    }
    for (GridPoint& p : c) {
        p.x -= mx;
        p.y -= my;
    }
    std::sort(c.begin(), c.end());
    return c;
}

Cells canonical(const Cells& c) {
    Cells best;
    for (Sym s : kAllSyms) {
        Cells img;
        img.reserve(c.size());
        for (const GridPoint& p : c) {
            const GridPoint a = apply_sym(s, p);
            const GridPoint b = apply_sym(s, {p.x + 1, p.y + 1});
            img.push_back({std::min(a.x, b.x), std::min(a.y, b.y)});
        }
        img = normalize(std::move(img));
        if (best.empty() || img < best) best = img;
    }
    return best;
}

} // namespace

std::vector<Cells> free_polyominoes(int n) {
    std::set<Cells> frontier = {{{0, 0}}};
    for (int k = 1; k < n; ++k) {
        std::set<Cells> next;
        for (const Cells& c : frontier) {
            for (const GridPoint& p : c) {
                for (Direction d : kAllDirections) {
                    const GridPoint q = step(p, d);
                    if (std::find(c.begin(), c.end(), q) != c.end()) continue;
                    Cells grown = c;
                    grown.push_back(q);
                    next.insert(canonical(grown));
                }
            }
        }
        frontier = std::move(next);
    }
    return {frontier.begin(), frontier.end()};
}

Polyomino cross_hexomino() {
    return rect(4, 3, {{0, 0}, {2, 0}, {3, 0}, {0, 2}, {2, 2}, {3, 2}});
}

Polyomino ring_3x3() {
    return rect(3, 3, {{1, 1}});
}

std::vector<NamedShape> small_corpus() {
    std::vector<NamedShape> corpus;
    for (int n = 1; n <= 6; ++n) {
        int i = 0;
        for (const Cells& c : free_polyominoes(n)) {
            corpus.push_back({"free_" + std::to_string(n) + "_" + std::to_string(i++),
                              Polyomino::create(c)});
        }
    }
    // Curated 7- and 8-square shapes.
    corpus.push_back({"ring_3x3", ring_3x3()});
    corpus.push_back({"rect_2x4", rect(2, 4)});
    corpus.push_back({"L_heptomino", rect(3, 3, {{2, 1}, {2, 2}})});
    corpus.push_back({"U_octomino", rect(3, 3, {{1, 2}})});
    corpus.push_back({"staircase_7", Polyomino::create({{0, 0},
                                                        {1, 0},
                                                        {1, 1},
                                                        {2, 1},
                                                        {2, 2},
                                                        {3, 2},
                                                        {3, 3}})});
    // Slit-bearing shapes, all with n <= 8.
    corpus.push_back({"slit1_2x3", rect(2, 3, {}, {LatticeEdge{{1, 1}, {1, 2}}})});
    corpus.push_back({"slit1_h_3x2", rect(3, 2, {}, {LatticeEdge{{1, 1}, {2, 1}}})});
    corpus.push_back({"slit1_2x4", rect(2, 4, {}, {LatticeEdge{{1, 2}, {1, 3}}})});
    corpus.push_back({"straight2_v_2x4", rect(2, 4, {}, vslit(1, 1, 3))});
    corpus.push_back({"straight2_h_4x2", rect(4, 2, {}, hslit(1, 1, 3))});
    // Minimal L-slit enclosure: the eight squares around the slit's points.
    corpus.push_back({"lslit_min8",
                      Polyomino::create({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 2}, {1, 2}, {2, 1},
                                         {2, 2}},
                                        {LatticeEdge{{1, 1}, {1, 2}}, LatticeEdge{{1, 2}, {2, 2}}})});
    corpus.push_back({"slit1_in_L_shape", rect(2, 4, {{0, 3}}, {LatticeEdge{{1, 1}, {1, 2}}})});
    // A cut reaching the outer boundary is not a hole.
    corpus.push_back({"deadend_slit_2x3", rect(2, 3, {}, {LatticeEdge{{1, 0}, {1, 1}}})});
    corpus.push_back({"deadend_slit_2x4", rect(2, 4, {}, vslit(1, 0, 2))});
    corpus.push_back({"slit_next_to_notch",
                      rect(3, 3, {{2, 2}}, {LatticeEdge{{1, 1}, {1, 2}}})});
    return corpus;
}

std::vector<NamedShape> rule_instances() {
    std::vector<NamedShape> out;
    // Two vertical size-2 slits, two columns and one row apart.
    out.push_back({"two_vslits_far_6x7",
                   rect(6, 7, {}, [] {
                       auto e = vslit(2, 1, 3);
                       auto f = vslit(4, 4, 6);
                       e.insert(e.end(), f.begin(), f.end());
                       return e;
                   }())});
    // A-slit with a unit-square hole two rows above it, same column.
    out.push_back({"aslit_square_above_5x7",
                   rect(5, 7, {{2, 4}}, u_slit({2, 1}, Direction::South))});
    // A-slit with a unit-square hole one row below it, different columns.
    out.push_back({"aslit_square_below_6x7",
                   rect(6, 7, {{3, 2}}, u_slit({2, 4}, Direction::South))});
    // Two unit-square holes in adjacent columns, one row apart.
    out.push_back({"two_sqholes_odd_4x6", rect(4, 6, {{1, 1}, {2, 3}})});
    return out;
}

} // namespace cubefold::testsupport
