#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cubefold/polyomino.hpp"

namespace cubefold::testsupport {

struct NamedShape {
    std::string name;
    Polyomino poly;
};

/// w*h rectangle of squares with the given cells removed.
Polyomino rect(int w, int h, const std::set<std::pair<int, int>>& removed = {},
               std::vector<LatticeEdge> slits = {});

/// Vertical slit edges on grid line x, spanning y0..y1.
std::vector<LatticeEdge> vslit(int x, int y0, int y1);
std::vector<LatticeEdge> hslit(int y, int x0, int x1);

/// The three slit edges of a U-slit around `cell`, open toward `opening`.
std::vector<LatticeEdge> u_slit(GridPoint cell, Direction opening);

/// All free polyominoes with n squares, canonical under the 8 symmetries,
/// in deterministic order.
std::vector<std::vector<GridPoint>> free_polyominoes(int n);

/// Fixed corpus of small shapes (n <= 8), slit-bearing shapes included.
std::vector<NamedShape> small_corpus();

/// Larger named instances exercising the classification rules.
std::vector<NamedShape> rule_instances();

Polyomino cross_hexomino();
Polyomino ring_3x3();

} // namespace cubefold::testsupport
