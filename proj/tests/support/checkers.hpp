#pragma once

#include <string>
#include <vector>

#include "cubefold/crease_tools.hpp"
#include "cubefold/mapping_search.hpp"
#include "cubefold/polyomino.hpp"

namespace cubefold::testsupport {

/// Structural validity of a total mapping: every square mapped to a valid
/// placement, every present shared edge consistent.
bool mapping_is_consistent(const Polyomino& p, const Mapping& m, std::string* why = nullptr);

bool mapping_covers_cube(const Mapping& m);

/// At every grid point whose four incident squares exist and are connected
/// among themselves (at least three of the four incident edges present), the
/// squares hit at most three distinct faces.
bool corner_face_limit_ok(const Polyomino& p, const Mapping& m, std::string* why = nullptr);

/// At every interior grid point (four squares, four present edges): at most
/// two distinct faces, and at least one collinear pair of incident creases
/// is flat on both edges.
bool interior_point_flat_pair_ok(const Polyomino& p, const Mapping& m,
                                 std::string* why = nullptr);

/// In every rectangular subregion (both sides >= 2, all cells present, no
/// slit strictly inside): collinear interior creases share one magnitude,
/// and all horizontal or all vertical creases of the subregion are flat.
bool rectangle_crease_dichotomy_ok(const Polyomino& p, const Mapping& m,
                                   std::string* why = nullptr);

/// Hole-fold invariants over the basic single-cell holes: the collapsed
/// all-edges-on-one-cube-edge configuration never appears, and whenever a
/// unit-square hole folds to an L, the eight outward creases at its corners
/// are flat exactly at the glued diagonal (two parallel flat creases, six
/// quarter creases).
bool hole_fold_patterns_ok(const Polyomino& p, const Mapping& m, std::string* why = nullptr);

/// Runs all witness-level checks above.
bool witness_invariants_ok(const Polyomino& p, const Mapping& m, std::string* why = nullptr);

} // namespace cubefold::testsupport
