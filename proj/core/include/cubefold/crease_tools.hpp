#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubefold/mapping_search.hpp"
#include "cubefold/polyomino.hpp"

namespace cubefold {

/// Fold magnitude of an interior crease. Quarter (±90°) when the two
/// incident squares map to different faces, Flat (±180°) when they map to
/// the same face. Signs affect only layer order and are not modeled.
enum class CreaseMagnitude : std::uint8_t { Quarter, Flat };

struct CreasePattern {
    std::vector<std::pair<LatticeEdge, CreaseMagnitude>> magnitudes; // sorted by edge

    const CreaseMagnitude* find(const LatticeEdge& e) const;
};

/// Magnitudes of all interior present edges of `p` under the total mapping.
CreasePattern pattern_of(const Polyomino& p, const Mapping& m);

enum class HoleFoldKind : std::uint8_t {
    Trivial, // the hole's grid points map to distinct corners of one face
    LShape,  // exactly one diagonal pair of hole grid points is identified
};

struct HoleFoldInfo {
    HoleFoldKind kind = HoleFoldKind::Trivial;
    /// The identified diagonal pair, present for LShape.
    std::optional<std::pair<GridPoint, GridPoint>> glued_pair;
};

/// How a basic hole is folded under the mapping. Applies to UnitSquare,
/// LSlit2 and USlit3 holes (the shapes that span one cell); throws
/// std::invalid_argument otherwise. If both diagonal pairs are identified —
/// all hole edges on one cube edge, impossible in any folded state — throws
/// InternalInvariantViolation.
HoleFoldInfo hole_fold_info(const Polyomino& p, const Mapping& m, const Hole& h);
HoleFoldKind hole_fold_kind(const Polyomino& p, const Mapping& m, const Hole& h);

struct FaceLabels {
    std::vector<std::pair<GridPoint, FaceId>> labels; // sorted by square
};

FaceLabels face_labels(const Mapping& m);

/// Standalone SVG 1.1 drawing: 40px unit cells, bold polyomino boundary,
/// slit edges as narrow double-stroke gaps, Quarter creases as thin dotted
/// lines and Flat creases as thick dotted lines, face labels as die numbers
/// centered in cells. Byte-for-byte deterministic for equal inputs.
std::string render_svg(const Polyomino& p, const CreasePattern* pattern = nullptr,
                       const FaceLabels* labels = nullptr);

} // namespace cubefold
