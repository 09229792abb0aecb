#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cubefold/cube_model.hpp"

namespace cubefold {

/// Lattice point. Unit squares are named by their SW corner; the square
/// (x,y) spans (x,y)..(x+1,y+1) with y increasing upward.
struct GridPoint {
    int x = 0;
    int y = 0;
    friend constexpr auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

std::string to_string(GridPoint p);

/// Unit-length lattice edge, stored with the lexicographically smaller
/// endpoint first.
struct LatticeEdge {
    GridPoint a;
    GridPoint b;

    /// Canonicalizes the endpoint order; throws ValidationError when the two
    /// points are not at unit distance along one axis.
    static LatticeEdge between(GridPoint p, GridPoint q);

    bool vertical() const { return a.x == b.x; }
    bool horizontal() const { return a.y == b.y; }
    friend constexpr auto operator<=>(const LatticeEdge&, const LatticeEdge&) = default;
};

GridPoint step(GridPoint p, Direction d);

/// The lattice edge on the given side of the unit square named by `square`.
LatticeEdge edge_between(GridPoint square, Direction side);

/// Polyomino with optional slit edges. The region is open: it consists of
/// the open unit squares plus the shared interior edges that are not slits.
/// Invariants enforced on construction: every slit edge is interior (both
/// incident squares present), and the dual graph over squares, with
/// adjacency only across present non-slit shared edges, is connected.
class Polyomino {
public:
    static Polyomino create(std::vector<GridPoint> squares, std::vector<LatticeEdge> slits = {});

    const std::vector<GridPoint>& squares() const { return squares_; }
    const std::vector<LatticeEdge>& slit_edges() const { return slits_; }
    int size() const { return static_cast<int>(squares_.size()); }

    bool contains(GridPoint square) const;
    bool is_slit(const LatticeEdge& e) const;

    /// True when the square's shared edge toward `dir` is part of the paper:
    /// the neighbor square exists and the edge is not a slit.
    bool connects(GridPoint square, Direction dir) const;

    /// Inclusive bounds over the unit squares (SW-most cell, NE-most cell).
    std::pair<GridPoint, GridPoint> cell_bounds() const;

    friend bool operator==(const Polyomino&, const Polyomino&) = default;

private:
    Polyomino() = default;
    std::vector<GridPoint> squares_; // sorted
    std::vector<LatticeEdge> slits_; // sorted
};

enum class Format { Json, Ascii };

/// Parses a polyomino. Ascii accepts both the compact block format
/// ('#'/'.' cells only) and the expanded (2H+1)x(2W+1) grid format that can
/// express slit edges; the two are distinguished by the character set.
Polyomino parse(std::string_view text, Format format);

std::string to_json(const Polyomino& p);
std::string to_ascii_compact(const Polyomino& p); // throws ValidationError when slits present
std::string to_ascii_expanded(const Polyomino& p);

/// Bounded connected component of the polyomino's exterior: absent unit
/// squares and/or slit edges, joined wherever their closures touch.
struct Hole {
    std::vector<GridPoint> absent_squares; // sorted
    std::vector<LatticeEdge> slit_edges;   // sorted
    GridPoint anchor;                      // lexicographically minimal grid point
    GridPoint point_min;                   // bounds over the hole's grid points
    GridPoint point_max;
};

/// All holes of the polyomino, sorted by anchor. Computed by flood fill on a
/// doubled-resolution grid (cells at odd-odd nodes, edges at mixed-parity
/// nodes, grid points at even-even nodes); a grid point is part of the paper
/// only when all four incident edges are, so hole pieces meeting at a point
/// merge, matching the open-region model.
std::vector<Hole> holes(const Polyomino& p);

enum class HoleTag : std::uint8_t {
    UnitSquare,
    Slit1,
    StraightSlit2,
    LSlit2,
    USlit3,
    NonBasic,
};

/// Quadrant of an L-slit: the two perpendicular arm directions from the
/// shared corner point.
enum class LCorner : std::uint8_t { NE = 0, SE = 1, SW = 2, NW = 3 };

struct HoleClass {
    HoleTag tag = HoleTag::NonBasic;
    std::uint8_t orient = 0; // meaning depends on tag; 0 when unused

    static HoleClass unit_square() { return {HoleTag::UnitSquare, 0}; }
    static HoleClass slit1() { return {HoleTag::Slit1, 0}; }
    static HoleClass straight_slit2(Axis along) {
        return {HoleTag::StraightSlit2, static_cast<std::uint8_t>(along)};
    }
    static HoleClass l_slit2(LCorner corner) {
        return {HoleTag::LSlit2, static_cast<std::uint8_t>(corner)};
    }
    static HoleClass u_slit3(Direction opening) {
        return {HoleTag::USlit3, static_cast<std::uint8_t>(opening)};
    }
    static HoleClass non_basic() { return {HoleTag::NonBasic, 0}; }

    Axis straight_axis() const { return static_cast<Axis>(orient); }
    LCorner l_corner() const { return static_cast<LCorner>(orient); }
    Direction u_opening() const { return static_cast<Direction>(orient); }

    /// U-slit whose open part faces south.
    bool is_a_slit() const {
        return tag == HoleTag::USlit3 && u_opening() == Direction::South;
    }

    friend constexpr auto operator<=>(const HoleClass&, const HoleClass&) = default;
};

/// Exact match against the five basic hole shapes, up to translation only.
/// Orientation is preserved and reported in the tag.
HoleClass classify_hole(const Hole& h);

std::string to_string(const HoleClass& c);
std::string orientation_string(const HoleClass& c); // empty when the tag has none

/// The eight symmetries of the square lattice.
enum class Sym : std::uint8_t {
    Identity,
    Rot90,
    Rot180,
    Rot270,
    FlipX,       // mirror across a vertical axis
    FlipY,       // mirror across a horizontal axis
    Transpose,   // mirror across the main diagonal
    AntiTranspose,
};

inline constexpr std::array<Sym, 8> kAllSyms = {
    Sym::Identity, Sym::Rot90, Sym::Rot180, Sym::Rot270,
    Sym::FlipX,    Sym::FlipY, Sym::Transpose, Sym::AntiTranspose};

GridPoint apply_sym(Sym s, GridPoint p);
Direction apply_sym(Sym s, Direction d);

/// Image of the polyomino under the symmetry, translated so the bounding
/// box's SW corner sits at the origin.
Polyomino transform(const Polyomino& p, Sym s);

/// How the class tag of a hole transforms under the symmetry.
HoleClass transform_class(const HoleClass& c, Sym s);

/// Gap metrics between two holes of the same polyomino. rows_between counts
/// the full unit-square rows strictly separating the holes' grid-point
/// extents and is absent when neither hole lies strictly above the other;
/// cols_between is the analogous column count.
struct GapMetrics {
    std::optional<int> rows_between;
    std::optional<int> cols_between;
};

GapMetrics gap_metrics(const Hole& h1, const Hole& h2);

} // namespace cubefold
