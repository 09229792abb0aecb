#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>

namespace cubefold {

enum class Axis : std::uint8_t { X = 0, Y = 1, Z = 2 };

/// Corner of the unit cube. Coordinates are packed as bits: x | y<<1 | z<<2,
/// so exactly the values 0..7 exist and two corners are cube-edge-adjacent
/// iff their packed values differ in exactly one bit.
struct CubeCorner {
    std::uint8_t bits = 0;

    static constexpr CubeCorner of(int x, int y, int z) {
        return CubeCorner{static_cast<std::uint8_t>((x & 1) | ((y & 1) << 1) | ((z & 1) << 2))};
    }
    constexpr int x() const { return bits & 1; }
    constexpr int y() const { return (bits >> 1) & 1; }
    constexpr int z() const { return (bits >> 2) & 1; }
    constexpr int coord(Axis a) const { return (bits >> static_cast<int>(a)) & 1; }
    constexpr CubeCorner flipped(Axis a) const {
        return CubeCorner{static_cast<std::uint8_t>(bits ^ (1u << static_cast<int>(a)))};
    }
    friend constexpr auto operator<=>(const CubeCorner&, const CubeCorner&) = default;
};

constexpr bool cube_edge_adjacent(CubeCorner a, CubeCorner b) {
    return std::popcount(static_cast<unsigned>(a.bits ^ b.bits)) == 1;
}

/// One of the six cube faces, named by its fixed axis and that axis' value.
struct FaceId {
    Axis axis = Axis::X;
    std::uint8_t side = 0;

    constexpr int index() const { return static_cast<int>(axis) * 2 + side; }
    friend constexpr auto operator<=>(const FaceId&, const FaceId&) = default;
};

/// Die-style face numbering: opposite faces sum to 7.
int die_number(FaceId face);
std::string to_string(FaceId face);

enum class Direction : std::uint8_t { North = 0, East = 1, South = 2, West = 3 };

constexpr std::array<Direction, 4> kAllDirections = {Direction::North, Direction::East,
                                                     Direction::South, Direction::West};

constexpr Direction opposite(Direction d) {
    return static_cast<Direction>((static_cast<int>(d) + 2) & 3);
}
std::string to_string(Direction d);

/// Assignment of one unit square's grid corners to cube corners, indexed in
/// the square's own corner order SW, SE, NE, NW. Valid placements map the
/// square onto one whole cube face; exactly 48 of them exist.
struct Placement {
    std::array<CubeCorner, 4> corners{};

    constexpr CubeCorner sw() const { return corners[0]; }
    constexpr CubeCorner se() const { return corners[1]; }
    constexpr CubeCorner ne() const { return corners[2]; }
    constexpr CubeCorner nw() const { return corners[3]; }
    friend constexpr auto operator<=>(const Placement&, const Placement&) = default;
};

/// True when consecutive corners (cyclically) are cube-edge-adjacent, all
/// four corners are distinct and they share a common face.
bool placement_valid(const Placement& p);

/// All 48 valid placements, in a fixed deterministic order.
std::span<const Placement> all_placements();

/// Position of `p` in all_placements(), or -1 when `p` is not valid.
int placement_index(const Placement& p);

/// The unique face containing all four corners of a valid placement.
FaceId face_of(const Placement& p);

/// Seed placement used by the searches: the identity quadruple
/// (0,0,0),(1,0,0),(1,1,0),(0,1,0) on the bottom face.
Placement canonical_bottom_placement();

/// The two placements of the neighbor square across edge `dir` that agree
/// with `p` on the two shared grid points: first the ±90° image (on the
/// other face through the shared image edge), then the ±180° image (same
/// face, mirrored across the shared edge). No other agreeing placement
/// exists, and in particular no coplanar-but-shifted continuation: each cube
/// face is a single unit square.
std::pair<Placement, Placement> extend_over_edge(const Placement& p, Direction dir);

/// Shared-edge consistency: `b` placed on the neighbor square in direction
/// `dir` from the square placed by `a`; true iff the two placements map the
/// two shared grid points identically.
bool placements_agree(const Placement& a, Direction dir, const Placement& b);

} // namespace cubefold
