#include "cubefold/cube_model.hpp"

#include <cassert>
#include <vector>

namespace cubefold {

namespace {

constexpr std::array<Axis, 3> kAxes = {Axis::X, Axis::Y, Axis::Z};

// The two axes spanning a face, in axis order.
std::pair<Axis, Axis> span_axes(Axis fixed) {
    switch (fixed) {
        case Axis::X: return {Axis::Y, Axis::Z};
        case Axis::Y: return {Axis::X, Axis::Z};
        default: return {Axis::X, Axis::Y};
    }
}

CubeCorner face_corner(FaceId f, int u, int v) {
    auto [ua, va] = span_axes(f.axis);
    std::uint8_t bits = static_cast<std::uint8_t>(f.side << static_cast<int>(f.axis));
    bits |= static_cast<std::uint8_t>((u & 1) << static_cast<int>(ua));
    bits |= static_cast<std::uint8_t>((v & 1) << static_cast<int>(va));
    return CubeCorner{bits};
}

std::vector<Placement> build_placements() {
    std::vector<Placement> out;
    out.reserve(48);
    for (Axis axis : kAxes) {
        for (int side = 0; side < 2; ++side) {
            FaceId f{axis, static_cast<std::uint8_t>(side)};
            // Corners of the face as one 4-cycle.
            const std::array<CubeCorner, 4> cycle = {
                face_corner(f, 0, 0), face_corner(f, 1, 0),
                face_corner(f, 1, 1), face_corner(f, 0, 1)};
            for (int reflect = 0; reflect < 2; ++reflect) {
                for (int rot = 0; rot < 4; ++rot) {
                    Placement p;
                    for (int i = 0; i < 4; ++i) {
                        int j = reflect ? (rot - i + 8) % 4 : (rot + i) % 4;
                        p.corners[i] = cycle[j];
                    }
                    out.push_back(p);
                }
            }
        }
    }
    return out;
}

int pack12(const Placement& p) {
    return p.corners[0].bits | (p.corners[1].bits << 3) | (p.corners[2].bits << 6) |
           (p.corners[3].bits << 9);
}

const std::array<int, 4096>& index_table() {
    static const std::array<int, 4096> table = [] {
        std::array<int, 4096> t;
        t.fill(-1);
        auto ps = all_placements();
        for (int i = 0; i < static_cast<int>(ps.size()); ++i) {
            t[static_cast<std::size_t>(pack12(ps[i]))] = i;
        }
        return t;
    }();
    return table;
}

// Corner indices compared across a shared edge, per direction: the two
// corners of my square on that side, and the neighbor's matching pair.
struct SharedCorners {
    int mine[2];
    int theirs[2];
};

constexpr SharedCorners shared_corners(Direction d) {
    switch (d) {
        case Direction::North: return {{3, 2}, {0, 1}}; // my NW,NE == their SW,SE
        case Direction::East: return {{1, 2}, {0, 3}};  // my SE,NE == their SW,NW
        case Direction::South: return {{0, 1}, {3, 2}}; // my SW,SE == their NW,NE
        default: return {{0, 3}, {1, 2}};               // my SW,NW == their SE,NE
    }
}

} // namespace

int die_number(FaceId face) {
    // Bottom = 1, top = 6; X pair 2/5, Y pair 3/4.
    switch (face.index()) {
        case 0: return 2; // X,0
        case 1: return 5; // X,1
        case 2: return 3; // Y,0
        case 3: return 4; // Y,1
        case 4: return 1; // Z,0
        default: return 6; // Z,1
    }
}

std::string to_string(FaceId face) {
    static const char* axis_names[] = {"X", "Y", "Z"};
    return std::string(axis_names[static_cast<int>(face.axis)]) + std::to_string(face.side);
}

std::string to_string(Direction d) {
    switch (d) {
        case Direction::North: return "N";
        case Direction::East: return "E";
        case Direction::South: return "S";
        default: return "W";
    }
}

bool placement_valid(const Placement& p) {
    for (int i = 0; i < 4; ++i) {
        if (!cube_edge_adjacent(p.corners[i], p.corners[(i + 1) % 4])) return false;
        for (int j = i + 1; j < 4; ++j) {
            if (p.corners[i] == p.corners[j]) return false;
        }
    }
    for (Axis a : kAxes) {
        int c = p.corners[0].coord(a);
        bool common = true;
        for (int i = 1; i < 4; ++i) common = common && p.corners[i].coord(a) == c;
        if (common) return true;
    }
    return false;
}

std::span<const Placement> all_placements() {
    static const std::vector<Placement> placements = build_placements();
    return placements;
}

int placement_index(const Placement& p) {
    return index_table()[static_cast<std::size_t>(pack12(p))];
}

FaceId face_of(const Placement& p) {
    for (Axis a : kAxes) {
        int c = p.corners[0].coord(a);
        if (p.corners[1].coord(a) == c && p.corners[2].coord(a) == c &&
            p.corners[3].coord(a) == c) {
            return FaceId{a, static_cast<std::uint8_t>(c)};
        }
    }
    assert(false && "placement has no common face");
    return FaceId{};
}

Placement canonical_bottom_placement() {
    return Placement{{CubeCorner::of(0, 0, 0), CubeCorner::of(1, 0, 0), CubeCorner::of(1, 1, 0),
                      CubeCorner::of(0, 1, 0)}};
}

std::pair<Placement, Placement> extend_over_edge(const Placement& p, Direction dir) {
    const Axis m = face_of(p).axis;
    const CubeCorner p0 = p.corners[0], p1 = p.corners[1], p2 = p.corners[2], p3 = p.corners[3];
    Placement quarter, flat;
    switch (dir) {
        case Direction::East:
            quarter = Placement{{p1, p1.flipped(m), p2.flipped(m), p2}};
            flat = Placement{{p1, p0, p3, p2}};
            break;
        case Direction::West:
            quarter = Placement{{p0.flipped(m), p0, p3, p3.flipped(m)}};
            flat = Placement{{p1, p0, p3, p2}};
            break;
        case Direction::North:
            quarter = Placement{{p3, p2, p2.flipped(m), p3.flipped(m)}};
            flat = Placement{{p3, p2, p1, p0}};
            break;
        default: // South
            quarter = Placement{{p0.flipped(m), p1.flipped(m), p1, p0}};
            flat = Placement{{p3, p2, p1, p0}};
            break;
    }
    return {quarter, flat};
}

bool placements_agree(const Placement& a, Direction dir, const Placement& b) {
    const SharedCorners sc = shared_corners(dir);
    return a.corners[sc.mine[0]] == b.corners[sc.theirs[0]] &&
           a.corners[sc.mine[1]] == b.corners[sc.theirs[1]];
}

} // namespace cubefold
