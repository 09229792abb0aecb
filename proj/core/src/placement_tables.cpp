#include "placement_tables.hpp"

namespace cubefold {

namespace {

// Corner indices on each side of a square (SW=0, SE=1, NE=2, NW=3) and the
// neighbor's corners naming the same grid points.
struct SidePair {
    int mine[2];
    int theirs[2];
};

constexpr SidePair side_pair(Direction d) {
    switch (d) {
        case Direction::North: return {{3, 2}, {0, 1}};
        case Direction::East: return {{1, 2}, {0, 3}};
        case Direction::South: return {{0, 1}, {3, 2}};
        default: return {{0, 3}, {1, 2}};
    }
}

PlacementTables build() {
    PlacementTables t;
    auto ps = all_placements();
    for (int v = 0; v < static_cast<int>(ps.size()); ++v) {
        const Placement& p = ps[v];
        t.face_bit[static_cast<std::size_t>(v)] =
            static_cast<std::uint8_t>(1u << face_of(p).index());
        for (Direction d : kAllDirections) {
            const int di = static_cast<int>(d);
            const auto [quarter, flat] = extend_over_edge(p, d);
            t.ext_quarter[static_cast<std::size_t>(v)][di] = placement_index(quarter);
            t.ext_flat[static_cast<std::size_t>(v)][di] = placement_index(flat);
            const SidePair sp = side_pair(d);
            t.my_key[static_cast<std::size_t>(v)][di] = static_cast<std::uint16_t>(
                p.corners[sp.mine[0]].bits | (p.corners[sp.mine[1]].bits << 3));
            t.nb_key[static_cast<std::size_t>(v)][di] = static_cast<std::uint16_t>(
                p.corners[sp.theirs[0]].bits | (p.corners[sp.theirs[1]].bits << 3));
        }
    }
    return t;
}

} // namespace

const PlacementTables& placement_tables() {
    static const PlacementTables tables = build();
    return tables;
}

} // namespace cubefold
