#include "cubefold/brute_oracle.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "cubefold/errors.hpp"

namespace cubefold {

namespace {

struct AssignedNeighbor {
    std::size_t position; // position in the enumeration order
    Direction dir;        // direction from the new square toward the neighbor
};

std::uint16_t side_key(const Placement& p, int c0, int c1) {
    return static_cast<std::uint16_t>(p.corners[c0].bits | (p.corners[c1].bits << 3));
}

// Same shared-corner pairs as placements_agree, spelled out locally so the
// oracle stays independent of the search-side tables.
bool agree_across(const Placement& mine, Direction d, const Placement& theirs) {
    switch (d) {
        case Direction::North: return side_key(mine, 3, 2) == side_key(theirs, 0, 1);
        case Direction::East: return side_key(mine, 1, 2) == side_key(theirs, 0, 3);
        case Direction::South: return side_key(mine, 0, 1) == side_key(theirs, 3, 2);
        default: return side_key(mine, 0, 3) == side_key(theirs, 1, 2);
    }
}

GridPoint pinned_square(const Polyomino& p) {
    GridPoint best = p.squares().front();
    for (const GridPoint& s : p.squares()) {
        if (s.y > best.y || (s.y == best.y && s.x < best.x)) best = s;
    }
    return best;
}

std::vector<GridPoint> reading_order(const Polyomino& p) {
    std::vector<GridPoint> order = p.squares();
    std::sort(order.begin(), order.end(), [](const GridPoint& a, const GridPoint& b) {
        if (a.y != b.y) return a.y > b.y;
        return a.x < b.x;
    });
    return order;
}

void run(const Polyomino& p, const std::vector<GridPoint>& order, const OracleLimits& limits,
         SearchResult* result, const std::function<void(const Mapping&)>& visit,
         std::size_t witness_cap) {
    const std::size_t n = order.size();
    if (n > limits.max_squares) {
        throw TooLargeError("instance has " + std::to_string(n) + " squares, oracle limit is " +
                            std::to_string(limits.max_squares));
    }
    assert(n == p.squares().size());

    std::map<GridPoint, std::size_t> position;
    for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;

    std::vector<std::vector<AssignedNeighbor>> assigned(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (Direction d : kAllDirections) {
            if (!p.connects(order[i], d)) continue;
            const std::size_t j = position.at(step(order[i], d));
            if (j < i) assigned[i].push_back({j, d});
        }
    }

    const GridPoint pinned = pinned_square(p);
    const std::size_t pinned_pos = position.at(pinned);
    const auto placements = all_placements();

    std::vector<const Placement*> chosen(n, nullptr);
    std::vector<std::uint8_t> faces(n, 0);

    std::uint64_t nodes = 0;
    auto emit = [&]() {
        Mapping m;
        m.entries.reserve(n);
        for (std::size_t i = 0; i < n; ++i) m.entries.emplace_back(order[i], *chosen[i]);
        std::sort(m.entries.begin(), m.entries.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        if (visit) visit(m);
        if (result) {
            result->consistent_exists = true;
            std::uint8_t mask = 0;
            for (std::size_t i = 0; i < n; ++i) {
                mask = static_cast<std::uint8_t>(mask | (1u << faces[i]));
            }
            if (mask == 0x3f) {
                result->covering_exists = true;
                if (result->witnesses.size() < witness_cap) result->witnesses.push_back(m);
            }
        }
    };

    auto descend = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            emit();
            return;
        }
        const bool is_pinned = i == pinned_pos;
        const Placement pin = canonical_bottom_placement();
        for (int v = 0; v < static_cast<int>(placements.size()); ++v) {
            const Placement& cand = placements[static_cast<std::size_t>(v)];
            if (is_pinned && cand != pin) continue;
            bool ok = true;
            for (const AssignedNeighbor& an : assigned[i]) {
                if (!agree_across(cand, an.dir, *chosen[an.position])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            chosen[i] = &cand;
            faces[i] = static_cast<std::uint8_t>(face_of(cand).index());
            ++nodes;
            self(self, i + 1);
        }
        chosen[i] = nullptr;
    };
    descend(descend, 0);
    if (result) result->states_explored = nodes;
}

} // namespace

SearchResult brute_force(const Polyomino& p, const OracleLimits& limits) {
    SearchResult result;
    run(p, reading_order(p), limits, &result, nullptr, SIZE_MAX);
    return result;
}

void enumerate_mappings(const Polyomino& p, const OracleLimits& limits,
                        const std::function<void(const Mapping&)>& visit) {
    run(p, reading_order(p), limits, nullptr, visit, 0);
}

namespace detail {

SearchResult brute_force_with_order(const Polyomino& p, const std::vector<GridPoint>& order,
                                    const OracleLimits& limits) {
    SearchResult result;
    run(p, order, limits, &result, nullptr, SIZE_MAX);
    return result;
}

} // namespace detail

} // namespace cubefold
