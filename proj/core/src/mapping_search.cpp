#include "cubefold/mapping_search.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>

#include "cubefold/errors.hpp"
#include "placement_tables.hpp"

namespace cubefold {

BfsOrder bfs_order(const Polyomino& p) {
    const auto& squares = p.squares();

    // Seed: leftmost square in the top row.
    GridPoint seed = squares.front();
    for (const GridPoint& s : squares) {
        if (s.y > seed.y || (s.y == seed.y && s.x < seed.x)) seed = s;
    }

    // Neighbor expansion order (N, W, E, S) sorts candidates row-major:
    // higher row first, then smaller x.
    constexpr Direction expand[4] = {Direction::North, Direction::West, Direction::East,
                                     Direction::South};

    BfsOrder order;
    std::map<GridPoint, int> position;
    std::deque<int> queue;
    order.sequence.push_back(seed);
    order.links.push_back(BfsLink{});
    position[seed] = 0;
    queue.push_back(0);
    while (!queue.empty()) {
        const int at = queue.front();
        queue.pop_front();
        const GridPoint s = order.sequence[static_cast<std::size_t>(at)];
        for (Direction d : expand) {
            if (!p.connects(s, d)) continue;
            const GridPoint q = step(s, d);
            if (position.count(q)) continue;
            position[q] = static_cast<int>(order.sequence.size());
            queue.push_back(static_cast<int>(order.sequence.size()));
            order.sequence.push_back(q);
            order.links.push_back(BfsLink{at, d});
        }
    }
    assert(order.sequence.size() == squares.size());
    return order;
}

const Placement* Mapping::find(GridPoint square) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), square,
                               [](const auto& e, const GridPoint& q) { return e.first < q; });
    if (it == entries.end() || it->first != square) return nullptr;
    return &it->second;
}

namespace {

struct EarlierNeighbor {
    int index;     // order index of the already-mapped neighbor
    Direction dir; // direction from the new square toward that neighbor
};

struct State {
    std::vector<std::uint8_t> pl; // placement indices
    std::uint8_t mask = 0;        // faces covered so far

    friend bool operator<(const State& a, const State& b) {
        if (a.pl != b.pl) return a.pl < b.pl;
        return a.mask < b.mask;
    }
    friend bool operator==(const State& a, const State& b) {
        return a.pl == b.pl && a.mask == b.mask;
    }
};

} // namespace

SearchResult search(const Polyomino& p, const SearchLimits& limits, SearchMode mode) {
    const PlacementTables& tab = placement_tables();
    const BfsOrder order = bfs_order(p);
    const int n = static_cast<int>(order.sequence.size());

    std::map<GridPoint, int> position;
    for (int i = 0; i < n; ++i) position[order.sequence[static_cast<std::size_t>(i)]] = i;

    // Earlier-mapped neighbors of each square, parent excluded (agreement
    // with the parent holds by construction of the extension).
    std::vector<std::vector<EarlierNeighbor>> earlier(static_cast<std::size_t>(n));
    // For frontier compression: last BFS position at which each square is
    // still needed, i.e. the largest position among its present neighbors.
    std::vector<int> last_use(static_cast<std::size_t>(n), -1);
    for (int k = 0; k < n; ++k) {
        const GridPoint s = order.sequence[static_cast<std::size_t>(k)];
        for (Direction d : kAllDirections) {
            if (!p.connects(s, d)) continue;
            const int j = position.at(step(s, d));
            last_use[static_cast<std::size_t>(k)] =
                std::max(last_use[static_cast<std::size_t>(k)], j);
            if (j < k && j != order.links[static_cast<std::size_t>(k)].parent) {
                earlier[static_cast<std::size_t>(k)].push_back({j, d});
            }
        }
    }

    const bool compress = mode == SearchMode::CompressFrontier;
    // Active squares after mapping 0..k: those with a neighbor mapped later.
    std::vector<std::vector<int>> active(static_cast<std::size_t>(n));
    std::vector<std::vector<int>> active_pos(static_cast<std::size_t>(n),
                                             std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int k = 0; k < n; ++k) {
        for (int j = 0; j <= k; ++j) {
            if (last_use[static_cast<std::size_t>(j)] > k) {
                active_pos[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] =
                    static_cast<int>(active[static_cast<std::size_t>(k)].size());
                active[static_cast<std::size_t>(k)].push_back(j);
            }
        }
    }

    SearchResult result;
    const int seed = placement_index(canonical_bottom_placement());

    std::vector<State> states;
    {
        State s0;
        s0.mask = tab.face_bit[static_cast<std::size_t>(seed)];
        if (compress) {
            if (!active[0].empty()) s0.pl.push_back(static_cast<std::uint8_t>(seed));
        } else {
            s0.pl.push_back(static_cast<std::uint8_t>(seed));
        }
        states.push_back(std::move(s0));
    }
    result.states_explored = 1;

    for (int k = 1; k < n; ++k) {
        const BfsLink link = order.links[static_cast<std::size_t>(k)];
        auto value_of = [&](const State& st, int j) -> int {
            if (!compress) return st.pl[static_cast<std::size_t>(j)];
            const int pos = active_pos[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j)];
            assert(pos >= 0);
            return st.pl[static_cast<std::size_t>(pos)];
        };

        std::vector<State> next;
        next.reserve(states.size() * 2);
        for (const State& st : states) {
            const int parent_placement = value_of(st, link.parent);
            const int candidates[2] = {
                tab.ext_quarter[static_cast<std::size_t>(parent_placement)]
                               [static_cast<int>(link.from_parent)],
                tab.ext_flat[static_cast<std::size_t>(parent_placement)]
                            [static_cast<int>(link.from_parent)]};
            for (const int c : candidates) {
                bool ok = true;
                for (const EarlierNeighbor& en : earlier[static_cast<std::size_t>(k)]) {
                    if (!tab.agree(c, en.dir, value_of(st, en.index))) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                State ns;
                ns.mask = static_cast<std::uint8_t>(st.mask |
                                                    tab.face_bit[static_cast<std::size_t>(c)]);
                if (compress) {
                    const auto& act = active[static_cast<std::size_t>(k)];
                    ns.pl.reserve(act.size());
                    for (int j : act) {
                        ns.pl.push_back(static_cast<std::uint8_t>(j == k ? c : value_of(st, j)));
                    }
                } else {
                    ns.pl = st.pl;
                    ns.pl.push_back(static_cast<std::uint8_t>(c));
                }
                next.push_back(std::move(ns));
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        states.swap(next);

        result.states_explored += states.size();
        if (result.states_explored > limits.max_states) {
            result.truncated = true;
            result.witnesses.clear();
            return result;
        }
        if (states.empty()) break;
    }

    result.consistent_exists = !states.empty();
    for (const State& st : states) {
        if (st.mask == 0x3f) {
            result.covering_exists = true;
            if (!compress && result.witnesses.size() < limits.max_witnesses) {
                Mapping m;
                m.entries.reserve(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i) {
                    m.entries.emplace_back(
                        order.sequence[static_cast<std::size_t>(i)],
                        all_placements()[st.pl[static_cast<std::size_t>(i)]]);
                }
                std::sort(m.entries.begin(), m.entries.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                result.witnesses.push_back(std::move(m));
            }
        }
    }
    return result;
}

std::string to_string(NecessaryOutcome o) {
    switch (o) {
        case NecessaryOutcome::Fail: return "Fail";
        case NecessaryOutcome::PassConsistent: return "PassConsistent";
        case NecessaryOutcome::PassCovering: return "PassCovering";
        default: return "Inconclusive";
    }
}

NecessaryOutcome outcome_of(const SearchResult& r) {
    if (r.truncated) return NecessaryOutcome::Inconclusive;
    if (r.covering_exists) return NecessaryOutcome::PassCovering;
    return NecessaryOutcome::Fail;
}

NecessaryOutcome check_necessary(const Polyomino& p, const SearchLimits& limits) {
    SearchLimits l = limits;
    l.max_witnesses = 0;
    return outcome_of(search(p, l, SearchMode::CompressFrontier));
}

} // namespace cubefold
