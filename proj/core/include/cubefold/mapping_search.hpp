#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cubefold/cube_model.hpp"
#include "cubefold/polyomino.hpp"

namespace cubefold {

struct BfsLink {
    int parent = -1;                          // order index of the BFS parent
    Direction from_parent = Direction::North; // direction from parent to this square
};

/// BFS numbering of the squares, seeded at the leftmost square of the top
/// row; queue ties are broken row-major (higher row first, then smaller x).
/// Every square after the first is adjacent across a present edge to at
/// least one earlier square.
struct BfsOrder {
    std::vector<GridPoint> sequence;
    std::vector<BfsLink> links; // links[0] is unused
};

BfsOrder bfs_order(const Polyomino& p);

/// Per-square placements, sorted by square coordinate. Total mappings assign
/// every square; witness comparison uses this canonical order.
struct Mapping {
    std::vector<std::pair<GridPoint, Placement>> entries;

    const Placement* find(GridPoint square) const;
    friend auto operator<=>(const Mapping&, const Mapping&) = default;
};

struct SearchLimits {
    std::uint64_t max_states = 10'000'000;
    std::size_t max_witnesses = 64;
};

enum class SearchMode {
    /// Track every partial mapping; enables witness enumeration.
    TrackAll,
    /// Merge partial mappings that agree on all squares still carrying
    /// unmapped neighbors (plus the set of faces covered so far). Produces
    /// the same consistent/covering verdicts, but no witnesses.
    CompressFrontier,
};

struct SearchResult {
    bool consistent_exists = false;
    bool covering_exists = false;
    std::vector<Mapping> witnesses; // total mappings covering all 6 faces
    std::uint64_t states_explored = 0;
    bool truncated = false;
};

/// The incremental mapping search: squares are processed in BFS order, the
/// first square is pinned to the canonical bottom placement, and each later
/// square branches over the two extensions from its parent (±90° before
/// ±180°), discarding branches that disagree with any already-mapped
/// neighbor across a present edge. Exhaustive unless truncated.
SearchResult search(const Polyomino& p, const SearchLimits& limits = {},
                    SearchMode mode = SearchMode::TrackAll);

enum class NecessaryOutcome {
    Fail,           // no total consistent mapping covers all six faces
    PassConsistent, // consistent mappings exist but none covering
    PassCovering,   // a covering witness exists
    Inconclusive,   // state limit hit before the search completed
};

std::string to_string(NecessaryOutcome o);

NecessaryOutcome outcome_of(const SearchResult& r);

/// Necessary-condition verdict. Fail is decisive: a folded cube covers all
/// six faces, so a polyomino with no covering mapping cannot fold. Note that
/// every valid polyomino admits a flat accordion mapping, so a complete
/// search never reports PassConsistent; the value exists for callers that
/// inspect raw SearchResults.
NecessaryOutcome check_necessary(const Polyomino& p, const SearchLimits& limits = {});

} // namespace cubefold
