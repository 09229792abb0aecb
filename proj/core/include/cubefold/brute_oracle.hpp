#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "cubefold/mapping_search.hpp"
#include "cubefold/polyomino.hpp"

namespace cubefold {

struct OracleLimits {
    std::size_t max_squares = 8;
};

/// Independent ground-truth enumerator for small instances. Assigns each
/// square one of the 48 placements directly, scanning squares in reading
/// order (top row first, left to right) and pruning on every violated
/// present-edge constraint. The leftmost square of the top row is pinned to
/// the canonical bottom placement, the same gauge the search fixes, so the
/// two witness sets are comparable. Shares no code with extend_over_edge.
///
/// Throws TooLargeError when the polyomino exceeds max_squares.
SearchResult brute_force(const Polyomino& p, const OracleLimits& limits = {});

/// Visits every total consistent mapping once, in deterministic order.
void enumerate_mappings(const Polyomino& p, const OracleLimits& limits,
                        const std::function<void(const Mapping&)>& visit);

namespace detail {

/// brute_force over a caller-chosen enumeration order (a permutation of the
/// squares). The pinned square is unchanged; used to test order invariance.
SearchResult brute_force_with_order(const Polyomino& p, const std::vector<GridPoint>& order,
                                    const OracleLimits& limits);

} // namespace detail

} // namespace cubefold
