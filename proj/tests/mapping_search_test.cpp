#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cubefold/brute_oracle.hpp"
#include "cubefold/mapping_search.hpp"
#include "support/checkers.hpp"
#include "support/shapes.hpp"

using namespace cubefold;
namespace ts = cubefold::testsupport;

namespace {

std::vector<Mapping> sorted_witnesses(std::vector<Mapping> w) {
    std::sort(w.begin(), w.end());
    return w;
}

} // namespace

TEST_CASE("bfs order on a horizontal strip runs left to right") {
    const Polyomino p = ts::rect(3, 1);
    const BfsOrder order = bfs_order(p);
    REQUIRE(order.sequence.size() == 3);
    CHECK(order.sequence[0] == GridPoint{0, 0});
    CHECK(order.sequence[1] == GridPoint{1, 0});
    CHECK(order.sequence[2] == GridPoint{2, 0});
    CHECK(order.links[1].parent == 0);
    CHECK(order.links[1].from_parent == Direction::East);
    CHECK(order.links[2].parent == 1);
}

TEST_CASE("bfs order starts at the leftmost square of the top row") {
    const BfsOrder ring = bfs_order(ts::ring_3x3());
    CHECK(ring.sequence[0] == GridPoint{0, 2});
    const BfsOrder cross = bfs_order(ts::cross_hexomino());
    CHECK(cross.sequence[0] == GridPoint{1, 2});
    // Every later square is adjacent across a present edge to an earlier one.
    for (std::size_t i = 1; i < ring.sequence.size(); ++i) {
        CHECK(ring.links[i].parent < static_cast<int>(i));
        CHECK(step(ring.sequence[static_cast<std::size_t>(ring.links[i].parent)],
                   ring.links[i].from_parent) == ring.sequence[i]);
    }
}

TEST_CASE("bfs order does not cross slit edges") {
    const Polyomino p = ts::rect(2, 4, {}, ts::vslit(1, 1, 3));
    const BfsOrder order = bfs_order(p);
    for (std::size_t i = 1; i < order.sequence.size(); ++i) {
        const GridPoint parent = order.sequence[static_cast<std::size_t>(order.links[i].parent)];
        CHECK(p.connects(parent, order.links[i].from_parent));
    }
}

TEST_CASE("cross hexomino covers the cube") {
    const SearchResult r = search(ts::cross_hexomino());
    CHECK(r.consistent_exists);
    CHECK(r.covering_exists);
    CHECK(!r.truncated);
    REQUIRE(!r.witnesses.empty());
    std::string why;
    for (const Mapping& m : r.witnesses) {
        CHECK_MESSAGE(ts::mapping_is_consistent(ts::cross_hexomino(), m, &why), why);
        CHECK(ts::mapping_covers_cube(m));
    }
    CHECK(check_necessary(ts::cross_hexomino()) == NecessaryOutcome::PassCovering);
}

TEST_CASE("small solid rectangles never cover") {
    for (int w = 2; w <= 4; ++w) {
        for (int h = 2; h <= 4; ++h) {
            CAPTURE(w);
            CAPTURE(h);
            const Polyomino p = ts::rect(w, h);
            const SearchResult r = search(p);
            CHECK(r.consistent_exists);
            CHECK(!r.covering_exists);
            CHECK(check_necessary(p) == NecessaryOutcome::Fail);
        }
    }
}

TEST_CASE("ring with a unit-square hole fails the necessary condition") {
    const SearchResult r = search(ts::ring_3x3());
    CHECK(r.consistent_exists);
    CHECK(!r.covering_exists);
    CHECK(check_necessary(ts::ring_3x3()) == NecessaryOutcome::Fail);
}

TEST_CASE("two adjacent vertical slits of size two do not cover") {
    // Zero columns between the slits, narrow enclosure.
    const Polyomino p = ts::rect(4, 8, {}, [] {
        auto e = ts::vslit(2, 1, 3);
        const auto f = ts::vslit(2, 4, 6);
        e.insert(e.end(), f.begin(), f.end());
        return e;
    }());
    CHECK(check_necessary(p) == NecessaryOutcome::Fail);
}

TEST_CASE("search agrees with the oracle on the whole small corpus") {
    SearchLimits limits;
    limits.max_witnesses = 1u << 20;
    for (const auto& [name, p] : ts::small_corpus()) {
        CAPTURE(name);
        const SearchResult s = search(p, limits);
        const SearchResult o = brute_force(p);
        CHECK(!s.truncated);
        CHECK(s.consistent_exists == o.consistent_exists);
        CHECK(s.covering_exists == o.covering_exists);
        CHECK(sorted_witnesses(s.witnesses) == sorted_witnesses(o.witnesses));
    }
}

TEST_CASE("frontier compression changes no verdicts") {
    SearchLimits limits;
    for (const auto& [name, p] : ts::small_corpus()) {
        CAPTURE(name);
        const SearchResult full = search(p, limits, SearchMode::TrackAll);
        const SearchResult compressed = search(p, limits, SearchMode::CompressFrontier);
        CHECK(full.consistent_exists == compressed.consistent_exists);
        CHECK(full.covering_exists == compressed.covering_exists);
        CHECK(compressed.witnesses.empty());
    }
    for (const auto& [name, p] : ts::rule_instances()) {
        CAPTURE(name);
        const SearchResult full = search(p, limits, SearchMode::TrackAll);
        const SearchResult compressed = search(p, limits, SearchMode::CompressFrontier);
        CHECK(full.consistent_exists == compressed.consistent_exists);
        CHECK(full.covering_exists == compressed.covering_exists);
    }
}

TEST_CASE("every valid polyomino has a consistent total mapping") {
    for (const auto& [name, p] : ts::small_corpus()) {
        CAPTURE(name);
        CHECK(search(p).consistent_exists);
    }
}

TEST_CASE("check_necessary is invariant under the eight symmetries") {
    for (const auto& [name, p] : ts::small_corpus()) {
        const NecessaryOutcome base = check_necessary(p);
        for (Sym s : kAllSyms) {
            CAPTURE(name);
            CHECK(check_necessary(transform(p, s)) == base);
        }
    }
}

TEST_CASE("search results are deterministic") {
    for (const Polyomino& p : {ts::cross_hexomino(), ts::ring_3x3()}) {
        const SearchResult a = search(p);
        const SearchResult b = search(p);
        CHECK(a.consistent_exists == b.consistent_exists);
        CHECK(a.covering_exists == b.covering_exists);
        CHECK(a.states_explored == b.states_explored);
        CHECK(a.witnesses == b.witnesses); // including order
    }
}

TEST_CASE("truncation reports inconclusive, never a verdict") {
    SearchLimits limits;
    limits.max_states = 4;
    const SearchResult r = search(ts::cross_hexomino(), limits);
    CHECK(r.truncated);
    CHECK(r.witnesses.empty());
    CHECK(outcome_of(r) == NecessaryOutcome::Inconclusive);
    CHECK(check_necessary(ts::cross_hexomino(), limits) == NecessaryOutcome::Inconclusive);
}

TEST_CASE("witness cap bounds the list but not the verdict") {
    SearchLimits limits;
    limits.max_witnesses = 1;
    const SearchResult r = search(ts::cross_hexomino(), limits);
    CHECK(r.covering_exists);
    CHECK(r.witnesses.size() == 1);
}
