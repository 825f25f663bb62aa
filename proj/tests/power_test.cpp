#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "sqconn/graph.hpp"
#include "sqconn/oracle.hpp"
#include "sqconn/power.hpp"
#include "test_util.hpp"

using namespace sqconn;
using namespace sqconn::testutil;

namespace {

// Boolean-matrix oracle for the square: adjacency of G^2 is A or A*A off the
// diagonal. Independent of the BFS route used by graph_power.
Graph boolean_square(const Graph& g) {
    const int n = g.order();
    REQUIRE(n <= 64);
    std::vector<std::uint64_t> rows(static_cast<size_t>(n), 0);
    g.for_each_edge([&](int u, int v) {
        rows[static_cast<size_t>(u)] |= std::uint64_t{1} << v;
        rows[static_cast<size_t>(v)] |= std::uint64_t{1} << u;
    });
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        std::uint64_t reach = rows[static_cast<size_t>(u)];
        for (int w = 0; w < n; ++w)
            if ((rows[static_cast<size_t>(u)] >> w) & 1) reach |= rows[static_cast<size_t>(w)];
        reach &= ~(std::uint64_t{1} << u);
        for (int v = u + 1; v < n; ++v)
            if ((reach >> v) & 1) edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

std::uint64_t rng_state = 0x2545F4914F6CDD1DULL;
std::uint64_t next_rand() {
    rng_state ^= rng_state << 13;
    rng_state ^= rng_state >> 7;
    rng_state ^= rng_state << 17;
    return rng_state;
}

Graph random_graph(int n, int denom) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (next_rand() % static_cast<std::uint64_t>(denom) == 0) edges.emplace_back(i, j);
    return Graph(n, edges);
}

}  // namespace

TEST_CASE("square of a path") {
    const Graph sq = square(path_graph(4));
    CHECK(sq.edge_count() == 5);
    CHECK(sq.adjacent(0, 1));
    CHECK(sq.adjacent(0, 2));
    CHECK(sq.adjacent(1, 2));
    CHECK(sq.adjacent(1, 3));
    CHECK(sq.adjacent(2, 3));
    CHECK(!sq.adjacent(0, 3));
    CHECK(min_degree(sq) == 2);
}

TEST_CASE("square identities") {
    CHECK(square(complete_graph(6)) == complete_graph(6));
    CHECK(square(cycle_graph(5)) == complete_graph(5));
    CHECK(square(petersen()) == complete_graph(10));  // diameter 2
}

TEST_CASE("distance") {
    CHECK(distance(path_graph(4), 0, 3) == 3);
    CHECK(distance(path_graph(4), 2, 2) == 0);
    CHECK(!distance(build_graph(3, {{0, 1}}), 0, 2).has_value());
    CHECK_THROWS_AS(distance(path_graph(4), 0, 4), std::invalid_argument);

    // Petersen: every pair is within distance 2.
    const Graph p = petersen();
    int max_dist = 0;
    for (int u = 0; u < 10; ++u)
        for (int v = u + 1; v < 10; ++v) max_dist = std::max(max_dist, *distance(p, u, v));
    CHECK(max_dist == 2);
}

TEST_CASE("graph_power preconditions") {
    CHECK_THROWS_AS(graph_power(path_graph(3), 0), std::invalid_argument);
    CHECK_THROWS_AS(graph_power(Graph{}, 2), std::invalid_argument);
    CHECK(graph_power(path_graph(3), 1) == path_graph(3));
}

TEST_CASE("square matches the boolean-matrix oracle") {
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(next_rand() % 14);
        const Graph g = random_graph(n, 3);
        CHECK(square(g) == boolean_square(g));
    }
    for (int trial = 0; trial < 8; ++trial) {
        const int n = 40 + static_cast<int>(next_rand() % 25);  // up to the oracle cap of 64
        const Graph g = random_graph(n, 8);
        CHECK(square(g) == boolean_square(g));
    }
    CHECK(square(petersen()) == boolean_square(petersen()));
}

TEST_CASE("power monotonicity and stabilization") {
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 3 + static_cast<int>(next_rand() % 8);
        const Graph g = random_graph(n, 3);
        Graph prev = g;
        for (int k = 2; k <= n; ++k) {
            const Graph cur = graph_power(g, k);
            // E(G^k) grows monotonically.
            prev.for_each_edge([&](int u, int v) { CHECK(cur.adjacent(u, v)); });
            prev = cur;
        }
        if (is_connected(g)) {
            CHECK(is_complete(graph_power(g, n)));  // n-1 >= diameter
        }
    }
}

TEST_CASE("power of a disconnected graph works componentwise") {
    // Two paths of length 2; no cross edges ever appear.
    const Graph g = build_graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
    const Graph sq = square(g);
    CHECK(sq.adjacent(0, 2));
    CHECK(sq.adjacent(3, 5));
    CHECK(!sq.adjacent(2, 3));
    CHECK(sq.edge_count() == 6);
}

TEST_CASE("square min degree grows for connected non-complete graphs") {
    enumerate_connected_graphs(5, [](const Graph& g) {
        if (is_complete(g)) return;
        CHECK(min_degree(square(g)) >= min_degree(g) + 1);
    });
}
