#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>

#include "sqconn/graph.hpp"
#include "test_util.hpp"

using namespace sqconn;
using namespace sqconn::testutil;

namespace {

// Symmetry and irreflexivity, asserted on every construction path.
void check_well_formed(const Graph& g) {
    long long degree_sum = 0;
    for (int v = 0; v < g.order(); ++v) {
        CHECK(!g.adjacent(v, v));
        degree_sum += g.degree(v);
        g.for_each_neighbor(v, [&](int w) { CHECK(g.adjacent(w, v)); });
    }
    CHECK(degree_sum == 2 * g.edge_count());
}

std::uint64_t rng_state = 0x5DEECE66DULL;
std::uint64_t next_rand() {
    rng_state ^= rng_state << 13;
    rng_state ^= rng_state >> 7;
    rng_state ^= rng_state << 17;
    return rng_state;
}

}  // namespace

TEST_CASE("build_graph basics") {
    const Graph k3 = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.order() == 3);
    CHECK(k3.edge_count() == 3);
    check_well_formed(k3);

    const Graph edgeless = build_graph(2, {});
    CHECK(edgeless.edge_count() == 0);

    const Graph p4 = path_graph(4);
    CHECK(p4.degree(0) == 1);
    CHECK(p4.degree(1) == 2);
    CHECK(p4.degree(2) == 2);
    CHECK(p4.degree(3) == 1);
    CHECK(min_degree(p4) == 1);

    // Duplicate edges collapse.
    const Graph dup = build_graph(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.edge_count() == 1);
}

TEST_CASE("build_graph rejects bad input") {
    CHECK_THROWS_AS(build_graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(3, {{-1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(min_degree(Graph{}), std::invalid_argument);
}

TEST_CASE("min_degree on known graphs") {
    CHECK(min_degree(complete_graph(5)) == 4);
    CHECK(min_degree(petersen()) == 3);
    for (int v = 0; v < 10; ++v) CHECK(petersen().degree(v) == 3);
}

TEST_CASE("complete graphs") {
    CHECK(complete_graph(1).edge_count() == 0);
    CHECK(complete_graph(4).edge_count() == 6);
    CHECK(complete_graph(16).edge_count() == 120);
    CHECK_THROWS_AS(complete_graph(0), std::invalid_argument);
    check_well_formed(complete_graph(7));
}

TEST_CASE("complete minus perfect matching") {
    const Graph k2m = complete_minus_perfect_matching(2);
    CHECK(k2m.edge_count() == 0);

    const Graph k4m = complete_minus_perfect_matching(4);  // C4
    CHECK(k4m.edge_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(k4m.degree(v) == 2);
    CHECK(!k4m.adjacent(0, 1));
    CHECK(!k4m.adjacent(2, 3));

    const Graph k6m = complete_minus_perfect_matching(6);
    for (int v = 0; v < 6; ++v) CHECK(k6m.degree(v) == 4);

    CHECK_THROWS_AS(complete_minus_perfect_matching(5), std::invalid_argument);
    CHECK_THROWS_AS(complete_minus_perfect_matching(0), std::invalid_argument);
}

TEST_CASE("complete minus edge cover") {
    const Graph k3c = complete_minus_edge_cover(3);
    CHECK(k3c.degree(0) == 1);
    CHECK(k3c.degree(1) == 0);
    CHECK(k3c.degree(2) == 1);
    CHECK(k3c.adjacent(0, 2));

    const Graph k5c = complete_minus_edge_cover(5);
    CHECK(k5c.degree(0) == 3);
    CHECK(k5c.degree(1) == 3);
    CHECK(k5c.degree(2) == 3);
    CHECK(k5c.degree(3) == 2);
    CHECK(k5c.degree(4) == 3);

    const Graph k7c = complete_minus_edge_cover(7);
    int light = 0;
    for (int v = 0; v < 7; ++v)
        if (k7c.degree(v) == 4) ++light;
    CHECK(light == 1);
    CHECK(k7c.degree(5) == 4);  // vertex k-2 loses two edges

    CHECK_THROWS_AS(complete_minus_edge_cover(4), std::invalid_argument);
}

TEST_CASE("sequential sum") {
    const SequentialSumResult k2 = sequential_sum({complete_graph(1), complete_graph(1)});
    CHECK(k2.graph.order() == 2);
    CHECK(k2.graph.edge_count() == 1);

    const SequentialSumResult s =
        sequential_sum({complete_graph(1), complete_graph(3), complete_graph(1), complete_graph(3)});
    CHECK(s.graph.order() == 8);
    CHECK(min_degree(s.graph) == 3);

    const SequentialSumResult g12 =
        sequential_sum({complete_graph(3), complete_graph(2), complete_graph(1), complete_graph(1),
                        complete_graph(1), complete_graph(4)});
    CHECK(g12.graph.order() == 12);
    CHECK(min_degree(g12.graph) == 2);
    CHECK(g12.blocks.size() == 6);
    CHECK(g12.blocks[5].begin == 8);
    CHECK(g12.blocks[5].end == 12);

    CHECK_THROWS_AS(sequential_sum({}), std::invalid_argument);
}

TEST_CASE("sequential sum size additivity") {
    const std::vector<Graph> parts{complete_graph(3), path_graph(4), cycle_graph(5),
                                   complete_graph(2)};
    const SequentialSumResult s = sequential_sum(parts);
    long long n = 0, m = 0;
    for (const Graph& p : parts) {
        n += p.order();
        m += p.edge_count();
    }
    for (size_t i = 0; i + 1 < parts.size(); ++i)
        m += static_cast<long long>(parts[i].order()) * parts[i + 1].order();
    CHECK(s.graph.order() == n);
    CHECK(s.graph.edge_count() == m);
    check_well_formed(s.graph);
}

TEST_CASE("edges_between") {
    const EdgeSet k4cut = edges_between(complete_graph(4), VertexSet({0, 1}), VertexSet({2, 3}));
    CHECK(k4cut.size() == 4);

    const EdgeSet p4cut = edges_between(path_graph(4), VertexSet({0, 1}), VertexSet({2, 3}));
    CHECK(p4cut.size() == 1);
    CHECK(p4cut.contains(Edge(1, 2)));

    CHECK_THROWS_AS(edges_between(path_graph(4), VertexSet({0, 1}), VertexSet({1, 2})),
                    std::invalid_argument);
}

TEST_CASE("edges_between agrees with a full edge scan") {
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 6 + static_cast<int>(next_rand() % 6);
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (next_rand() % 3 == 0) edges.emplace_back(i, j);
        const Graph g(n, edges);
        std::vector<int> a, b;
        for (int v = 0; v < n; ++v) {
            const std::uint64_t r = next_rand() % 3;
            if (r == 0) a.push_back(v);
            else if (r == 1) b.push_back(v);
        }
        if (a.empty() || b.empty()) continue;
        const VertexSet sa(a), sb(b);
        long long scan = 0;
        g.for_each_edge([&](int u, int v) {
            if ((sa.contains(u) && sb.contains(v)) || (sa.contains(v) && sb.contains(u))) ++scan;
        });
        CHECK(edges_between(g, sa, sb).size() == scan);
    }
}

TEST_CASE("induced subgraph") {
    const InducedSubgraphResult k3 = induced_subgraph(complete_graph(5), VertexSet({0, 2, 4}));
    CHECK(k3.graph.order() == 3);
    CHECK(k3.graph.edge_count() == 3);
    CHECK(k3.new_to_old == std::vector<int>{0, 2, 4});
    CHECK(k3.old_to_new[4] == 2);
    CHECK(k3.old_to_new[1] == -1);

    const InducedSubgraphResult p3 = induced_subgraph(cycle_graph(5), VertexSet({0, 1, 2}));
    CHECK(p3.graph.edge_count() == 2);  // a path, the cycle edge 4-0 is cut off

    const InducedSubgraphResult outer = induced_subgraph(petersen(), VertexSet({0, 1, 2, 3, 4}));
    CHECK(outer.graph.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(outer.graph.degree(v) == 2);  // C5

    CHECK_THROWS_AS(induced_subgraph(petersen(), VertexSet{}), std::invalid_argument);
}

TEST_CASE("induced subgraph preserves internal degrees") {
    const Graph g = petersen();
    const VertexSet keep({0, 1, 2, 5, 7});
    const InducedSubgraphResult sub = induced_subgraph(g, keep);
    for (int nv = 0; nv < sub.graph.order(); ++nv) {
        const int old = sub.new_to_old[static_cast<size_t>(nv)];
        int expected = 0;
        g.for_each_neighbor(old, [&](int w) { expected += keep.contains(w) ? 1 : 0; });
        CHECK(sub.graph.degree(nv) == expected);
    }
}

TEST_CASE("is_connected") {
    CHECK(is_connected(path_graph(4)));
    CHECK(!is_connected(build_graph(2, {})));
    CHECK(!is_connected(complete_minus_perfect_matching(2)));
    CHECK(is_connected(complete_graph(1)));
    CHECK_THROWS_AS(is_connected(Graph{}), std::invalid_argument);
}

TEST_CASE("vertex and edge sets") {
    const VertexSet s({3, 1, 2, 2, 1});
    CHECK(s.ids() == std::vector<int>{1, 2, 3});
    CHECK(s.contains(2));
    CHECK(!s.contains(0));
    CHECK(VertexSet::range(2, 5).ids() == std::vector<int>{2, 3, 4});
    CHECK(s.unite(VertexSet({0, 3})).ids() == std::vector<int>{0, 1, 2, 3});
    CHECK(s.difference(VertexSet({2})).ids() == std::vector<int>{1, 3});

    const EdgeSet es({Edge(2, 1), Edge(1, 2), Edge(0, 3)});
    CHECK(es.size() == 2);
    CHECK(es.contains(Edge(1, 2)));
    CHECK_THROWS_AS(EdgeSet({Edge(1, 1)}), std::invalid_argument);
}

TEST_CASE("large graphs cross the bitset word boundary cleanly") {
    const Graph g = complete_graph(130);
    CHECK(g.edge_count() == 130LL * 129 / 2);
    check_well_formed(g);
    long long count = 0;
    g.for_each_edge([&](int u, int v) {
        CHECK(u < v);
        ++count;
    });
    CHECK(count == g.edge_count());
}
