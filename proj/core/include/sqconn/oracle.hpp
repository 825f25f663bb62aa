#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "sqconn/connectivity.hpp"
#include "sqconn/graph.hpp"

namespace sqconn {

/// Brute-force ground truth for small graphs. These run before the flow
/// algorithms in the test pipeline and stay independent of them.

struct BruteEdgeConnectivity {
    long long value = 0;
    Cut witness;
};

/// Minimizes |E(X, V\X)| over all proper nonempty X containing vertex 0.
/// Exact for any graph with 2 <= n <= cap.
BruteEdgeConnectivity brute_edge_connectivity(const Graph& g, int cap = 20);

struct BruteVertexConnectivity {
    int value = 0;
    std::optional<VertexSet> separator;  // absent for complete graphs
};

/// Tests vertex subsets in size order until one disconnects the remainder;
/// n-1 without witness for complete graphs. 2 <= n <= cap.
BruteVertexConnectivity brute_vertex_connectivity(const Graph& g, int cap = 16);

/// Yields every connected graph on n labeled vertices exactly once
/// (all 2^C(n,2) edge masks, filtered for connectivity). Returns the count.
/// n <= cap, default and hard maximum 8.
long long enumerate_connected_graphs(int n, const std::function<void(const Graph&)>& yield,
                                     int cap = 8);

/// Mask-range slice of the same enumeration, for partitioned runs.
/// Masks index the C(n,2) vertex pairs in lexicographic (i,j) order.
long long enumerate_connected_graphs_range(int n, std::uint64_t mask_begin,
                                           std::uint64_t mask_end,
                                           const std::function<void(const Graph&)>& yield,
                                           int cap = 8);

}  // namespace sqconn
