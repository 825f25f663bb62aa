#pragma once

#include <optional>
#include <vector>

#include "sqconn/graph.hpp"

namespace sqconn {

/// k-th power of g: same vertices, u~v iff 1 <= d_g(u,v) <= k.
/// Computed by a depth-limited breadth-first traversal from each vertex,
/// so a disconnected graph is raised to the power componentwise.
Graph graph_power(const Graph& g, int k);

inline Graph square(const Graph& g) { return graph_power(g, 2); }

/// BFS distance, or nullopt when v is unreachable from u.
std::optional<int> distance(const Graph& g, int u, int v);

/// Distances from src to every vertex; -1 marks unreachable.
std::vector<int> bfs_distances(const Graph& g, int src);

}  // namespace sqconn
