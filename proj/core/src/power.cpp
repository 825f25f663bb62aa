#include "sqconn/power.hpp"

#include <stdexcept>

namespace sqconn {

std::vector<int> bfs_distances(const Graph& g, int src) {
    if (!g.has_vertex(src)) throw std::invalid_argument("bfs_distances: vertex out of range");
    std::vector<int> dist(static_cast<size_t>(g.order()), -1);
    std::vector<int> queue;
    queue.reserve(static_cast<size_t>(g.order()));
    dist[static_cast<size_t>(src)] = 0;
    queue.push_back(src);
    for (size_t head = 0; head < queue.size(); ++head) {
        const int u = queue[head];
        const int du = dist[static_cast<size_t>(u)];
        g.for_each_neighbor(u, [&](int w) {
            if (dist[static_cast<size_t>(w)] < 0) {
                dist[static_cast<size_t>(w)] = du + 1;
                queue.push_back(w);
            }
        });
    }
    return dist;
}

Graph graph_power(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("graph_power requires k >= 1");
    if (g.order() < 1) throw std::invalid_argument("graph_power of empty graph");
    const int n = g.order();
    std::vector<std::pair<int, int>> edges;
    // Depth-limited BFS from each source; frontier buffers reused across sources.
    std::vector<int> dist(static_cast<size_t>(n));
    std::vector<int> queue;
    queue.reserve(static_cast<size_t>(n));
    for (int src = 0; src < n; ++src) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        dist[static_cast<size_t>(src)] = 0;
        queue.push_back(src);
        for (size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            const int du = dist[static_cast<size_t>(u)];
            if (du == k) break;  // BFS order: deeper layers only follow
            g.for_each_neighbor(u, [&](int w) {
                if (dist[static_cast<size_t>(w)] < 0) {
                    dist[static_cast<size_t>(w)] = du + 1;
                    queue.push_back(w);
                    if (w > src) edges.emplace_back(src, w);
                }
            });
        }
    }
    return Graph(n, edges);
}

std::optional<int> distance(const Graph& g, int u, int v) {
    if (!g.has_vertex(u) || !g.has_vertex(v))
        throw std::invalid_argument("distance: vertex out of range");
    if (u == v) return 0;
    const std::vector<int> dist = bfs_distances(g, u);
    if (dist[static_cast<size_t>(v)] < 0) return std::nullopt;
    return dist[static_cast<size_t>(v)];
}

}  // namespace sqconn
