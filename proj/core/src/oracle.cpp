#include "sqconn/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace sqconn {

BruteEdgeConnectivity brute_edge_connectivity(const Graph& g, int cap) {
    const int n = g.order();
    if (n < 2) throw std::invalid_argument("brute_edge_connectivity requires n >= 2");
    if (n > cap) throw std::invalid_argument("brute_edge_connectivity: n exceeds cap " + std::to_string(cap));

    const std::vector<Edge> edges = g.edges();
    // Vertex 0 is pinned to side 1; masks enumerate the other n-1 vertices.
    const std::uint64_t total = std::uint64_t{1} << (n - 1);
    long long best = -1;
    std::uint64_t best_mask = 0;
    for (std::uint64_t mask = 0; mask + 1 < total; ++mask) {
        long long crossing = 0;
        for (const Edge& e : edges) {
            const bool u1 = e.u == 0 || ((mask >> (e.u - 1)) & 1);
            const bool v1 = e.v == 0 || ((mask >> (e.v - 1)) & 1);
            if (u1 != v1) ++crossing;
        }
        if (best < 0 || crossing < best) {
            best = crossing;
            best_mask = mask;
        }
    }
    std::vector<char> side(static_cast<size_t>(n), 0);
    side[0] = 1;
    for (int v = 1; v < n; ++v) side[static_cast<size_t>(v)] = static_cast<char>((best_mask >> (v - 1)) & 1);
    return {best, make_cut(g, side)};
}

namespace {

bool remainder_connected(const Graph& g, const std::vector<char>& removed) {
    int start = -1;
    int remaining = 0;
    for (int v = 0; v < g.order(); ++v) {
        if (!removed[static_cast<size_t>(v)]) {
            ++remaining;
            if (start < 0) start = v;
        }
    }
    if (remaining <= 1) return true;
    std::vector<char> seen(static_cast<size_t>(g.order()), 0);
    std::vector<int> stack{start};
    seen[static_cast<size_t>(start)] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        g.for_each_neighbor(u, [&](int w) {
            if (!removed[static_cast<size_t>(w)] && !seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
        });
    }
    return reached == remaining;
}

}  // namespace

BruteVertexConnectivity brute_vertex_connectivity(const Graph& g, int cap) {
    const int n = g.order();
    if (n < 2) throw std::invalid_argument("brute_vertex_connectivity requires n >= 2");
    if (n > cap) throw std::invalid_argument("brute_vertex_connectivity: n exceeds cap " + std::to_string(cap));
    if (is_complete(g)) return {n - 1, std::nullopt};

    std::vector<char> removed(static_cast<size_t>(n), 0);
    for (int k = 0; k <= n - 2; ++k) {
        // k-subsets in lexicographic order.
        std::vector<int> pick(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) pick[static_cast<size_t>(i)] = i;
        while (true) {
            std::fill(removed.begin(), removed.end(), 0);
            for (int v : pick) removed[static_cast<size_t>(v)] = 1;
            if (!remainder_connected(g, removed))
                return {k, VertexSet(pick)};
            if (k == 0) break;
            int i = k - 1;
            while (i >= 0 && pick[static_cast<size_t>(i)] == n - k + i) --i;
            if (i < 0) break;
            ++pick[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j) pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
        }
    }
    // Unreachable for non-complete graphs: removing all but two non-adjacent
    // vertices disconnects.
    throw std::logic_error("brute_vertex_connectivity: no separator found");
}

long long enumerate_connected_graphs(int n, const std::function<void(const Graph&)>& yield, int cap) {
    const int pairs = n * (n - 1) / 2;
    if (n < 1 || n > cap || n > 8)
        throw std::invalid_argument("enumerate_connected_graphs requires 1 <= n <= " +
                                    std::to_string(std::min(cap, 8)));
    return enumerate_connected_graphs_range(n, 0, std::uint64_t{1} << pairs, yield, cap);
}

long long enumerate_connected_graphs_range(int n, std::uint64_t mask_begin, std::uint64_t mask_end,
                                           const std::function<void(const Graph&)>& yield, int cap) {
    const int pairs = n * (n - 1) / 2;
    if (n < 1 || n > cap || n > 8)
        throw std::invalid_argument("enumerate_connected_graphs requires 1 <= n <= " +
                                    std::to_string(std::min(cap, 8)));
    if (mask_end > (std::uint64_t{1} << pairs)) throw std::invalid_argument("mask range out of bounds");

    std::vector<std::pair<int, int>> pair_order;
    pair_order.reserve(static_cast<size_t>(pairs));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pair_order.emplace_back(i, j);

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(pairs));
    long long count = 0;
    for (std::uint64_t mask = mask_begin; mask < mask_end; ++mask) {
        // Cheap connectivity screen on small bitmask rows before any allocation.
        unsigned adj[8] = {0, 0, 0, 0, 0, 0, 0, 0};
        for (int b = 0; b < pairs; ++b) {
            if ((mask >> b) & 1) {
                adj[pair_order[static_cast<size_t>(b)].first] |= 1u << pair_order[static_cast<size_t>(b)].second;
                adj[pair_order[static_cast<size_t>(b)].second] |= 1u << pair_order[static_cast<size_t>(b)].first;
            }
        }
        unsigned reached = 1u;
        unsigned frontier = 1u;
        while (frontier != 0) {
            unsigned next = 0;
            for (int v = 0; v < n; ++v)
                if ((frontier >> v) & 1) next |= adj[v];
            frontier = next & ~reached;
            reached |= next;
        }
        if (reached != (1u << n) - 1) continue;

        edges.clear();
        for (int b = 0; b < pairs; ++b)
            if ((mask >> b) & 1) edges.push_back(pair_order[static_cast<size_t>(b)]);
        yield(Graph(n, edges));
        ++count;
    }
    return count;
}

}  // namespace sqconn
