#include "sqconn/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace sqconn {

namespace {

std::string edge_str(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

VertexSet::VertexSet(std::vector<int> ids) : ids_(std::move(ids)) {
    for (int v : ids_) {
        if (v < 0) throw std::invalid_argument("negative vertex id in vertex set");
    }
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::range(int begin, int end) {
    if (begin < 0 || end < begin) throw std::invalid_argument("bad vertex range");
    VertexSet s;
    s.ids_.resize(static_cast<size_t>(end - begin));
    for (int v = begin; v < end; ++v) s.ids_[static_cast<size_t>(v - begin)] = v;
    return s;
}

bool VertexSet::contains(int v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

bool VertexSet::intersects(const VertexSet& other) const {
    auto a = ids_.begin();
    auto b = other.ids_.begin();
    while (a != ids_.end() && b != other.ids_.end()) {
        if (*a == *b) return true;
        if (*a < *b) ++a; else ++b;
    }
    return false;
}

VertexSet VertexSet::unite(const VertexSet& other) const {
    std::vector<int> out;
    out.reserve(ids_.size() + other.ids_.size());
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                   std::back_inserter(out));
    VertexSet s;
    s.ids_ = std::move(out);
    return s;
}

VertexSet VertexSet::difference(const VertexSet& other) const {
    std::vector<int> out;
    std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                        std::back_inserter(out));
    VertexSet s;
    s.ids_ = std::move(out);
    return s;
}

EdgeSet::EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges)) {
    for (const Edge& e : edges_) {
        if (e.u == e.v) throw std::invalid_argument("self-loop in edge set: " + edge_str(e.u, e.v));
        if (e.u < 0) throw std::invalid_argument("negative vertex id in edge set");
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool EdgeSet::contains(Edge e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

Graph::Graph(int n, std::span<const std::pair<int, int>> edge_list) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    n_ = n;
    words_ = (n + 63) >> 6;
    bits_.assign(static_cast<size_t>(n) * words_, 0);
    deg_.assign(static_cast<size_t>(n), 0);
    for (const auto& [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw std::invalid_argument("edge endpoint out of range: " + edge_str(u, v) +
                                        " with n=" + std::to_string(n));
        }
        if (u == v) throw std::invalid_argument("self-loop rejected: " + edge_str(u, v));
        if (adjacent(u, v)) continue;  // duplicates collapse
        bits_[static_cast<size_t>(u) * words_ + (static_cast<size_t>(v) >> 6)] |=
            std::uint64_t{1} << (v & 63);
        bits_[static_cast<size_t>(v) * words_ + (static_cast<size_t>(u) >> 6)] |=
            std::uint64_t{1} << (u & 63);
        ++deg_[static_cast<size_t>(u)];
        ++deg_[static_cast<size_t>(v)];
        ++m_;
    }
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(degree(v)));
    for_each_neighbor(v, [&](int w) { out.push_back(w); });
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<size_t>(m_));
    for_each_edge([&](int u, int v) { out.emplace_back(u, v); });
    return out;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
    return Graph(n, edge_list);
}

int min_degree(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("min_degree of empty graph");
    int best = g.degree(0);
    for (int v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
    return best;
}

Graph complete_graph(int k) {
    if (k < 1) throw std::invalid_argument("complete_graph requires k >= 1");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(k) * (k - 1) / 2);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) edges.emplace_back(u, v);
    return Graph(k, edges);
}

Graph complete_minus_perfect_matching(int k) {
    if (k < 2 || k % 2 != 0)
        throw std::invalid_argument("complete_minus_perfect_matching requires even k >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
            if (!(v == u + 1 && u % 2 == 0)) edges.emplace_back(u, v);
    return Graph(k, edges);
}

Graph complete_minus_edge_cover(int k) {
    if (k < 3 || k % 2 == 0)
        throw std::invalid_argument("complete_minus_edge_cover requires odd k >= 3");
    // Removed edges: (0,1),(2,3),...,(k-3,k-2) and (k-2,k-1).
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < k; ++u) {
        for (int v = u + 1; v < k; ++v) {
            const bool covered = (v == u + 1 && u % 2 == 0 && u <= k - 3) ||
                                 (u == k - 2 && v == k - 1);
            if (!covered) edges.emplace_back(u, v);
        }
    }
    return Graph(k, edges);
}

SequentialSumResult sequential_sum(const std::vector<Graph>& parts) {
    if (parts.empty()) throw std::invalid_argument("sequential_sum of empty list");
    std::vector<VertexRange> blocks;
    blocks.reserve(parts.size());
    int total = 0;
    for (const Graph& part : parts) {
        blocks.push_back({total, total + part.order()});
        total += part.order();
    }
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < parts.size(); ++i) {
        const int off = blocks[i].begin;
        parts[i].for_each_edge([&](int u, int v) { edges.emplace_back(off + u, off + v); });
        if (i + 1 < parts.size()) {
            for (int u = blocks[i].begin; u < blocks[i].end; ++u)
                for (int v = blocks[i + 1].begin; v < blocks[i + 1].end; ++v)
                    edges.emplace_back(u, v);
        }
    }
    return {Graph(total, edges), std::move(blocks)};
}

EdgeSet edges_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
    if (a.intersects(b)) throw std::invalid_argument("edges_between requires disjoint sets");
    for (int v : a.ids())
        if (!g.has_vertex(v)) throw std::invalid_argument("vertex set id out of range");
    for (int v : b.ids())
        if (!g.has_vertex(v)) throw std::invalid_argument("vertex set id out of range");
    std::vector<Edge> out;
    for (int u : a.ids()) {
        g.for_each_neighbor(u, [&](int w) {
            if (b.contains(w)) out.emplace_back(u, w);
        });
    }
    return EdgeSet(std::move(out));
}

InducedSubgraphResult induced_subgraph(const Graph& g, const VertexSet& a) {
    if (a.empty()) throw std::invalid_argument("induced_subgraph of empty set");
    for (int v : a.ids())
        if (!g.has_vertex(v)) throw std::invalid_argument("vertex set id out of range");
    std::vector<int> old_to_new(static_cast<size_t>(g.order()), -1);
    const std::vector<int>& keep = a.ids();
    for (size_t i = 0; i < keep.size(); ++i) old_to_new[static_cast<size_t>(keep[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int u : keep) {
        g.for_each_neighbor(u, [&](int w) {
            if (w > u && old_to_new[static_cast<size_t>(w)] >= 0)
                edges.emplace_back(old_to_new[static_cast<size_t>(u)], old_to_new[static_cast<size_t>(w)]);
        });
    }
    return {Graph(a.size(), edges), keep, std::move(old_to_new)};
}

std::vector<int> component_of(const Graph& g, int start) {
    if (!g.has_vertex(start)) throw std::invalid_argument("component_of: vertex out of range");
    std::vector<char> seen(static_cast<size_t>(g.order()), 0);
    std::vector<int> stack{start};
    std::vector<int> out;
    seen[static_cast<size_t>(start)] = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        out.push_back(u);
        g.for_each_neighbor(u, [&](int w) {
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                stack.push_back(w);
            }
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("is_connected of empty graph");
    return static_cast<int>(component_of(g, 0).size()) == g.order();
}

bool is_complete(const Graph& g) {
    const long long n = g.order();
    return g.edge_count() == n * (n - 1) / 2;
}

}  // namespace sqconn
