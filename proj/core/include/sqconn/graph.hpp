#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sqconn {

/// Unordered vertex pair stored in canonical (min,max) order.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<int> ids);

    /// Half-open range [begin, end).
    static VertexSet range(int begin, int end);

    const std::vector<int>& ids() const { return ids_; }
    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }
    bool contains(int v) const;
    bool intersects(const VertexSet& other) const;
    VertexSet unite(const VertexSet& other) const;
    VertexSet difference(const VertexSet& other) const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<int> ids_;
};

/// Sorted, duplicate-free set of canonical edges.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(std::vector<Edge> edges);

    const std::vector<Edge>& edges() const { return edges_; }
    int size() const { return static_cast<int>(edges_.size()); }
    bool empty() const { return edges_.empty(); }
    bool contains(Edge e) const;

    friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

private:
    std::vector<Edge> edges_;
};

/// Immutable undirected simple graph on vertices 0..n-1.
///
/// Adjacency is backed by per-vertex bit rows, so membership tests are O(1)
/// and neighbor iteration runs in sorted order. No self-loops; the adjacency
/// relation is kept symmetric by construction.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::span<const std::pair<int, int>> edge_list);
    Graph(int n, const std::vector<std::pair<int, int>>& edge_list)
        : Graph(n, std::span<const std::pair<int, int>>(edge_list)) {}

    int order() const { return n_; }
    long long edge_count() const { return m_; }
    int degree(int v) const { return deg_[static_cast<size_t>(v)]; }

    bool adjacent(int u, int v) const {
        return (row(u)[static_cast<size_t>(v) >> 6] >> (v & 63)) & 1ULL;
    }

    bool has_vertex(int v) const { return v >= 0 && v < n_; }

    std::vector<int> neighbors(int v) const;
    std::vector<Edge> edges() const;

    /// Visits neighbors of v in ascending order.
    template <class F>
    void for_each_neighbor(int v, F&& f) const {
        const std::uint64_t* r = row(v);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bits = r[w];
            while (bits != 0) {
                f((w << 6) + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
    }

    /// Visits each edge once as (u, v) with u < v, in ascending order.
    template <class F>
    void for_each_edge(F&& f) const {
        for (int u = 0; u < n_; ++u) {
            const std::uint64_t* r = row(u);
            const int w0 = (u + 1) >> 6;
            for (int w = w0; w < words_; ++w) {
                std::uint64_t bits = r[w];
                if (w == w0) bits &= ~std::uint64_t{0} << ((u + 1) & 63);
                while (bits != 0) {
                    f(u, (w << 6) + std::countr_zero(bits));
                    bits &= bits - 1;
                }
            }
        }
    }

    /// Raw adjacency row of v (words_ 64-bit words, bit w set iff v~w).
    const std::uint64_t* row(int v) const {
        return bits_.data() + static_cast<size_t>(v) * words_;
    }
    int row_words() const { return words_; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

private:
    int n_ = 0;
    int words_ = 0;
    long long m_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<int> deg_;
};

/// Half-open vertex id range [begin, end).
struct VertexRange {
    int begin = 0;
    int end = 0;
    int size() const { return end - begin; }
    VertexSet to_set() const { return VertexSet::range(begin, end); }
};

struct SequentialSumResult {
    Graph graph;
    std::vector<VertexRange> blocks;
};

struct InducedSubgraphResult {
    Graph graph;
    std::vector<int> new_to_old;  // new id -> original id, ascending
    std::vector<int> old_to_new;  // original id -> new id, -1 outside the set
};

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list);

int min_degree(const Graph& g);

Graph complete_graph(int k);

/// K_k minus the perfect matching (0,1),(2,3),...,(k-2,k-1); k even.
Graph complete_minus_perfect_matching(int k);

/// K_k minus the edge cover (0,1),(2,3),...,(k-3,k-2),(k-2,k-1); k odd.
/// Vertex k-2 loses two edges, every other vertex one.
Graph complete_minus_edge_cover(int k);

/// Disjoint union of the parts with complete joins between consecutive parts.
/// Vertex ids are assigned block-contiguously in list order.
SequentialSumResult sequential_sum(const std::vector<Graph>& parts);

/// All edges of g with one endpoint in a and the other in b (a, b disjoint).
EdgeSet edges_between(const Graph& g, const VertexSet& a, const VertexSet& b);

InducedSubgraphResult induced_subgraph(const Graph& g, const VertexSet& a);

bool is_connected(const Graph& g);

bool is_complete(const Graph& g);

/// Vertices reachable from start.
std::vector<int> component_of(const Graph& g, int start);

}  // namespace sqconn
