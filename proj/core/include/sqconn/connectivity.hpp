#pragma once

#include <optional>
#include <vector>

#include "sqconn/graph.hpp"

namespace sqconn {

/// Witness bipartition for an edge cut: crossing = E(side1, side2).
struct Cut {
    VertexSet side1;
    VertexSet side2;
    EdgeSet crossing;
    long long size = 0;
};

/// Builds and validates a Cut from a side-1 membership mask.
Cut make_cut(const Graph& g, const std::vector<char>& in_side1);

struct EdgeConnectivityResult {
    long long value = 0;
    Cut witness;
};

/// Exact edge-connectivity with a minimum-cut witness.
///
/// Deterministic: n-1 unit-capacity max-flow computations from vertex 0,
/// with early abort once a sink cannot beat the best cut so far. Complete
/// graphs short-circuit to n-1 with a singleton cut; disconnected input
/// yields 0 with a component bipartition.
EdgeConnectivityResult edge_connectivity(const Graph& g);

/// Alternate exact backend (minimum-cut-phase contraction); value only.
long long edge_connectivity_stoer_wagner(const Graph& g);

struct VertexConnectivityResult {
    int value = 0;
    std::optional<VertexSet> separator;  // absent exactly for complete graphs
};

/// Exact vertex connectivity, kappa(K_n) = n-1 by convention.
///
/// Unit-capacity flow on the vertex-split network, minimized over a fixed
/// minimum-degree vertex paired with each of its non-neighbors plus every
/// non-adjacent pair of its neighbors.
VertexConnectivityResult vertex_connectivity(const Graph& g);

/// lambda(g) == min_degree(g); requires a connected graph.
bool is_maximally_edge_connected(const Graph& g);

struct DisjointPaths {
    std::vector<std::vector<int>> paths;  // each runs s..t; no shared internal vertices
};

/// `count` internally vertex-disjoint s-t paths, or nullopt when fewer exist.
/// Every returned path is chordless (shortcut past any chord of g).
std::optional<DisjointPaths> disjoint_paths(const Graph& g, int s, int t, int count);

/// Dissection of a cut of h = g^2 relative to g.
///
/// a_boundary/b_boundary are the side-1/side-2 endpoints of the cut edges;
/// s_prime is the part of the cut that already lies in g, with a_prime/
/// b_prime its endpoints and inc[v] the number of s_prime edges at v.
/// Given the threshold lambda0: a_plus = {v in A' : inc(v) > lambda0 -
/// sqrt(lambda0)}, a_minus = {v in A' : inc(v) < sqrt(lambda0)} (same for B).
struct CutAnalysis {
    VertexSet a_boundary;
    VertexSet b_boundary;
    EdgeSet s_prime;
    VertexSet a_prime;
    VertexSet b_prime;
    VertexSet interior1;
    VertexSet interior2;
    std::vector<int> inc;
    VertexSet a_plus;
    VertexSet a_minus;
    VertexSet b_plus;
    VertexSet b_minus;
    /// A+ u A- == A' and B+ u B- == B' (no vertex in the middle band).
    bool plus_minus_dichotomy = false;
    /// Hamidoune's lemma: |S| < min_degree(h) guarantees interior vertices.
    bool hamidoune_applicable = false;
    bool hamidoune_holds = false;
};

/// Requires h and g on the same vertex set and a valid cut of h;
/// lambda0 >= 1 sets the inc thresholds.
CutAnalysis analyze_cut(const Graph& g, const Graph& h, const Cut& cut, long long lambda0);

/// Validates path endpoints, consecutive adjacency and pairwise internal
/// disjointness; used as the independent check on disjoint_paths output.
bool validate_disjoint_paths(const Graph& g, int s, int t, const DisjointPaths& dp);

}  // namespace sqconn
