#include "sqconn/connectivity.hpp"

#include <algorithm>
#include <stdexcept>

#include "maxflow.hpp"

namespace sqconn {

namespace {

std::vector<char> singleton_mask(int n, int v) {
    std::vector<char> mask(static_cast<size_t>(n), 0);
    mask[static_cast<size_t>(v)] = 1;
    return mask;
}

int lowest_min_degree_vertex(const Graph& g) {
    int best = 0;
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) < g.degree(best)) best = v;
    return best;
}

// Vertex-split network: in(v)=v, out(v)=v+n, split arc in->out.
// Edge arcs get `edge_cap` in both directions (1 to count Menger paths,
// a large value when the minimum cut must consist of split arcs only).
detail::FlowNetwork build_split_network(const Graph& g, int s, int t, int edge_cap) {
    const int n = g.order();
    detail::FlowNetwork net(2 * n);
    const int big = n;
    for (int v = 0; v < n; ++v)
        net.add_arc(v, v + n, (v == s || v == t) ? big : 1);
    g.for_each_edge([&](int u, int v) {
        net.add_arc(u + n, v, edge_cap);
        net.add_arc(v + n, u, edge_cap);
    });
    return net;
}

}  // namespace

Cut make_cut(const Graph& g, const std::vector<char>& in_side1) {
    if (static_cast<int>(in_side1.size()) != g.order())
        throw std::invalid_argument("make_cut: mask size mismatch");
    std::vector<int> s1, s2;
    for (int v = 0; v < g.order(); ++v) (in_side1[static_cast<size_t>(v)] ? s1 : s2).push_back(v);
    if (s1.empty() || s2.empty()) throw std::invalid_argument("make_cut: both sides must be nonempty");
    std::vector<Edge> crossing;
    g.for_each_edge([&](int u, int v) {
        if (in_side1[static_cast<size_t>(u)] != in_side1[static_cast<size_t>(v)])
            crossing.emplace_back(u, v);
    });
    Cut cut;
    cut.side1 = VertexSet(std::move(s1));
    cut.side2 = VertexSet(std::move(s2));
    cut.crossing = EdgeSet(std::move(crossing));
    cut.size = cut.crossing.size();
    return cut;
}

EdgeConnectivityResult edge_connectivity(const Graph& g) {
    const int n = g.order();
    if (n < 2) throw std::invalid_argument("edge_connectivity requires n >= 2");

    if (!is_connected(g)) {
        const std::vector<int> comp = component_of(g, 0);
        std::vector<char> mask(static_cast<size_t>(n), 0);
        for (int v : comp) mask[static_cast<size_t>(v)] = 1;
        return {0, make_cut(g, mask)};
    }
    if (is_complete(g)) return {n - 1, make_cut(g, singleton_mask(n, 0))};

    // lambda <= min degree, so a singleton around a minimum-degree vertex is
    // both the starting bound and a valid fallback witness.
    const int vmin = lowest_min_degree_vertex(g);
    long long best = g.degree(vmin);
    std::vector<char> best_mask = singleton_mask(n, vmin);

    detail::FlowNetwork net(n);
    g.for_each_edge([&](int u, int v) { net.add_undirected_unit(u, v); });
    for (int t = 1; t < n; ++t) {
        net.reset();
        const long long f = net.max_flow(0, t, best);
        if (f < best) {
            best = f;
            const std::vector<char> side = net.residual_side(0);
            best_mask.assign(side.begin(), side.end());
        }
    }
    return {best, make_cut(g, best_mask)};
}

long long edge_connectivity_stoer_wagner(const Graph& g) {
    const int n = g.order();
    if (n < 2) throw std::invalid_argument("edge_connectivity requires n >= 2");
    // Weight matrix over contracted super-vertices; unit weights initially.
    std::vector<std::vector<long long>> w(static_cast<size_t>(n),
                                          std::vector<long long>(static_cast<size_t>(n), 0));
    g.for_each_edge([&](int u, int v) {
        w[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1;
        w[static_cast<size_t>(v)][static_cast<size_t>(u)] = 1;
    });
    std::vector<int> active(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) active[static_cast<size_t>(v)] = v;

    long long best = -1;
    while (active.size() > 1) {
        // Maximum-adjacency order; ties broken toward the lower id.
        std::vector<long long> weight_to_set(active.size(), 0);
        std::vector<char> added(active.size(), 0);
        int prev = -1, last = -1;
        for (size_t step = 0; step < active.size(); ++step) {
            int pick = -1;
            for (size_t i = 0; i < active.size(); ++i) {
                if (added[i]) continue;
                if (pick < 0 || weight_to_set[i] > weight_to_set[static_cast<size_t>(pick)]) pick = static_cast<int>(i);
            }
            added[static_cast<size_t>(pick)] = 1;
            prev = last;
            last = pick;
            for (size_t i = 0; i < active.size(); ++i) {
                if (!added[i])
                    weight_to_set[i] += w[static_cast<size_t>(active[static_cast<size_t>(pick)])]
                                         [static_cast<size_t>(active[i])];
            }
        }
        const long long phase_cut = weight_to_set[static_cast<size_t>(last)];
        if (best < 0 || phase_cut < best) best = phase_cut;
        // Contract the last two vertices of the order.
        const int a = active[static_cast<size_t>(prev)];
        const int b = active[static_cast<size_t>(last)];
        for (int u : active) {
            if (u == a || u == b) continue;
            w[static_cast<size_t>(a)][static_cast<size_t>(u)] += w[static_cast<size_t>(b)][static_cast<size_t>(u)];
            w[static_cast<size_t>(u)][static_cast<size_t>(a)] = w[static_cast<size_t>(a)][static_cast<size_t>(u)];
        }
        active.erase(active.begin() + last);
    }
    return best;
}

VertexConnectivityResult vertex_connectivity(const Graph& g) {
    const int n = g.order();
    if (n < 2) throw std::invalid_argument("vertex_connectivity requires n >= 2");
    if (is_complete(g)) return {n - 1, std::nullopt};
    if (!is_connected(g)) return {0, VertexSet{}};

    const int v0 = lowest_min_degree_vertex(g);
    const int big_edge = n;
    int best = n - 1;
    std::optional<VertexSet> separator;

    auto run_pair = [&](int s, int t) {
        detail::FlowNetwork net = build_split_network(g, s, t, big_edge);
        const long long f = net.max_flow(s + n, t, best);
        if (f < best) {
            best = static_cast<int>(f);
            const std::vector<char> reach = net.residual_side(s + n);
            std::vector<int> sep;
            for (int v = 0; v < n; ++v)
                if (reach[static_cast<size_t>(v)] && !reach[static_cast<size_t>(v + n)]) sep.push_back(v);
            separator = VertexSet(std::move(sep));
        }
    };

    // Any minimum separator either misses v0 (then v0 vs. some vertex of
    // another component, necessarily a non-neighbor) or contains v0 (then two
    // of v0's neighbors lie in different components and are non-adjacent).
    for (int t = 0; t < n; ++t)
        if (t != v0 && !g.adjacent(v0, t)) run_pair(v0, t);
    const std::vector<int> nbrs = g.neighbors(v0);
    for (size_t i = 0; i < nbrs.size(); ++i)
        for (size_t j = i + 1; j < nbrs.size(); ++j)
            if (!g.adjacent(nbrs[i], nbrs[j])) run_pair(nbrs[i], nbrs[j]);

    return {best, separator};
}

bool is_maximally_edge_connected(const Graph& g) {
    if (g.order() < 2) throw std::invalid_argument("is_maximally_edge_connected requires n >= 2");
    if (!is_connected(g)) throw std::invalid_argument("is_maximally_edge_connected requires a connected graph");
    const long long lambda = edge_connectivity(g).value;
    const long long delta = min_degree(g);
    if (lambda > delta) throw std::logic_error("edge-connectivity exceeds minimum degree");
    return lambda == delta;
}

namespace {

// Removes chords until the path is induced. Every splice only discards
// vertices, so disjointness from other paths is preserved. The endpoint
// pair is never treated as a chord: when s and t are adjacent, the direct
// edge is its own path and must not swallow the longer ones.
void shortcut_to_induced(const Graph& g, std::vector<int>& path) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 2 < path.size() && !changed; ++i) {
            for (size_t j = path.size() - 1; j >= i + 2; --j) {
                if (i == 0 && j + 1 == path.size()) continue;
                if (g.adjacent(path[i], path[static_cast<size_t>(j)])) {
                    path.erase(path.begin() + static_cast<long>(i) + 1,
                               path.begin() + static_cast<long>(j));
                    changed = true;
                    break;
                }
            }
        }
    }
}

}  // namespace

std::optional<DisjointPaths> disjoint_paths(const Graph& g, int s, int t, int count) {
    const int n = g.order();
    if (!g.has_vertex(s) || !g.has_vertex(t)) throw std::invalid_argument("disjoint_paths: vertex out of range");
    if (s == t) throw std::invalid_argument("disjoint_paths requires s != t");
    if (count < 1) throw std::invalid_argument("disjoint_paths requires count >= 1");

    // Unit edge arcs so the direct s-t edge counts as exactly one path.
    detail::FlowNetwork net = build_split_network(g, s, t, 1);
    const long long f = net.max_flow(s + n, t, count);
    if (f < count) return std::nullopt;

    // Walk flow-carrying arcs; unit vertex splits make the walks disjoint.
    std::vector<size_t> next_arc(static_cast<size_t>(2 * n), 0);
    DisjointPaths result;
    for (int p = 0; p < count; ++p) {
        std::vector<int> path{s};
        int node = s + n;  // out(s)
        while (node != t) {
            bool advanced = false;
            for (size_t& i = next_arc[static_cast<size_t>(node)]; i < net.arcs_out(node).size(); ++i) {
                const int id = net.arcs_out(node)[i];
                if (id % 2 != 0) continue;  // reverse arcs carry no forward flow
                if (net.flow(id) <= 0) continue;
                net.consume_unit(id);
                const int to = net.arc_to(id);
                if (to < n && to != t) path.push_back(to);
                node = to;
                advanced = true;
                break;
            }
            if (!advanced) throw std::logic_error("disjoint_paths: flow decomposition failed");
        }
        path.push_back(t);
        shortcut_to_induced(g, path);
        result.paths.push_back(std::move(path));
    }
    return result;
}

bool validate_disjoint_paths(const Graph& g, int s, int t, const DisjointPaths& dp) {
    std::vector<char> used(static_cast<size_t>(g.order()), 0);
    for (const std::vector<int>& path : dp.paths) {
        if (path.size() < 2 || path.front() != s || path.back() != t) return false;
        for (size_t i = 0; i + 1 < path.size(); ++i)
            if (!g.adjacent(path[i], path[i + 1])) return false;
        for (size_t i = 1; i + 1 < path.size(); ++i) {
            const int v = path[i];
            if (v == s || v == t) return false;
            if (used[static_cast<size_t>(v)]) return false;
            used[static_cast<size_t>(v)] = 1;
        }
        // A path never repeats vertices.
        std::vector<int> sorted(path);
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    }
    return true;
}

CutAnalysis analyze_cut(const Graph& g, const Graph& h, const Cut& cut, long long lambda0) {
    const int n = g.order();
    if (h.order() != n) throw std::invalid_argument("analyze_cut: vertex-set mismatch between g and h");
    if (lambda0 < 1) throw std::invalid_argument("analyze_cut: lambda0 must be positive");
    if (cut.side1.empty() || cut.side2.empty() || cut.side1.intersects(cut.side2) ||
        cut.side1.size() + cut.side2.size() != n)
        throw std::invalid_argument("analyze_cut: sides do not bipartition the vertex set");
    if (!(cut.crossing == edges_between(h, cut.side1, cut.side2)) ||
        cut.size != cut.crossing.size())
        throw std::invalid_argument("analyze_cut: crossing set is not the cut of h");

    std::vector<char> in1(static_cast<size_t>(n), 0);
    for (int v : cut.side1.ids()) in1[static_cast<size_t>(v)] = 1;

    CutAnalysis out;
    out.inc.assign(static_cast<size_t>(n), 0);
    std::vector<char> in_a(static_cast<size_t>(n), 0), in_b(static_cast<size_t>(n), 0);
    std::vector<char> in_ap(static_cast<size_t>(n), 0), in_bp(static_cast<size_t>(n), 0);
    std::vector<Edge> s_prime_edges;
    for (const Edge& e : cut.crossing.edges()) {
        const int a_end = in1[static_cast<size_t>(e.u)] ? e.u : e.v;
        const int b_end = in1[static_cast<size_t>(e.u)] ? e.v : e.u;
        in_a[static_cast<size_t>(a_end)] = 1;
        in_b[static_cast<size_t>(b_end)] = 1;
        if (g.adjacent(e.u, e.v)) {
            s_prime_edges.push_back(e);
            ++out.inc[static_cast<size_t>(e.u)];
            ++out.inc[static_cast<size_t>(e.v)];
            in_ap[static_cast<size_t>(a_end)] = 1;
            in_bp[static_cast<size_t>(b_end)] = 1;
        }
    }
    out.s_prime = EdgeSet(std::move(s_prime_edges));

    std::vector<int> a, b, ap, bp, int1, int2;
    for (int v = 0; v < n; ++v) {
        if (in_a[static_cast<size_t>(v)]) a.push_back(v);
        if (in_b[static_cast<size_t>(v)]) b.push_back(v);
        if (in_ap[static_cast<size_t>(v)]) ap.push_back(v);
        if (in_bp[static_cast<size_t>(v)]) bp.push_back(v);
        if (in1[static_cast<size_t>(v)] && !in_a[static_cast<size_t>(v)]) int1.push_back(v);
        if (!in1[static_cast<size_t>(v)] && !in_b[static_cast<size_t>(v)]) int2.push_back(v);
    }
    out.a_boundary = VertexSet(std::move(a));
    out.b_boundary = VertexSet(std::move(b));
    out.a_prime = VertexSet(std::move(ap));
    out.b_prime = VertexSet(std::move(bp));
    out.interior1 = VertexSet(std::move(int1));
    out.interior2 = VertexSet(std::move(int2));

    // Exact integer comparisons against sqrt(lambda0):
    //   inc < sqrt(l0)        <=> inc^2 < l0
    //   inc > l0 - sqrt(l0)   <=> l0 - inc < sqrt(l0) <=> (l0-inc) < 0 or (l0-inc)^2 < l0
    auto below_sqrt = [lambda0](long long x) { return x < 0 || x * x < lambda0; };
    std::vector<int> apl, ami, bpl, bmi;
    for (int v : out.a_prime.ids()) {
        const long long incv = out.inc[static_cast<size_t>(v)];
        if (below_sqrt(lambda0 - incv)) apl.push_back(v);
        if (incv >= 0 && incv * incv < lambda0) ami.push_back(v);
    }
    for (int v : out.b_prime.ids()) {
        const long long incv = out.inc[static_cast<size_t>(v)];
        if (below_sqrt(lambda0 - incv)) bpl.push_back(v);
        if (incv >= 0 && incv * incv < lambda0) bmi.push_back(v);
    }
    out.a_plus = VertexSet(std::move(apl));
    out.a_minus = VertexSet(std::move(ami));
    out.b_plus = VertexSet(std::move(bpl));
    out.b_minus = VertexSet(std::move(bmi));
    out.plus_minus_dichotomy = out.a_plus.unite(out.a_minus) == out.a_prime &&
                               out.b_plus.unite(out.b_minus) == out.b_prime;

    out.hamidoune_applicable = h.order() >= 1 && cut.size < min_degree(h);
    out.hamidoune_holds = !out.interior1.empty() && !out.interior2.empty();
    return out;
}

}  // namespace sqconn
