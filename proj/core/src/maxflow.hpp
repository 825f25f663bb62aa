#pragma once

#include <limits>
#include <vector>

namespace sqconn::detail {

// Dinic max-flow on small integer capacities, with an optional flow limit so
// callers scanning many sinks can abort augmentation once the current best
// cut cannot be improved.
class FlowNetwork {
public:
    explicit FlowNetwork(int node_count)
        : adj_(static_cast<size_t>(node_count)),
          level_(static_cast<size_t>(node_count)),
          iter_(static_cast<size_t>(node_count)) {}

    int node_count() const { return static_cast<int>(adj_.size()); }

    // Adds from->to with the given capacity and the paired reverse arc.
    // Returns the forward arc id; the reverse arc is id^1.
    int add_arc(int from, int to, int cap, int reverse_cap = 0) {
        const int id = static_cast<int>(arcs_.size());
        arcs_.push_back({to, cap, cap});
        arcs_.push_back({from, reverse_cap, reverse_cap});
        adj_[static_cast<size_t>(from)].push_back(id);
        adj_[static_cast<size_t>(to)].push_back(id + 1);
        return id;
    }

    void add_undirected_unit(int u, int v) { add_arc(u, v, 1, 1); }

    // Restores all residuals to the original capacities.
    void reset() {
        for (Arc& a : arcs_) a.residual = a.cap;
    }

    long long max_flow(int s, int t, long long limit = std::numeric_limits<long long>::max());

    // Nodes reachable from s in the residual network (call after max_flow).
    std::vector<char> residual_side(int s) const;

    // Residual capacity of an arc id returned by add_arc.
    int residual(int id) const { return arcs_[static_cast<size_t>(id)].residual; }
    // Flow pushed through a forward arc.
    int flow(int id) const {
        return arcs_[static_cast<size_t>(id)].cap - arcs_[static_cast<size_t>(id)].residual;
    }
    // Removes one unit of flow from an arc during path decomposition.
    void consume_unit(int id) {
        arcs_[static_cast<size_t>(id)].residual += 1;
        arcs_[static_cast<size_t>(id ^ 1)].residual -= 1;
    }
    const std::vector<int>& arcs_out(int v) const { return adj_[static_cast<size_t>(v)]; }
    int arc_to(int id) const { return arcs_[static_cast<size_t>(id)].to; }

private:
    struct Arc {
        int to;
        int cap;
        int residual;
    };

    bool build_levels(int s, int t);
    long long augment(int v, int t, long long limit);

    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> level_;
    std::vector<size_t> iter_;
    std::vector<int> queue_;
};

}  // namespace sqconn::detail
