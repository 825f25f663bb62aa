#include "maxflow.hpp"

#include <algorithm>

namespace sqconn::detail {

bool FlowNetwork::build_levels(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    queue_.clear();
    level_[static_cast<size_t>(s)] = 0;
    queue_.push_back(s);
    for (size_t head = 0; head < queue_.size(); ++head) {
        const int u = queue_[head];
        for (int id : adj_[static_cast<size_t>(u)]) {
            const Arc& a = arcs_[static_cast<size_t>(id)];
            if (a.residual > 0 && level_[static_cast<size_t>(a.to)] < 0) {
                level_[static_cast<size_t>(a.to)] = level_[static_cast<size_t>(u)] + 1;
                queue_.push_back(a.to);
            }
        }
    }
    return level_[static_cast<size_t>(t)] >= 0;
}

long long FlowNetwork::augment(int v, int t, long long limit) {
    if (v == t) return limit;
    for (size_t& i = iter_[static_cast<size_t>(v)]; i < adj_[static_cast<size_t>(v)].size(); ++i) {
        const int id = adj_[static_cast<size_t>(v)][i];
        Arc& a = arcs_[static_cast<size_t>(id)];
        if (a.residual <= 0 || level_[static_cast<size_t>(a.to)] != level_[static_cast<size_t>(v)] + 1)
            continue;
        const long long pushed = augment(a.to, t, std::min<long long>(limit, a.residual));
        if (pushed > 0) {
            a.residual -= static_cast<int>(pushed);
            arcs_[static_cast<size_t>(id ^ 1)].residual += static_cast<int>(pushed);
            return pushed;
        }
    }
    return 0;
}

long long FlowNetwork::max_flow(int s, int t, long long limit) {
    long long total = 0;
    while (total < limit && build_levels(s, t)) {
        std::fill(iter_.begin(), iter_.end(), 0);
        while (total < limit) {
            const long long pushed = augment(s, t, limit - total);
            if (pushed == 0) break;
            total += pushed;
        }
    }
    return total;
}

std::vector<char> FlowNetwork::residual_side(int s) const {
    std::vector<char> seen(adj_.size(), 0);
    std::vector<int> stack{s};
    seen[static_cast<size_t>(s)] = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int id : adj_[static_cast<size_t>(u)]) {
            const Arc& a = arcs_[static_cast<size_t>(id)];
            if (a.residual > 0 && !seen[static_cast<size_t>(a.to)]) {
                seen[static_cast<size_t>(a.to)] = 1;
                stack.push_back(a.to);
            }
        }
    }
    return seen;
}

}  // namespace sqconn::detail
