#include "sqconn/families.hpp"

#include <stdexcept>

namespace sqconn {

namespace {

long long isqrt_exact(long long x) {
    long long r = 0;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r * r == x ? r : -1;
}

std::vector<std::pair<std::string, VertexRange>> name_blocks(const std::vector<VertexRange>& blocks) {
    std::vector<std::pair<std::string, VertexRange>> out;
    out.reserve(blocks.size());
    for (size_t i = 0; i < blocks.size(); ++i)
        out.emplace_back("V" + std::to_string(i), blocks[i]);
    return out;
}

void append_offset(std::vector<std::pair<int, int>>& edges, const Graph& part, int offset) {
    part.for_each_edge([&](int u, int v) { edges.emplace_back(offset + u, offset + v); });
}

void append_join(std::vector<std::pair<int, int>>& edges, VertexRange a, VertexRange b) {
    for (int u = a.begin; u < a.end; ++u)
        for (int v = b.begin; v < b.end; ++v) edges.emplace_back(u, v);
}

// Shared frame of the kappa families: K_{2k^2} ends, four middle blocks of
// order k carrying `middle`, matching edges between consecutive middles.
FamilyInstance gkappa_frame(int kappa, const Graph& middle, bool odd_variant) {
    const int end_size = 2 * kappa * kappa;
    std::vector<VertexRange> blocks;
    int at = 0;
    for (int size : {end_size, kappa, kappa, kappa, kappa, end_size}) {
        blocks.push_back({at, at + size});
        at += size;
    }
    std::vector<std::pair<int, int>> edges;
    append_offset(edges, complete_graph(end_size), blocks[0].begin);
    for (int b = 1; b <= 4; ++b) append_offset(edges, middle, blocks[static_cast<size_t>(b)].begin);
    append_offset(edges, complete_graph(end_size), blocks[5].begin);
    append_join(edges, blocks[0], blocks[1]);
    append_join(edges, blocks[4], blocks[5]);
    for (int b = 1; b <= 3; ++b)
        for (int j = 0; j < kappa; ++j)
            edges.emplace_back(blocks[static_cast<size_t>(b)].begin + j,
                               blocks[static_cast<size_t>(b + 1)].begin + j);
    if (odd_variant) {
        // Two diagonals tying the lighter-degree cover vertices to the chain.
        edges.emplace_back(blocks[2].begin + (kappa - 2), blocks[1].begin + (kappa - 1));
        edges.emplace_back(blocks[3].begin + (kappa - 2), blocks[4].begin + (kappa - 1));
    }
    FamilyInstance inst;
    inst.spec = {odd_variant ? FamilyKind::GKappaOdd : FamilyKind::GKappaEven, kappa};
    inst.graph = Graph(at, edges);
    inst.blocks = name_blocks(blocks);
    return inst;
}

}  // namespace

std::string FamilyInstance::name() const {
    return family_kind_name(spec.kind) + "(" + std::to_string(spec.parameter) + ")";
}

FamilyInstance gen_gn(int n) {
    if (n < 10) throw std::invalid_argument("gen_gn requires n >= 10");
    std::vector<int> sizes;
    switch (n % 4) {
        case 0: sizes = {n / 4, (n - 4) / 4, 1, 1, (n - 8) / 4, (n + 4) / 4}; break;
        case 1: sizes = {(n + 3) / 4, (n - 5) / 4, 1, 1, (n - 9) / 4, (n + 3) / 4}; break;
        case 2: sizes = {(n + 2) / 4, (n - 6) / 4, 1, 1, (n - 6) / 4, (n + 2) / 4}; break;
        default: sizes = {(n + 1) / 4, (n - 7) / 4, 1, 1, (n - 7) / 4, (n + 5) / 4}; break;
    }
    std::vector<Graph> parts;
    parts.reserve(sizes.size());
    for (int s : sizes) parts.push_back(complete_graph(s));
    SequentialSumResult sum = sequential_sum(parts);

    FamilyInstance inst;
    inst.spec = {FamilyKind::Gn, n};
    inst.graph = std::move(sum.graph);
    inst.blocks = name_blocks(sum.blocks);
    inst.expected.min_degree = (n + 2) / 4 - 1;
    inst.expected.lambda_minus_delta_square = -1;
    return inst;
}

FamilyInstance gen_gkappa_even(int kappa) {
    if (kappa < 2 || kappa % 2 != 0)
        throw std::invalid_argument("gen_gkappa_even requires even kappa >= 2");
    FamilyInstance inst = gkappa_frame(kappa, complete_minus_perfect_matching(kappa), false);
    inst.expected.kappa = kappa;
    inst.expected.lambda_square = static_cast<long long>(kappa) * (kappa + 1);
    inst.expected.delta_square_lower = 2LL * kappa * kappa;
    return inst;
}

FamilyInstance gen_gkappa_odd(int kappa) {
    if (kappa < 3 || kappa % 2 == 0)
        throw std::invalid_argument("gen_gkappa_odd requires odd kappa >= 3");
    FamilyInstance inst = gkappa_frame(kappa, complete_minus_edge_cover(kappa), true);
    // No kappa claim: for kappa=3 the cover leaves a middle-block vertex
    // isolated inside its block, so kappa-connectivity is measured, not assumed.
    inst.expected.lambda_square_upper = static_cast<long long>(kappa) * (kappa + 1) + 1;
    inst.expected.delta_square_lower = 2LL * kappa * kappa;
    return inst;
}

FamilyInstance gen_glambda(int lambda) {
    const long long root = lambda >= 4 ? isqrt_exact(lambda) : -1;
    if (root < 0) throw std::invalid_argument("gen_glambda requires a perfect square lambda >= 4");
    const int t = static_cast<int>(root);
    std::vector<Graph> parts;
    for (int s : {lambda * lambda, lambda - t, t, t, lambda - t, lambda * lambda})
        parts.push_back(complete_graph(s));
    SequentialSumResult sum = sequential_sum(parts);

    FamilyInstance inst;
    inst.spec = {FamilyKind::GLambda, lambda};
    inst.graph = std::move(sum.graph);
    inst.blocks = name_blocks(sum.blocks);
    inst.expected.lambda = lambda;
    inst.expected.delta_square = static_cast<long long>(lambda) * lambda + lambda - 1;
    inst.expected.lambda_square = 2LL * t * t * t - lambda;  // 2*lambda^(3/2) - lambda
    return inst;
}

FamilyInstance gen_delta_sharp(int d) {
    if (d < 1) throw std::invalid_argument("gen_delta_sharp requires delta >= 1");
    std::vector<Graph> parts{complete_graph(1), complete_graph(d), complete_graph(1),
                             complete_graph(d)};
    SequentialSumResult sum = sequential_sum(parts);

    FamilyInstance inst;
    inst.spec = {FamilyKind::DeltaSharp, d};
    inst.graph = std::move(sum.graph);
    inst.blocks = name_blocks(sum.blocks);
    inst.expected.min_degree = d;
    inst.expected.lambda_square = d + 1;
    inst.expected.delta_square = d + 1;
    inst.expected.lambda_minus_delta_square = 0;
    return inst;
}

FamilyInstance generate_family(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::Gn: return gen_gn(spec.parameter);
        case FamilyKind::GKappaEven: return gen_gkappa_even(spec.parameter);
        case FamilyKind::GKappaOdd: return gen_gkappa_odd(spec.parameter);
        case FamilyKind::GLambda: return gen_glambda(spec.parameter);
        case FamilyKind::DeltaSharp: return gen_delta_sharp(spec.parameter);
    }
    throw std::invalid_argument("unknown family kind");
}

std::string family_kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Gn: return "g-n";
        case FamilyKind::GKappaEven: return "g-kappa-even";
        case FamilyKind::GKappaOdd: return "g-kappa-odd";
        case FamilyKind::GLambda: return "g-lambda";
        case FamilyKind::DeltaSharp: return "delta-sharp";
    }
    return "unknown";
}

std::optional<FamilyKind> family_kind_from_name(const std::string& name) {
    if (name == "g-n") return FamilyKind::Gn;
    if (name == "g-kappa-even") return FamilyKind::GKappaEven;
    if (name == "g-kappa-odd") return FamilyKind::GKappaOdd;
    if (name == "g-lambda") return FamilyKind::GLambda;
    if (name == "delta-sharp") return FamilyKind::DeltaSharp;
    return std::nullopt;
}

}  // namespace sqconn
