#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sqconn/graph.hpp"

namespace sqconn {

/// The extremal constructions the verification harness exercises. Each is a
/// six-part (or four-part) chain of cliques with controlled joins, built so
/// that a specific connectivity bound is attained with equality.
enum class FamilyKind {
    Gn,          // sequential clique sum on n vertices; square misses maximal edge-connectivity by 1
    GKappaEven,  // kappa-connected, even kappa; lambda(G^2) = kappa(kappa+1)
    GKappaOdd,   // odd-kappa variant; lambda(G^2) <= kappa(kappa+1)+1
    GLambda,     // lambda-edge-connected; lambda(G^2) = 2*lambda^(3/2) - lambda
    DeltaSharp,  // K_1 + K_d + K_1 + K_d; lambda(G^2) = d+1
};

struct FamilySpec {
    FamilyKind kind;
    int parameter = 0;
};

/// Construction-claimed values, audited (never assumed) by the verify module.
struct FamilyExpectations {
    std::optional<long long> min_degree;
    std::optional<long long> lambda;
    std::optional<long long> kappa;
    std::optional<long long> delta_square;
    std::optional<long long> lambda_square;
    std::optional<long long> lambda_square_upper;      // lambda(G^2) <= value
    std::optional<long long> delta_square_lower;       // delta(G^2) >= value
    std::optional<long long> lambda_minus_delta_square;  // lambda(G^2) - delta(G^2) == value
};

struct FamilyInstance {
    FamilySpec spec;
    Graph graph;
    std::vector<std::pair<std::string, VertexRange>> blocks;  // partition, in id order
    FamilyExpectations expected;
    std::string name() const;
};

/// Six complete parts sized by n mod 4; requires n >= 10.
FamilyInstance gen_gn(int n);

/// K_{2k^2} ends, four K_k-minus-perfect-matching middles joined by k
/// matching edges between consecutive middles; even kappa >= 2.
FamilyInstance gen_gkappa_even(int kappa);

/// As the even case with K_k-minus-edge-cover middles and two extra
/// diagonal edges; odd kappa >= 3.
FamilyInstance gen_gkappa_odd(int kappa);

/// K_{l^2} + K_{l-sqrt(l)} + K_{sqrt(l)} + K_{sqrt(l)} + K_{l-sqrt(l)} + K_{l^2};
/// lambda must be a perfect square >= 4.
FamilyInstance gen_glambda(int lambda);

/// K_1 + K_d + K_1 + K_d for d >= 1.
FamilyInstance gen_delta_sharp(int d);

FamilyInstance generate_family(const FamilySpec& spec);

std::string family_kind_name(FamilyKind kind);
std::optional<FamilyKind> family_kind_from_name(const std::string& name);

}  // namespace sqconn
