#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sqconn/connectivity.hpp"
#include "sqconn/families.hpp"
#include "sqconn/graph.hpp"

namespace sqconn {

/// Exact fraction, normalized with positive denominator.
struct Rational {
    long long num = 0;
    long long den = 1;
    Rational() = default;
    Rational(long long n, long long d);
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Rational&, const Rational&) = default;
};

/// Connectivity profile of a graph and its k-th power (k = 2 by default).
struct GraphMetrics {
    int n = 0;
    long long m = 0;
    bool connected = false;
    bool complete = false;
    int power = 2;
    long long delta = 0;      // min degree of G
    long long lambda = 0;     // edge-connectivity of G (0 when disconnected)
    long long kappa = 0;      // vertex connectivity of G
    long long delta_sq = 0;   // min degree of G^power
    long long lambda_sq = 0;  // edge-connectivity of G^power
    bool square_maximally_edge_connected() const { return lambda_sq == delta_sq; }
};

struct MetricsWitnesses {
    std::optional<Cut> square_min_cut;
    std::optional<VertexSet> separator;
};

GraphMetrics compute_metrics(const Graph& g, int power = 2);
GraphMetrics compute_metrics(const Graph& g, int power, MetricsWitnesses* witnesses);

/// One bound check evaluated on a metrics profile. All conclusions are
/// decided in exact integer arithmetic; bound/slack doubles are report-only.
struct BoundCheck {
    std::string id;
    bool hypothesis_holds = false;
    bool conclusion_holds = false;
    std::optional<double> bound;  // bound the conclusion compares against
    std::optional<double> slack;  // measured - bound, when the hypothesis holds
    std::optional<double> info_bound_variant;  // second published form, informational
    bool violation() const { return hypothesis_holds && !conclusion_holds; }
};

/// delta >= (n-1)/2 implies lambda = delta (on G itself).
BoundCheck check_chartrand(const GraphMetrics& m);
/// delta >= floor((n+2)/4) implies the square is maximally edge-connected.
BoundCheck check_min_degree_square(const GraphMetrics& m);
/// delta >= 2: square maximally edge-connected or lambda(G^2) >= kappa*(delta+1).
BoundCheck check_kappa_delta(const GraphMetrics& m);
/// kappa >= 2: square maximally edge-connected or lambda(G^2) >= kappa*(kappa+1).
BoundCheck check_kappa_squared(const GraphMetrics& m);
/// G not complete: lambda(G^2) >= delta+1.
BoundCheck check_delta_plus_one(const GraphMetrics& m);
/// Square maximally edge-connected or lambda(G^2) >= lambda^(3/2)/2 - lambda/2.
BoundCheck check_lambda_three_halves(const GraphMetrics& m);

/// All six checks in report order.
std::vector<BoundCheck> check_all(const GraphMetrics& m);
const std::vector<std::string>& check_ids();

/// Convenience overloads computing a fresh metrics profile.
BoundCheck check_chartrand(const Graph& g);
BoundCheck check_min_degree_square(const Graph& g);
BoundCheck check_kappa_delta(const Graph& g);
BoundCheck check_kappa_squared(const Graph& g);
BoundCheck check_delta_plus_one(const Graph& g);
BoundCheck check_lambda_three_halves(const Graph& g);

/// Measured lambda(G_lambda^2) / lambda^(3/2) for the g-lambda family;
/// approaches 2 as lambda grows. lambda must be a perfect square >= 4.
Rational sharpness_ratio(int lambda);

struct VerificationReport {
    std::string graph_id;    // graph6 string, or the family name
    std::string provenance;  // "exhaustive:n=5", "random:seed=42:index=7", "family:g-lambda(9)"
    std::string graph6;
    GraphMetrics metrics;
    std::vector<BoundCheck> checks;
    bool whitney_ok = true;  // kappa <= lambda <= delta on G
    std::optional<Cut> square_min_cut;       // populated when witnesses are requested
    std::optional<VertexSet> separator;
};

struct ClaimCheck {
    std::string quantity;
    char relation = '=';  // '=' exact, '<' measured <= expected, '>' measured >= expected
    long long expected = 0;
    long long measured = 0;
    bool ok = false;
};

struct FamilyAudit {
    std::string family;
    GraphMetrics metrics;
    std::vector<ClaimCheck> claims;
    bool all_ok = true;
};

/// Measures the instance and compares every construction claim against it.
FamilyAudit audit_family(const FamilyInstance& instance);

/// Deterministic suite configuration: identical configs yield identical
/// report streams, byte for byte.
struct SearchConfig {
    std::vector<FamilySpec> families;
    bool exhaustive = false;
    int exhaustive_n = 6;       // all connected graphs with n <= this (cap 8)
    int samples = 0;            // seeded random connected graphs
    int n_min = 2;
    int n_max = 9;
    double p_min = 0.5;
    double p_max = 0.5;
    std::uint64_t seed = 0;
    std::string predicate = "all";  // one check id, or "all"
    int power = 2;              // k != 2 runs the same formulas on G^k, exploratory
    bool include_witnesses = false;
};

struct CheckAggregate {
    std::string id;
    long long tested = 0;
    long long hypothesis_true = 0;
    long long violations = 0;
    std::optional<double> min_slack;
    std::string argmin_graph6;
};

struct SuiteSummary {
    long long graphs = 0;
    long long violations = 0;          // hypothesis true, conclusion false (power 2 only)
    long long whitney_violations = 0;  // kappa <= lambda <= delta failures
    bool exploratory = false;          // true when power != 2
    std::vector<CheckAggregate> checks;
    std::vector<FamilyAudit> family_audits;
    long long family_claim_failures = 0;
};

using ReportSink = std::function<void(const VerificationReport&)>;

/// Runs families, then the exhaustive sweep, then the random stream, applying
/// the configured checks to every graph. The sink receives each report in
/// that fixed order; aggregation is commutative, so partitioned execution
/// would produce the same summary.
SuiteSummary run_suite(const SearchConfig& config, const ReportSink& sink);

/// Deterministic sampler used by the random stream: connected G(n, p) by
/// rejection, with the per-instance state derived from (seed, index).
Graph sample_connected_graph(const SearchConfig& config, int index, std::string* provenance);

/// JSON document with config, per-graph reports, family audits and summary.
void write_suite_json(std::ostream& out, const SearchConfig& config,
                      const std::vector<VerificationReport>& reports, const SuiteSummary& summary);

/// CSV: one row per report, flat metric and per-check columns.
void write_suite_csv(std::ostream& out, const std::vector<VerificationReport>& reports);

std::string metrics_to_json(const GraphMetrics& m);

}  // namespace sqconn
