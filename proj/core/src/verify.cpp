#include "sqconn/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "sqconn/formats.hpp"
#include "sqconn/oracle.hpp"
#include "sqconn/power.hpp"

namespace sqconn {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

GraphMetrics compute_metrics(const Graph& g, int power) {
    return compute_metrics(g, power, nullptr);
}

GraphMetrics compute_metrics(const Graph& g, int power, MetricsWitnesses* witnesses) {
    if (g.order() < 1) throw std::invalid_argument("compute_metrics of empty graph");
    GraphMetrics m;
    m.n = g.order();
    m.m = g.edge_count();
    m.power = power;
    m.connected = is_connected(g);
    m.complete = is_complete(g);
    m.delta = min_degree(g);
    if (m.n == 1) return m;  // all connectivity values stay 0

    EdgeConnectivityResult lam = edge_connectivity(g);
    m.lambda = lam.value;
    VertexConnectivityResult kap = vertex_connectivity(g);
    m.kappa = kap.value;

    const Graph h = graph_power(g, power);
    m.delta_sq = min_degree(h);
    EdgeConnectivityResult lam_sq = edge_connectivity(h);
    m.lambda_sq = lam_sq.value;
    if (witnesses != nullptr) {
        witnesses->square_min_cut = std::move(lam_sq.witness);
        witnesses->separator = std::move(kap.separator);
    }
    return m;
}

namespace {

void require_connected(const GraphMetrics& m, const char* what) {
    if (!m.connected) throw std::invalid_argument(std::string(what) + " requires a connected graph");
}

}  // namespace

BoundCheck check_chartrand(const GraphMetrics& m) {
    require_connected(m, "check_chartrand");
    BoundCheck c;
    c.id = "chartrand";
    c.hypothesis_holds = 2 * m.delta >= m.n - 1;
    c.conclusion_holds = m.lambda == m.delta;
    c.bound = static_cast<double>(m.delta);
    if (c.hypothesis_holds) c.slack = static_cast<double>(m.lambda - m.delta);
    return c;
}

BoundCheck check_min_degree_square(const GraphMetrics& m) {
    require_connected(m, "check_min_degree_square");
    BoundCheck c;
    c.id = "min_degree_square";
    c.hypothesis_holds = m.delta >= (m.n + 2) / 4;
    c.conclusion_holds = m.square_maximally_edge_connected();
    c.bound = static_cast<double>(m.delta_sq);
    if (c.hypothesis_holds) c.slack = static_cast<double>(m.lambda_sq - m.delta_sq);
    return c;
}

BoundCheck check_kappa_delta(const GraphMetrics& m) {
    BoundCheck c;
    c.id = "kappa_delta";
    c.hypothesis_holds = m.connected && m.delta >= 2;
    const long long bound = m.kappa * (m.delta + 1);
    c.conclusion_holds = m.square_maximally_edge_connected() || m.lambda_sq >= bound;
    c.bound = static_cast<double>(bound);
    if (c.hypothesis_holds) c.slack = static_cast<double>(m.lambda_sq - bound);
    return c;
}

BoundCheck check_kappa_squared(const GraphMetrics& m) {
    BoundCheck c;
    c.id = "kappa_squared";
    c.hypothesis_holds = m.connected && m.kappa >= 2;
    const long long bound = m.kappa * (m.kappa + 1);
    c.conclusion_holds = m.square_maximally_edge_connected() || m.lambda_sq >= bound;
    c.bound = static_cast<double>(bound);
    if (c.hypothesis_holds) c.slack = static_cast<double>(m.lambda_sq - bound);
    return c;
}

BoundCheck check_delta_plus_one(const GraphMetrics& m) {
    BoundCheck c;
    c.id = "delta_plus_one";
    c.hypothesis_holds = m.connected && !m.complete;
    const long long bound = m.delta + 1;
    c.conclusion_holds = m.lambda_sq >= bound;
    c.bound = static_cast<double>(bound);
    if (c.hypothesis_holds) c.slack = static_cast<double>(m.lambda_sq - bound);
    return c;
}

BoundCheck check_lambda_three_halves(const GraphMetrics& m) {
    BoundCheck c;
    c.id = "lambda_three_halves";
    c.hypothesis_holds = m.connected;
    // lambda_sq >= (lambda^(3/2) - lambda) / 2 decided as an exact integer
    // comparison: 2*lambda_sq + lambda >= lambda^(3/2), both sides squared.
    const long long lhs = 2 * m.lambda_sq + m.lambda;
    const bool bound_met = lhs * lhs >= m.lambda * m.lambda * m.lambda;
    c.conclusion_holds = m.square_maximally_edge_connected() || bound_met;
    const double sqrt_lambda = std::sqrt(static_cast<double>(m.lambda));
    const double bound = 0.5 * (static_cast<double>(m.lambda) * sqrt_lambda - static_cast<double>(m.lambda));
    c.bound = bound;
    c.info_bound_variant = 0.5 * (static_cast<double>(m.lambda) * sqrt_lambda - sqrt_lambda);
    if (c.hypothesis_holds) c.slack = static_cast<double>(m.lambda_sq) - bound;
    return c;
}

std::vector<BoundCheck> check_all(const GraphMetrics& m) {
    return {check_chartrand(m),   check_min_degree_square(m), check_kappa_delta(m),
            check_kappa_squared(m), check_delta_plus_one(m),    check_lambda_three_halves(m)};
}

const std::vector<std::string>& check_ids() {
    static const std::vector<std::string> ids{"chartrand",     "min_degree_square",
                                              "kappa_delta",   "kappa_squared",
                                              "delta_plus_one", "lambda_three_halves"};
    return ids;
}

BoundCheck check_chartrand(const Graph& g) { return check_chartrand(compute_metrics(g)); }
BoundCheck check_min_degree_square(const Graph& g) { return check_min_degree_square(compute_metrics(g)); }
BoundCheck check_kappa_delta(const Graph& g) { return check_kappa_delta(compute_metrics(g)); }
BoundCheck check_kappa_squared(const Graph& g) { return check_kappa_squared(compute_metrics(g)); }
BoundCheck check_delta_plus_one(const Graph& g) { return check_delta_plus_one(compute_metrics(g)); }
BoundCheck check_lambda_three_halves(const Graph& g) { return check_lambda_three_halves(compute_metrics(g)); }

Rational sharpness_ratio(int lambda) {
    const FamilyInstance inst = gen_glambda(lambda);
    const Graph h = square(inst.graph);
    const long long measured = edge_connectivity(h).value;
    long long t = 0;
    while ((t + 1) * (t + 1) <= lambda) ++t;
    return Rational(measured, t * t * t);  // lambda^(3/2) = t^3 for lambda = t^2
}

FamilyAudit audit_family(const FamilyInstance& instance) {
    FamilyAudit audit;
    audit.family = instance.name();
    audit.metrics = compute_metrics(instance.graph, 2);
    const GraphMetrics& m = audit.metrics;
    const FamilyExpectations& e = instance.expected;

    auto add = [&](const char* quantity, char relation, long long expected, long long measured) {
        ClaimCheck c;
        c.quantity = quantity;
        c.relation = relation;
        c.expected = expected;
        c.measured = measured;
        switch (relation) {
            case '=': c.ok = measured == expected; break;
            case '<': c.ok = measured <= expected; break;
            case '>': c.ok = measured >= expected; break;
            default: throw std::logic_error("bad claim relation");
        }
        audit.claims.push_back(c);
        audit.all_ok = audit.all_ok && c.ok;
    };

    if (e.min_degree) add("delta", '=', *e.min_degree, m.delta);
    if (e.lambda) add("lambda", '=', *e.lambda, m.lambda);
    if (e.kappa) add("kappa", '=', *e.kappa, m.kappa);
    if (e.delta_square) add("delta_sq", '=', *e.delta_square, m.delta_sq);
    if (e.lambda_square) add("lambda_sq", '=', *e.lambda_square, m.lambda_sq);
    if (e.lambda_square_upper) add("lambda_sq", '<', *e.lambda_square_upper, m.lambda_sq);
    if (e.delta_square_lower) add("delta_sq", '>', *e.delta_square_lower, m.delta_sq);
    if (e.lambda_minus_delta_square)
        add("lambda_sq_minus_delta_sq", '=', *e.lambda_minus_delta_square, m.lambda_sq - m.delta_sq);
    return audit;
}

namespace {

std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

struct Rng {
    std::uint64_t state;
    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        return mix64(state);
    }
    // Uniform in [0, 1) with 53 random bits; portable across platforms.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    int next_range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

void validate_config(const SearchConfig& cfg) {
    if (cfg.exhaustive && (cfg.exhaustive_n < 1 || cfg.exhaustive_n > 8))
        throw std::invalid_argument("exhaustive sweep supports 1 <= n <= 8");
    if (cfg.samples < 0) throw std::invalid_argument("negative sample count");
    if (cfg.samples > 0) {
        if (cfg.n_min < 1 || cfg.n_max < cfg.n_min)
            throw std::invalid_argument("bad random n range");
        if (cfg.p_min < 0.0 || cfg.p_max > 1.0 || cfg.p_max < cfg.p_min)
            throw std::invalid_argument("bad edge probability range");
    }
    if (cfg.power < 2) throw std::invalid_argument("power must be >= 2");
    if (cfg.predicate != "all" &&
        std::find(check_ids().begin(), check_ids().end(), cfg.predicate) == check_ids().end())
        throw std::invalid_argument("unknown predicate id: " + cfg.predicate);
}

}  // namespace

Graph sample_connected_graph(const SearchConfig& config, int index, std::string* provenance) {
    Rng rng{mix64(config.seed + 0x9E3779B97F4A7C15ULL) ^
            (static_cast<std::uint64_t>(index) * 0xD1B54A32D192ED03ULL + 1)};
    const int n = rng.next_range(config.n_min, config.n_max);
    const double p = config.p_min + (config.p_max - config.p_min) * rng.next_unit();
    constexpr int kMaxAttempts = 100000;
    std::vector<std::pair<int, int>> edges;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        edges.clear();
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.next_unit() < p) edges.emplace_back(i, j);
        Graph g(n, edges);
        if (n == 1 || is_connected(g)) {
            if (provenance != nullptr)
                *provenance = "random:seed=" + std::to_string(config.seed) +
                              ":index=" + std::to_string(index);
            return g;
        }
    }
    throw std::runtime_error("rejection sampling failed to produce a connected graph; raise p or n");
}

SuiteSummary run_suite(const SearchConfig& config, const ReportSink& sink) {
    validate_config(config);
    SuiteSummary summary;
    summary.exploratory = config.power != 2;
    for (const std::string& id : check_ids()) {
        CheckAggregate agg;
        agg.id = id;
        summary.checks.push_back(agg);
    }

    const bool run_all = config.predicate == "all";
    auto process = [&](const Graph& g, const std::string& graph_id, const std::string& provenance,
                       const GraphMetrics* precomputed) {
        VerificationReport report;
        report.graph_id = graph_id;
        report.provenance = provenance;
        report.graph6 = encode_graph6(g);
        if (precomputed != nullptr && !config.include_witnesses) {
            report.metrics = *precomputed;
        } else {
            MetricsWitnesses witnesses;
            report.metrics = compute_metrics(g, config.power,
                                             config.include_witnesses ? &witnesses : nullptr);
            if (config.include_witnesses) {
                report.square_min_cut = std::move(witnesses.square_min_cut);
                report.separator = std::move(witnesses.separator);
            }
        }
        const GraphMetrics& m = report.metrics;
        report.whitney_ok = m.kappa <= m.lambda && m.lambda <= m.delta;
        if (!report.whitney_ok) ++summary.whitney_violations;

        for (size_t i = 0; i < check_ids().size(); ++i) {
            if (!run_all && check_ids()[i] != config.predicate) continue;
            BoundCheck check;
            switch (i) {
                case 0: check = check_chartrand(m); break;
                case 1: check = check_min_degree_square(m); break;
                case 2: check = check_kappa_delta(m); break;
                case 3: check = check_kappa_squared(m); break;
                case 4: check = check_delta_plus_one(m); break;
                default: check = check_lambda_three_halves(m); break;
            }
            CheckAggregate& agg = summary.checks[i];
            ++agg.tested;
            if (check.hypothesis_holds) {
                ++agg.hypothesis_true;
                // For the "maximally edge-connected or bound" checks the slack
                // is informative only where the bound is the binding branch.
                const bool or_shaped = i == 2 || i == 3 || i == 5;
                const bool track = check.slack.has_value() &&
                                   (!or_shaped || !m.square_maximally_edge_connected());
                if (track && (!agg.min_slack || *check.slack < *agg.min_slack)) {
                    agg.min_slack = check.slack;
                    agg.argmin_graph6 = report.graph6;
                }
            }
            if (check.violation()) {
                ++agg.violations;
                if (!summary.exploratory) ++summary.violations;
            }
            report.checks.push_back(std::move(check));
        }
        ++summary.graphs;
        if (sink) sink(report);
    };

    for (const FamilySpec& spec : config.families) {
        const FamilyInstance inst = generate_family(spec);
        FamilyAudit audit = audit_family(inst);
        for (const ClaimCheck& claim : audit.claims)
            if (!claim.ok) ++summary.family_claim_failures;
        const GraphMetrics* reuse = config.power == 2 ? &audit.metrics : nullptr;
        process(inst.graph, inst.name(), "family:" + inst.name(), reuse);
        summary.family_audits.push_back(std::move(audit));
    }
    if (config.exhaustive) {
        for (int n = 1; n <= config.exhaustive_n; ++n) {
            enumerate_connected_graphs(n, [&](const Graph& g) {
                process(g, encode_graph6(g), "exhaustive:n=" + std::to_string(n), nullptr);
            });
        }
    }
    for (int index = 0; index < config.samples; ++index) {
        std::string provenance;
        const Graph g = sample_connected_graph(config, index, &provenance);
        process(g, encode_graph6(g), provenance, nullptr);
    }
    return summary;
}

}  // namespace sqconn
