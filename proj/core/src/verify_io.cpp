#include <cmath>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "sqconn/verify.hpp"

namespace sqconn {

namespace {

using ordered_json = nlohmann::ordered_json;

// Integral report values print as integers; only the lambda^(3/2) bound can
// genuinely be fractional.
ordered_json number(double v) {
    if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 9.0e15)
        return ordered_json(static_cast<long long>(v));
    return ordered_json(v);
}

ordered_json check_to_json(const BoundCheck& c) {
    ordered_json j;
    j["hypothesis_holds"] = c.hypothesis_holds;
    j["conclusion_holds"] = c.conclusion_holds;
    if (c.bound) j["bound_value"] = number(*c.bound);
    if (c.slack) j["slack"] = number(*c.slack);
    if (c.info_bound_variant) j["bound_variant"] = number(*c.info_bound_variant);
    return j;
}

ordered_json vertex_set_to_json(const VertexSet& s) {
    ordered_json arr = ordered_json::array();
    for (int v : s.ids()) arr.push_back(v);
    return arr;
}

ordered_json cut_to_json(const Cut& cut) {
    ordered_json j;
    j["side1"] = vertex_set_to_json(cut.side1);
    j["side2"] = vertex_set_to_json(cut.side2);
    ordered_json crossing = ordered_json::array();
    for (const Edge& e : cut.crossing.edges()) crossing.push_back(ordered_json::array({e.u, e.v}));
    j["crossing"] = crossing;
    j["size"] = cut.size;
    return j;
}

ordered_json report_to_json(const VerificationReport& r) {
    ordered_json j;
    j["graph_id"] = r.graph_id;
    j["provenance"] = r.provenance;
    j["graph6"] = r.graph6;
    j["n"] = r.metrics.n;
    j["m"] = r.metrics.m;
    j["delta"] = r.metrics.delta;
    j["lambda"] = r.metrics.lambda;
    j["kappa"] = r.metrics.kappa;
    j["power"] = r.metrics.power;
    j["delta_sq"] = r.metrics.delta_sq;
    j["lambda_sq"] = r.metrics.lambda_sq;
    j["whitney_ok"] = r.whitney_ok;
    ordered_json checks;
    for (const BoundCheck& c : r.checks) checks[c.id] = check_to_json(c);
    j["checks"] = checks;
    if (r.square_min_cut || r.separator) {
        ordered_json w;
        if (r.square_min_cut) w["lambda_sq_cut"] = cut_to_json(*r.square_min_cut);
        if (r.separator) w["kappa_separator"] = vertex_set_to_json(*r.separator);
        j["witnesses"] = w;
    }
    return j;
}

ordered_json audit_to_json(const FamilyAudit& a) {
    ordered_json j;
    j["family"] = a.family;
    j["n"] = a.metrics.n;
    j["m"] = a.metrics.m;
    ordered_json measured;
    measured["delta"] = a.metrics.delta;
    measured["lambda"] = a.metrics.lambda;
    measured["kappa"] = a.metrics.kappa;
    measured["delta_sq"] = a.metrics.delta_sq;
    measured["lambda_sq"] = a.metrics.lambda_sq;
    j["measured"] = measured;
    ordered_json claims = ordered_json::array();
    for (const ClaimCheck& c : a.claims) {
        ordered_json cj;
        cj["quantity"] = c.quantity;
        cj["relation"] = std::string(1, c.relation);
        cj["expected"] = c.expected;
        cj["measured"] = c.measured;
        cj["ok"] = c.ok;
        cj["source"] = "construction claim";
        claims.push_back(cj);
    }
    j["claims"] = claims;
    j["all_ok"] = a.all_ok;
    return j;
}

ordered_json config_to_json(const SearchConfig& cfg) {
    ordered_json j;
    ordered_json fams = ordered_json::array();
    for (const FamilySpec& f : cfg.families)
        fams.push_back(family_kind_name(f.kind) + "(" + std::to_string(f.parameter) + ")");
    j["families"] = fams;
    j["exhaustive"] = cfg.exhaustive;
    if (cfg.exhaustive) j["exhaustive_n"] = cfg.exhaustive_n;
    j["samples"] = cfg.samples;
    if (cfg.samples > 0) {
        j["n_min"] = cfg.n_min;
        j["n_max"] = cfg.n_max;
        j["p_min"] = cfg.p_min;
        j["p_max"] = cfg.p_max;
        j["seed"] = cfg.seed;
    }
    j["predicate"] = cfg.predicate;
    j["power"] = cfg.power;
    return j;
}

ordered_json summary_to_json(const SuiteSummary& s) {
    ordered_json j;
    j["graphs"] = s.graphs;
    j["violations"] = s.violations;
    j["whitney_violations"] = s.whitney_violations;
    j["family_claim_failures"] = s.family_claim_failures;
    j["exploratory"] = s.exploratory;
    ordered_json checks;
    for (const CheckAggregate& agg : s.checks) {
        ordered_json cj;
        cj["tested"] = agg.tested;
        cj["hypothesis_true"] = agg.hypothesis_true;
        cj["violations"] = agg.violations;
        if (agg.min_slack) {
            cj["min_slack"] = number(*agg.min_slack);
            cj["argmin_graph6"] = agg.argmin_graph6;
        }
        checks[agg.id] = cj;
    }
    j["checks"] = checks;
    return j;
}

}  // namespace

void write_suite_json(std::ostream& out, const SearchConfig& config,
                      const std::vector<VerificationReport>& reports,
                      const SuiteSummary& summary) {
    ordered_json j;
    j["schema"] = "sqconn-verify/1";
    j["config"] = config_to_json(config);
    ordered_json rep = ordered_json::array();
    for (const VerificationReport& r : reports) rep.push_back(report_to_json(r));
    j["reports"] = rep;
    ordered_json fams = ordered_json::array();
    for (const FamilyAudit& a : summary.family_audits) fams.push_back(audit_to_json(a));
    j["family_audits"] = fams;
    j["summary"] = summary_to_json(summary);
    out << j.dump(2) << '\n';
}

void write_suite_csv(std::ostream& out, const std::vector<VerificationReport>& reports) {
    out << "graph_id,provenance,n,m,delta,lambda,kappa,power,delta_sq,lambda_sq,whitney_ok";
    for (const std::string& id : check_ids())
        out << ',' << id << "_hypothesis," << id << "_conclusion," << id << "_bound," << id
            << "_slack";
    out << '\n';
    auto fmt = [](const std::optional<double>& v) -> std::string {
        if (!v) return "";
        const ordered_json j = number(*v);
        return j.dump();
    };
    for (const VerificationReport& r : reports) {
        out << '"' << r.graph_id << "\"," << '"' << r.provenance << "\"," << r.metrics.n << ','
            << r.metrics.m << ',' << r.metrics.delta << ',' << r.metrics.lambda << ','
            << r.metrics.kappa << ',' << r.metrics.power << ',' << r.metrics.delta_sq << ','
            << r.metrics.lambda_sq << ',' << (r.whitney_ok ? 1 : 0);
        for (const std::string& id : check_ids()) {
            const BoundCheck* found = nullptr;
            for (const BoundCheck& c : r.checks)
                if (c.id == id) found = &c;
            if (found == nullptr) {
                out << ",,,,";
                continue;
            }
            out << ',' << (found->hypothesis_holds ? 1 : 0) << ','
                << (found->conclusion_holds ? 1 : 0) << ',' << fmt(found->bound) << ','
                << fmt(found->slack);
        }
        out << '\n';
    }
}

std::string metrics_to_json(const GraphMetrics& m) {
    ordered_json j;
    j["n"] = m.n;
    j["m"] = m.m;
    j["connected"] = m.connected;
    j["complete"] = m.complete;
    j["delta"] = m.delta;
    j["lambda"] = m.lambda;
    j["kappa"] = m.kappa;
    j["power"] = m.power;
    j["delta_sq"] = m.delta_sq;
    j["lambda_sq"] = m.lambda_sq;
    return j.dump(2);
}

}  // namespace sqconn
