// sqconn: exact connectivity of graphs and their powers, extremal family
// generators, format conversion, and a bound-verification harness.
//
// Exit codes: 0 success (verify: no violations), 1 verify found violations,
// 2 usage or input errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "sqconn/connectivity.hpp"
#include "sqconn/families.hpp"
#include "sqconn/formats.hpp"
#include "sqconn/graph.hpp"
#include "sqconn/power.hpp"
#include "sqconn/verify.hpp"

using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitError = 2;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& payload) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << payload;
}

sqconn::GraphFormat resolve_format(const std::string& flag, const std::string& path,
                                   const char* what) {
    if (!flag.empty()) {
        const auto fmt = sqconn::format_from_name(flag);
        if (!fmt) throw std::runtime_error(std::string("unknown ") + what + " format: " + flag);
        return *fmt;
    }
    const auto fmt = sqconn::guess_format_from_path(path);
    if (!fmt)
        throw std::runtime_error(std::string("cannot infer ") + what + " format from '" + path +
                                 "'; pass it explicitly");
    return *fmt;
}

sqconn::ParsedGraph load_graph(const std::string& path, const std::string& format_flag) {
    const sqconn::GraphFormat fmt = resolve_format(format_flag, path, "input");
    std::string payload = read_input(path);
    if (fmt == sqconn::GraphFormat::graph6) {
        // One graph per line; take the first non-empty line.
        std::istringstream lines(payload);
        std::string line;
        while (std::getline(lines, line))
            if (!line.empty()) return sqconn::parse_graph(fmt, line);
        throw sqconn::ParseError("graph6: empty input", 0);
    }
    return sqconn::parse_graph(fmt, payload);
}

void print_warnings(const sqconn::ParsedGraph& parsed) {
    for (const std::string& w : parsed.warnings) std::cerr << "warning: " << w << '\n';
}

int cmd_compute(const std::string& input, const std::string& format_flag, bool do_square,
                int power, const std::string& output_format) {
    const sqconn::ParsedGraph parsed = load_graph(input, format_flag);
    print_warnings(parsed);
    const sqconn::Graph& g = parsed.graph;
    const int k = do_square && power == 0 ? 2 : power;

    ordered_json j;
    j["input"] = input;
    j["n"] = g.order();
    j["m"] = g.edge_count();
    const bool connected = g.order() >= 1 && sqconn::is_connected(g);
    j["connected"] = connected;
    if (!connected && g.order() >= 2)
        std::cerr << "warning: graph is disconnected; lambda and kappa are 0\n";
    if (g.order() >= 1) j["delta"] = sqconn::min_degree(g);
    if (g.order() >= 2) {
        j["lambda"] = sqconn::edge_connectivity(g).value;
        j["kappa"] = sqconn::vertex_connectivity(g).value;
    }
    if (k >= 2 && g.order() >= 1) {
        const sqconn::Graph h = sqconn::graph_power(g, k);
        ordered_json pj;
        pj["k"] = k;
        pj["n"] = h.order();
        pj["m"] = h.edge_count();
        pj["delta"] = sqconn::min_degree(h);
        if (h.order() >= 2) {
            pj["lambda"] = sqconn::edge_connectivity(h).value;
            pj["kappa"] = sqconn::vertex_connectivity(h).value;
        }
        j["power"] = pj;
    }

    if (output_format == "json") {
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "n: " << j["n"] << "\nm: " << j["m"] << '\n';
        if (j.contains("delta")) std::cout << "delta: " << j["delta"] << '\n';
        if (j.contains("lambda")) std::cout << "lambda: " << j["lambda"] << '\n';
        if (j.contains("kappa")) std::cout << "kappa: " << j["kappa"] << '\n';
        std::cout << "connected: " << (connected ? "yes" : "no") << '\n';
        if (j.contains("power")) {
            const ordered_json& pj = j["power"];
            std::cout << "G^" << k << ": n: " << pj["n"] << " m: " << pj["m"]
                      << " delta: " << pj["delta"];
            if (pj.contains("lambda"))
                std::cout << " lambda: " << pj["lambda"] << " kappa: " << pj["kappa"];
            std::cout << '\n';
        }
    }
    return kExitOk;
}

ordered_json sidecar_json(const sqconn::FamilyInstance& inst, const std::string& graph_path,
                          const std::string& format) {
    ordered_json j;
    j["family"] = sqconn::family_kind_name(inst.spec.kind);
    j["parameter"] = inst.spec.parameter;
    j["name"] = inst.name();
    j["graph_file"] = graph_path;
    j["format"] = format;
    j["n"] = inst.graph.order();
    j["m"] = inst.graph.edge_count();
    ordered_json blocks = ordered_json::array();
    for (const auto& [name, range] : inst.blocks) {
        ordered_json b;
        b["name"] = name;
        b["begin"] = range.begin;
        b["end"] = range.end;
        blocks.push_back(b);
    }
    j["blocks"] = blocks;
    ordered_json expected;
    const sqconn::FamilyExpectations& e = inst.expected;
    auto put = [&](const char* key, const std::optional<long long>& v) {
        if (v) expected[key] = *v;
    };
    put("delta", e.min_degree);
    put("lambda", e.lambda);
    put("kappa", e.kappa);
    put("delta_sq", e.delta_square);
    put("lambda_sq", e.lambda_square);
    put("lambda_sq_upper_bound", e.lambda_square_upper);
    put("delta_sq_lower_bound", e.delta_square_lower);
    put("lambda_sq_minus_delta_sq", e.lambda_minus_delta_square);
    expected["source"] = "construction claims; run 'sqconn verify --families' to audit";
    j["expected"] = expected;
    return j;
}

int cmd_family(const std::string& kind_name, int parameter, const std::string& out_path,
               const std::string& format_flag) {
    const auto kind = sqconn::family_kind_from_name(kind_name);
    if (!kind) {
        std::cerr << "error: unknown family kind '" << kind_name
                  << "' (expected g-n, g-kappa-even, g-kappa-odd, g-lambda, delta-sharp)\n";
        return kExitError;
    }
    sqconn::FamilyInstance inst;
    try {
        inst = sqconn::generate_family({*kind, parameter});
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    const sqconn::GraphFormat fmt =
        format_flag.empty() && !sqconn::guess_format_from_path(out_path)
            ? sqconn::GraphFormat::graph6
            : resolve_format(format_flag, out_path, "output");
    write_output(out_path, sqconn::serialize_graph(fmt, inst.graph));
    const ordered_json meta = sidecar_json(inst, out_path, sqconn::format_name(fmt));
    write_output(out_path + ".meta.json", meta.dump(2) + "\n");
    std::cout << "wrote " << out_path << " (" << inst.graph.order() << " vertices, "
              << inst.graph.edge_count() << " edges) and " << out_path << ".meta.json\n";
    return kExitOk;
}

bool parse_family_list(const std::string& text, std::vector<sqconn::FamilySpec>& out) {
    // kind=v1,v2,... where a value may be a range a..b
    const size_t eq = text.find('=');
    if (eq == std::string::npos) return false;
    const auto kind = sqconn::family_kind_from_name(text.substr(0, eq));
    if (!kind) return false;
    std::stringstream vals(text.substr(eq + 1));
    std::string item;
    while (std::getline(vals, item, ',')) {
        if (item.empty()) return false;
        const size_t dots = item.find("..");
        try {
            if (dots == std::string::npos) {
                out.push_back({*kind, std::stoi(item)});
            } else {
                const int lo = std::stoi(item.substr(0, dots));
                const int hi = std::stoi(item.substr(dots + 2));
                if (hi < lo) return false;
                for (int v = lo; v <= hi; ++v) out.push_back({*kind, v});
            }
        } catch (const std::exception&) {
            return false;
        }
    }
    return true;
}

int cmd_verify(sqconn::SearchConfig cfg, const std::vector<std::string>& family_args,
               const std::string& out_path, const std::string& format, bool summary_only) {
    for (const std::string& arg : family_args) {
        if (!parse_family_list(arg, cfg.families)) {
            std::cerr << "error: bad --families argument '" << arg
                      << "' (expected kind=v1,v2 or kind=a..b)\n";
            return kExitError;
        }
    }
    std::vector<sqconn::VerificationReport> reports;
    const sqconn::ReportSink sink =
        summary_only ? sqconn::ReportSink{}
                     : sqconn::ReportSink{[&](const sqconn::VerificationReport& r) {
                           reports.push_back(r);
                       }};
    const sqconn::SuiteSummary summary = sqconn::run_suite(cfg, sink);

    std::ostringstream payload;
    if (format == "csv") {
        sqconn::write_suite_csv(payload, reports);
    } else {
        sqconn::write_suite_json(payload, cfg, reports, summary);
    }
    if (out_path.empty()) {
        std::cout << payload.str();
    } else {
        write_output(out_path, payload.str());
    }

    std::cerr << "graphs: " << summary.graphs << "  violations: " << summary.violations
              << "  whitney_violations: " << summary.whitney_violations
              << "  family_claim_failures: " << summary.family_claim_failures << '\n';
    const bool failed = summary.violations > 0 || summary.whitney_violations > 0 ||
                        summary.family_claim_failures > 0;
    return failed ? kExitViolations : kExitOk;
}

int cmd_convert(const std::string& input, const std::string& output, const std::string& from,
                const std::string& to) {
    const sqconn::GraphFormat to_fmt = resolve_format(to, output, "output");
    const sqconn::ParsedGraph parsed = load_graph(input, from);
    print_warnings(parsed);
    write_output(output, sqconn::serialize_graph(to_fmt, parsed.graph));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph connectivity toolkit: exact lambda/kappa, graph powers, "
                 "extremal families, bound verification"};
    app.require_subcommand(1);

    // compute
    std::string in_path, in_format, out_format = "table";
    bool do_square = false;
    int power = 0;
    CLI::App* compute = app.add_subcommand("compute", "print n, m, delta, lambda, kappa");
    compute->add_option("input", in_path, "graph file ('-' for stdin)")->required();
    compute->add_option("--input-format", in_format, "graph6|edgelist|dimacs (default: by extension)");
    compute->add_flag("--square", do_square, "also report the square G^2");
    compute->add_option("--power", power, "also report G^k for this k")->check(CLI::Range(2, 64));
    compute->add_option("--format", out_format, "table|json")
        ->check(CLI::IsMember({"table", "json"}));

    // family
    std::string family_kind, family_out, family_format;
    int family_param = 0;
    CLI::App* family = app.add_subcommand("family", "generate an extremal family instance");
    family->add_option("kind", family_kind, "g-n|g-kappa-even|g-kappa-odd|g-lambda|delta-sharp")
        ->required();
    family->add_option("parameter", family_param, "family parameter")->required();
    family->add_option("--out", family_out, "output graph file")->required();
    family->add_option("--format", family_format, "graph6|edgelist|dimacs (default graph6)");

    // verify
    sqconn::SearchConfig cfg;
    std::vector<std::string> family_args;
    std::string verify_out, verify_format = "json";
    bool summary_only = false;
    int exhaustive_n = -1;
    int n_single = 0;
    double p_single = -1.0;
    CLI::App* verify = app.add_subcommand("verify", "run the bound-verification suite");
    verify->add_option("--exhaustive-n", exhaustive_n,
                       "check all connected graphs with n up to this (max 8)");
    verify->add_option("--samples", cfg.samples, "number of seeded random connected graphs");
    verify->add_option("--n", n_single, "random graph order");
    verify->add_option("--n-min", cfg.n_min, "random order lower bound");
    verify->add_option("--n-max", cfg.n_max, "random order upper bound");
    verify->add_option("--p", p_single, "edge probability");
    verify->add_option("--p-min", cfg.p_min, "edge probability lower bound");
    verify->add_option("--p-max", cfg.p_max, "edge probability upper bound");
    verify->add_option("--seed", cfg.seed, "random seed");
    verify->add_option("--families", family_args,
                       "family sweep, e.g. g-lambda=4,9 or g-n=10..17 (repeatable)");
    verify->add_option("--predicate", cfg.predicate, "restrict to one check id");
    verify->add_option("--power", cfg.power, "evaluate against G^k instead of G^2 (exploratory)");
    verify->add_flag("--witnesses", cfg.include_witnesses, "serialize witness cuts/separators");
    verify->add_flag("--summary-only", summary_only, "omit per-graph reports");
    verify->add_option("--format", verify_format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--out", verify_out, "report file (default stdout)");

    // convert
    std::string conv_in, conv_out, conv_from, conv_to;
    CLI::App* convert = app.add_subcommand("convert", "convert between graph formats");
    convert->add_option("input", conv_in, "input graph file ('-' for stdin)")->required();
    convert->add_option("output", conv_out, "output graph file")->required();
    convert->add_option("--from", conv_from, "input format (default: by extension)");
    convert->add_option("--to", conv_to, "output format (default: by extension)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (compute->parsed())
            return cmd_compute(in_path, in_format, do_square, power, out_format);
        if (family->parsed())
            return cmd_family(family_kind, family_param, family_out, family_format);
        if (verify->parsed()) {
            if (exhaustive_n >= 0) {
                cfg.exhaustive = true;
                cfg.exhaustive_n = exhaustive_n;
            }
            if (n_single > 0) cfg.n_min = cfg.n_max = n_single;
            if (p_single >= 0.0) cfg.p_min = cfg.p_max = p_single;
            return cmd_verify(cfg, family_args, verify_out, verify_format, summary_only);
        }
        if (convert->parsed()) return cmd_convert(conv_in, conv_out, conv_from, conv_to);
    } catch (const sqconn::ParseError& e) {
        std::cerr << "error: " << e.what() << " (byte offset " << e.byte_offset() << ")\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
