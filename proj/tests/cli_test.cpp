#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "sqconn/formats.hpp"
#include "sqconn/graph.hpp"
#include "sqconn/power.hpp"
#include "test_util.hpp"

using namespace sqconn;
using namespace sqconn::testutil;
namespace fs = std::filesystem;

namespace {

#ifndef SQCONN_CLI_PATH
#error "SQCONN_CLI_PATH must point at the built cli binary"
#endif

struct Invocation {
    int exit_code = -1;
    std::string out;
    std::string err;
};

fs::path work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("sqconn_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const fs::path& p, const std::string& payload) {
    std::ofstream out(p, std::ios::binary);
    out << payload;
}

Invocation run_cli(const std::string& args) {
    const fs::path out_file = work_dir() / "stdout.txt";
    const fs::path err_file = work_dir() / "stderr.txt";
    const std::string cmd = std::string("'") + SQCONN_CLI_PATH + "' " + args + " > '" +
                            out_file.string() + "' 2> '" + err_file.string() + "'";
    const int raw = std::system(cmd.c_str());
    Invocation r;
    r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = read_file(out_file);
    r.err = read_file(err_file);
    return r;
}

}  // namespace

TEST_CASE("compute on the Petersen graph with --square") {
    const fs::path g6 = work_dir() / "petersen.g6";
    write_file(g6, encode_graph6(petersen()) + "\n");
    const Invocation r = run_cli("compute '" + g6.string() + "' --square --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"lambda\": 3") != std::string::npos);
    CHECK(r.out.find("\"kappa\": 3") != std::string::npos);
    CHECK(r.out.find("\"lambda\": 9") != std::string::npos);  // square block
}

TEST_CASE("compute on a K5 edge list") {
    const fs::path el = work_dir() / "k5.el";
    write_file(el, encode_edgelist(complete_graph(5)));
    const Invocation r = run_cli("compute '" + el.string() + "'");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("delta: 4") != std::string::npos);
    CHECK(r.out.find("lambda: 4") != std::string::npos);
    CHECK(r.out.find("kappa: 4") != std::string::npos);
}

TEST_CASE("compute warns on disconnected input and reports lambda 0") {
    const fs::path el = work_dir() / "two.el";
    write_file(el, "4 2\n0 1\n2 3\n");
    const Invocation r = run_cli("compute '" + el.string() + "'");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("lambda: 0") != std::string::npos);
    CHECK(r.err.find("disconnected") != std::string::npos);
}

TEST_CASE("compute rejects malformed graph6 naming the byte offset") {
    const fs::path g6 = work_dir() / "bad.g6";
    write_file(g6, "C\x01h\n");
    const Invocation r = run_cli("compute '" + g6.string() + "'");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("byte offset 1") != std::string::npos);
}

TEST_CASE("family writes graph plus sidecar") {
    const fs::path out = work_dir() / "gl9.g6";
    const Invocation r = run_cli("family g-lambda 9 --out '" + out.string() + "'");
    CHECK(r.exit_code == 0);
    const Graph g = decode_graph6(read_file(out));
    CHECK(g.order() == 180);
    const std::string meta = read_file(out.string() + ".meta.json");
    CHECK(meta.find("\"lambda_sq\": 45") != std::string::npos);
    CHECK(meta.find("\"blocks\"") != std::string::npos);

    const Invocation gn = run_cli("family g-n 12 --out '" + (work_dir() / "gn12.g6").string() + "'");
    CHECK(gn.exit_code == 0);
    const std::string gn_meta = read_file((work_dir() / "gn12.g6.meta.json").string());
    CHECK(gn_meta.find("\"delta\": 2") != std::string::npos);
}

TEST_CASE("family rejects a parity violation with exit code 2") {
    const Invocation r =
        run_cli("family g-kappa-even 3 --out '" + (work_dir() / "x.g6").string() + "'");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("even kappa") != std::string::npos);
}

TEST_CASE("verify exhaustive n<=6 exits zero") {
    const Invocation r = run_cli("verify --exhaustive-n 6 --summary-only");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"violations\": 0") != std::string::npos);
    CHECK(r.err.find("violations: 0") != std::string::npos);
}

TEST_CASE("verify family sweep audits expected values") {
    const Invocation r = run_cli("verify --families g-lambda=4 --families delta-sharp=1,2 --summary-only");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"family_audits\"") != std::string::npos);
    CHECK(r.out.find("\"all_ok\": true") != std::string::npos);
    CHECK(r.out.find("\"family_claim_failures\": 0") != std::string::npos);
}

TEST_CASE("verify is byte-deterministic for a fixed seed") {
    const fs::path f1 = work_dir() / "det1.json";
    const fs::path f2 = work_dir() / "det2.json";
    const std::string args = "verify --samples 50 --seed 7 --n-min 2 --n-max 8 --p 0.4 --out ";
    CHECK(run_cli(args + "'" + f1.string() + "'").exit_code == 0);
    CHECK(run_cli(args + "'" + f2.string() + "'").exit_code == 0);
    const std::string a = read_file(f1);
    CHECK(!a.empty());
    CHECK(a == read_file(f2));
}

TEST_CASE("verify rejects an impossible exhaustive request") {
    const Invocation r = run_cli("verify --exhaustive-n 12");
    CHECK(r.exit_code == 2);
}

TEST_CASE("verify csv export") {
    const fs::path f = work_dir() / "report.csv";
    const Invocation r = run_cli("verify --samples 5 --seed 3 --format csv --out '" + f.string() + "'");
    CHECK(r.exit_code == 0);
    const std::string csv = read_file(f);
    CHECK(csv.find("graph_id,provenance,n,m,delta,lambda,kappa") == 0);
}

TEST_CASE("convert round trips through all three formats") {
    const fs::path el = work_dir() / "p4.el";
    const fs::path g6 = work_dir() / "p4.g6";
    const fs::path dim = work_dir() / "p4.dimacs";
    const fs::path back = work_dir() / "p4_back.g6";
    write_file(el, encode_edgelist(path_graph(4)));

    CHECK(run_cli("convert '" + el.string() + "' '" + g6.string() + "'").exit_code == 0);
    // Equivalence is checked by reparse, not byte comparison.
    CHECK(decode_graph6(read_file(g6)) == path_graph(4));

    CHECK(run_cli("convert '" + g6.string() + "' '" + dim.string() + "'").exit_code == 0);
    CHECK(run_cli("convert '" + dim.string() + "' '" + back.string() + "'").exit_code == 0);
    CHECK(read_file(back) == read_file(g6));
}

TEST_CASE("convert single-vertex edge list to graph6") {
    const fs::path el = work_dir() / "k1.el";
    const fs::path g6 = work_dir() / "k1.g6";
    write_file(el, "1 0\n");
    CHECK(run_cli("convert '" + el.string() + "' '" + g6.string() + "'").exit_code == 0);
    CHECK(decode_graph6(read_file(g6)).order() == 1);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("no-such-subcommand").exit_code == 2);
    CHECK(run_cli("compute").exit_code == 2);
    CHECK(run_cli("compute missing-file.g6").exit_code == 2);
}
