#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "sqconn/formats.hpp"
#include "sqconn/graph.hpp"
#include "test_util.hpp"

using namespace sqconn;
using namespace sqconn::testutil;

namespace {

std::uint64_t rng_state = 0xC0FFEE123456789ULL;
std::uint64_t next_rand() {
    rng_state ^= rng_state << 13;
    rng_state ^= rng_state >> 7;
    rng_state ^= rng_state << 17;
    return rng_state;
}

Graph random_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (next_rand() % 3 == 0) edges.emplace_back(i, j);
    return Graph(n, edges);
}

}  // namespace

TEST_CASE("graph6 encoding of the path checked by reparse") {
    const Graph p4 = path_graph(4);
    const std::string g6 = encode_graph6(p4);
    CHECK(g6.size() == 2);  // one header byte + one payload byte for n=4
    CHECK(decode_graph6(g6) == p4);
    CHECK(decode_graph6("Ch") == p4);
}

TEST_CASE("graph6 corner cases") {
    CHECK(encode_graph6(Graph{}) == "?");
    CHECK(decode_graph6("?").order() == 0);
    CHECK(decode_graph6(encode_graph6(complete_graph(1))).order() == 1);
    // 62 and 63 vertices straddle the short/long header boundary.
    const Graph k62 = complete_graph(62);
    const Graph k63 = complete_graph(63);
    CHECK(encode_graph6(k62)[0] == static_cast<char>(62 + 63));
    CHECK(encode_graph6(k63)[0] == '~');
    CHECK(decode_graph6(encode_graph6(k62)) == k62);
    CHECK(decode_graph6(encode_graph6(k63)) == k63);
    // Optional format header is tolerated.
    CHECK(decode_graph6(">>graph6<<" + encode_graph6(petersen())) == petersen());
}

TEST_CASE("graph6 rejects malformed input with a byte offset") {
    try {
        decode_graph6("C\x01h");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.byte_offset() == 1);
    }
    try {
        decode_graph6("Ch extra");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.byte_offset() == 2);  // 'C' header + 1 payload byte, ' ' also out of range
    }
    CHECK_THROWS_AS(decode_graph6("D"), ParseError);   // truncated payload
    CHECK_THROWS_AS(decode_graph6(""), ParseError);
    CHECK_THROWS_AS(decode_graph6("~~AAAAAA"), ParseError);  // oversized order form
}

TEST_CASE("edgelist round trip and dedup warning") {
    const Graph p4 = path_graph(4);
    const std::string text = encode_edgelist(p4);
    CHECK(text == "4 3\n0 1\n1 2\n2 3\n");
    CHECK(decode_edgelist(text).graph == p4);

    const ParsedGraph dup = decode_edgelist("3 3\n0 1\n1 0\n1 2\n");
    CHECK(dup.graph.edge_count() == 2);
    REQUIRE(dup.warnings.size() == 1);
    CHECK(dup.warnings[0].find("duplicate") != std::string::npos);

    CHECK_THROWS_AS(decode_edgelist("3 2\n0 1\n"), ParseError);     // missing edge
    CHECK_THROWS_AS(decode_edgelist("3 1\n0 3\n"), ParseError);     // out of range
    CHECK_THROWS_AS(decode_edgelist("3 1\n1 1\n"), ParseError);     // self loop
    CHECK_THROWS_AS(decode_edgelist("3 1\n0 1\n0 2\n"), ParseError);  // trailing content
    CHECK_THROWS_AS(decode_edgelist(""), ParseError);
}

TEST_CASE("edgelist single vertex") {
    const ParsedGraph g = decode_edgelist("1 0\n");
    CHECK(g.graph.order() == 1);
    CHECK(encode_graph6(g.graph) == "@");
}

TEST_CASE("dimacs round trip") {
    const Graph p = petersen();
    const std::string text = encode_dimacs(p);
    CHECK(text.find("p edge 10 15") == 0);
    CHECK(decode_dimacs(text).graph == p);

    const ParsedGraph with_comments =
        decode_dimacs("c a comment\np edge 3 2\ne 1 2\ne 2 3\n");
    CHECK(with_comments.graph == path_graph(3));

    CHECK_THROWS_AS(decode_dimacs("p edge 3 1\ne 0 1\n"), ParseError);  // 1-based ids
    CHECK_THROWS_AS(decode_dimacs("e 1 2\n"), ParseError);              // edge before header
    CHECK_THROWS_AS(decode_dimacs("p vertex 3 1\ne 1 2\n"), ParseError);
    const ParsedGraph mismatch = decode_dimacs("p edge 3 5\ne 1 2\n");
    CHECK(mismatch.warnings.size() == 1);
}

TEST_CASE("format round trips are involutive over random graphs") {
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(next_rand() % 40);
        const Graph g = random_graph(n);
        const std::string g6 = encode_graph6(g);
        CHECK(decode_graph6(g6) == g);
        CHECK(encode_graph6(decode_graph6(g6)) == g6);
        const Graph via_el = decode_edgelist(encode_edgelist(g)).graph;
        CHECK(via_el == g);
        const Graph via_dimacs = decode_dimacs(encode_dimacs(via_el)).graph;
        CHECK(via_dimacs == g);
    }
}

TEST_CASE("long-form graph6 round trip at n=100") {
    const Graph g = random_graph(100);
    const std::string g6 = encode_graph6(g);
    CHECK(g6[0] == '~');
    CHECK(decode_graph6(g6) == g);
    CHECK(encode_graph6(decode_graph6(g6)) == g6);
}

TEST_CASE("format helpers") {
    CHECK(format_from_name("graph6") == GraphFormat::graph6);
    CHECK(format_from_name("g6") == GraphFormat::graph6);
    CHECK(format_from_name("edgelist") == GraphFormat::edgelist);
    CHECK(format_from_name("dimacs") == GraphFormat::dimacs);
    CHECK(!format_from_name("???").has_value());
    CHECK(guess_format_from_path("a/b/file.g6") == GraphFormat::graph6);
    CHECK(guess_format_from_path("x.col") == GraphFormat::dimacs);
    CHECK(guess_format_from_path("x.el") == GraphFormat::edgelist);
    CHECK(!guess_format_from_path("plain").has_value());
    CHECK(format_name(GraphFormat::dimacs) == "dimacs");
    CHECK(serialize_graph(GraphFormat::graph6, path_graph(4)) == encode_graph6(path_graph(4)) + "\n");
    CHECK(parse_graph(GraphFormat::graph6, "Ch").graph == path_graph(4));
}
