#include "sqconn/formats.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace sqconn {

namespace {

constexpr int kGraph6Bias = 63;
constexpr int kGraph6LongMarker = 126;
constexpr int kGraph6MaxOrder = 258047;  // 2^18 - 1

std::string_view strip_line_ending(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    return text;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kGraph6MaxOrder)
        throw std::invalid_argument("graph6 encoding supports at most 258047 vertices");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kGraph6Bias));
    } else {
        out.push_back(static_cast<char>(kGraph6LongMarker));
        out.push_back(static_cast<char>(((n >> 12) & 63) + kGraph6Bias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kGraph6Bias));
        out.push_back(static_cast<char>((n & 63) + kGraph6Bias));
    }
    int acc = 0;
    int nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kGraph6Bias));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kGraph6Bias));
    return out;
}

Graph decode_graph6(std::string_view text) {
    std::string_view s = strip_line_ending(text);
    size_t base = 0;
    if (s.starts_with(">>graph6<<")) {
        base = 10;
        s.remove_prefix(10);
    }
    if (s.empty()) throw ParseError("graph6: empty input", base);
    for (size_t i = 0; i < s.size(); ++i) {
        const unsigned char c = static_cast<unsigned char>(s[i]);
        if (c < kGraph6Bias || c > kGraph6LongMarker)
            throw ParseError("graph6: byte outside 63..126", base + i);
    }
    size_t pos = 0;
    long long n = 0;
    if (s[0] == static_cast<char>(kGraph6LongMarker)) {
        if (s.size() >= 2 && s[1] == static_cast<char>(kGraph6LongMarker))
            throw ParseError("graph6: orders beyond 258047 are not supported", base + 1);
        if (s.size() < 4) throw ParseError("graph6: truncated long-form order", base + s.size());
        n = (static_cast<long long>(s[1] - kGraph6Bias) << 12) |
            (static_cast<long long>(s[2] - kGraph6Bias) << 6) |
            static_cast<long long>(s[3] - kGraph6Bias);
        pos = 4;
    } else {
        n = s[0] - kGraph6Bias;
        pos = 1;
    }
    const long long bit_count = n * (n - 1) / 2;
    const size_t expected = static_cast<size_t>((bit_count + 5) / 6);
    if (s.size() - pos < expected)
        throw ParseError("graph6: truncated adjacency payload", base + s.size());
    if (s.size() - pos > expected)
        throw ParseError("graph6: trailing bytes after adjacency payload", base + pos + expected);

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const int byte = s[pos + static_cast<size_t>(bit / 6)] - kGraph6Bias;
            if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    return Graph(static_cast<int>(n), edges);
}

std::string encode_edgelist(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    g.for_each_edge([&](int u, int v) { out << u << ' ' << v << '\n'; });
    return out.str();
}

namespace {

struct LineScanner {
    std::string_view text;
    size_t pos = 0;
    int line_no = 0;

    // Returns the next non-empty line; offset_out is its byte offset.
    std::optional<std::string_view> next(size_t& offset_out) {
        while (pos < text.size()) {
            const size_t start = pos;
            size_t end = text.find('\n', pos);
            if (end == std::string_view::npos) end = text.size();
            pos = end + 1;
            ++line_no;
            std::string_view line = strip_line_ending(text.substr(start, end - start));
            const size_t first = line.find_first_not_of(" \t");
            if (first == std::string_view::npos) continue;
            offset_out = start;
            return line;
        }
        return std::nullopt;
    }
};

long long parse_int_field(std::string_view& line, const std::string& what, int line_no,
                          size_t offset) {
    const size_t start = line.find_first_not_of(" \t");
    if (start == std::string_view::npos)
        throw ParseError("missing " + what + " on line " + std::to_string(line_no), offset);
    line.remove_prefix(start);
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
    if (ec != std::errc{})
        throw ParseError("bad " + what + " on line " + std::to_string(line_no), offset);
    line.remove_prefix(static_cast<size_t>(ptr - line.data()));
    return value;
}

}  // namespace

ParsedGraph decode_edgelist(std::string_view text) {
    LineScanner scan{text};
    size_t off = 0;
    const std::optional<std::string_view> header = scan.next(off);
    if (!header) throw ParseError("edgelist: empty input", 0);
    std::string_view h = *header;
    const long long n = parse_int_field(h, "vertex count", scan.line_no, off);
    const long long m = parse_int_field(h, "edge count", scan.line_no, off);
    if (n < 0 || m < 0) throw ParseError("edgelist: negative header field", off);

    ParsedGraph out;
    std::vector<std::pair<int, int>> edges;
    std::vector<char> seen;  // duplicate detection once the graph is built
    for (long long k = 0; k < m; ++k) {
        const std::optional<std::string_view> line = scan.next(off);
        if (!line)
            throw ParseError("edgelist: expected " + std::to_string(m) + " edges, got " +
                                 std::to_string(k), text.size());
        std::string_view l = *line;
        const long long u = parse_int_field(l, "edge endpoint", scan.line_no, off);
        const long long v = parse_int_field(l, "edge endpoint", scan.line_no, off);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edgelist: endpoint out of range on line " + std::to_string(scan.line_no), off);
        if (u == v)
            throw ParseError("edgelist: self-loop on line " + std::to_string(scan.line_no), off);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    size_t extra_off = 0;
    if (scan.next(extra_off))
        throw ParseError("edgelist: trailing content after " + std::to_string(m) + " edges",
                         extra_off);

    // Deduplicate with a warning, as duplicate lines are common in the wild.
    std::vector<std::pair<int, int>> unique_edges;
    std::vector<Edge> canon;
    canon.reserve(edges.size());
    for (const auto& [u, v] : edges) canon.emplace_back(u, v);
    std::sort(canon.begin(), canon.end());
    const size_t dups = canon.size() - static_cast<size_t>(std::distance(
                            canon.begin(), std::unique(canon.begin(), canon.end())));
    if (dups > 0)
        out.warnings.push_back("edgelist: dropped " + std::to_string(dups) + " duplicate edge(s)");
    out.graph = Graph(static_cast<int>(n), edges);  // Graph construction collapses duplicates
    return out;
}

std::string encode_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
    g.for_each_edge([&](int u, int v) { out << "e " << (u + 1) << ' ' << (v + 1) << '\n'; });
    return out.str();
}

ParsedGraph decode_dimacs(std::string_view text) {
    LineScanner scan{text};
    ParsedGraph out;
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    size_t off = 0;
    long long dups = 0;
    while (const std::optional<std::string_view> line = scan.next(off)) {
        std::string_view l = *line;
        if (l.starts_with("c")) continue;
        if (l.starts_with("p")) {
            if (n >= 0) throw ParseError("dimacs: repeated problem line " + std::to_string(scan.line_no), off);
            l.remove_prefix(1);
            const size_t word = l.find_first_not_of(" \t");
            if (word == std::string_view::npos || !l.substr(word).starts_with("edge"))
                throw ParseError("dimacs: expected 'p edge n m' on line " + std::to_string(scan.line_no), off);
            l.remove_prefix(word + 4);
            n = parse_int_field(l, "vertex count", scan.line_no, off);
            m = parse_int_field(l, "edge count", scan.line_no, off);
            if (n < 0 || m < 0) throw ParseError("dimacs: negative problem field", off);
            continue;
        }
        if (l.starts_with("e")) {
            if (n < 0) throw ParseError("dimacs: edge before problem line " + std::to_string(scan.line_no), off);
            l.remove_prefix(1);
            const long long u = parse_int_field(l, "edge endpoint", scan.line_no, off);
            const long long v = parse_int_field(l, "edge endpoint", scan.line_no, off);
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError("dimacs: endpoint out of range on line " + std::to_string(scan.line_no), off);
            if (u == v) throw ParseError("dimacs: self-loop on line " + std::to_string(scan.line_no), off);
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
            continue;
        }
        throw ParseError("dimacs: unrecognized line " + std::to_string(scan.line_no), off);
    }
    if (n < 0) throw ParseError("dimacs: missing problem line", text.size());
    if (static_cast<long long>(edges.size()) != m)
        out.warnings.push_back("dimacs: header declares " + std::to_string(m) + " edges, found " +
                               std::to_string(edges.size()));
    std::vector<Edge> canon;
    canon.reserve(edges.size());
    for (const auto& [u, v] : edges) canon.emplace_back(u, v);
    std::sort(canon.begin(), canon.end());
    dups = static_cast<long long>(canon.size()) -
           std::distance(canon.begin(), std::unique(canon.begin(), canon.end()));
    if (dups > 0) out.warnings.push_back("dimacs: dropped " + std::to_string(dups) + " duplicate edge(s)");
    out.graph = Graph(static_cast<int>(n), edges);
    return out;
}

ParsedGraph parse_graph(GraphFormat format, std::string_view payload) {
    switch (format) {
        case GraphFormat::graph6: return {decode_graph6(payload), {}};
        case GraphFormat::edgelist: return decode_edgelist(payload);
        case GraphFormat::dimacs: return decode_dimacs(payload);
    }
    throw std::invalid_argument("unknown graph format");
}

std::string serialize_graph(GraphFormat format, const Graph& g) {
    switch (format) {
        case GraphFormat::graph6: return encode_graph6(g) + "\n";
        case GraphFormat::edgelist: return encode_edgelist(g);
        case GraphFormat::dimacs: return encode_dimacs(g);
    }
    throw std::invalid_argument("unknown graph format");
}

std::string format_name(GraphFormat format) {
    switch (format) {
        case GraphFormat::graph6: return "graph6";
        case GraphFormat::edgelist: return "edgelist";
        case GraphFormat::dimacs: return "dimacs";
    }
    return "unknown";
}

std::optional<GraphFormat> format_from_name(const std::string& name) {
    if (name == "graph6" || name == "g6") return GraphFormat::graph6;
    if (name == "edgelist" || name == "el") return GraphFormat::edgelist;
    if (name == "dimacs") return GraphFormat::dimacs;
    return std::nullopt;
}

std::optional<GraphFormat> guess_format_from_path(const std::string& path) {
    const size_t dot = path.find_last_of('.');
    if (dot == std::string::npos) return std::nullopt;
    std::string ext = path.substr(dot + 1);
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    if (ext == "g6" || ext == "graph6") return GraphFormat::graph6;
    if (ext == "el" || ext == "edgelist" || ext == "txt") return GraphFormat::edgelist;
    if (ext == "dimacs" || ext == "col") return GraphFormat::dimacs;
    return std::nullopt;
}

}  // namespace sqconn
