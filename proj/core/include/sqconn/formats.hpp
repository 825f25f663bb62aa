#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sqconn/graph.hpp"

namespace sqconn {

enum class GraphFormat { graph6, edgelist, dimacs };

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, size_t byte_offset)
        : std::runtime_error(message), byte_offset_(byte_offset) {}
    size_t byte_offset() const { return byte_offset_; }

private:
    size_t byte_offset_;
};

struct ParsedGraph {
    Graph graph;
    std::vector<std::string> warnings;  // e.g. duplicate edges that were dropped
};

/// graph6: one-byte header n+63 for n <= 62, '~' + 3 six-bit bytes up to
/// n = 258047; upper-triangle column-major bit packing, six bits per byte,
/// every payload byte offset by 63. Bytes outside 63..126 are rejected.
std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view text);

/// Edge list: first line "n m", then m lines "u v" (0-based).
std::string encode_edgelist(const Graph& g);
ParsedGraph decode_edgelist(std::string_view text);

/// DIMACS: "p edge n m" header, "e u v" lines (1-based), "c" comments.
std::string encode_dimacs(const Graph& g);
ParsedGraph decode_dimacs(std::string_view text);

ParsedGraph parse_graph(GraphFormat format, std::string_view payload);
std::string serialize_graph(GraphFormat format, const Graph& g);

std::string format_name(GraphFormat format);
std::optional<GraphFormat> format_from_name(const std::string& name);
std::optional<GraphFormat> guess_format_from_path(const std::string& path);

}  // namespace sqconn
