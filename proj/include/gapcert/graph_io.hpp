#pragma once

#include "gapcert/graph.hpp"

#include <string>
#include <string_view>

namespace gapcert {

/// Parses "u v" lines (0-based). An optional first data line "n <N>" fixes the
/// vertex count; otherwise n = 1 + max id. '#' starts a comment. Repeated
/// edges collapse.
Graph parse_edge_list(std::string_view text);

/// Writes the "n <N>" header followed by one edge per line.
std::string emit_edge_list(const Graph &g);

/// Largest order accepted by the graph6 reader and writer (single size byte).
inline constexpr int graph6_max_order = 62;

Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph &g);

/// True when text is a single non-empty line drawn from the graph6 alphabet.
bool looks_like_graph6(std::string_view text);

/// graph6 when looks_like_graph6(text), edge list otherwise.
Graph parse_graph(std::string_view text);

} // namespace gapcert
