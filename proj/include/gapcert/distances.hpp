#pragma once

#include "gapcert/graph.hpp"

#include <vector>

namespace gapcert {

inline constexpr int unreachable = -1;

/// Row-major n x n BFS distance table; unreachable pairs hold -1. Sources are
/// processed in parallel.
std::vector<int> all_pairs_distances(const Graph &g);

namespace serial {
std::vector<int> all_pairs_distances(const Graph &g);
} // namespace serial

/// BFS distances from one source.
std::vector<int> bfs_distances(const Graph &g, Vertex source);

} // namespace gapcert
