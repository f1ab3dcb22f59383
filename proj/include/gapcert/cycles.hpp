#pragma once

#include "gapcert/decomposition.hpp"
#include "gapcert/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace gapcert {

/// Simple cycles of one length. Each cycle starts at its smallest vertex and
/// is oriented so that the second vertex is smaller than the last; the list
/// is sorted lexicographically.
struct CycleList {
    int length = 0;
    std::vector<std::vector<Vertex>> cycles;

    bool operator==(const CycleList &) const = default;
};

struct EnumerationOptions {
    std::uint64_t node_limit = 10'000'000;
};

/// Length of the shortest odd cycle, nullopt for bipartite graphs. Computed
/// as min over v of the distance from (v,0) to (v,1) in the bipartite double
/// cover; start vertices are searched in parallel. Throws
/// StageError("odd-girth") on a disconnected graph.
std::optional<int> odd_girth(const Graph &g);

/// All simple cycles of length L (3 <= L <= n). Backtracking from each root
/// through larger vertices only, pruned by BFS distance back to the root;
/// roots run in parallel. Throws StageError("cycles") once the search visits
/// more than node_limit nodes.
CycleList enumerate_cycles(const Graph &g, int length, const EnumerationOptions &opts = {});

namespace serial {
std::optional<int> odd_girth(const Graph &g);
CycleList enumerate_cycles(const Graph &g, int length, const EnumerationOptions &opts = {});
} // namespace serial

struct EdgeCycleCounts {
    std::vector<std::uint64_t> counts; // indexed by edge id
    bool uniform = true;
    std::size_t cycles = 0;
};

EdgeCycleCounts cycles_per_edge(const Graph &g, const CycleList &list);
EdgeCycleCounts cycles_per_edge(const Graph &g, int length, const EnumerationOptions &opts = {});

/// Edge set of a cycle given as a vertex sequence.
EdgeSubset cycle_edges(const std::vector<Vertex> &cycle);

/// Every shortest odd cycle as a part, all with weight 1/m where m is the
/// common number of such cycles through an edge. Throws
/// StageError("odd-cycle-decomposition") when g is disconnected or bipartite
/// or when the per-edge count is not uniform.
FractionalDecomposition odd_cycle_decomposition(const Graph &g, const EnumerationOptions &opts = {});

} // namespace gapcert
