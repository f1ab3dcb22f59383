#pragma once

#include "gapcert/cycles.hpp"
#include "gapcert/decomposition.hpp"
#include "gapcert/simplex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gapcert {

/// Subgraphs whose weights are to be optimised, grouped into isomorphism
/// classes of their supports.
struct CandidateFamily {
    std::vector<EdgeSubset> parts;
    ClassReport classes; // s_j unused

    /// Classifies the parts; throws StageError("classify") on a non-regular
    /// support and InputError on an empty family.
    static CandidateFamily from_parts(std::vector<EdgeSubset> parts);
};

/// Variables alpha_i >= 0, one per part. Rows: one per host edge (weights
/// through the edge sum to 1), then one per (vertex v != 0, class j) equating
/// the class-j weight at v with that at vertex 0; rows that vanish
/// identically are omitted. Objective: sum_j delta(H_j) s_j(0).
struct DecompositionLp {
    LinearProgram lp;
    std::size_t edge_rows = 0;
    std::size_t homogeneity_rows = 0;
};

DecompositionLp build_decomposition_lp(const Graph &g, const CandidateFamily &family);

struct OptimizeOptions {
    bool compute_actual = true;
    double drop_below = 1e-10;
};

struct OptimizeResult {
    LPSolution solution;
    std::optional<FractionalDecomposition> decomposition;
    std::optional<BoundCertificate> certificate;

    bool feasible() const noexcept { return solution.status == LpStatus::optimal; }
};

/// Solves the LP, keeps parts with weight above drop_below and re-certifies
/// the result. An infeasible LP is a result, not an error. Throws
/// StageError("lp") if the certificate disagrees with the LP objective.
OptimizeResult optimize_bound(const Graph &g, const CandidateFamily &family, const OptimizeOptions &opts = {});

/// Sorted vertex lists of all maximal cliques with at least two vertices
/// (Bron-Kerbosch with pivoting). Throws StageError("cliques") past the node
/// limit.
std::vector<std::vector<Vertex>> maximal_cliques(const Graph &g, const EnumerationOptions &opts = {});

enum class FamilyKind { odd_girth_cycles, cycles, maximal_cliques, file };

struct FamilySpec {
    FamilyKind kind = FamilyKind::odd_girth_cycles;
    int length = 0;   // cycles
    std::string path; // file
};

/// Parses "odd-girth-cycles", "cycles=L", "maximal-cliques" or "file=PATH".
FamilySpec parse_family_spec(const std::string &text);

/// Builds the named family for g. Odd-girth cycles on a bipartite graph throw
/// StageError("family").
CandidateFamily standard_family(const Graph &g, const FamilySpec &spec, const EnumerationOptions &opts = {});

} // namespace gapcert
