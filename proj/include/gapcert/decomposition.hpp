#pragma once

#include "gapcert/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gapcert {

/// Tolerances for the edge condition and per-vertex homogeneity checks.
struct DecompositionTolerance {
    static constexpr double internal = 1e-9;   // weights built in-library
    static constexpr double user = 1e-6;       // weights read from JSON
    static constexpr double lp = 1e-7;         // weights produced by the LP
};

struct WeightedPart {
    EdgeSubset edges;
    double weight = 0;
};

/// Weighted family of edge subsets of a host on host_n vertices. Every part
/// is spanning in the sense that it lives on the full host vertex set; the
/// positive-degree support is derived on demand.
class FractionalDecomposition {
public:
    FractionalDecomposition() = default;

    /// Throws InputError on a non-positive or non-finite weight, an empty part,
    /// or an endpoint outside 0..host_n-1.
    FractionalDecomposition(int host_n, std::vector<WeightedPart> parts);

    int host_n() const noexcept { return _host_n; }
    const std::vector<WeightedPart> &parts() const noexcept { return _parts; }
    std::size_t size() const noexcept { return _parts.size(); }

    /// Same parts, every weight multiplied by factor (> 0).
    FractionalDecomposition scaled(double factor) const;

private:
    int _host_n = 0;
    std::vector<WeightedPart> _parts;
};

// ---------------------------------------------------------------------------
// Edge condition

struct EdgeViolation {
    Edge edge;
    double weight_sum = 0;
};

struct EdgeConditionResult {
    bool ok = true;
    std::vector<EdgeViolation> violations;
};

/// Checks that the weights of the parts containing each host edge sum to 1.
/// Throws StageError("edge-condition") when a part uses a non-edge or the
/// vertex counts disagree.
EdgeConditionResult verify_edge_condition(const Graph &g, const FractionalDecomposition &d, double tol);

// ---------------------------------------------------------------------------
// Isomorphism classes

struct IsoClass {
    Graph representative;        // first-seen support
    std::string iso;             // canonical certificate
    int degree = 0;              // d_j
    double s = 0;                // common per-vertex weight s_j
    double delta = 0;            // delta(H_j) = lambda_min + lambda_1
    double lambda_min = 0;
    std::vector<std::size_t> members; // part indices
};

struct ClassReport {
    std::vector<IsoClass> classes;
    std::vector<std::size_t> class_of; // per part

    std::size_t t() const noexcept { return classes.size(); }
};

/// Groups the parts by isomorphism type of their supports and computes the
/// spectral data of each representative. Throws StageError("classify") when
/// a support is not regular.
ClassReport classify(const Graph &g, const FractionalDecomposition &d);

/// Same grouping for bare edge subsets (weights not needed).
ClassReport classify_parts(const std::vector<EdgeSubset> &parts);

// ---------------------------------------------------------------------------
// Homogeneity

struct HomogeneityResult {
    bool ok = true;
    std::vector<double> s;   // s_j evaluated at vertex 0
    double max_deviation = 0;
    std::size_t worst_class = 0;
    Vertex worst_vertex = 0;
    std::vector<std::vector<double>> per_vertex; // [class][vertex]
};

/// Computes s_j(v) for every class and vertex and accepts when each class's
/// values agree with vertex 0 within tol.
HomogeneityResult homogeneity(const Graph &g, const FractionalDecomposition &d, const ClassReport &report, double tol);

/// |sum_j d_j s_j - k| <= tol.
bool check_degree_identity(const ClassReport &report, int k, double tol);

/// sum_j delta(H_j) s_j.
double compute_bound(const ClassReport &report);

// ---------------------------------------------------------------------------
// Certificate

struct CertifyOptions {
    bool compute_actual = false;
    double tolerance = DecompositionTolerance::internal;
};

struct BoundCertificate {
    bool host_ok = false;
    bool edge_condition_ok = false;
    bool classify_ok = false;
    bool homogeneity_ok = false;
    bool degree_identity_ok = false;

    std::optional<std::string> failed_stage;
    std::string failure_detail;
    std::vector<EdgeViolation> edge_violations;

    int k = 0;
    std::optional<double> bound;
    std::optional<double> delta_actual;
    std::optional<double> slack;
    ClassReport report;

    bool valid() const noexcept { return !failed_stage.has_value(); }
};

/// Runs every check in order and, if all pass, the bound. A failing stage is
/// recorded rather than thrown.
BoundCertificate certify(const Graph &g, const FractionalDecomposition &d, const CertifyOptions &opts = {});

// ---------------------------------------------------------------------------
// Proof replay

struct PartReplay {
    double quadratic = 0;        // (A_i x, x)
    double support_mass = 0;     // (x^i, x^i)
    double lambda_min = 0;       // lambda_min(G_i')
    bool holds = false;
};

struct ProofReplay {
    bool holds = false;
    double lambda_min = 0;        // lambda_min(G)
    int multiplicity = 1;         // of lambda_min(G)
    double weighted_sum = 0;      // sum_i alpha_i (A_i x, x)
    double weighted_minorant = 0; // sum_i alpha_i lambda_min(G_i') (x^i, x^i)
    double class_minorant = 0;    // sum_j lambda_min(H_j) s_j
    std::vector<PartReplay> parts;
};

/// Evaluates the chain of inequalities behind the bound on the unit
/// lambda_min eigenvector of g. Requires a valid certificate for (g, d);
/// throws StageError("replay") otherwise.
ProofReplay replay_proof_chain(const Graph &g, const FractionalDecomposition &d);

// ---------------------------------------------------------------------------
// Constructions

/// The clique decomposition of a line graph L(H) of a regular H: one clique
/// per vertex of H (its star), weight 1. Vertex ids follow gen::line_graph.
FractionalDecomposition line_graph_star_decomposition(const Graph &h);

/// Images in L(H) of cycles of H, given as vertex sequences of H.
std::vector<EdgeSubset> line_graph_cycle_images(const Graph &h, const std::vector<std::vector<Vertex>> &cycles);

} // namespace gapcert
