#pragma once

#include "gapcert/graph.hpp"

#include <span>
#include <vector>

namespace gapcert {

/// Tolerances shared by the spectral and certification code.
struct Tolerance {
    static constexpr double convergence = 1e-11; // Jacobi off-diagonal cut-off
    static constexpr double assertion = 1e-8;    // comparisons against spectra
    static constexpr double symmetry = 1e-12;
};

struct JacobiOptions {
    double convergence = Tolerance::convergence;
    int max_sweeps = 100;
};

/// Eigenpairs of a dense symmetric matrix. values are sorted descending and
/// column j of the row-major n x n `vectors` belongs to values[j].
struct SymmetricEigen {
    int n = 0;
    std::vector<double> values;
    std::vector<double> vectors;
    int sweeps = 0;

    double vector_entry(int row, int col) const { return vectors[static_cast<std::size_t>(row) * n + col]; }
    std::vector<double> vector(int col) const;
};

class NumericalError : public StageError {
public:
    explicit NumericalError(const std::string &what) : StageError("spectral", what) {}
};

/// Jacobi eigensolver. Each sweep applies n-1 rounds of disjoint rotations
/// (round-robin pairing); rotations within a round run in parallel. Throws
/// NumericalError for asymmetric input or when max_sweeps is exhausted.
SymmetricEigen eigen_symmetric(std::span<const double> matrix, int n, const JacobiOptions &opts = {});

namespace serial {
/// Reference cyclic-by-row Jacobi, one rotation at a time.
SymmetricEigen eigen_symmetric(std::span<const double> matrix, int n, const JacobiOptions &opts = {});
} // namespace serial

/// Eigenvalues only, sorted descending.
std::vector<double> eigenvalues_symmetric(std::span<const double> matrix, int n, const JacobiOptions &opts = {});

struct SpectralSummary {
    std::vector<double> eigenvalues; // descending
    double lambda_1 = 0;
    double lambda_min = 0;
    double delta = 0; // lambda_min + lambda_1
};

SpectralSummary spectral_summary(const Graph &g);

/// Unit vector in the lambda_min eigenspace, sign fixed so the first nonzero
/// coordinate is positive, and the multiplicity of lambda_min.
struct MinEigenvector {
    double lambda_min = 0;
    std::vector<double> x;
    int multiplicity = 1;
};

MinEigenvector min_eigenvector(const Graph &g);

/// Smallest adjacency eigenvalue of the odd cycle C_{2h+1}: -2cos(pi/(2h+1)).
double cycle_lambda_min(int h);

} // namespace gapcert
