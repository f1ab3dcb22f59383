#pragma once

#include "gapcert/graph.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace gapcert {

/// maximize c.x  subject to  A x = b,  x >= 0.  A is dense row-major.
class LinearProgram {
public:
    explicit LinearProgram(std::size_t variables = 0) : _vars(variables), _objective(variables, 0.0) {}

    std::size_t variables() const noexcept { return _vars; }
    std::size_t constraints() const noexcept { return _rhs.size(); }

    std::vector<double> &objective() noexcept { return _objective; }
    const std::vector<double> &objective() const noexcept { return _objective; }

    /// Appends the equality row . x = rhs; the row length must equal variables().
    void add_equality(std::vector<double> row, double rhs);

    double coefficient(std::size_t row, std::size_t col) const { return _matrix[row * _vars + col]; }
    double rhs(std::size_t row) const { return _rhs[row]; }
    const std::vector<double> &matrix() const noexcept { return _matrix; }

    /// Throws InputError on inconsistent sizes or non-finite entries.
    void validate() const;

private:
    std::size_t _vars;
    std::vector<double> _objective;
    std::vector<double> _matrix;
    std::vector<double> _rhs;
};

enum class LpStatus { optimal, infeasible, unbounded };

std::string to_string(LpStatus status);

struct LPSolution {
    LpStatus status = LpStatus::infeasible;
    std::vector<double> values;
    double objective = 0;
    std::size_t iterations = 0;
};

struct SimplexOptions {
    double tolerance = 1e-9;        // feasibility and optimality
    double pivot_tolerance = 1e-12; // smaller pivots are a breakdown
    std::size_t max_iterations = 200000;
};

/// Pivot failure; the message carries the basis at the time of failure.
class NumericalBreakdown : public StageError {
public:
    explicit NumericalBreakdown(const std::string &what) : StageError("lp", what) {}
};

/// Two-phase dense tableau simplex with Bland's rule. Deterministic for a
/// given row and column order. Artificial variables left basic at level zero
/// after phase one are pivoted out, or their rows dropped when redundant.
LPSolution solve_lp(const LinearProgram &lp, const SimplexOptions &opts = {});

/// Largest |A x - b| over rows.
double constraint_residual(const LinearProgram &lp, const std::vector<double> &x);

} // namespace gapcert
