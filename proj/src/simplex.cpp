#include "gapcert/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gapcert {

void LinearProgram::add_equality(std::vector<double> row, double rhs)
{
    if (row.size() != _vars)
        throw InputError("constraint row has " + std::to_string(row.size()) + " entries, expected " +
                         std::to_string(_vars));
    _matrix.insert(_matrix.end(), row.begin(), row.end());
    _rhs.push_back(rhs);
}

void LinearProgram::validate() const
{
    if (_objective.size() != _vars || _matrix.size() != _vars * _rhs.size())
        throw InputError("linear program dimensions are inconsistent");
    auto finite = [](double x) { return std::isfinite(x); };
    if (!std::all_of(_objective.begin(), _objective.end(), finite) ||
        !std::all_of(_matrix.begin(), _matrix.end(), finite) || !std::all_of(_rhs.begin(), _rhs.end(), finite))
        throw InputError("linear program has non-finite entries");
}

std::string to_string(LpStatus status)
{
    switch (status) {
    case LpStatus::optimal:
        return "optimal";
    case LpStatus::infeasible:
        return "infeasible";
    case LpStatus::unbounded:
        return "unbounded";
    }
    return "unknown";
}

double constraint_residual(const LinearProgram &lp, const std::vector<double> &x)
{
    double worst = 0;
    for (std::size_t i = 0; i < lp.constraints(); ++i) {
        double sum = -lp.rhs(i);
        for (std::size_t j = 0; j < lp.variables(); ++j)
            sum += lp.coefficient(i, j) * x[j];
        worst = std::max(worst, std::abs(sum));
    }
    return worst;
}

namespace {

class Tableau {
public:
    Tableau(const LinearProgram &lp, const SimplexOptions &opts) : _opts(opts), _n(lp.variables())
    {
        const std::size_t m = lp.constraints();
        _cols = _n + m;
        _rows.assign(m, std::vector<double>(_cols + 1, 0.0));
        _basis.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            double sign = lp.rhs(i) < 0 ? -1.0 : 1.0;
            for (std::size_t j = 0; j < _n; ++j)
                _rows[i][j] = sign * lp.coefficient(i, j);
            _rows[i][_n + i] = 1.0;
            _rows[i][_cols] = sign * lp.rhs(i);
            _basis[i] = _n + i;
            _rhs_scale = std::max(_rhs_scale, std::abs(lp.rhs(i)));
        }
    }

    // Phase one: maximise -(sum of artificials). Returns false if infeasible.
    bool phase_one()
    {
        _obj.assign(_cols + 1, 0.0);
        for (const auto &row : _rows) {
            for (std::size_t j = 0; j < _n; ++j)
                _obj[j] += row[j];
            _obj[_cols] += row[_cols];
        }
        if (run(_cols) != LpStatus::optimal)
            throw NumericalBreakdown("phase one reported an unbounded direction; " + basis_state());
        if (_obj[_cols] > _opts.tolerance * (1.0 + _rhs_scale))
            return false;
        drive_out_artificials();
        return true;
    }

    LpStatus phase_two(const std::vector<double> &cost)
    {
        _obj.assign(_cols + 1, 0.0);
        for (std::size_t j = 0; j < _n; ++j)
            _obj[j] = cost[j];
        for (std::size_t i = 0; i < _rows.size(); ++i) {
            double cb = cost[_basis[i]];
            if (cb == 0.0)
                continue;
            for (std::size_t j = 0; j < _n; ++j)
                _obj[j] -= cb * _rows[i][j];
            _obj[_cols] -= cb * _rows[i][_cols];
        }
        return run(_n);
    }

    std::vector<double> solution() const
    {
        std::vector<double> x(_n, 0.0);
        for (std::size_t i = 0; i < _rows.size(); ++i)
            if (_basis[i] < _n)
                x[_basis[i]] = std::max(0.0, _rows[i][_cols]);
        return x;
    }

    std::size_t iterations() const noexcept { return _iterations; }

private:
    // Bland's rule over the first `allowed` columns.
    LpStatus run(std::size_t allowed)
    {
        for (;;) {
            std::size_t enter = allowed;
            for (std::size_t j = 0; j < allowed; ++j)
                if (_obj[j] > _opts.tolerance) {
                    enter = j;
                    break;
                }
            if (enter == allowed)
                return LpStatus::optimal;

            std::size_t leave = _rows.size();
            double best = 0;
            for (std::size_t i = 0; i < _rows.size(); ++i) {
                double a = _rows[i][enter];
                if (a <= _opts.tolerance)
                    continue;
                double ratio = _rows[i][_cols] / a;
                if (leave == _rows.size() || ratio < best - 1e-12 ||
                    (std::abs(ratio - best) <= 1e-12 && _basis[i] < _basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == _rows.size())
                return LpStatus::unbounded;
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t c)
    {
        if (++_iterations > _opts.max_iterations)
            throw NumericalBreakdown("iteration limit reached; " + basis_state());
        double p = _rows[r][c];
        if (!(std::abs(p) >= _opts.pivot_tolerance))
            throw NumericalBreakdown("pivot " + std::to_string(p) + " at row " + std::to_string(r) + ", column " +
                                     std::to_string(c) + " is below tolerance; " + basis_state());
        auto &prow = _rows[r];
        for (auto &x : prow)
            x /= p;
        prow[c] = 1.0;

        const std::size_t m = _rows.size();
        const std::size_t width = _cols + 1;
#pragma omp parallel for schedule(static) if (m * width > 65536)
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r)
                continue;
            double f = _rows[i][c];
            if (f == 0.0)
                continue;
            auto &row = _rows[i];
            for (std::size_t j = 0; j < width; ++j)
                row[j] -= f * prow[j];
            row[c] = 0.0;
        }
        double f = _obj[c];
        if (f != 0.0) {
            for (std::size_t j = 0; j < width; ++j)
                _obj[j] -= f * prow[j];
            _obj[c] = 0.0;
        }
        _basis[r] = c;
    }

    void drive_out_artificials()
    {
        for (std::size_t i = 0; i < _rows.size();) {
            if (_basis[i] < _n) {
                ++i;
                continue;
            }
            std::size_t best = _n;
            double mag = _opts.tolerance;
            for (std::size_t j = 0; j < _n; ++j)
                if (std::abs(_rows[i][j]) > mag) {
                    mag = std::abs(_rows[i][j]);
                    best = j;
                }
            if (best == _n) {
                // Redundant constraint.
                _rows.erase(_rows.begin() + static_cast<std::ptrdiff_t>(i));
                _basis.erase(_basis.begin() + static_cast<std::ptrdiff_t>(i));
                continue;
            }
            pivot(i, best);
            ++i;
        }
    }

    std::string basis_state() const
    {
        std::ostringstream msg;
        msg << "basis [";
        for (std::size_t i = 0; i < _basis.size(); ++i)
            msg << (i ? " " : "") << _basis[i];
        msg << "]";
        return msg.str();
    }

    const SimplexOptions &_opts;
    std::size_t _n;
    std::size_t _cols = 0;
    std::vector<std::vector<double>> _rows;
    std::vector<double> _obj;
    std::vector<std::size_t> _basis;
    double _rhs_scale = 0;
    std::size_t _iterations = 0;
};

} // namespace

LPSolution solve_lp(const LinearProgram &lp, const SimplexOptions &opts)
{
    lp.validate();
    Tableau tab(lp, opts);
    LPSolution out;
    if (!tab.phase_one()) {
        out.status = LpStatus::infeasible;
        out.iterations = tab.iterations();
        return out;
    }
    out.status = tab.phase_two(lp.objective());
    out.iterations = tab.iterations();
    if (out.status != LpStatus::optimal)
        return out;
    out.values = tab.solution();
    for (std::size_t j = 0; j < lp.variables(); ++j)
        out.objective += lp.objective()[j] * out.values[j];
    return out;
}

} // namespace gapcert
