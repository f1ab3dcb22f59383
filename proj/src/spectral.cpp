#include "gapcert/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace gapcert {

namespace {

// Rotation zeroing a(p,q) in P^T A P with P_pp = P_qq = c, P_pq = s, P_qp = -s.
struct Rotation {
    int p = 0;
    int q = 0;
    double c = 1;
    double s = 0;
    bool active = false;
};

Rotation make_rotation(const std::vector<double> &a, int n, int p, int q)
{
    Rotation r{p, q};
    double apq = a[static_cast<std::size_t>(p) * n + q];
    if (apq == 0.0)
        return r;
    double theta = (a[static_cast<std::size_t>(q) * n + q] - a[static_cast<std::size_t>(p) * n + p]) / (2.0 * apq);
    double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    r.c = 1.0 / std::sqrt(t * t + 1.0);
    r.s = t * r.c;
    r.active = true;
    return r;
}

// Rows p,q of A <- P^T A.
inline void rotate_rows(std::vector<double> &a, int n, const Rotation &r)
{
    double *rp = a.data() + static_cast<std::size_t>(r.p) * n;
    double *rq = a.data() + static_cast<std::size_t>(r.q) * n;
    for (int k = 0; k < n; ++k) {
        double x = rp[k];
        double y = rq[k];
        rp[k] = r.c * x - r.s * y;
        rq[k] = r.s * x + r.c * y;
    }
}

// Columns p,q of row `row` of M <- M P.
inline void rotate_columns_in_row(double *row, const Rotation &r)
{
    double x = row[r.p];
    double y = row[r.q];
    row[r.p] = r.c * x - r.s * y;
    row[r.q] = r.s * x + r.c * y;
}

double max_off_diagonal(const std::vector<double> &a, int n)
{
    double m = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            m = std::max(m, std::abs(a[static_cast<std::size_t>(i) * n + j]));
    return m;
}

std::vector<double> validated_copy(std::span<const double> matrix, int n)
{
    if (n < 0 || matrix.size() != static_cast<std::size_t>(n) * n)
        throw NumericalError("matrix size does not match n=" + std::to_string(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double d = matrix[static_cast<std::size_t>(i) * n + j] - matrix[static_cast<std::size_t>(j) * n + i];
            if (!(std::abs(d) <= Tolerance::symmetry)) {
                std::ostringstream msg;
                msg << "matrix not symmetric at (" << i << "," << j << "), difference " << d;
                throw NumericalError(msg.str());
            }
        }
    return {matrix.begin(), matrix.end()};
}

std::vector<double> identity(int n)
{
    std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        v[static_cast<std::size_t>(i) * n + i] = 1.0;
    return v;
}

// Sort eigenpairs descending and normalise vector signs.
SymmetricEigen finish(const std::vector<double> &a, const std::vector<double> &v, int n, int sweeps)
{
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return a[static_cast<std::size_t>(x) * n + x] > a[static_cast<std::size_t>(y) * n + y];
    });

    SymmetricEigen out;
    out.n = n;
    out.sweeps = sweeps;
    out.values.resize(n);
    out.vectors.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int j = 0; j < n; ++j) {
        int src = order[j];
        out.values[j] = a[static_cast<std::size_t>(src) * n + src];
        double norm = 0;
        for (int i = 0; i < n; ++i)
            norm += v[static_cast<std::size_t>(i) * n + src] * v[static_cast<std::size_t>(i) * n + src];
        norm = std::sqrt(norm);
        double sign = 1.0;
        for (int i = 0; i < n; ++i) {
            double x = v[static_cast<std::size_t>(i) * n + src];
            if (std::abs(x) > 1e-12) {
                sign = x > 0 ? 1.0 : -1.0;
                break;
            }
        }
        for (int i = 0; i < n; ++i)
            out.vectors[static_cast<std::size_t>(i) * n + j] = sign * v[static_cast<std::size_t>(i) * n + src] / norm;
    }
    return out;
}

[[noreturn]] void fail_convergence(double residual, int sweeps)
{
    std::ostringstream msg;
    msg << "Jacobi did not converge after " << sweeps << " sweeps, residual " << residual;
    throw NumericalError(msg.str());
}

} // namespace

std::vector<double> SymmetricEigen::vector(int col) const
{
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i)
        x[i] = vector_entry(i, col);
    return x;
}

SymmetricEigen eigen_symmetric(std::span<const double> matrix, int n, const JacobiOptions &opts)
{
    auto a = validated_copy(matrix, n);
    auto v = identity(n);
    if (n <= 1)
        return finish(a, v, n, 0);

    // Round-robin schedule over an even number of slots; slot index n is a
    // bye when n is odd.
    const int slots = n + (n % 2);
    const int pairs = slots / 2;
    std::vector<int> ring(slots);
    std::iota(ring.begin(), ring.end(), 0);
    std::vector<Rotation> rots(pairs);
    const bool par = n >= 64;

    int sweep = 0;
    for (; sweep < opts.max_sweeps; ++sweep) {
        if (max_off_diagonal(a, n) < opts.convergence)
            return finish(a, v, n, sweep);

        for (int round = 0; round < slots - 1; ++round) {
#pragma omp parallel for schedule(static) if (par)
            for (int k = 0; k < pairs; ++k) {
                int x = ring[k];
                int y = ring[slots - 1 - k];
                if (x >= n || y >= n) {
                    rots[k] = Rotation{};
                    continue;
                }
                rots[k] = make_rotation(a, n, std::min(x, y), std::max(x, y));
            }

#pragma omp parallel for schedule(static) if (par)
            for (int k = 0; k < pairs; ++k)
                if (rots[k].active)
                    rotate_rows(a, n, rots[k]);

#pragma omp parallel for schedule(static) if (par)
            for (int i = 0; i < n; ++i) {
                double *arow = a.data() + static_cast<std::size_t>(i) * n;
                double *vrow = v.data() + static_cast<std::size_t>(i) * n;
                for (const auto &r : rots)
                    if (r.active) {
                        rotate_columns_in_row(arow, r);
                        rotate_columns_in_row(vrow, r);
                    }
            }

            for (const auto &r : rots)
                if (r.active) {
                    a[static_cast<std::size_t>(r.p) * n + r.q] = 0.0;
                    a[static_cast<std::size_t>(r.q) * n + r.p] = 0.0;
                }

            std::rotate(ring.begin() + 1, ring.end() - 1, ring.end());
        }
    }
    double residual = max_off_diagonal(a, n);
    if (residual < opts.convergence)
        return finish(a, v, n, sweep);
    fail_convergence(residual, sweep);
}

namespace serial {

SymmetricEigen eigen_symmetric(std::span<const double> matrix, int n, const JacobiOptions &opts)
{
    auto a = validated_copy(matrix, n);
    auto v = identity(n);

    int sweep = 0;
    for (; sweep < opts.max_sweeps; ++sweep) {
        if (max_off_diagonal(a, n) < opts.convergence)
            return finish(a, v, n, sweep);
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                auto r = make_rotation(a, n, p, q);
                if (!r.active)
                    continue;
                rotate_rows(a, n, r);
                for (int i = 0; i < n; ++i) {
                    rotate_columns_in_row(a.data() + static_cast<std::size_t>(i) * n, r);
                    rotate_columns_in_row(v.data() + static_cast<std::size_t>(i) * n, r);
                }
                a[static_cast<std::size_t>(p) * n + q] = 0.0;
                a[static_cast<std::size_t>(q) * n + p] = 0.0;
            }
    }
    double residual = max_off_diagonal(a, n);
    if (residual < opts.convergence)
        return finish(a, v, n, sweep);
    fail_convergence(residual, sweep);
}

} // namespace serial

std::vector<double> eigenvalues_symmetric(std::span<const double> matrix, int n, const JacobiOptions &opts)
{
    return eigen_symmetric(matrix, n, opts).values;
}

SpectralSummary spectral_summary(const Graph &g)
{
    if (g.order() == 0)
        throw InputError("spectrum of the empty graph");
    SpectralSummary s;
    s.eigenvalues = eigenvalues_symmetric(g.adjacency_matrix(), g.order());
    s.lambda_1 = s.eigenvalues.front();
    s.lambda_min = s.eigenvalues.back();
    s.delta = s.lambda_min + s.lambda_1;
    return s;
}

MinEigenvector min_eigenvector(const Graph &g)
{
    if (g.order() == 0)
        throw InputError("spectrum of the empty graph");
    auto eig = eigen_symmetric(g.adjacency_matrix(), g.order());
    int last = g.order() - 1;
    MinEigenvector out;
    out.lambda_min = eig.values[last];
    out.x = eig.vector(last);
    out.multiplicity = 0;
    for (double value : eig.values)
        if (std::abs(value - out.lambda_min) <= Tolerance::assertion)
            ++out.multiplicity;
    return out;
}

double cycle_lambda_min(int h)
{
    if (h < 1)
        throw InputError("half odd girth must be at least 1");
    return -2.0 * std::cos(std::numbers::pi / (2 * h + 1));
}

} // namespace gapcert
