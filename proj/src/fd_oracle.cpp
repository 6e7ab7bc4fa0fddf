#include "aim1d/fd_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "aim1d/spectrum.hpp"

namespace aim1d {

TridiagonalOperator build_hamiltonian(const PotentialSpec& spec, const FdGrid& grid) {
    grid.validate();
    const double h = grid.spacing();
    const double inv_h2 = 1.0 / (h * h);
    TridiagonalOperator op;
    op.diag.resize(grid.points);
    op.off.assign(grid.points - 1, -inv_h2);
    for (int i = 0; i < grid.points; ++i) {
        try {
            op.diag[i] = 2.0 * inv_h2 + v_eval(spec, grid.x(i));
        } catch (const PotentialOverflow&) {
            throw OracleInapplicable("potential overflows on the grid at x = " +
                                     std::to_string(grid.x(i)) +
                                     "; shrink the half width");
        }
    }
    return op;
}

int sturm_count_below(const TridiagonalOperator& op, double t) {
    // LDL^T pivot signs; guarded against vanishing pivots
    constexpr double pivmin = 1e-280;
    int count = 0;
    double q = op.diag[0] - t;
    if (std::fabs(q) < pivmin)
        q = -pivmin;
    if (q < 0)
        ++count;
    for (std::size_t i = 1; i < op.diag.size(); ++i) {
        q = op.diag[i] - t - op.off[i - 1] * op.off[i - 1] / q;
        if (std::fabs(q) < pivmin)
            q = -pivmin;
        if (q < 0)
            ++count;
    }
    return count;
}

namespace {

double bisect_kth(const TridiagonalOperator& op, int k, double lo, double hi) {
    // invariant: count(lo) < k+1 <= count(hi)
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break; // interval at floating resolution
        if (sturm_count_below(op, mid) >= k + 1)
            hi = mid;
        else
            lo = mid;
        const double tol = std::max(1e-12, 4.0 * std::numeric_limits<double>::epsilon() *
                                               std::max(std::fabs(lo), std::fabs(hi)));
        if (hi - lo <= tol)
            break;
    }
    return 0.5 * (lo + hi);
}

} // namespace

std::vector<double> lowest_eigenvalues(const TridiagonalOperator& op, int m, Exec ex) {
    const int n = static_cast<int>(op.diag.size());
    if (m < 1 || m > n)
        throw UsageError("lowest_eigenvalues: need 1 <= m <= grid points");

    // Gershgorin bounds
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int i = 0; i < n; ++i) {
        const double r = (i > 0 ? std::fabs(op.off[i - 1]) : 0.0) +
                         (i + 1 < n ? std::fabs(op.off[i]) : 0.0);
        lo = std::min(lo, op.diag[i] - r);
        hi = std::max(hi, op.diag[i] + r);
    }
    lo = std::nextafter(lo, -std::numeric_limits<double>::infinity());
    hi = std::nextafter(hi, std::numeric_limits<double>::infinity());

    std::vector<double> ev(m);
    if (ex == Exec::par) {
#pragma omp parallel for schedule(static)
        for (int k = 0; k < m; ++k)
            ev[k] = bisect_kth(op, k, lo, hi);
    } else {
        for (int k = 0; k < m; ++k)
            ev[k] = bisect_kth(op, k, lo, hi);
    }
    return ev;
}

namespace {

double nearest(const std::vector<double>& values, double target) {
    double best = std::numeric_limits<double>::quiet_NaN();
    double dist = std::numeric_limits<double>::infinity();
    for (double v : values) {
        const double d = std::fabs(v - target);
        if (d < dist) {
            dist = d;
            best = v;
        }
    }
    return best;
}

} // namespace

OracleComparison cross_validate(const PotentialSpec& spec, const SolverConfig& cfg,
                                const FdGrid& grid, int m, Exec ex) {
    grid.validate();
    OracleComparison cmp;
    cmp.grid = grid;
    cmp.advisory = spec.family == Family::cosh_sech ||
                   (spec.family == Family::modified_cosh_sech && spec.c == 0.0);

    FdGrid wide = grid;
    wide.half_width = 1.25 * grid.half_width;
    FdGrid fine = grid;
    fine.points = 2 * grid.points;

    cmp.fd_eigenvalues = lowest_eigenvalues(build_hamiltonian(spec, grid), m, ex);
    cmp.fd_eigenvalues_wide = lowest_eigenvalues(build_hamiltonian(spec, wide), m, ex);
    cmp.fd_eigenvalues_fine = lowest_eigenvalues(build_hamiltonian(spec, fine), m, ex);

    cmp.fd_stable.resize(cmp.fd_eigenvalues.size());
    for (std::size_t i = 0; i < cmp.fd_eigenvalues.size(); ++i) {
        const double e = cmp.fd_eigenvalues[i];
        cmp.fd_stable[i] = std::fabs(e - nearest(cmp.fd_eigenvalues_wide, e)) <= kFdStabilityTol &&
                           std::fabs(e - nearest(cmp.fd_eigenvalues_fine, e)) <= kFdStabilityTol;
    }

    const auto rep = solve_spectrum(spec, cfg, 0.1, ex);
    for (double aim_e : rep.bound_states) {
        OracleRow row;
        row.aim_energy = aim_e;
        std::size_t best = 0;
        double dist = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < cmp.fd_eigenvalues.size(); ++i) {
            const double d = std::fabs(cmp.fd_eigenvalues[i] - aim_e);
            if (d < dist) {
                dist = d;
                best = i;
            }
        }
        if (!cmp.fd_eigenvalues.empty()) {
            row.fd_energy = cmp.fd_eigenvalues[best];
            row.abs_dev = dist;
            row.rel_dev = dist / std::max(std::fabs(aim_e), 1e-300);
            row.fd_stable = cmp.fd_stable[best];
        }
        cmp.rows.push_back(row);
    }
    return cmp;
}

} // namespace aim1d
