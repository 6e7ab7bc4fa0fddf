#pragma once

#include <string>
#include <vector>

#include "aim1d/aim.hpp"
#include "aim1d/exec.hpp"
#include "aim1d/potential.hpp"

namespace aim1d {

// Independent brute-force reference: -y'' + V(x) y = E y discretized with
// the 3-point Laplacian on a symmetric interval with hard-wall boundaries.
// Interior points only; x_i = -L + (i+1) h, h = 2L/(N+1).
struct FdGrid {
    double half_width = 12.0;
    int points = 4000;

    double spacing() const { return 2.0 * half_width / (points + 1); }
    double x(int i) const { return -half_width + (i + 1) * spacing(); }

    void validate() const {
        if (!(half_width > 0))
            throw UsageError("fd grid: half width must be positive");
        if (points < 3)
            throw UsageError("fd grid: at least 3 interior points required");
    }
};

struct TridiagonalOperator {
    std::vector<double> diag; // 2/h^2 + V(x_i)
    std::vector<double> off;  // -1/h^2, one entry fewer
};

// Throws OracleInapplicable when the potential overflows somewhere on the
// grid (the unbounded family at large L).
TridiagonalOperator build_hamiltonian(const PotentialSpec& spec, const FdGrid& grid);

// Number of eigenvalues strictly below t (Sturm sequence sign count).
int sturm_count_below(const TridiagonalOperator& op, double t);

// The m smallest eigenvalues by Sturm-count bisection, each to ~1e-10
// absolute (or a few ulps at large magnitudes). Eigenvalue searches are
// independent, so Exec::par fans them out.
std::vector<double> lowest_eigenvalues(const TridiagonalOperator& op, int m, Exec ex = Exec::par);

struct OracleRow {
    double aim_energy = 0;
    double fd_energy = 0;
    double abs_dev = 0;
    double rel_dev = 0;
    bool fd_stable = false; // survives L -> 1.25 L and N -> 2N within 1e-4
};

struct OracleComparison {
    bool advisory = false; // unbounded tails: hard walls are only an approximation
    FdGrid grid;
    std::vector<double> fd_eigenvalues;       // at (L, N)
    std::vector<double> fd_eigenvalues_wide;  // at (1.25 L, N)
    std::vector<double> fd_eigenvalues_fine;  // at (L, 2N)
    std::vector<bool> fd_stable;              // per fd_eigenvalues entry
    std::vector<OracleRow> rows;              // one per AIM bound state
};

// Truncation-stability tolerance that defines oracle trust.
inline constexpr double kFdStabilityTol = 1e-4;

// Solves the spectrum twice: with the iteration scheme and with the
// finite-difference operator, and matches AIM bound states to the nearest
// truncation-stable FD eigenvalues. For the unbounded family the comparison
// is advisory only; spurious plunging states are expected and flagged by the
// stability filter.
OracleComparison cross_validate(const PotentialSpec& spec, const SolverConfig& cfg,
                                const FdGrid& grid, int m, Exec ex = Exec::par);

} // namespace aim1d
