#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "aim1d/energy_poly.hpp"
#include "aim1d/errors.hpp"
#include "aim1d/exec.hpp"
#include "aim1d/jet.hpp"
#include "aim1d/potential.hpp"
#include "aim1d/roots.hpp"

namespace aim1d {

// One iterate of the coefficient recurrence
//
//   lambda_k = lambda_{k-1}' + s_{k-1} + lambda0 lambda_{k-1}
//   s_k      = s_{k-1}'      + s0      lambda_{k-1}
//
// kept as jets at the common expansion point. Each step costs one jet order
// (the derivative), so iterate k has order (initial order - k).
template <class R>
struct AimIterateT {
    int k = 0;
    BasicJet<R> lambda_k;
    BasicJet<R> s_k;
};

using AimIterate = AimIterateT<double>;

enum class Precision { dbl, extended };

// Iteration depth convention: the quantization polynomial reported for
// iteration count k is built from recurrence iterates k-2 and k-1, so the
// smallest admissible k is 2 and a depth-k run applies the recurrence k-1
// times. With this counting the harmonic-oscillator fixture yields exactly
// the roots {1, 3, ..., 2k-1} at depth k.
//
// u0 = NaN and an unbounded window mean "derive from the potential":
// resolved_for() fills in the barrier-top expansion point and the window
// [V(0) - 20, V(0) + 200].
struct SolverConfig {
    double u0 = std::numeric_limits<double>::quiet_NaN();
    int k_max = 12;
    int jet_order = 0; // 0 = auto (k_max + 2)
    double tol_converge = 1e-6;
    double tol_imag = 1e-4;
    double window_lo = -std::numeric_limits<double>::infinity();
    double window_hi = std::numeric_limits<double>::infinity();
    Precision precision = Precision::dbl;

    int resolved_jet_order() const { return jet_order > 0 ? jet_order : k_max + 2; }

    void validate() const {
        if (k_max < 2)
            throw UsageError("solver: k >= 2 required (the quantization condition needs two iterates)");
        if (resolved_jet_order() < k_max + 2)
            throw UsageError("solver: jet_order must be >= k_max + 2");
        if (!(tol_converge > 0) || !(tol_imag > 0))
            throw UsageError("solver: tolerances must be positive");
        if (!(window_lo < window_hi))
            throw UsageError("solver: energy window must have lower < upper");
    }

    SolverConfig resolved_for(const PotentialSpec& spec) const {
        SolverConfig r = *this;
        if (std::isnan(r.u0))
            r.u0 = default_u0(spec);
        if (std::isinf(r.window_lo) && std::isinf(r.window_hi)) {
            const double v0 = v_eval(spec, 0.0);
            r.window_lo = v0 - 20.0;
            r.window_hi = v0 + 200.0;
        }
        return r;
    }
};

// One tracked root of the quantization polynomial.
struct EigenvalueCandidate {
    std::complex<double> energy;
    int first_seen_k = 0;
    double last_delta = -1.0; // |E at k - E at k-1|; -1 until matched twice
    double residual = -1.0;   // |delta(energy)| of the final unit-scaled polynomial
    bool converged = false;
};

template <class R>
AimIterateT<R> aim_step(const AimIterateT<R>& prev, const CoefficientPairT<R>& base) {
    if (prev.lambda_k.u0 != base.u0)
        throw UsageError("aim_step: iterate and base expanded at different points");
    const int target = prev.lambda_k.order() - 1; // jet_derivative rejects order 0
    auto d_lambda = jet_derivative(prev.lambda_k);
    auto d_s = jet_derivative(prev.s_k);
    const auto lam_prev = jet_truncate(prev.lambda_k, target);
    const auto s_prev = jet_truncate(prev.s_k, target);
    const auto l0 = jet_truncate(base.lambda0, target);
    const auto s0 = jet_truncate(base.s0, target);

    AimIterateT<R> next;
    next.k = prev.k + 1;
    next.lambda_k = jet_add(jet_add(d_lambda, s_prev), jet_mul(l0, lam_prev));
    next.s_k = jet_add(d_s, jet_mul(s0, lam_prev));
    return next;
}

// delta = s_{k-1} lambda_k - s_k lambda_{k-1}, evaluated at the expansion
// point (constant jet coefficient), as a polynomial in E scaled to unit
// largest coefficient. Roots are invariant under the scaling.
template <class R>
BasicEnergyPoly<R> discriminant(const AimIterateT<R>& curr, const AimIterateT<R>& prev) {
    if (curr.k != prev.k + 1)
        throw UsageError("discriminant: iterates must be consecutive");
    if (curr.lambda_k.u0 != prev.lambda_k.u0)
        throw UsageError("discriminant: iterates expanded at different points");
    auto delta = prev.s_k.coeffs[0] * curr.lambda_k.coeffs[0] -
                 curr.s_k.coeffs[0] * prev.lambda_k.coeffs[0];
    const R scale = max_abs_coeff(delta);
    if (scale == R(0))
        throw DegenerateDiscriminant(
            "discriminant identically zero at k = " + std::to_string(curr.k) +
            " (expansion point pathological for this depth)");
    return delta * std::complex<R>(R(1) / scale);
}

namespace detail {

template <class R>
struct Track {
    std::complex<R> energy;
    int first_seen_k = 0;
    R last_delta = R(-1);
    int streak = 0; // consecutive depths with a small update
};

// Greedy nearest-neighbour assignment of this depth's kept roots to the
// live tracks; ties broken toward the root with the smaller imaginary part.
template <class R>
void match_roots(std::vector<Track<R>>& tracks, const std::vector<std::complex<R>>& roots,
                 int k, R tol_converge) {
    struct Edge {
        R dist;
        R imag;
        std::size_t track, root;
    };
    std::vector<Edge> edges;
    edges.reserve(tracks.size() * roots.size());
    for (std::size_t t = 0; t < tracks.size(); ++t)
        for (std::size_t r = 0; r < roots.size(); ++r)
            edges.push_back({std::abs(roots[r] - tracks[t].energy),
                             std::abs(roots[r].imag()), t, r});
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        if (a.dist != b.dist)
            return a.dist < b.dist;
        if (a.imag != b.imag)
            return a.imag < b.imag;
        if (a.track != b.track)
            return a.track < b.track;
        return a.root < b.root;
    });

    std::vector<char> track_used(tracks.size(), 0), root_used(roots.size(), 0);
    for (const auto& e : edges) {
        if (track_used[e.track] || root_used[e.root])
            continue;
        track_used[e.track] = 1;
        root_used[e.root] = 1;
        auto& tr = tracks[e.track];
        tr.last_delta = e.dist;
        tr.energy = roots[e.root];
        tr.streak = e.dist < tol_converge ? tr.streak + 1 : 0;
    }
    // tracks with no root this depth lose their convergence streak
    for (std::size_t t = 0; t < tracks.size(); ++t)
        if (!track_used[t])
            tracks[t].streak = 0;
    for (std::size_t r = 0; r < roots.size(); ++r)
        if (!root_used[r])
            tracks.push_back({roots[r], k, R(-1), 0});
}

} // namespace detail

// Runs the recurrence to depth cfg.k_max, extracting and tracking the roots
// of the quantization polynomial at every depth. Returns all tracked
// candidates sorted by Re E; a candidate is converged once its root moved by
// less than tol_converge over two consecutive depths.
template <class R>
std::vector<EigenvalueCandidate> solve_t(const CoefficientPairT<R>& base, const SolverConfig& cfg,
                                         Exec ex = Exec::par) {
    cfg.validate();
    const int order = cfg.resolved_jet_order();
    if (base.lambda0.order() < order)
        throw UsageError("solve: coefficient jets shorter than the configured jet order");

    AimIterateT<R> prev{0, jet_truncate(base.lambda0, order), jet_truncate(base.s0, order)};
    std::vector<detail::Track<R>> tracks;
    BasicEnergyPoly<R> delta_final;

    for (int k = 2; k <= cfg.k_max; ++k) {
        auto curr = aim_step(prev, base);
        const auto delta = discriminant(curr, prev);
        delta_final = delta;

        if (delta.degree() >= 1) {
            const auto roots = poly_roots(delta, ex);
            std::vector<std::complex<R>> kept;
            for (const auto& z : roots)
                if (std::abs(z.imag()) < static_cast<R>(cfg.tol_imag) &&
                    z.real() > static_cast<R>(cfg.window_lo) &&
                    z.real() < static_cast<R>(cfg.window_hi))
                    kept.push_back(z);
            detail::match_roots(tracks, kept, k, static_cast<R>(cfg.tol_converge));
        } else {
            for (auto& t : tracks)
                t.streak = 0;
        }

        // joint rescale of the iterate pair; the recurrence is linear in the
        // pair, so roots of every later discriminant are unchanged and the
        // coefficients stay inside the floating range
        const R mag = std::max(max_abs_coeff(curr.lambda_k), max_abs_coeff(curr.s_k));
        if (mag > R(0)) {
            curr.lambda_k = jet_scale(curr.lambda_k, std::complex<R>(R(1) / mag));
            curr.s_k = jet_scale(curr.s_k, std::complex<R>(R(1) / mag));
        }
        prev = std::move(curr);
    }

    std::vector<EigenvalueCandidate> out;
    out.reserve(tracks.size());
    for (const auto& t : tracks) {
        EigenvalueCandidate c;
        c.energy = {static_cast<double>(t.energy.real()), static_cast<double>(t.energy.imag())};
        c.first_seen_k = t.first_seen_k;
        c.last_delta = static_cast<double>(t.last_delta);
        c.residual = static_cast<double>(std::abs(eval(delta_final, t.energy)));
        c.converged = t.streak >= 2;
        out.push_back(c);
    }
    std::sort(out.begin(), out.end(), [](const EigenvalueCandidate& x, const EigenvalueCandidate& y) {
        if (x.energy.real() != y.energy.real())
            return x.energy.real() < y.energy.real();
        return x.energy.imag() < y.energy.imag();
    });
    return out;
}

inline std::vector<EigenvalueCandidate> solve(const CoefficientPair& base, const SolverConfig& cfg,
                                              Exec ex = Exec::par) {
    return solve_t<double>(base, cfg, ex);
}

// Builds the coefficient jets for the spec at cfg's expansion point and runs
// the solver at the configured precision (double, or 80-bit extended for
// closely spaced high-lying roots that double cannot isolate).
std::vector<EigenvalueCandidate> solve(const PotentialSpec& spec, const SolverConfig& cfg,
                                       Exec ex = Exec::par);

} // namespace aim1d
