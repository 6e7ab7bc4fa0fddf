#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "aim1d/energy_poly.hpp"
#include "aim1d/errors.hpp"
#include "aim1d/exec.hpp"

namespace aim1d {

namespace detail {

// Horner evaluation of p and p' in one pass.
template <class R>
void horner2(const std::vector<std::complex<R>>& c, std::complex<R> z,
             std::complex<R>& p, std::complex<R>& dp) {
    p = c.back();
    dp = std::complex<R>{};
    for (std::size_t j = c.size() - 1; j-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[j];
    }
}

// One Aberth-Ehrlich update for root i against a fixed snapshot of all
// current root estimates. Pure function of the snapshot, so the sweep can be
// run serially or in parallel with bitwise-identical results.
template <class R>
std::complex<R> aberth_update(const std::vector<std::complex<R>>& coeffs,
                              const std::vector<std::complex<R>>& z, std::size_t i) {
    using C = std::complex<R>;
    C p, dp;
    horner2(coeffs, z[i], p, dp);
    if (p == C{})
        return z[i];
    C ratio;
    if (dp == C{}) {
        // flat spot: nudge off it, the next sweep recovers
        ratio = C(std::numeric_limits<R>::epsilon());
    } else {
        ratio = p / dp;
    }
    C sum{};
    for (std::size_t j = 0; j < z.size(); ++j) {
        if (j == i)
            continue;
        const C d = z[i] - z[j];
        if (d != C{})
            sum += C(R(1)) / d;
    }
    const C denom = C(R(1)) - ratio * sum;
    const C w = (denom == C{}) ? ratio : ratio / denom;
    return z[i] - w;
}

// Initial root estimates from the Newton polygon: the upper convex hull of
// (j, ln|c_j|) splits the roots into magnitude clusters, and each hull
// segment from j1 to j2 contributes j2-j1 estimates of modulus
// (|c_j1|/|c_j2|)^(1/(j2-j1)). This keeps the start configuration sane when
// the leading coefficients are many orders of magnitude below the bulk,
// which the quantization polynomials routinely are.
template <class R>
std::vector<std::complex<R>> initial_estimates(const std::vector<std::complex<R>>& c) {
    using C = std::complex<R>;
    const std::size_t n = c.size() - 1;
    struct Pt {
        double x, y;
    };
    std::vector<Pt> pts;
    pts.reserve(c.size());
    for (std::size_t j = 0; j <= n; ++j)
        if (c[j] != C{})
            pts.push_back({static_cast<double>(j), std::log(static_cast<double>(std::abs(c[j])))});
    std::vector<Pt> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull.back();
            if ((p.x - a.x) * (b.y - a.y) - (p.y - a.y) * (b.x - a.x) <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }

    std::vector<C> z;
    z.reserve(n);
    const double two_pi = 6.283185307179586;
    for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
        const std::size_t m = static_cast<std::size_t>(hull[s + 1].x - hull[s].x);
        const double r = std::exp((hull[s].y - hull[s + 1].y) / static_cast<double>(m));
        for (std::size_t t = 0; t < m; ++t) {
            const double ang = two_pi * (static_cast<double>(z.size()) + 0.5) /
                                   static_cast<double>(n) +
                               0.7 + 0.3 * static_cast<double>(s);
            z.push_back(C(static_cast<R>(r * std::cos(ang)), static_cast<R>(r * std::sin(ang))));
        }
    }
    // degenerate hulls (single point) cannot happen after zero-root
    // stripping, but guard anyway
    while (z.size() < n)
        z.push_back(C(R(1), R(1)));
    return z;
}

// Newton refinement until |p| stagnates; returns the best iterate seen.
template <class R>
std::complex<R> newton_polish(const std::vector<std::complex<R>>& coeffs, std::complex<R> z) {
    using C = std::complex<R>;
    C best = z;
    C p, dp;
    horner2(coeffs, z, p, dp);
    R best_abs = std::abs(p);
    for (int it = 0; it < 40 && best_abs > R(0); ++it) {
        if (dp == C{})
            break;
        z = z - p / dp;
        horner2(coeffs, z, p, dp);
        const R a = std::abs(p);
        if (a < best_abs) {
            best_abs = a;
            best = z;
        } else {
            break;
        }
    }
    return best;
}

} // namespace detail

// All complex roots of p by Aberth-Ehrlich simultaneous iteration (Jacobi
// form) followed by per-root Newton refinement. Roots are returned sorted by
// (Re, Im); near-multiple roots come out as close clusters, see
// cluster_roots. Degree < 1 is an error.
template <class R>
std::vector<std::complex<R>> poly_roots(const BasicEnergyPoly<R>& poly, Exec ex = Exec::par) {
    using C = std::complex<R>;
    if (poly.degree() < 1)
        throw NoRoots("poly_roots: polynomial has no roots (degree < 1)");

    // factor out exact roots at the origin
    std::vector<C> c = poly.coeffs;
    std::size_t zero_roots = 0;
    while (c.size() > 1 && c.front() == C{}) {
        c.erase(c.begin());
        ++zero_roots;
    }

    std::vector<C> roots(zero_roots, C{});
    const std::size_t n = c.size() - 1;
    if (n >= 1) {
        // scale to unit largest coefficient; root locations are unaffected
        R mag{};
        for (const auto& cc : c)
            mag = std::max(mag, std::abs(cc));
        for (auto& cc : c)
            cc /= mag;

        std::vector<C> z = detail::initial_estimates(c);

        const R tol = R(8) * std::numeric_limits<R>::epsilon();
        std::vector<C> next(n);
        for (int sweep = 0; sweep < 300; ++sweep) {
            bool done = true;
            if (ex == Exec::par) {
#pragma omp parallel for schedule(static) reduction(&& : done)
                for (long long i = 0; i < static_cast<long long>(n); ++i) {
                    next[i] = detail::aberth_update(c, z, static_cast<std::size_t>(i));
                    done = done && std::abs(next[i] - z[i]) <= tol * (R(1) + std::abs(next[i]));
                }
            } else {
                for (std::size_t i = 0; i < n; ++i) {
                    next[i] = detail::aberth_update(c, z, i);
                    done = done && std::abs(next[i] - z[i]) <= tol * (R(1) + std::abs(next[i]));
                }
            }
            z.swap(next);
            if (done)
                break;
        }

        if (ex == Exec::par) {
#pragma omp parallel for schedule(static)
            for (long long i = 0; i < static_cast<long long>(n); ++i)
                z[i] = detail::newton_polish(c, z[i]);
        } else {
            for (std::size_t i = 0; i < n; ++i)
                z[i] = detail::newton_polish(c, z[i]);
        }
        roots.insert(roots.end(), z.begin(), z.end());
    }

    std::sort(roots.begin(), roots.end(), [](const C& a, const C& b) {
        if (a.real() != b.real())
            return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

template <class R>
struct RootCluster {
    std::complex<R> value; // cluster mean
    int multiplicity = 1;
};

// Groups near-coincident roots; used to report multiplicities.
template <class R>
std::vector<RootCluster<R>> cluster_roots(const std::vector<std::complex<R>>& roots,
                                          R tol = R(1e-8)) {
    std::vector<RootCluster<R>> clusters;
    for (const auto& z : roots) {
        RootCluster<R>* hit = nullptr;
        for (auto& cl : clusters)
            if (std::abs(z - cl.value) <= tol) {
                hit = &cl;
                break;
            }
        if (hit) {
            const auto m = static_cast<R>(hit->multiplicity);
            hit->value = (hit->value * m + z) / (m + R(1));
            ++hit->multiplicity;
        } else {
            clusters.push_back({z, 1});
        }
    }
    return clusters;
}

} // namespace aim1d
