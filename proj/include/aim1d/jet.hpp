#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "aim1d/energy_poly.hpp"
#include "aim1d/errors.hpp"

namespace aim1d {

// Truncated Taylor expansion at a real point u0. coeffs[m] is the m-th
// Taylor coefficient f^(m)(u0)/m!, so a jet of order N stores exactly N+1
// coefficients. Two flavours share the machinery:
//
//   BasicScalarJet  — complex scalar coefficients, supports the
//                     transcendental compositions (exp, asinh, powers);
//   BasicJet        — BasicEnergyPoly coefficients, the representation the
//                     iteration runs in. E enters only linearly, so the
//                     transcendentals never have to act on polynomials:
//                     E-dependent jets are assembled by lifting scalar jets
//                     and adding the single E-linear term.
template <class R>
struct BasicScalarJet {
    using scalar = std::complex<R>;

    R u0{};
    std::vector<scalar> coeffs;

    BasicScalarJet() = default;
    BasicScalarJet(R u0_, std::vector<scalar> c) : u0(u0_), coeffs(std::move(c)) {}

    static BasicScalarJet constant(R u0, int order, scalar value) {
        BasicScalarJet j;
        j.u0 = u0;
        j.coeffs.assign(static_cast<std::size_t>(order) + 1, scalar{});
        j.coeffs[0] = value;
        return j;
    }

    // the coordinate u itself: [u0, 1, 0, ...]
    static BasicScalarJet variable(R u0, int order) {
        auto j = constant(u0, order, scalar{u0});
        if (order >= 1)
            j.coeffs[1] = scalar{R(1)};
        return j;
    }

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

template <class R>
struct BasicJet {
    using poly = BasicEnergyPoly<R>;

    R u0{};
    std::vector<poly> coeffs;

    BasicJet() = default;
    BasicJet(R u0_, std::vector<poly> c) : u0(u0_), coeffs(std::move(c)) {}

    static BasicJet constant(R u0, int order, poly value) {
        BasicJet j;
        j.u0 = u0;
        j.coeffs.assign(static_cast<std::size_t>(order) + 1, poly{});
        j.coeffs[0] = std::move(value);
        return j;
    }

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

namespace detail {

template <class Jet>
void require_compatible(const Jet& f, const Jet& g, const char* op) {
    if (f.u0 != g.u0)
        throw UsageError(std::string(op) + ": jets expanded at different points");
    if (f.order() != g.order())
        throw UsageError(std::string(op) + ": jets of different order");
}

} // namespace detail

// ---- operations shared by both jet flavours -------------------------------

template <class Jet>
Jet jet_add(const Jet& f, const Jet& g) {
    detail::require_compatible(f, g, "jet_add");
    Jet r = f;
    for (std::size_t m = 0; m < r.coeffs.size(); ++m)
        r.coeffs[m] = r.coeffs[m] + g.coeffs[m];
    return r;
}

template <class Jet>
Jet jet_sub(const Jet& f, const Jet& g) {
    detail::require_compatible(f, g, "jet_sub");
    Jet r = f;
    for (std::size_t m = 0; m < r.coeffs.size(); ++m)
        r.coeffs[m] = r.coeffs[m] - g.coeffs[m];
    return r;
}

// Cauchy product truncated at the common order.
template <class Jet>
Jet jet_mul(const Jet& f, const Jet& g) {
    detail::require_compatible(f, g, "jet_mul");
    Jet r;
    r.u0 = f.u0;
    r.coeffs.resize(f.coeffs.size());
    for (std::size_t m = 0; m < r.coeffs.size(); ++m) {
        auto acc = f.coeffs[0] * g.coeffs[m];
        for (std::size_t j = 1; j <= m; ++j)
            acc = acc + f.coeffs[j] * g.coeffs[m - j];
        r.coeffs[m] = std::move(acc);
    }
    return r;
}

// d/du; output order drops by one. Differentiating an order-0 jet means the
// caller's order budget ran out, which is reported loudly.
template <class Jet>
Jet jet_derivative(const Jet& f) {
    if (f.order() < 1)
        throw OrderExhausted("jet_derivative: order-0 jet (jet order budget too small)");
    Jet r;
    r.u0 = f.u0;
    r.coeffs.resize(f.coeffs.size() - 1);
    for (std::size_t m = 0; m < r.coeffs.size(); ++m) {
        using R = decltype(f.u0);
        r.coeffs[m] = f.coeffs[m + 1] * std::complex<R>(static_cast<R>(m + 1));
    }
    return r;
}

// Copy of the leading new_order+1 coefficients.
template <class Jet>
Jet jet_truncate(const Jet& f, int new_order) {
    if (new_order < 0 || new_order > f.order())
        throw UsageError("jet_truncate: requested order out of range");
    Jet r;
    r.u0 = f.u0;
    r.coeffs.assign(f.coeffs.begin(), f.coeffs.begin() + new_order + 1);
    return r;
}

// ---- division --------------------------------------------------------------

// Scalar series division f/g; g must have a nonzero constant term.
template <class R>
BasicScalarJet<R> jet_div(const BasicScalarJet<R>& f, const BasicScalarJet<R>& g) {
    detail::require_compatible(f, g, "jet_div");
    if (g.coeffs[0] == std::complex<R>{})
        throw SingularDivision("jet_div: zero leading coefficient");
    BasicScalarJet<R> h;
    h.u0 = f.u0;
    h.coeffs.resize(f.coeffs.size());
    for (std::size_t m = 0; m < h.coeffs.size(); ++m) {
        auto acc = f.coeffs[m];
        for (std::size_t j = 1; j <= m; ++j)
            acc -= g.coeffs[j] * h.coeffs[m - j];
        h.coeffs[m] = acc / g.coeffs[0];
    }
    return h;
}

// Jet division f/g in the polynomial ring. The only divisions the method
// needs have an E-free, nonvanishing leading term (u0^2 + 1 >= 1), so g's
// constant coefficient must be a nonzero degree-0 polynomial.
template <class R>
BasicJet<R> jet_div(const BasicJet<R>& f, const BasicJet<R>& g) {
    detail::require_compatible(f, g, "jet_div");
    const auto& g0 = g.coeffs[0];
    if (g0.degree() != 0)
        throw SingularDivision("jet_div: leading coefficient is not an invertible scalar");
    const std::complex<R> inv = std::complex<R>(R(1)) / g0.coeffs[0];
    BasicJet<R> h;
    h.u0 = f.u0;
    h.coeffs.resize(f.coeffs.size());
    for (std::size_t m = 0; m < h.coeffs.size(); ++m) {
        auto acc = f.coeffs[m];
        for (std::size_t j = 1; j <= m; ++j)
            acc = acc - g.coeffs[j] * h.coeffs[m - j];
        h.coeffs[m] = acc * inv;
    }
    return h;
}

// ---- scalar-jet transcendentals --------------------------------------------

// exp(f) by the standard recurrence g0 = exp(f0), g_m = (1/m) sum j f_j g_{m-j}.
template <class R>
BasicScalarJet<R> jet_exp(const BasicScalarJet<R>& f) {
    BasicScalarJet<R> g;
    g.u0 = f.u0;
    g.coeffs.resize(f.coeffs.size());
    g.coeffs[0] = std::exp(f.coeffs[0]);
    for (std::size_t m = 1; m < g.coeffs.size(); ++m) {
        std::complex<R> acc{};
        for (std::size_t j = 1; j <= m; ++j)
            acc += std::complex<R>(static_cast<R>(j)) * f.coeffs[j] * g.coeffs[m - j];
        g.coeffs[m] = acc / std::complex<R>(static_cast<R>(m));
    }
    return g;
}

namespace detail {

// f^alpha for f with nonzero constant term, via m f0 g_m =
// sum_{j=1..m} ((alpha+1) j - m) f_j g_{m-j}.
template <class R>
BasicScalarJet<R> jet_pow(const BasicScalarJet<R>& f, R alpha) {
    if (f.coeffs[0] == std::complex<R>{})
        throw SingularDivision("jet_pow: zero leading coefficient");
    BasicScalarJet<R> g;
    g.u0 = f.u0;
    g.coeffs.resize(f.coeffs.size());
    g.coeffs[0] = std::pow(f.coeffs[0], std::complex<R>(alpha));
    for (std::size_t m = 1; m < g.coeffs.size(); ++m) {
        std::complex<R> acc{};
        for (std::size_t j = 1; j <= m; ++j) {
            const R w = (alpha + R(1)) * static_cast<R>(j) - static_cast<R>(m);
            acc += std::complex<R>(w) * f.coeffs[j] * g.coeffs[m - j];
        }
        g.coeffs[m] = acc / (std::complex<R>(static_cast<R>(m)) * f.coeffs[0]);
    }
    return g;
}

} // namespace detail

// Jet of asinh(u) at u0: term-wise integration of (1+u^2)^(-1/2) with
// constant term asinh(u0).
template <class R>
BasicScalarJet<R> jet_asinh(R u0, int order) {
    if (order < 0)
        throw UsageError("jet_asinh: negative order");
    BasicScalarJet<R> a;
    a.u0 = u0;
    a.coeffs.assign(static_cast<std::size_t>(order) + 1, std::complex<R>{});
    a.coeffs[0] = std::asinh(u0);
    if (order == 0)
        return a;

    // w = 1 + u^2 expanded at u0
    auto w = BasicScalarJet<R>::constant(u0, order - 1, std::complex<R>(R(1) + u0 * u0));
    if (order - 1 >= 1)
        w.coeffs[1] = std::complex<R>(R(2) * u0);
    if (order - 1 >= 2)
        w.coeffs[2] = std::complex<R>(R(1));
    const auto r = detail::jet_pow(w, R(-0.5));
    for (int m = 1; m <= order; ++m)
        a.coeffs[m] = r.coeffs[m - 1] / std::complex<R>(static_cast<R>(m));
    return a;
}

// ---- scalar helpers --------------------------------------------------------

template <class R>
BasicScalarJet<R> jet_scale(const BasicScalarJet<R>& f, std::complex<R> s) {
    BasicScalarJet<R> r = f;
    for (auto& c : r.coeffs)
        c *= s;
    return r;
}

template <class R>
BasicJet<R> jet_scale(const BasicJet<R>& f, std::complex<R> s) {
    BasicJet<R> r = f;
    for (auto& c : r.coeffs)
        c = c * s;
    return r;
}

// Embed a scalar jet as a polynomial-coefficient jet (degree-0 coefficients).
template <class R>
BasicJet<R> lift(const BasicScalarJet<R>& f) {
    BasicJet<R> r;
    r.u0 = f.u0;
    r.coeffs.resize(f.coeffs.size());
    for (std::size_t m = 0; m < f.coeffs.size(); ++m)
        r.coeffs[m] = BasicEnergyPoly<R>::constant(f.coeffs[m]);
    return r;
}

template <class R>
R max_abs_coeff(const BasicJet<R>& f) {
    R m{};
    for (const auto& p : f.coeffs)
        m = std::max(m, max_abs_coeff(p));
    return m;
}

template <class R>
R max_abs_coeff(const BasicScalarJet<R>& f) {
    R m{};
    for (const auto& c : f.coeffs)
        m = std::max(m, std::abs(c));
    return m;
}

using ScalarJet = BasicScalarJet<double>;
using Jet = BasicJet<double>;

} // namespace aim1d
