#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "aim1d/errors.hpp"

namespace aim1d {

// Dense polynomial in the (not yet quantized) energy symbol E, with complex
// coefficients. coeffs[j] multiplies E^j. Canonical form: the highest-index
// coefficient is nonzero, and the zero polynomial is the empty list.
//
// This is the coefficient ring the iteration jets live in; degrees stay small
// (of the order of the iteration count), so dense storage is fine.
template <class R>
struct BasicEnergyPoly {
    using real_type = R;
    using scalar = std::complex<R>;

    std::vector<scalar> coeffs;

    BasicEnergyPoly() = default;
    explicit BasicEnergyPoly(std::vector<scalar> c) : coeffs(std::move(c)) { trim(); }

    static BasicEnergyPoly constant(scalar c0) {
        BasicEnergyPoly p;
        if (c0 != scalar{})
            p.coeffs.push_back(c0);
        return p;
    }

    // c0 + c1*E
    static BasicEnergyPoly linear(scalar c0, scalar c1) {
        BasicEnergyPoly p;
        p.coeffs = {c0, c1};
        p.trim();
        return p;
    }

    bool is_zero() const { return coeffs.empty(); }

    // degree of the zero polynomial is reported as -1
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    scalar at(std::size_t j) const { return j < coeffs.size() ? coeffs[j] : scalar{}; }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == scalar{})
            coeffs.pop_back();
    }
};

template <class R>
BasicEnergyPoly<R> operator+(const BasicEnergyPoly<R>& p, const BasicEnergyPoly<R>& q) {
    BasicEnergyPoly<R> r;
    r.coeffs.resize(std::max(p.coeffs.size(), q.coeffs.size()));
    for (std::size_t j = 0; j < r.coeffs.size(); ++j)
        r.coeffs[j] = p.at(j) + q.at(j);
    r.trim();
    return r;
}

template <class R>
BasicEnergyPoly<R> operator-(const BasicEnergyPoly<R>& p, const BasicEnergyPoly<R>& q) {
    BasicEnergyPoly<R> r;
    r.coeffs.resize(std::max(p.coeffs.size(), q.coeffs.size()));
    for (std::size_t j = 0; j < r.coeffs.size(); ++j)
        r.coeffs[j] = p.at(j) - q.at(j);
    r.trim();
    return r;
}

template <class R>
BasicEnergyPoly<R>& operator+=(BasicEnergyPoly<R>& p, const BasicEnergyPoly<R>& q) {
    p = p + q;
    return p;
}

template <class R>
BasicEnergyPoly<R> operator-(const BasicEnergyPoly<R>& p) {
    BasicEnergyPoly<R> r = p;
    for (auto& c : r.coeffs)
        c = -c;
    return r;
}

// Full convolution product.
template <class R>
BasicEnergyPoly<R> operator*(const BasicEnergyPoly<R>& p, const BasicEnergyPoly<R>& q) {
    if (p.is_zero() || q.is_zero())
        return {};
    BasicEnergyPoly<R> r;
    r.coeffs.assign(p.coeffs.size() + q.coeffs.size() - 1, typename BasicEnergyPoly<R>::scalar{});
    for (std::size_t i = 0; i < p.coeffs.size(); ++i)
        for (std::size_t j = 0; j < q.coeffs.size(); ++j)
            r.coeffs[i + j] += p.coeffs[i] * q.coeffs[j];
    r.trim();
    return r;
}

template <class R>
BasicEnergyPoly<R> operator*(const BasicEnergyPoly<R>& p, std::complex<R> s) {
    if (s == std::complex<R>{})
        return {};
    BasicEnergyPoly<R> r = p;
    for (auto& c : r.coeffs)
        c *= s;
    r.trim();
    return r;
}

template <class R>
BasicEnergyPoly<R> operator*(std::complex<R> s, const BasicEnergyPoly<R>& p) {
    return p * s;
}

// Horner evaluation at a complex energy.
template <class R>
std::complex<R> eval(const BasicEnergyPoly<R>& p, std::complex<R> e) {
    std::complex<R> acc{};
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it)
        acc = acc * e + *it;
    return acc;
}

// Largest coefficient magnitude; 0 for the zero polynomial. Used for the
// per-iteration normalization that keeps the recurrence inside the
// floating-point range.
template <class R>
R max_abs_coeff(const BasicEnergyPoly<R>& p) {
    R m{};
    for (const auto& c : p.coeffs)
        m = std::max(m, std::abs(c));
    return m;
}

template <class R>
bool all_finite(const BasicEnergyPoly<R>& p) {
    for (const auto& c : p.coeffs)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            return false;
    return true;
}

using EnergyPoly = BasicEnergyPoly<double>;

} // namespace aim1d
