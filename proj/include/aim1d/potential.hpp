#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>

#include "aim1d/errors.hpp"
#include "aim1d/jet.hpp"

namespace aim1d {

enum class Family { cosh_sech, modified_cosh_sech };

// One parameter point of the two built-in potential families:
//
//   cosh_sech:  V(x) = -(b^2/4) cosh^2 x - (a^2 - 1/4) sech^2 x
//   modified:   V(x) = -(b^2/4) cosh^2 x exp(-c x^2) - (a^2 - 1/4) sech^2 x
//
// c = 0 makes the modified family coincide with cosh_sech at every x,
// coefficient-for-coefficient.
struct PotentialSpec {
    Family family = Family::cosh_sech;
    double a = 1.0;
    double b = 1.0;
    double c = 0.0;

    // Canonical textual form used by the CLI and JSON outputs:
    // coshsech(a=3,b=1) / modified(a=1,b=1,c=0.2)
    static PotentialSpec parse(std::string_view text); // throws UsageError
    std::string canonical() const;

    void validate() const; // throws UsageError on non-finite/negative parameters
};

struct PotentialExtrema {
    std::optional<double> x_max; // location of the barrier top (x > 0), when it exists
    std::optional<double> v_max; // V(x_max)
    double v_origin = 0.0;       // V(0); the classification threshold
    double v_min = 0.0;          // valley value -(a^2-1/4) - b^2/4
};

// V(x). Evaluated in log space so the unbounded tails only fail once the
// value genuinely exceeds the floating range, and then loudly.
double v_eval(const PotentialSpec& spec, double x); // throws PotentialOverflow

// Closed-form extrema; valid for cosh_sech, or modified with c = 0.
// The barrier top exists only for 4a^2 > 1 and 0 < b < sqrt(4a^2-1).
PotentialExtrema extrema(const PotentialSpec& spec); // throws UsageError for c > 0

// Extrema by scanning + golden-section refinement, for the modified family
// with c > 0 (no closed form exists there).
PotentialExtrema locate_extrema_numeric(const PotentialSpec& spec);

// Dispatch: closed form when available, numeric otherwise.
PotentialExtrema potential_extrema(const PotentialSpec& spec);

// Default expansion point in the u = sinh x variable: the barrier top when
// it exists, the valley (u = 0) otherwise. Callers may override.
double default_u0(const PotentialSpec& spec);

// The transformed coefficient pair the iteration starts from, as jets of the
// requested order expanded at u0:
//
//   lambda0(u) = 2 [ i b + (a-1) u / (u^2+1) ]
//   s0(u)      = -2 i u b (a-1)/(u^2+1) - E/(u^2+1) + (a - a^2 - 1/4)/(u^2+1)
//                + 3 b^2/4                                  (cosh_sech)
//                + (b^2/4) (2 + exp(-c asinh^2 u))          (modified, c > 0)
//
// lambda0 is E-free; s0 is linear in E.
template <class R>
struct CoefficientPairT {
    BasicJet<R> lambda0;
    BasicJet<R> s0;
    R u0{};
};

using CoefficientPair = CoefficientPairT<double>;

template <class R>
CoefficientPairT<R> init_coeffs(const PotentialSpec& spec, R u0, int order) {
    if (order < 1)
        throw UsageError("init_coeffs: order must be >= 1");
    spec.validate();
    using C = std::complex<R>;
    using SJ = BasicScalarJet<R>;
    const R a = static_cast<R>(spec.a);
    const R b = static_cast<R>(spec.b);
    const R c = static_cast<R>(spec.c);
    const C ib{R(0), b};

    // g = 1/(u^2+1) at u0
    auto w = SJ::constant(u0, order, C(R(1) + u0 * u0));
    if (order >= 1)
        w.coeffs[1] = C(R(2) * u0);
    if (order >= 2)
        w.coeffs[2] = C(R(1));
    const SJ g = jet_div(SJ::constant(u0, order, C(R(1))), w);
    const SJ ug = jet_mul(SJ::variable(u0, order), g); // u/(u^2+1)

    // lambda0 = 2 i b + 2 (a-1) u/(u^2+1)
    SJ l0 = jet_scale(ug, C(R(2) * (a - R(1))));
    l0.coeffs[0] += R(2) * ib;

    // E-free part of s0
    SJ s0_free = jet_scale(ug, -R(2) * ib * (a - R(1)));
    s0_free = jet_add(s0_free, jet_scale(g, C(a - a * a - R(0.25))));
    if (spec.family == Family::modified_cosh_sech && c != R(0)) {
        // (b^2/4) (2 + exp(-c asinh^2 u))
        const SJ asq = jet_mul(jet_asinh(u0, order), jet_asinh(u0, order));
        SJ damp = jet_exp(jet_scale(asq, C(-c)));
        damp.coeffs[0] += C(R(2));
        s0_free = jet_add(s0_free, jet_scale(damp, C(b * b / R(4))));
    } else {
        s0_free.coeffs[0] += C(R(3) * b * b / R(4));
    }

    // assemble: s0 = s0_free - E/(u^2+1)
    CoefficientPairT<R> pair;
    pair.u0 = u0;
    pair.lambda0 = lift(l0);
    pair.s0.u0 = u0;
    pair.s0.coeffs.resize(static_cast<std::size_t>(order) + 1);
    for (std::size_t m = 0; m < pair.s0.coeffs.size(); ++m)
        pair.s0.coeffs[m] = BasicEnergyPoly<R>::linear(s0_free.coeffs[m], -g.coeffs[m]);
    return pair;
}

} // namespace aim1d
