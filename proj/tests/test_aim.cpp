#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>

#include "aim1d/aim.hpp"
#include "aim1d/potential.hpp"

using namespace aim1d;
using C = std::complex<double>;

namespace {

// -y'' + u^2 y = E y with y = exp(-u^2/2) w gives w'' = 2u w' + (1 - E) w:
// the classic fixture with the exactly known spectrum {1, 3, 5, ...}.
CoefficientPair oscillator_pair(double u0, int order) {
    CoefficientPair base;
    base.u0 = u0;
    base.lambda0 = Jet::constant(u0, order, EnergyPoly::constant(2.0 * u0));
    base.lambda0.coeffs[1] = EnergyPoly::constant(2.0);
    base.s0 = Jet::constant(u0, order, EnergyPoly::linear(1.0, -1.0));
    return base;
}

AimIterate base_iterate(const CoefficientPair& base) {
    return {0, base.lambda0, base.s0};
}

bool has_root_near(const std::vector<C>& roots, double target, double tol) {
    return std::any_of(roots.begin(), roots.end(),
                       [&](const C& z) { return std::abs(z - C(target)) < tol; });
}

} // namespace

TEST_SUITE("aim") {

TEST_CASE("one step from constant coefficients") {
    // with constant lambda0 = L and s0 = S the first step gives
    // lambda1 = S + L^2 and s1 = S L
    CoefficientPair base;
    base.u0 = 0.0;
    base.lambda0 = Jet::constant(0.0, 4, EnergyPoly::constant(2.0));
    base.s0 = Jet::constant(0.0, 4, EnergyPoly::linear(1.0, -1.0)); // S = 1 - E

    const auto it1 = aim_step(base_iterate(base), base);
    CHECK(it1.k == 1);
    CHECK(it1.lambda_k.order() == 3);
    // lambda1 = (1 - E) + 4
    CHECK(it1.lambda_k.coeffs[0].coeffs[0] == C(5.0));
    CHECK(it1.lambda_k.coeffs[0].coeffs[1] == C(-1.0));
    // s1 = 2 (1 - E)
    CHECK(it1.s_k.coeffs[0].coeffs[0] == C(2.0));
    CHECK(it1.s_k.coeffs[0].coeffs[1] == C(-2.0));
}

TEST_CASE("oscillator quantization polynomial at depth 3") {
    const auto base = oscillator_pair(0.0, 8);
    auto it1 = aim_step(base_iterate(base), base);
    auto it2 = aim_step(it1, base);
    const auto delta = discriminant(it2, it1); // depth k = 3
    CHECK(delta.degree() == 3);
    const auto roots = poly_roots(delta);
    CHECK(has_root_near(roots, 1.0, 1e-10));
    CHECK(has_root_near(roots, 3.0, 1e-10));
    CHECK(has_root_near(roots, 5.0, 1e-10));
}

TEST_CASE("oscillator spectrum through the solver") {
    SolverConfig cfg;
    cfg.k_max = 10;
    const auto cands = solve(oscillator_pair(0.0, cfg.resolved_jet_order()), cfg);
    // all roots of the depth-10 polynomial are present...
    for (int n = 0; n < 10; ++n) {
        const double e = 2.0 * n + 1.0;
        const bool found = std::any_of(cands.begin(), cands.end(), [&](const auto& c) {
            return std::abs(c.energy - C(e)) < 1e-8;
        });
        CHECK(found);
    }
    // ...and at least the low-lying ones have settled
    for (const double e : {1.0, 3.0, 5.0, 7.0}) {
        const bool settled = std::any_of(cands.begin(), cands.end(), [&](const auto& c) {
            return c.converged && std::abs(c.energy - C(e)) < 1e-8;
        });
        CHECK(settled);
    }
}

TEST_CASE("quantization polynomial degree grows with depth") {
    const auto base = init_coeffs<double>(PotentialSpec{Family::cosh_sech, 3.0, 1.0, 0.0},
                                          0.0, 16);
    AimIterate prev = base_iterate(base);
    for (int k = 2; k <= 12; ++k) {
        auto curr = aim_step(prev, base);
        CHECK(discriminant(curr, prev).degree() == k);
        prev = std::move(curr);
    }
}

TEST_CASE("iterate scaling leaves roots unchanged") {
    const auto base = oscillator_pair(0.3, 8);
    auto it1 = aim_step(base_iterate(base), base);
    auto it2 = aim_step(it1, base);
    const auto d1 = discriminant(it2, it1);
    AimIterate it1s{it1.k, jet_scale(it1.lambda_k, C(0.0, 2.5)), jet_scale(it1.s_k, C(0.0, 2.5))};
    AimIterate it2s{it2.k, jet_scale(it2.lambda_k, C(7.0)), jet_scale(it2.s_k, C(7.0))};
    const auto d2 = discriminant(it2s, it1s);
    const auto r1 = poly_roots(d1);
    const auto r2 = poly_roots(d2);
    REQUIRE(r1.size() == r2.size());
    for (std::size_t i = 0; i < r1.size(); ++i)
        CHECK(std::abs(r1[i] - r2[i]) < 1e-9);
}

TEST_CASE("exactly solvable state at E = -1/4") {
    // a = 1: one eigenvalue at -0.25 for every b
    for (const double b : {0.5, 1.0, 2.0}) {
        const PotentialSpec spec{Family::cosh_sech, 1.0, b, 0.0};
        SolverConfig cfg;
        cfg.k_max = 16;
        const auto cands = solve(spec, cfg);
        const auto hit = std::find_if(cands.begin(), cands.end(), [](const auto& c) {
            return c.converged && std::abs(c.energy - C(-0.25)) < 1e-3;
        });
        REQUIRE(hit != cands.end());
        // the candidate is a polished polynomial root, so the normalized
        // quantization residual at it is tiny
        CHECK(hit->residual < 1e-8);
    }
}

TEST_CASE("configuration validation") {
    const auto base = oscillator_pair(0.0, 10);
    SolverConfig cfg;
    cfg.k_max = 0;
    CHECK_THROWS_AS(solve(base, cfg), UsageError);
    cfg.k_max = 8;
    cfg.jet_order = 5; // < k_max + 2
    CHECK_THROWS_AS(solve(base, cfg), UsageError);
    cfg.jet_order = 0;
    cfg.tol_converge = -1.0;
    CHECK_THROWS_AS(solve(base, cfg), UsageError);
    cfg.tol_converge = 1e-6;
    cfg.window_lo = 1.0;
    cfg.window_hi = -1.0;
    CHECK_THROWS_AS(solve(base, cfg), UsageError);
}

TEST_CASE("order budget exhaustion is loud") {
    auto base = oscillator_pair(0.0, 3);
    AimIterate prev = base_iterate(base);
    prev = aim_step(prev, base); // order 2
    prev = aim_step(prev, base); // order 1
    prev = aim_step(prev, base); // order 0
    CHECK_THROWS_AS(aim_step(prev, base), OrderExhausted);
}

TEST_CASE("mismatched expansion points are rejected") {
    const auto base = oscillator_pair(0.0, 6);
    const auto other = oscillator_pair(0.5, 6);
    CHECK_THROWS_AS(aim_step(base_iterate(base), other), UsageError);
    auto it1 = aim_step(base_iterate(base), base);
    auto it1b = aim_step(base_iterate(other), other);
    CHECK_THROWS_AS(discriminant(it1b, base_iterate(base)), UsageError);
    // non-consecutive iterates
    CHECK_THROWS_AS(discriminant(it1, it1), UsageError);
}

} // TEST_SUITE
