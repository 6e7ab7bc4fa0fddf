#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "aim1d/potential.hpp"

using namespace aim1d;
using C = std::complex<double>;

namespace {

PotentialSpec coshsech(double a, double b) { return {Family::cosh_sech, a, b, 0.0}; }
PotentialSpec modified(double a, double b, double c) {
    return {Family::modified_cosh_sech, a, b, c};
}

// independent oracle: brute-force maximization of V on a grid, refined by
// ternary search around the best grid point
double grid_argmax(const PotentialSpec& spec, double lo, double hi) {
    const int n = 20000;
    double best_x = lo, best_v = v_eval(spec, lo);
    for (int i = 1; i <= n; ++i) {
        const double x = lo + (hi - lo) * i / n;
        const double v = v_eval(spec, x);
        if (v > best_v) {
            best_v = v;
            best_x = x;
        }
    }
    double a = best_x - (hi - lo) / n, b = best_x + (hi - lo) / n;
    for (int it = 0; it < 200; ++it) {
        const double m1 = a + (b - a) / 3, m2 = b - (b - a) / 3;
        if (v_eval(spec, m1) < v_eval(spec, m2))
            a = m1;
        else
            b = m2;
    }
    return 0.5 * (a + b);
}

} // namespace

TEST_SUITE("potentials") {

TEST_CASE("pointwise values at the origin") {
    CHECK(v_eval(coshsech(1, 1), 0.0) == -1.0);
    CHECK(v_eval(coshsech(3, 1), 0.0) == -9.0);
}

TEST_CASE("strong damping suppresses the cosh term") {
    const double sech3 = 1.0 / std::cosh(3.0);
    const double expected = -0.75 * sech3 * sech3;
    CHECK(v_eval(modified(1, 1, 10.0), 3.0) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("overflow is loud") {
    CHECK_THROWS_AS(v_eval(coshsech(1, 1), 400.0), PotentialOverflow);
    // b = 0 removes the growing term entirely
    CHECK(v_eval(coshsech(1, 0), 400.0) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("potential is even") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> xs(-20.0, 20.0);
    for (const auto& spec : {coshsech(3, 1), coshsech(1, 2), modified(1, 1, 0.3)}) {
        for (int i = 0; i < 200; ++i) {
            const double x = xs(rng);
            CHECK(v_eval(spec, x) == v_eval(spec, -x));
        }
    }
}

TEST_CASE("closed-form extrema vs grid maximization") {
    auto check_extrema = [](const PotentialSpec& spec, double x_expect, double v_expect) {
        const auto ex = extrema(spec);
        REQUIRE(ex.x_max.has_value());
        CHECK(*ex.x_max == doctest::Approx(x_expect).epsilon(1e-4));
        CHECK(*ex.v_max == doctest::Approx(v_expect).epsilon(1e-4));
        // oracle: numerical maximization of v_eval
        const double x_grid = grid_argmax(spec, 1e-6, 5.0);
        CHECK(*ex.x_max == doctest::Approx(x_grid).epsilon(1e-6));
        CHECK(*ex.v_max == doctest::Approx(v_eval(spec, x_grid)).epsilon(1e-10));
        CHECK(v_eval(spec, *ex.x_max) == doctest::Approx(*ex.v_max).epsilon(1e-10));
    };
    // frozen from the grid oracle; equal to acosh(((4a^2-1)/b^2)^(1/4))
    check_extrema(coshsech(3, 1), 1.5367646, -2.9580399); // v_min = -9
    CHECK(extrema(coshsech(3, 1)).v_min == -9.0);
    check_extrema(coshsech(1, 1), 0.7754982, -std::sqrt(3.0) / 2);
}

TEST_CASE("barrier top exists only below the threshold slope") {
    CHECK_FALSE(extrema(coshsech(1, 2)).x_max.has_value()); // b >= sqrt(3)
    CHECK_FALSE(extrema(coshsech(1, 0)).x_max.has_value()); // pure well
    CHECK(extrema(coshsech(1, 1.7)).x_max.has_value());
}

TEST_CASE("default expansion point") {
    CHECK(default_u0(coshsech(3, 1)) == doctest::Approx(2.21723).epsilon(1e-5));
    CHECK(default_u0(coshsech(1, 2)) == 0.0);
    const double expect = std::sinh(std::acosh(std::pow(1599.0 / 4.0, 0.25)));
    CHECK(default_u0(coshsech(20, 2)) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("numeric extrema for the damped family") {
    // c -> 0+ limit approaches the closed form
    const auto near_zero = locate_extrema_numeric(modified(1, 1, 1e-8));
    REQUIRE(near_zero.x_max.has_value());
    CHECK(*near_zero.x_max == doctest::Approx(*extrema(coshsech(1, 1)).x_max).epsilon(1e-6));

    // strong damping turns the volcano into a single well
    const auto strong = locate_extrema_numeric(modified(1, 1, 0.5));
    CHECK_FALSE(strong.x_max.has_value());
    CHECK(strong.v_origin == v_eval(modified(1, 1, 0.5), 0.0));

    // moderate damping keeps the barrier close to the undamped location
    const auto mid = locate_extrema_numeric(modified(1, 1, 0.05));
    REQUIRE(mid.x_max.has_value());
    const double x_grid = grid_argmax(modified(1, 1, 0.05), 1e-6, 5.0);
    CHECK(*mid.x_max == doctest::Approx(x_grid).epsilon(1e-6));

    CHECK_THROWS_AS(locate_extrema_numeric(coshsech(1, 1)), UsageError);
    CHECK_THROWS_AS(extrema(modified(1, 1, 0.5)), UsageError);
}

TEST_CASE("spec strings parse and format") {
    const auto s1 = PotentialSpec::parse("coshsech(a=3,b=1)");
    CHECK(s1.family == Family::cosh_sech);
    CHECK(s1.a == 3.0);
    CHECK(s1.b == 1.0);
    CHECK(s1.canonical() == "coshsech(a=3,b=1)");

    const auto s2 = PotentialSpec::parse(" modified( a=1, b=1, c=0.2 ) ");
    CHECK(s2.family == Family::modified_cosh_sech);
    CHECK(s2.c == 0.2);
    CHECK(s2.canonical() == "modified(a=1,b=1,c=0.2)");

    CHECK_THROWS_AS(PotentialSpec::parse("volcano(a=1)"), UsageError);
    CHECK_THROWS_AS(PotentialSpec::parse("coshsech(a=x)"), UsageError);
    CHECK_THROWS_AS(PotentialSpec::parse("coshsech(a=1"), UsageError);
    CHECK_THROWS_AS(PotentialSpec::parse("coshsech(a=1,b=1,c=0.5)"), UsageError);
    CHECK_THROWS_AS(PotentialSpec::parse("coshsech(q=1)"), UsageError);
}

TEST_CASE("initial coefficients at the valley") {
    const int order = 6;
    const auto pair = init_coeffs<double>(coshsech(3, 2), 0.0, order);
    REQUIRE(pair.lambda0.order() == order);
    REQUIRE(pair.s0.order() == order);

    // lambda0(0) = 2ib, an E-free constant
    CHECK(pair.lambda0.coeffs[0].degree() == 0);
    CHECK(pair.lambda0.coeffs[0].coeffs[0] == C(0.0, 4.0));

    // s0(0) = -E + (a - a^2 - 1/4) + 3b^2/4
    const auto& s00 = pair.s0.coeffs[0];
    REQUIRE(s00.degree() == 1);
    CHECK(s00.coeffs[1] == C(-1.0));
    CHECK(s00.coeffs[0].real() == doctest::Approx(3.0 - 9.0 - 0.25 + 3.0).epsilon(1e-15));
    CHECK(s00.coeffs[0].imag() == 0.0);

    // every s0 coefficient is at most linear in E, lambda0 is E-free
    for (const auto& p : pair.s0.coeffs)
        CHECK(p.degree() <= 1);
    for (const auto& p : pair.lambda0.coeffs)
        CHECK(p.degree() <= 0);
}

TEST_CASE("a = 1 removes the u-linear coupling") {
    const auto pair = init_coeffs<double>(coshsech(1, 1.5), 0.7, 5);
    for (int m = 1; m <= 5; ++m)
        CHECK(pair.lambda0.coeffs[m].is_zero());
    // with the 2iub(a-1) term gone, s0 is real apart from nothing at all
    for (const auto& p : pair.s0.coeffs)
        for (const auto& coef : p.coeffs)
            CHECK(coef.imag() == 0.0);
}

TEST_CASE("damped family reduces to the plain one at c = 0") {
    const auto p1 = init_coeffs<double>(coshsech(2, 1.3), 0.4, 8);
    const auto p2 = init_coeffs<double>(modified(2, 1.3, 0.0), 0.4, 8);
    for (int m = 0; m <= 8; ++m) {
        CHECK(p1.lambda0.coeffs[m].coeffs == p2.lambda0.coeffs[m].coeffs);
        CHECK(p1.s0.coeffs[m].coeffs == p2.s0.coeffs[m].coeffs);
    }
}

TEST_CASE("coefficient jets match finite differences of the closed forms") {
    // differentiate the jet once and compare against a centered difference of
    // the constant terms at shifted expansion points, for a fixed energy
    const C e0(0.3, 0.0);
    const double h = 1e-5;
    for (const auto& spec : {coshsech(3, 1), modified(1, 1, 0.2)}) {
        for (const double u0 : {0.0, 0.9}) {
            const auto at = [&](double u) { return init_coeffs<double>(spec, u, 3); };
            const auto mid = at(u0);
            const auto lo = at(u0 - h);
            const auto hi = at(u0 + h);

            const auto dl = jet_derivative(mid.lambda0);
            const C dl_fd =
                (eval(hi.lambda0.coeffs[0], e0) - eval(lo.lambda0.coeffs[0], e0)) / (2 * h);
            CHECK(std::abs(eval(dl.coeffs[0], e0) - dl_fd) < 1e-8);

            const auto ds = jet_derivative(mid.s0);
            const C ds_fd = (eval(hi.s0.coeffs[0], e0) - eval(lo.s0.coeffs[0], e0)) / (2 * h);
            CHECK(std::abs(eval(ds.coeffs[0], e0) - ds_fd) < 1e-8);
        }
    }
}

} // TEST_SUITE
