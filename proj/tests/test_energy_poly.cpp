#include "doctest.h"

#include <complex>
#include <random>

#include "aim1d/energy_poly.hpp"

using namespace aim1d;
using C = std::complex<double>;

namespace {

EnergyPoly poly(std::initializer_list<C> coeffs) { return EnergyPoly(std::vector<C>(coeffs)); }

bool close(const EnergyPoly& p, const EnergyPoly& q, double tol) {
    const double scale = std::max({1.0, max_abs_coeff(p), max_abs_coeff(q)});
    const std::size_t n = std::max(p.coeffs.size(), q.coeffs.size());
    for (std::size_t j = 0; j < n; ++j)
        if (std::abs(p.at(j) - q.at(j)) > tol * scale)
            return false;
    return true;
}

EnergyPoly random_poly(std::mt19937& rng, int max_degree = 6) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    std::vector<C> c(deg(rng) + 1);
    for (auto& x : c)
        x = {coef(rng), coef(rng)};
    if (c.back() == C{})
        c.back() = 1.0;
    return EnergyPoly(std::move(c));
}

} // namespace

TEST_SUITE("series") {

TEST_CASE("polynomial product: difference of squares") {
    const auto p = poly({1.0, 1.0});  // E + 1
    const auto q = poly({-1.0, 1.0}); // E - 1
    CHECK(close(p * q, poly({-1.0, 0.0, 1.0}), 0.0));
}

TEST_CASE("additive identity and canonical form") {
    const auto p = poly({0.5, C(0, 2.0)});
    CHECK(close(p + EnergyPoly{}, p, 0.0));
    // trailing zeros are stripped
    const auto q = poly({1.0, 0.0, 0.0});
    CHECK(q.degree() == 0);
    CHECK(EnergyPoly{}.degree() == -1);
    CHECK((p - p).is_zero());
}

TEST_CASE("monomial product") {
    const auto p = poly({0.0, 2.0});      // 2E
    const auto q = poly({0.0, 0.0, 3.0}); // 3E^2
    CHECK(close(p * q, poly({0.0, 0.0, 0.0, 6.0}), 0.0));
}

TEST_CASE("Horner evaluation") {
    const auto p = poly({-1.0, 0.0, 1.0}); // E^2 - 1
    CHECK(eval(p, C(1.0)) == C(0.0));
    CHECK(eval(p, C(2.0)) == C(3.0));
    CHECK(eval(EnergyPoly{}, C(123.4)) == C(0.0));
}

TEST_CASE("degree bookkeeping under multiplication") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        const auto p = random_poly(rng);
        const auto q = random_poly(rng);
        CHECK((p * q).degree() == p.degree() + q.degree());
    }
}

TEST_CASE("ring axioms on randomized polynomials") {
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
        const auto p = random_poly(rng, 4);
        const auto q = random_poly(rng, 4);
        const auto r = random_poly(rng, 4);
        CHECK(close((p * q) * r, p * (q * r), 1e-13));
        CHECK(close(p * (q + r), p * q + p * r, 1e-13));
        CHECK(close(p + q, q + p, 0.0));
    }
}

} // TEST_SUITE
