#include "doctest.h"

#include <algorithm>
#include <complex>
#include <random>

#include "aim1d/roots.hpp"

using namespace aim1d;
using C = std::complex<double>;

namespace {

EnergyPoly poly(std::initializer_list<C> coeffs) { return EnergyPoly(std::vector<C>(coeffs)); }

} // namespace

TEST_SUITE("roots") {

TEST_CASE("quadratic") {
    const auto r = poly_roots(poly({-1.0, 0.0, 1.0})); // E^2 - 1
    REQUIRE(r.size() == 2);
    CHECK(std::abs(r[0] - C(-1.0)) < 1e-12);
    CHECK(std::abs(r[1] - C(1.0)) < 1e-12);
}

TEST_CASE("constructed double root") {
    // (E + 0.25)^2
    const auto r = poly_roots(poly({0.0625, 0.5, 1.0}));
    REQUIRE(r.size() == 2);
    const auto clusters = cluster_roots(r);
    REQUIRE(clusters.size() == 1);
    CHECK(clusters[0].multiplicity == 2);
    CHECK(std::abs(clusters[0].value - C(-0.25)) < 1e-7);
}

TEST_CASE("degree 0 has no roots") {
    CHECK_THROWS_AS(poly_roots(poly({2.0})), NoRoots);
    CHECK_THROWS_AS(poly_roots(EnergyPoly{}), NoRoots);
}

TEST_CASE("roots at the origin are factored out") {
    // E^2 (E - 1)
    const auto r = poly_roots(poly({0.0, 0.0, -1.0, 1.0}));
    REQUIRE(r.size() == 3);
    CHECK(r[0] == C(0.0));
    CHECK(r[1] == C(0.0));
    CHECK(std::abs(r[2] - C(1.0)) < 1e-12);
}

TEST_CASE("Vieta root sum on random degree-8 polynomials") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        std::vector<C> c(9);
        for (auto& x : c)
            x = {coef(rng), coef(rng)};
        if (std::abs(c.back()) < 0.1)
            c.back() += 1.0;
        const EnergyPoly p(std::move(c));
        const auto roots = poly_roots(p);
        REQUIRE(roots.size() == 8);
        C sum{};
        for (const auto& z : roots)
            sum += z;
        const C vieta = -p.coeffs[7] / p.coeffs[8];
        CHECK(std::abs(sum - vieta) <= 1e-8 * std::max(1.0, std::abs(vieta)));
    }
}

TEST_CASE("clustered real roots 1..10") {
    // prod (E - j): mildly ill-conditioned coefficients, a useful stress test
    EnergyPoly p = EnergyPoly::constant(1.0);
    for (int j = 1; j <= 10; ++j)
        p = p * poly({-static_cast<double>(j), 1.0});
    const auto roots = poly_roots(p);
    REQUIRE(roots.size() == 10);
    for (int j = 1; j <= 10; ++j)
        CHECK(std::abs(roots[j - 1] - C(j)) < 1e-6);
}

TEST_CASE("scale invariance of roots") {
    const auto p = poly({-6.0, 11.0, -6.0, 1.0}); // (E-1)(E-2)(E-3)
    const auto q = p * C(0.0, 3.5);
    const auto rp = poly_roots(p);
    const auto rq = poly_roots(q);
    REQUIRE(rp.size() == rq.size());
    for (std::size_t i = 0; i < rp.size(); ++i)
        CHECK(std::abs(rp[i] - rq[i]) < 1e-10);
}

} // TEST_SUITE
