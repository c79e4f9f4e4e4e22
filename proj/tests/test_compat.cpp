#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "serrin/compat.hpp"
#include "serrin/quadrature.hpp"

using namespace serrin;

TEST_CASE("F values") {
    CHECK(F_value(2.0, 0.0) == 0.0);
    CHECK(F_value(2.0, -1.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(F_value(2.0, 2.0) == doctest::Approx(-0.125).epsilon(1e-15));
    CHECK_THROWS_AS(F_value(1.0, 0.5), std::invalid_argument);

    SUBCASE("beta = 1 limit and continuity") {
        for (double rho : {1.5, 2.0, 5.0}) {
            const double at_one = F_value(rho, 1.0);
            CHECK(at_one ==
                  doctest::Approx(std::log(rho) - 0.5 * (rho - 1.0) * (1.0 / rho + 1.0))
                      .epsilon(1e-14));
            CHECK(std::abs(F_value(rho, 1.0 + 1e-6) - at_one) <= 1e-4);
            CHECK(std::abs(F_value(rho, 1.0 - 1e-6) - at_one) <= 1e-4);
        }
    }
}

TEST_CASE("F sign classification") {
    CHECK(F_sign(CompatParams(5.0, 3.0)) == Sign3::Negative);
    CHECK(F_sign(CompatParams(5.0, -0.5)) == Sign3::Positive);
    CHECK(F_sign(CompatParams(1.5, 0.0)) == Sign3::Zero);
    CHECK(F_sign(CompatParams(1.5, -1.0)) == Sign3::Zero);
    CHECK(F_sign(CompatParams(2.0, -3.0)) == Sign3::Negative);
    CHECK(F_sign(CompatParams(2.0, 1.0)) == Sign3::Negative);

    for (double rho : {1.2, 2.0, 7.0})
        for (double beta : {-4.0, -2.0, -1.3, -0.7, -0.2, 0.3, 1.0, 2.5}) {
            const Sign3 s = F_sign(CompatParams(rho, beta));
            if (beta > 0.0 || beta < -1.0) CHECK(s == Sign3::Negative);
            else CHECK(s == Sign3::Positive);
        }
}

TEST_CASE("find_roots") {
    SUBCASE("the two universal roots") {
        for (double rho : {1.5, 2.0, 5.0, 10.0}) {
            const std::vector<double> roots = find_roots(rho, -5.0, 5.0);
            REQUIRE(roots.size() == 2);
            CHECK(std::abs(roots[0] + 1.0) <= 1e-9);
            CHECK(std::abs(roots[1]) <= 1e-9);
        }
    }
    SUBCASE("empty window") {
        CHECK(find_roots(10.0, 0.5, 5.0).empty());
    }
    SUBCASE("nearly degenerate ratio") {
        const std::vector<double> roots = find_roots(1.0001, -5.0, 5.0);
        REQUIRE(roots.size() == 2);
        CHECK(std::abs(roots[0] + 1.0) <= 1e-6);
        CHECK(std::abs(roots[1]) <= 1e-6);
    }
    SUBCASE("multi-rho wrapper is ordered by (rho, beta)") {
        const std::vector<double> rhos = {5.0, 1.5, 2.0};
        const auto pairs = find_roots_many(rhos, -5.0, 5.0);
        REQUIRE(pairs.size() == 6);
        CHECK(pairs[0].first == 1.5);
        CHECK(pairs[2].first == 2.0);
        CHECK(pairs[4].first == 5.0);
        CHECK(pairs[0].second < pairs[1].second);
        // parallel and serial agree
        const auto serial = find_roots_many(rhos, -5.0, 5.0, false);
        CHECK(pairs == serial);
    }
}

TEST_CASE("secant gap") {
    CHECK(secant_gap(3.0, 0.0, 2.0) == doctest::Approx(0.0));
    CHECK(secant_gap(2.0, 2.0, 1.5) == doctest::Approx(4.0 / 9.0 - 5.0 / 8.0).epsilon(1e-14));
    CHECK(secant_gap(4.0, -0.5, 2.0) == doctest::Approx(std::sqrt(2.0) - 4.0 / 3.0).epsilon(1e-14));
    CHECK(secant_gap(4.0, -0.5, 2.0) > 0.0);

    SUBCASE("integral of the gap reproduces F") {
        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> urho(1.05, 10.0), ubeta(-4.0, 4.0);
        QuadratureSettings q;
        q.rel_tol = 1e-10;
        for (int k = 0; k < 30; ++k) {
            const double rho = urho(rng);
            double beta = ubeta(rng);
            if (std::abs(beta - 1.0) < 1e-3) beta = 1.5;
            const double integral =
                adaptive_simpson([&](double t) { return secant_gap(rho, beta, t); }, 1.0, rho, q);
            CHECK(integral == doctest::Approx(F_value(rho, beta)).epsilon(1e-8));
        }
    }

    SUBCASE("convexity sign pattern") {
        for (double rho : {1.5, 3.0}) {
            for (double beta : {-3.0, -1.5, 0.5, 2.0}) {
                for (int i = 1; i < 100; ++i) {
                    const double t = 1.0 + (rho - 1.0) * i / 100.0;
                    CHECK(secant_gap(rho, beta, t) <= 1e-13);
                }
            }
            for (double beta : {-0.8, -0.5, -0.2}) {
                for (int i = 1; i < 100; ++i) {
                    const double t = 1.0 + (rho - 1.0) * i / 100.0;
                    CHECK(secant_gap(rho, beta, t) >= -1e-13);
                }
            }
        }
    }
}

TEST_CASE("special case gap") {
    CHECK(special_case_gap(1.0) == doctest::Approx(0.0));
    CHECK(special_case_gap(2.0) == doctest::Approx(3.0 - 4.0 * std::log(2.0)).epsilon(1e-14));
    CHECK(special_case_gap(M_E) == doctest::Approx(M_E * M_E - 1.0 - 2.0 * M_E).epsilon(1e-14));

    for (double t : {1.0 + 1e-4, 1.5, 2.0, 5.0, 10.0}) CHECK(special_case_gap(t) > 0.0);

    // h'(1) = 0 by finite differences
    const double h = 1e-5;
    const double d1 = (special_case_gap(1.0 + h) - special_case_gap(1.0 - h)) / (2.0 * h);
    CHECK(std::abs(d1) <= 1e-9);
}

TEST_CASE("counterexample package") {
    {
        const CounterexamplePackage pkg = counterexample(3, 1.0, 3.0);
        CHECK(pkg.alpha == doctest::Approx(-2.0));
        CHECK(pkg.c == doctest::Approx(1.0));
        CHECK(pkg.profile.value(2.0) == doctest::Approx(0.5));
        CHECK(pkg.profile.deriv(1.0) == 1.0);
        CHECK(pkg.profile.deriv(3.0) == -1.0);
    }
    {
        const CounterexamplePackage pkg = counterexample(2, 1.0, 2.0);
        CHECK(pkg.alpha == doctest::Approx(-1.0));
        CHECK(pkg.c == doctest::Approx(0.5));
    }

    SUBCASE("round trip through annulus_solve at beta_c = 0") {
        const CounterexamplePackage pkg = counterexample(3, 1.0, 3.0);
        const RadialProfile via_ode = annulus_solve(3, 0.0, 1.0, 3.0);
        for (int i = 0; i <= 40; ++i) {
            const double r = 1.0 + 2.0 * i / 40.0;
            CHECK(std::abs(pkg.profile.value(r) - via_ode.value(r)) <= 1e-12);
            CHECK(std::abs(pkg.profile.deriv(r) - via_ode.deriv(r)) <= 1e-12);
        }
    }
}
