#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "serrin/curvature.hpp"
#include "serrin/geometry.hpp"

using namespace serrin;

namespace {

Point random_point(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
        std::vector<double> c(static_cast<size_t>(n));
        double norm = 0.0;
        for (double& v : c) {
            v = u(rng);
            norm += v * v;
        }
        norm = std::sqrt(norm);
        if (norm < 0.2) continue;
        std::uniform_real_distribution<double> rad(0.5, 2.5);
        const double target = rad(rng);
        for (double& v : c) v *= target / norm;
        return Point(std::move(c));
    }
}

SymMat diag3(double a, double b, double c) { return SymMat::diagonal({a, b, c}); }

}  // namespace

TEST_CASE("ricci closed form") {
    SUBCASE("flat metric") {
        const ManifoldConfig cfg(3, 0.0, 1.0);
        CHECK(ricci_at(cfg, Point({0.3, 0.4, -1.0})).mat.max_abs() == doctest::Approx(0.0));
    }
    SUBCASE("projector structure") {
        const ManifoldConfig cfg(3, 0.5, 0.0);
        const SymTensor ric = ricci_at(cfg, Point({1.0, 0.0, 0.0}));
        CHECK(ric.mat.max_abs_diff(diag3(0.0, 0.75, 0.75)) <= 1e-14);
    }
    SUBCASE("two dimensions are flat in this family") {
        const ManifoldConfig cfg(2, 0.7, 0.0);
        const SymTensor ric = ricci_at(cfg, Point({0.4, -0.9}));
        CHECK(ric.mat.max_abs() <= 1e-14);
    }
}

TEST_CASE("hessian of f and df (x) df") {
    SUBCASE("alpha = 0 kills both") {
        const ManifoldConfig cfg(3, 0.5, 0.0);
        const Point x({0.2, -0.7, 0.3});
        CHECK(hessian_f_at(cfg, x).mat.max_abs() == doctest::Approx(0.0));
        CHECK(df_tensor_df_at(cfg, x).mat.max_abs() == doctest::Approx(0.0));
    }
    SUBCASE("flat-case power weight display") {
        const ManifoldConfig cfg(3, 0.0, -1.0);
        const SymTensor h = hessian_f_at(cfg, Point({1.0, 0.0, 0.0}));
        CHECK(h.mat.max_abs_diff(diag3(-1.0, 1.0, 1.0)) <= 1e-14);
    }
    SUBCASE("df (x) df on an axis point") {
        const ManifoldConfig cfg(3, 0.5, 2.0);
        const SymTensor t = df_tensor_df_at(cfg, Point({0.0, 2.0, 0.0}));
        CHECK(t.mat.max_abs_diff(diag3(0.0, 0.25, 0.0)) <= 1e-14);
    }
    SUBCASE("hessian_f agrees with convert_operators on exact derivatives of f") {
        for (double gamma : {-0.5, 0.0, 0.4}) {
            const ManifoldConfig cfg(3, gamma, 1.7);
            const Point x({0.8, -0.3, 0.5});
            const double rho = x.norm();
            const double A = cfg.alpha * (1.0 - gamma);  // f = -A log|x| + const
            std::vector<double> Df(3);
            SymMat D2f(3);
            for (int i = 0; i < 3; ++i) {
                Df[static_cast<size_t>(i)] = -A * x[i] / (rho * rho);
                for (int j = 0; j <= i; ++j) {
                    double v = 2.0 * A * x[i] * x[j] / (rho * rho * rho * rho);
                    if (i == j) v -= A / (rho * rho);
                    D2f.set(i, j, v);
                }
            }
            const OperatorData op = convert_operators(cfg, x, Df, D2f);
            CHECK(op.riem_hess.mat.max_abs_diff(hessian_f_at(cfg, x).mat) <= 1e-13);
        }
    }
}

TEST_CASE("bakry-emery tensor") {
    SUBCASE("zero in the unweighted flat case") {
        const ManifoldConfig cfg(3, 0.0, 0.0);
        CHECK(bakry_emery_at(cfg, MParam::finite(5.0), Point({1.0, 2.0, 2.0})).mat.max_abs() ==
              doctest::Approx(0.0));
    }
    SUBCASE("finite m example") {
        const ManifoldConfig cfg(3, 0.0, -1.0);
        const SymTensor t = bakry_emery_at(cfg, MParam::finite(2.0), Point({1.0, 0.0, 0.0}));
        CHECK(t.mat.max_abs_diff(diag3(0.0, 1.0, 1.0)) <= 1e-14);
    }
    SUBCASE("infinite m example") {
        const ManifoldConfig cfg(3, 0.0, 1.0);
        const SymTensor t = bakry_emery_at(cfg, MParam::inf(), Point({1.0, 0.0, 0.0}));
        CHECK(t.mat.max_abs_diff(diag3(1.0, -1.0, -1.0)) <= 1e-14);
    }
    SUBCASE("m = n diverges unless alpha = 0") {
        const ManifoldConfig cfg(3, 0.0, 1.0);
        CHECK_THROWS_AS(bakry_emery_at(cfg, MParam::finite(3.0), Point({1.0, 0.0, 0.0})),
                        DivergentParameter);
        const ManifoldConfig flat(3, 0.0, 0.0);
        CHECK(bakry_emery_at(flat, MParam::finite(3.0), Point({1.0, 0.0, 0.0})).mat.max_abs() ==
              doctest::Approx(0.0));
    }
}

TEST_CASE("power weight condition: examples and eigenvalue equivalence") {
    CHECK(power_weight_condition(3, -1.0, MParam::finite(2.5)));
    CHECK_FALSE(power_weight_condition(3, 1.0, MParam::finite(4.0)));
    CHECK(power_weight_condition(3, 0.0, MParam::inf()));

    std::mt19937_64 rng(7);
    const int n = 3;
    for (double alpha : {-2.0, -1.0, -0.5, 0.5, 1.0}) {
        const ManifoldConfig cfg(n, 0.0, alpha);
        const std::vector<MParam> ms = {MParam::finite(n + alpha),
                                        MParam::finite(0.5 * (n + alpha + n)),
                                        MParam::finite(n - 1e-3), MParam::finite(n + 1.0),
                                        MParam::inf()};
        for (const MParam& m : ms) {
            if (!m.infinite && m.value == static_cast<double>(n)) continue;
            bool eig_nonneg = true;
            for (int k = 0; k < 20; ++k) {
                const Point x = random_point(rng, n);
                const double lam = min_generalized_eigenvalue(bakry_emery_at(cfg, m, x).mat,
                                                              SymMat::identity(n));
                if (lam < -1e-12) {
                    eig_nonneg = false;
                    break;
                }
            }
            CHECK(power_weight_condition(n, alpha, m) == eig_nonneg);
        }
    }
}

TEST_CASE("compatibility tensor") {
    SUBCASE("vanishes at the threshold") {
        const double gamma1 = 1.0 - std::sqrt(0.5);  // n = 3, alpha = 1
        const ManifoldConfig cfg(3, gamma1, 1.0);
        CHECK(compatibility_tensor_at(cfg, Point({0.3, 0.1, -0.4})).mat.max_abs() <= 1e-12);
    }
    SUBCASE("positive semidefinite inside the window") {
        const ManifoldConfig cfg(3, 0.5, 1.0);
        const Point x({0.6, -0.2, 0.9});
        const SymTensor t = compatibility_tensor_at(cfg, x);
        CHECK(min_generalized_eigenvalue(t, ambient_data(cfg, x).metric) >= -1e-12);
        CHECK(std::abs(t.mat.quad_form(x.coords())) <= 1e-13);  // radial direction annihilated
    }
    SUBCASE("indefinite outside the window") {
        const ManifoldConfig cfg(3, 0.0, 1.0);
        const SymTensor t = compatibility_tensor_at(cfg, Point({1.0, 0.0, 0.0}));
        CHECK(t.mat.max_abs_diff(diag3(0.0, -1.0, -1.0)) <= 1e-14);
    }
    SUBCASE("alpha = 0 diverges") {
        const ManifoldConfig cfg(3, 0.5, 0.0);
        CHECK_THROWS_AS(compatibility_tensor_at(cfg, Point({1.0, 0.0, 0.0})), DivergentParameter);
    }
}

TEST_CASE("admissibility thresholds") {
    {
        const AdmissibilityResult a = admissibility(3, 1.0, 0.5);
        CHECK(a.gamma1 == doctest::Approx(0.2928932188134524).epsilon(1e-12));
        CHECK(a.gamma2 == doctest::Approx(1.7071067811865475).epsilon(1e-12));
        CHECK(a.admissible);
        CHECK(rigidity_admissible(ManifoldConfig(3, 0.5, 1.0)));
    }
    {
        const AdmissibilityResult a = admissibility(3, 1.0, 0.1);
        CHECK_FALSE(a.admissible);
        CHECK_FALSE(rigidity_admissible(ManifoldConfig(3, 0.1, 1.0)));
    }
    {
        const AdmissibilityResult a = admissibility(3, 1.0, 1.5);
        CHECK(a.admissible);
        CHECK(rigidity_admissible(ManifoldConfig(3, 1.5, 1.0, SingularityMode::InfinityCentered)));
    }
    CHECK_THROWS_AS(admissibility(3, -1.0, 0.5), DegenerateThreshold);
    CHECK_THROWS_AS(admissibility(3, -2.0, 0.5), DegenerateThreshold);
    // boundary gamma = gamma_1 is admissible by exact comparison
    CHECK(admissibility(3, 1.0, 1.0 - std::sqrt(0.5)).admissible);
}

TEST_CASE("generalized eigenvalues") {
    CHECK(min_generalized_eigenvalue(SymMat(3), SymMat::identity(3)) == doctest::Approx(0.0));
    CHECK(min_generalized_eigenvalue(diag3(0.0, 1.0, 1.0), SymMat::identity(3)) ==
          doctest::Approx(0.0));
    CHECK(min_generalized_eigenvalue(diag3(1.0, -1.0, -1.0), SymMat::identity(3) * 4.0) ==
          doctest::Approx(-0.25).epsilon(1e-13));
    CHECK_THROWS_AS(min_generalized_eigenvalue(SymMat::identity(3), diag3(1.0, -1.0, 1.0)),
                    NotPositiveDefinite);

    SUBCASE("full matrix against hand-diagonalized values") {
        SymMat t(2);
        t.set(0, 0, 2.0);
        t.set(1, 1, 2.0);
        t.set(0, 1, 1.0);
        CHECK(min_generalized_eigenvalue(t, SymMat::identity(2)) ==
              doctest::Approx(1.0).epsilon(1e-13));
        const std::vector<double> eigs = jacobi_eigenvalues(t);
        CHECK(eigs[0] == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(eigs[1] == doctest::Approx(3.0).epsilon(1e-13));
    }
}

TEST_CASE("closed form vs general formula on random grids") {
    std::mt19937_64 rng(2024);
    for (int n : {3, 4, 5})
        for (double alpha : {0.5, 1.0, 3.0}) {
            const double gamma1 = admissibility(n, alpha, 0.0).gamma1;
            for (double gamma : {-1.0, 0.0, 0.3, gamma1, 0.9}) {
                const ManifoldConfig cfg(n, gamma, alpha);
                for (int k = 0; k < 100; ++k) {
                    const Point x = random_point(rng, n);
                    // the internal cross-checks throw on disagreement
                    CHECK_NOTHROW(ricci_at(cfg, x));
                    CHECK_NOTHROW(compatibility_tensor_at(cfg, x));
                }
            }
        }
}

TEST_CASE("sign equivalence of the closed-form gate and pointwise eigenvalues") {
    std::mt19937_64 rng(99);
    for (int n : {3, 4})
        for (double alpha : {0.5, 1.0, 3.0})
            for (double gamma : {0.0, 0.2, 0.4, 0.7, 0.9}) {
                const ManifoldConfig cfg(n, gamma, alpha);
                const bool closed = admissibility(n, alpha, gamma).admissible;
                bool eig = true;
                for (int k = 0; k < 20; ++k) {
                    const Point x = random_point(rng, n);
                    const double lam = min_generalized_eigenvalue(
                        compatibility_tensor_at(cfg, x), ambient_data(cfg, x).metric);
                    if (lam < -1e-12) {
                        eig = false;
                        break;
                    }
                }
                CHECK(closed == eig);
            }
}

TEST_CASE("homogeneity: tensors scale as |x|^-2") {
    const ManifoldConfig cfg(3, 0.4, 1.3);
    const Point x({0.5, -0.8, 0.2});
    std::vector<double> doubled = x.coords();
    for (double& v : doubled) v *= 2.0;
    const Point x2(std::move(doubled));

    const SymMat r1 = ricci_at(cfg, x).mat;
    const SymMat r2 = ricci_at(cfg, x2).mat;
    CHECK(r2.max_abs_diff(r1 * 0.25) <= 1e-13);

    const SymMat h1 = hessian_f_at(cfg, x).mat;
    const SymMat h2 = hessian_f_at(cfg, x2).mat;
    CHECK(h2.max_abs_diff(h1 * 0.25) <= 1e-13);
}
