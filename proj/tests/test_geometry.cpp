#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "serrin/geometry.hpp"
#include "serrin/quadrature.hpp"

using namespace serrin;

namespace {

ManifoldConfig make(int n, double gamma, double alpha,
                    SingularityMode mode = SingularityMode::OriginCentered) {
    return ManifoldConfig(n, gamma, alpha, mode);
}

// Independent volume oracle: the Euclidean-coordinate integral
//   w_n / |1-gamma|^alpha * int_0^rho s^{(1-gamma)(alpha+n)-1} ds,
// regularized by t = s^{q/2} (q the full exponent) and fed to plain Simpson.
double volume_oracle(const ManifoldConfig& cfg, double R) {
    const double rho = euclidean_ball_radius(cfg, R);
    const double q = (1.0 - cfg.gamma) * (cfg.alpha + cfg.n);
    const double t_max = std::pow(rho, 0.5 * q);
    auto f = [&](double t) { return 2.0 / q * t; };
    const double integral = adaptive_simpson(f, 0.0, t_max);
    return unit_sphere_area(cfg.n) / std::pow(cfg.gamma_gap(), cfg.alpha) * integral;
}

}  // namespace

TEST_CASE("unit sphere areas match the classical values") {
    CHECK(unit_sphere_area(2) == doctest::Approx(2.0 * M_PI).epsilon(1e-15));
    CHECK(unit_sphere_area(3) == doctest::Approx(4.0 * M_PI).epsilon(1e-15));
    CHECK(unit_sphere_area(4) == doctest::Approx(2.0 * M_PI * M_PI).epsilon(1e-15));
    CHECK(unit_sphere_area(5) == doctest::Approx(8.0 * M_PI * M_PI / 3.0).epsilon(1e-15));
    CHECK(unit_sphere_area(6) == doctest::Approx(std::pow(M_PI, 3)).epsilon(1e-15));
}

TEST_CASE("config invariants") {
    CHECK_THROWS_AS(ManifoldConfig(1, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(ManifoldConfig(3, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(ManifoldConfig(3, 1.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(ManifoldConfig(3, 0.5, 0.0, SingularityMode::InfinityCentered),
                    std::invalid_argument);
    CHECK_THROWS_AS(Point({0.0, 0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("geodesic distance") {
    CHECK(geodesic_distance(make(3, 0.0, 0.0), Point({1.0, 0.0, 0.0})) == doctest::Approx(1.0));
    CHECK(geodesic_distance(make(3, 0.5, 0.0), Point({0.0, 4.0, 0.0})) == doctest::Approx(4.0));
    CHECK(geodesic_distance(make(3, 2.0, 0.0, SingularityMode::InfinityCentered),
                            Point({2.0, 0.0, 0.0})) == doctest::Approx(0.5));
}

TEST_CASE("distance equals |x|_g / (1-gamma)") {
    // |x|_g is the metric norm of the position vector; route through the
    // metric tensor rather than the distance formula.
    for (double gamma : {-1.0, 0.0, 0.3, 0.9}) {
        const ManifoldConfig cfg = make(3, gamma, 1.0);
        for (double rho : {0.3, 1.0, 7.5}) {
            const Point x = Point::axis(3, rho);
            const AmbientData amb = ambient_data(cfg, x);
            const double xg = std::sqrt(amb.metric.mat.quad_form(x.coords()));
            const double d = geodesic_distance(cfg, x);
            CHECK(d == doctest::Approx(xg / (1.0 - gamma)).epsilon(1e-14));
        }
    }
}

TEST_CASE("euclidean ball radius and round trip") {
    CHECK(euclidean_ball_radius(make(3, 0.0, 0.0), 3.0) == doctest::Approx(3.0));
    CHECK(euclidean_ball_radius(make(3, 0.5, 0.0), 2.0) == doctest::Approx(1.0));
    CHECK(euclidean_ball_radius(make(3, 2.0, 0.0, SingularityMode::InfinityCentered), 1.0) ==
          doctest::Approx(1.0));

    for (double gamma : {-1.0, 0.0, 0.3, 0.9}) {
        for (double R : {0.1, 1.0, 10.0}) {
            const ManifoldConfig cfg = make(3, gamma, 0.0);
            const double rho = euclidean_ball_radius(cfg, R);
            const double back = geodesic_distance(cfg, Point::axis(3, rho));
            CHECK(back == doctest::Approx(R).epsilon(1e-12));
        }
    }
}

TEST_CASE("weighted ball volume: closed form, errors, quadrature oracle") {
    CHECK(weighted_ball_volume(make(3, 0.0, 0.0), 1.0) ==
          doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-14));
    CHECK(weighted_ball_volume(make(3, 0.5, 1.0), 1.0) ==
          doctest::Approx(M_PI / 4.0).epsilon(1e-14));
    CHECK_THROWS_AS(weighted_ball_volume(make(3, 0.0, -3.0), 1.0), NonIntegrableWeight);
    CHECK_THROWS_AS(weighted_ball_volume(make(3, 0.0, -3.5), 1.0), NonIntegrableWeight);

    for (double alpha : {-2.5, -1.0, 0.0, 1.0, 3.0})
        for (double gamma : {-0.5, 0.0, 0.4}) {
            const ManifoldConfig cfg = make(3, gamma, alpha);
            for (double R : {0.5, 1.0, 2.0}) {
                CHECK(weighted_ball_volume(cfg, R) ==
                      doctest::Approx(volume_oracle(cfg, R)).epsilon(1e-10));
            }
        }
}

TEST_CASE("weighted ball perimeter: closed form, volume derivative, ratio") {
    CHECK(weighted_ball_perimeter(make(3, 0.0, 0.0), 1.0) ==
          doctest::Approx(4.0 * M_PI).epsilon(1e-14));
    CHECK(weighted_ball_perimeter(make(3, 0.5, 1.0), 2.0) ==
          doctest::Approx(8.0 * M_PI).epsilon(1e-14));

    // perimeter = d(volume)/dR
    const ManifoldConfig cfg = make(3, 0.3, 1.5);
    const double R = 1.7;
    const double h = 1e-4;
    const double fd =
        (weighted_ball_volume(cfg, R + h) - weighted_ball_volume(cfg, R - h)) / (2.0 * h);
    CHECK(weighted_ball_perimeter(cfg, R) == doctest::Approx(fd).epsilon(1e-6));

    for (double alpha : {-2.5, -1.0, 0.0, 1.0, 3.0})
        for (double gamma : {-1.0, 0.0, 0.3, 0.9})
            for (double Rr : {0.1, 1.0, 10.0}) {
                const ManifoldConfig c = make(3, gamma, alpha);
                const double ratio = weighted_ball_volume(c, Rr) / weighted_ball_perimeter(c, Rr);
                CHECK(ratio == doctest::Approx(Rr / (3.0 + alpha)).epsilon(1e-12));
            }
}

TEST_CASE("ambient data") {
    SUBCASE("flat unweighted") {
        const AmbientData amb = ambient_data(make(3, 0.0, 0.0), Point({0.3, -1.2, 0.5}));
        CHECK(amb.weight == doctest::Approx(1.0));
        CHECK(amb.f == doctest::Approx(0.0));
        for (int i = 0; i < 3; ++i) {
            CHECK(amb.metric.mat(i, i) == doctest::Approx(1.0));
            CHECK(amb.euclid_grad_f[static_cast<size_t>(i)] == doctest::Approx(0.0));
        }
    }
    SUBCASE("weight at unit radius") {
        const AmbientData amb = ambient_data(make(3, 0.5, 1.0), Point({0.0, 0.0, 1.0}));
        CHECK(amb.weight == doctest::Approx(2.0).epsilon(1e-14));  // d_g = 2
    }
    SUBCASE("gradient of f") {
        const AmbientData amb = ambient_data(make(3, 0.5, 1.0), Point({1.0, 0.0, 0.0}));
        CHECK(amb.euclid_grad_f[0] == doctest::Approx(-0.5).epsilon(1e-14));
        CHECK(amb.euclid_grad_f[1] == doctest::Approx(0.0));
    }
    SUBCASE("infinity-centered weight") {
        const ManifoldConfig cfg = make(3, 2.0, 1.0, SingularityMode::InfinityCentered);
        const AmbientData amb = ambient_data(cfg, Point({2.0, 0.0, 0.0}));
        CHECK(amb.weight == doctest::Approx(0.5).epsilon(1e-14));  // d(x, inf) = 1/2
    }
}

TEST_CASE("convert_operators: flat case is the identity map") {
    const ManifoldConfig cfg = make(3, 0.0, 0.0);
    const Point x({0.7, -0.2, 1.1});
    std::vector<double> Du{1.0, 2.0, -0.5};
    SymMat D2u(3);
    D2u.set(0, 0, 2.0);
    D2u.set(1, 1, -1.0);
    D2u.set(2, 2, 0.5);
    D2u.set(0, 1, 0.25);
    const OperatorData op = convert_operators(cfg, x, Du, D2u);
    for (int i = 0; i < 3; ++i) CHECK(op.riem_grad[static_cast<size_t>(i)] == doctest::Approx(Du[static_cast<size_t>(i)]));
    CHECK(op.lap_g == doctest::Approx(1.5));
    CHECK(op.lap_f == doctest::Approx(op.lap_g));
    CHECK(op.riem_hess.mat.max_abs_diff(D2u) == doctest::Approx(0.0));
}

TEST_CASE("convert_operators: ball solution and V-function identities") {
    const ManifoldConfig cfg = make(3, 0.5, 1.0);
    const double na = 4.0;

    // u = (R^2 - d^2)/(2(n+alpha)) has Lap_f u = -1
    {
        const double R = 1.0;
        const Point x = Point::axis(3, 1.0);  // d_g = 2 here, u < 0: residual is what matters
        const double rho = x.norm();
        const double d = geodesic_distance(cfg, x);
        (void)R;
        // exact Euclidean derivatives of u(d(|x|)): u' = -d/na, u'' = -1/na
        const double dr = std::pow(rho, -cfg.gamma);
        const double d2r = -cfg.gamma * std::pow(rho, -cfg.gamma - 1.0);
        std::vector<double> Du{(-d / na) * dr, 0.0, 0.0};
        SymMat D2u(3);
        D2u.set(0, 0, (-1.0 / na) * dr * dr + (-d / na) * d2r);
        D2u.set(1, 1, (-d / na) * dr / rho);
        D2u.set(2, 2, (-d / na) * dr / rho);
        const OperatorData op = convert_operators(cfg, x, Du, D2u);
        CHECK(op.lap_f == doctest::Approx(-1.0).epsilon(1e-13));
    }

    // V = d^2/(2(n+alpha)) has Hess V = g/(n+alpha) and Lap_f V = 1
    {
        const Point x({0.4, 0.8, -0.3});
        const double rho = x.norm();
        const double d = geodesic_distance(cfg, x);
        const double dr_ = std::pow(rho, -cfg.gamma);
        const double d2r_ = -cfg.gamma * std::pow(rho, -cfg.gamma - 1.0);
        const double v1 = d / na;
        const double v2 = 1.0 / na;
        std::vector<double> Du(3);
        SymMat D2u(3);
        const double rad = v2 * dr_ * dr_ + v1 * d2r_;
        const double tan = v1 * dr_ / rho;
        for (int i = 0; i < 3; ++i) {
            Du[static_cast<size_t>(i)] = v1 * dr_ * x[i] / rho;
            for (int j = 0; j <= i; ++j) {
                double val = (rad - tan) * x[i] * x[j] / (rho * rho);
                if (i == j) val += tan;
                D2u.set(i, j, val);
            }
        }
        const OperatorData op = convert_operators(cfg, x, Du, D2u);
        CHECK(op.lap_f == doctest::Approx(1.0).epsilon(1e-13));
        const AmbientData amb = ambient_data(cfg, x);
        const SymMat expected = amb.metric.mat * (1.0 / na);
        CHECK(op.riem_hess.mat.max_abs_diff(expected) <= 1e-13);
    }
}

TEST_CASE("convert_operators: finite-difference inputs converge at O(h^2)") {
    const ManifoldConfig cfg = make(3, 0.4, 1.5);
    const Point x({0.8, 0.5, -0.4});
    auto test_fn = [](const std::vector<double>& p) {
        return std::sin(p[0]) * p[1] + std::exp(0.5 * p[2]) + p[0] * p[0] * p[2];
    };

    // exact derivatives
    std::vector<double> Du{std::cos(x[0]) * x[1] + 2.0 * x[0] * x[2], std::sin(x[0]),
                           0.5 * std::exp(0.5 * x[2]) + x[0] * x[0]};
    SymMat D2u(3);
    D2u.set(0, 0, -std::sin(x[0]) * x[1] + 2.0 * x[2]);
    D2u.set(1, 1, 0.0);
    D2u.set(2, 2, 0.25 * std::exp(0.5 * x[2]));
    D2u.set(0, 1, std::cos(x[0]));
    D2u.set(0, 2, 2.0 * x[0]);
    D2u.set(1, 2, 0.0);
    const OperatorData exact = convert_operators(cfg, x, Du, D2u);

    auto fd_op = [&](double h) {
        std::vector<double> g(3);
        SymMat H(3);
        std::vector<double> base = x.coords();
        for (int i = 0; i < 3; ++i) {
            std::vector<double> p = base, m = base;
            p[static_cast<size_t>(i)] += h;
            m[static_cast<size_t>(i)] -= h;
            g[static_cast<size_t>(i)] = (test_fn(p) - test_fn(m)) / (2.0 * h);
            std::vector<double> pp = base;
            pp[static_cast<size_t>(i)] += 2.0 * h;
            std::vector<double> mm = base;
            mm[static_cast<size_t>(i)] -= 2.0 * h;
            H.set(i, i, (-test_fn(pp) + 16.0 * test_fn(p) - 30.0 * test_fn(base) + 16.0 * test_fn(m) - test_fn(mm)) /
                            (12.0 * h * h));
            for (int j = 0; j < i; ++j) {
                std::vector<double> a = base, b = base, c = base, d = base;
                a[static_cast<size_t>(i)] += h; a[static_cast<size_t>(j)] += h;
                b[static_cast<size_t>(i)] += h; b[static_cast<size_t>(j)] -= h;
                c[static_cast<size_t>(i)] -= h; c[static_cast<size_t>(j)] += h;
                d[static_cast<size_t>(i)] -= h; d[static_cast<size_t>(j)] -= h;
                H.set(i, j, (test_fn(a) - test_fn(b) - test_fn(c) + test_fn(d)) / (4.0 * h * h));
            }
        }
        return convert_operators(cfg, x, g, H);
    };

    auto err = [&](const OperatorData& op) {
        double e = std::abs(op.lap_f - exact.lap_f);
        e = std::max(e, std::abs(op.lap_g - exact.lap_g));
        e = std::max(e, op.riem_hess.mat.max_abs_diff(exact.riem_hess.mat));
        return e;
    };

    const double e1 = err(fd_op(1e-2));
    const double e2 = err(fd_op(5e-3));
    const double ratio = e1 / e2;
    CHECK(ratio >= 3.5);
    CHECK(ratio <= 4.5);
}

TEST_CASE("infinity-centered radial quadrature matches a Euclidean-coordinate oracle") {
    const ManifoldConfig cfg = make(3, 2.0, 1.0, SingularityMode::InfinityCentered);
    const double R = 1.0;
    const double rho_star = euclidean_ball_radius(cfg, R);

    // weighted volume by the r-space density
    const double vol_radial =
        integrate_radial(cfg, DomainSpec::ball(R), [](double) { return 1.0; });

    // same integral in Euclidean coordinates: int_{rho*}^{inf} has a finite
    // upper substitute via s = 1/rho
    auto integrand = [&](double s) {
        if (s == 0.0) return 0.0;
        const double rho = 1.0 / s;
        const double d = geodesic_distance_from_norm(cfg, rho);
        // e^{-f} * sqrt(det g) * rho^{n-1} * |d rho/d s|
        return std::pow(d, cfg.alpha) * std::pow(rho, -cfg.n * cfg.gamma) *
               std::pow(rho, cfg.n - 1) / (s * s);
    };
    const double vol_euclid =
        unit_sphere_area(3) * adaptive_simpson(integrand, 0.0, 1.0 / rho_star);
    CHECK(vol_radial == doctest::Approx(vol_euclid).epsilon(1e-9));
}
