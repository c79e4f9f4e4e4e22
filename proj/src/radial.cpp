#include "serrin/radial.hpp"

#include <cmath>
#include <limits>

namespace serrin {

std::pair<RadialProfile, SerrinData> ball_solution(const ManifoldConfig& cfg, double R) {
    if (!(R > 0.0)) throw std::invalid_argument("ball_solution: R must be positive");
    if (!(cfg.alpha > -cfg.n)) throw NonIntegrableWeight("ball_solution: requires alpha > -n");

    const double na = cfg.n + cfg.alpha;
    RadialProfile p{0.0,
                    R,
                    [R, na](double r) { return (R * R - r * r) / (2.0 * na); },
                    [na](double r) { return -r / na; },
                    [na](double) { return -1.0 / na; },
                    RadialProfile::Provenance::ClosedForm};

    double tau;
    if (cfg.mode == SingularityMode::OriginCentered) {
        tau = unit_sphere_area(cfg.n) * std::pow(1.0 - cfg.gamma, cfg.n - 1) *
              std::pow(R, na + 2.0) / (na * na * (na + 2.0));
    } else {
        tau = integrate_radial(cfg, DomainSpec::ball(R), p.value);
    }
    return {std::move(p), SerrinData{R / na, tau}};
}

RadialProfile space_form_solution(double k, int n, double R) {
    if (n < 2) throw std::invalid_argument("space_form_solution: n must be >= 2");
    if (!(R > 0.0)) throw std::invalid_argument("space_form_solution: R must be positive");

    if (k > 0.0) {
        const double sk = std::sqrt(k);
        if (!(R < 0.5 * M_PI / sk))
            throw RadiusTooLarge("space_form_solution: positivity needs R < pi/(2 sqrt(k))");
        const double A = 1.0 / (k * n * std::cos(sk * R));
        const double C = 1.0 / (n * k);
        return RadialProfile{0.0, R,
                             [A, C, sk](double r) { return A * std::cos(sk * r) - C; },
                             [A, sk](double r) { return -A * sk * std::sin(sk * r); },
                             [A, k, sk](double r) { return -A * k * std::cos(sk * r); },
                             RadialProfile::Provenance::ClosedForm};
    }
    if (k < 0.0) {
        const double sk = std::sqrt(-k);
        const double A = 1.0 / (k * n * std::cosh(sk * R));
        const double C = 1.0 / (n * k);
        return RadialProfile{0.0, R,
                             [A, C, sk](double r) { return A * std::cosh(sk * r) - C; },
                             [A, sk](double r) { return A * sk * std::sinh(sk * r); },
                             [A, k, sk](double r) { return -A * k * std::cosh(sk * r); },
                             RadialProfile::Provenance::ClosedForm};
    }
    return RadialProfile{0.0, R,
                         [R, n](double r) { return (R * R - r * r) / (2.0 * n); },
                         [n](double r) { return -r / n; },
                         [n](double) { return -1.0 / n; },
                         RadialProfile::Provenance::ClosedForm};
}

RadialProfile v_function(const ManifoldConfig& cfg) {
    if (cfg.alpha == -cfg.n) throw std::invalid_argument("v_function: alpha == -n is degenerate");
    const double na = cfg.n + cfg.alpha;
    return RadialProfile{0.0, std::numeric_limits<double>::infinity(),
                         [na](double r) { return r * r / (2.0 * na); },
                         [na](double r) { return r / na; },
                         [na](double) { return 1.0 / na; },
                         RadialProfile::Provenance::ClosedForm};
}

double hessian_bound_beta(const ManifoldConfig& cfg) { return cfg.n / (cfg.n + cfg.alpha); }

namespace {

// int_a^r s^p ds; expm1 keeps the value accurate when p + 1 is tiny.
double power_integral(double p, double a, double r) {
    if (p == -1.0) return std::log(r / a);
    const double q = p + 1.0;
    return std::pow(a, q) * std::expm1(q * std::log(r / a)) / q;
}

// K(r) = int_a^r (int_a^s t^{beta_c} dt) s^{-beta_c} ds in closed form.
// With q = beta_c + 1 the numerator has two algebraically equal shapes,
//   N = -2 r^2 expm1(-q L) - q (r^2 - a^2)        (stable near q = 0)
//   N = (2-q)(r^2 - a^2) - 2 a^2 expm1((2-q) L)   (stable near q = 2)
// with L = log(r/a); each is used on its own side of q = 1.
double double_integral(double beta_c, double a, double r) {
    const double L = std::log(r / a);
    if (beta_c == -1.0) return 0.5 * r * r * L - 0.25 * (r * r - a * a);
    if (beta_c == 1.0) return 0.25 * (r * r - a * a) - 0.5 * a * a * L;
    const double q = beta_c + 1.0;
    double num;
    if (q < 1.0)
        num = -2.0 * r * r * std::expm1(-q * L) - q * (r * r - a * a);
    else
        num = (2.0 - q) * (r * r - a * a) - 2.0 * a * a * std::expm1((2.0 - q) * L);
    return num / (2.0 * q * (2.0 - q));
}

}  // namespace

RadialProfile annulus_solve(int n, double beta_c, double a, double b) {
    if (n < 2) throw std::invalid_argument("annulus_solve: n must be >= 2");
    if (!(0.0 < a && a < b)) throw std::invalid_argument("annulus_solve: requires 0 < a < b");

    // u'(r) = (C - int_a^r s^{beta_c} ds) / r^{beta_c}, with C fixed by
    // int_a^b u' dr = 0 so that u(a) = u(b) = 0.
    const double Jb = power_integral(-beta_c, a, b);
    const double Kb = double_integral(beta_c, a, b);
    const double C = Kb / Jb;

    auto value = [beta_c, a, C](double r) {
        return C * power_integral(-beta_c, a, r) - double_integral(beta_c, a, r);
    };
    auto deriv = [beta_c, a, C](double r) {
        return (C - power_integral(beta_c, a, r)) * std::pow(r, -beta_c);
    };
    auto deriv2 = [beta_c, deriv](double r) { return -1.0 - beta_c / r * deriv(r); };

    return RadialProfile{a, b, std::move(value), std::move(deriv), std::move(deriv2),
                         RadialProfile::Provenance::ClosedForm};
}

double serrin_constant(const ManifoldConfig& cfg, const DomainSpec& dom) {
    if (dom.kind != DomainSpec::Kind::Ball)
        throw UnsupportedDomain("serrin_constant: defined for ball domains only");
    if (!(cfg.alpha > -cfg.n)) throw NonIntegrableWeight("serrin_constant: requires alpha > -n");
    return dom.r_outer / (cfg.n + cfg.alpha);
}

}  // namespace serrin
