#include "serrin/geometry.hpp"

#include <cmath>

namespace serrin {

namespace {

// Gamma(k/2) for integer k >= 1, by the recursion Gamma(x+1) = x Gamma(x)
// from Gamma(1/2) = sqrt(pi) and Gamma(1) = 1.
double gamma_half_integer(int twice_x) {
    if (twice_x < 1) throw std::invalid_argument("gamma_half_integer: argument must be >= 1/2");
    double g = (twice_x % 2 == 0) ? 1.0 : std::sqrt(M_PI);
    for (int k = twice_x % 2 == 0 ? 2 : 1; k < twice_x; k += 2) g *= 0.5 * k;
    return g;
}

}  // namespace

double unit_sphere_area(int n) {
    if (n < 2) throw std::invalid_argument("unit_sphere_area: n must be >= 2");
    return 2.0 * std::pow(M_PI, 0.5 * n) / gamma_half_integer(n);
}

double geodesic_distance_from_norm(const ManifoldConfig& cfg, double rho) {
    if (!(rho > 0.0)) throw std::invalid_argument("geodesic_distance_from_norm: need |x| > 0");
    return std::pow(rho, 1.0 - cfg.gamma) / cfg.gamma_gap();
}

double geodesic_distance(const ManifoldConfig& cfg, const Point& x) {
    return geodesic_distance_from_norm(cfg, x.norm());
}

double euclidean_ball_radius(const ManifoldConfig& cfg, double R) {
    if (!(R > 0.0)) throw std::invalid_argument("euclidean_ball_radius: R must be positive");
    // rho^{1-gamma} = |1-gamma| R in both modes.
    return std::pow(cfg.gamma_gap() * R, 1.0 / (1.0 - cfg.gamma));
}

double weighted_ball_volume(const ManifoldConfig& cfg, double R) {
    if (cfg.mode != SingularityMode::OriginCentered)
        throw std::invalid_argument("weighted_ball_volume: closed form holds for OriginCentered only");
    if (!(R > 0.0)) throw std::invalid_argument("weighted_ball_volume: R must be positive");
    if (!(cfg.alpha > -cfg.n))
        throw NonIntegrableWeight("weighted_ball_volume: requires alpha > -n");
    double q = cfg.alpha + cfg.n;
    return unit_sphere_area(cfg.n) * std::pow(1.0 - cfg.gamma, cfg.n - 1) * std::pow(R, q) / q;
}

double weighted_ball_perimeter(const ManifoldConfig& cfg, double R) {
    if (cfg.mode != SingularityMode::OriginCentered)
        throw std::invalid_argument("weighted_ball_perimeter: closed form holds for OriginCentered only");
    if (!(R > 0.0)) throw std::invalid_argument("weighted_ball_perimeter: R must be positive");
    if (!(cfg.alpha > -cfg.n))
        throw NonIntegrableWeight("weighted_ball_perimeter: requires alpha > -n");
    return unit_sphere_area(cfg.n) * std::pow(1.0 - cfg.gamma, cfg.n - 1) *
           std::pow(R, cfg.alpha + cfg.n - 1);
}

AmbientData ambient_data(const ManifoldConfig& cfg, const Point& x) {
    const int n = x.dim();
    if (n != cfg.n) throw std::invalid_argument("ambient_data: point dimension mismatch");
    const double rho = x.norm();
    const double conf = std::pow(rho, -2.0 * cfg.gamma);

    SymMat g(n), ginv(n);
    for (int i = 0; i < n; ++i) {
        g.set(i, i, conf);
        ginv.set(i, i, 1.0 / conf);
    }

    const double d = geodesic_distance_from_norm(cfg, rho);
    const double f = -cfg.alpha * std::log(d);

    std::vector<double> grad_f(static_cast<size_t>(n)), grad_phi(static_cast<size_t>(n));
    const double cf = -cfg.alpha * (1.0 - cfg.gamma) / (rho * rho);
    const double cp = -cfg.gamma / (rho * rho);
    for (int i = 0; i < n; ++i) {
        grad_f[static_cast<size_t>(i)] = cf * x[i];
        grad_phi[static_cast<size_t>(i)] = cp * x[i];
    }

    return AmbientData{SymTensor{x, g}, SymTensor{x, ginv}, std::pow(d, cfg.alpha), f,
                       std::move(grad_f), std::move(grad_phi)};
}

OperatorData convert_operators(const ManifoldConfig& cfg, const Point& x,
                               const std::vector<double>& Du, const SymMat& D2u) {
    const int n = x.dim();
    if (n != cfg.n || static_cast<int>(Du.size()) != n || D2u.dim() != n)
        throw std::invalid_argument("convert_operators: dimension mismatch");

    const double rho = x.norm();
    const double e2phi_inv = std::pow(rho, 2.0 * cfg.gamma);  // e^{-2 phi}

    std::vector<double> Dphi(static_cast<size_t>(n)), Df(static_cast<size_t>(n));
    const double cp = -cfg.gamma / (rho * rho);
    const double cf = -cfg.alpha * (1.0 - cfg.gamma) / (rho * rho);
    double du_dphi = 0.0, du_df = 0.0, du_du = 0.0, trace = 0.0;
    for (int i = 0; i < n; ++i) {
        Dphi[static_cast<size_t>(i)] = cp * x[i];
        Df[static_cast<size_t>(i)] = cf * x[i];
        du_dphi += Du[static_cast<size_t>(i)] * Dphi[static_cast<size_t>(i)];
        du_df += Du[static_cast<size_t>(i)] * Df[static_cast<size_t>(i)];
        du_du += Du[static_cast<size_t>(i)] * Du[static_cast<size_t>(i)];
        trace += D2u(i, i);
    }

    std::vector<double> grad(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) grad[static_cast<size_t>(i)] = e2phi_inv * Du[static_cast<size_t>(i)];

    SymMat hess(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            double v = D2u(i, j) - (Du[static_cast<size_t>(i)] * Dphi[static_cast<size_t>(j)] +
                                    Dphi[static_cast<size_t>(i)] * Du[static_cast<size_t>(j)]);
            if (i == j) v += du_dphi;
            hess.set(i, j, v);
        }

    const double lap_g = e2phi_inv * (trace + (cfg.n - 2) * du_dphi);
    const double lap_f = lap_g - e2phi_inv * du_df;

    return OperatorData{std::move(grad), SymTensor{x, std::move(hess)}, lap_g, lap_f,
                        e2phi_inv * du_du};
}

RadialChart radial_chart(const ManifoldConfig& cfg, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("radial_chart: need r > 0");
    const double g = cfg.gamma;
    const double rho = std::pow(cfg.gamma_gap() * r, 1.0 / (1.0 - g));
    const double sign = (cfg.mode == SingularityMode::OriginCentered) ? 1.0 : -1.0;
    // r(rho) = rho^{1-gamma} / +-(1-gamma)
    const double dr = sign * std::pow(rho, -g);
    const double d2r = -sign * g * std::pow(rho, -g - 1.0);
    return RadialChart{rho, dr, d2r};
}

RadialDerivatives radial_derivatives(const ManifoldConfig& cfg, double r, double u1, double u2) {
    const RadialChart ch = radial_chart(cfg, r);
    const int n = cfg.n;
    Point x = Point::axis(n, ch.rho);

    // u(r(|x|)) at x = rho e_1: the radial direction is e_1.
    const double radial = u2 * ch.dr_drho * ch.dr_drho + u1 * ch.d2r_drho2;
    const double tangential = u1 * ch.dr_drho / ch.rho;

    std::vector<double> Du(static_cast<size_t>(n), 0.0);
    Du[0] = u1 * ch.dr_drho;
    SymMat D2u(n);
    D2u.set(0, 0, radial);
    for (int i = 1; i < n; ++i) D2u.set(i, i, tangential);

    return RadialDerivatives{std::move(x), std::move(Du), std::move(D2u)};
}

}  // namespace serrin
