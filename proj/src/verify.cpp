#include "serrin/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "serrin/curvature.hpp"

namespace serrin {

namespace {

constexpr double kTinyScale = 1e-300;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

double fd_step(double r) { return 1e-5 * std::max(1.0, std::abs(r)); }

// |Y|_g^2 = g^{ik} g^{jl} Y_ij Y_kl
double tensor_norm_sq(const SymMat& y, const SymMat& ginv) {
    const int n = y.dim();
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) s += ginv(i, k) * ginv(j, l) * y(i, j) * y(k, l);
    return s;
}

struct RadialOps {
    Point x;
    OperatorData op;
};

RadialOps ops_at(const ManifoldConfig& cfg, const RadialProfile& u, double r) {
    RadialDerivatives rd = radial_derivatives(cfg, r, u.deriv(r), u.deriv2(r));
    OperatorData op = convert_operators(cfg, rd.x, rd.Du, rd.D2u);
    return RadialOps{std::move(rd.x), std::move(op)};
}

std::vector<double> interior_nodes(const DomainSpec& dom, int count, double clip = 0.0) {
    const double span = dom.r_outer - dom.r_inner;
    return chebyshev_nodes(dom.r_inner + clip * span, dom.r_outer - clip * span, count);
}

}  // namespace

IdentityReport make_identity_report(std::string name, double lhs, double rhs, double tol) {
    IdentityReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_err = std::abs(lhs - rhs);
    r.rel_err = r.abs_err / std::max({std::abs(lhs), std::abs(rhs), kTinyScale});
    r.tol = tol;
    r.pass = r.rel_err <= tol || r.abs_err <= tol;
    return r;
}

IdentityReport make_bound_report(std::string name, double worst_residual, double tol) {
    IdentityReport r;
    r.name = std::move(name);
    r.lhs = worst_residual;
    r.rhs = 0.0;
    r.abs_err = std::max(0.0, -worst_residual);
    r.rel_err = r.abs_err;
    r.tol = tol;
    r.pass = worst_residual >= -tol;
    return r;
}

double radial_lap_f(const ManifoldConfig& cfg, const RadialProfile& u, double r) {
    return ops_at(cfg, u, r).op.lap_f;
}

IdentityReport verify_pde(const ManifoldConfig& cfg, const DomainSpec& dom,
                          const RadialProfile& u, double tol) {
    u.validate();
    double worst = 0.0;
    for (double r : interior_nodes(dom, 200))
        worst = std::max(worst, std::abs(radial_lap_f(cfg, u, r) + 1.0));
    return make_identity_report("pde", worst, 0.0, tol);
}

IdentityReport verify_flux(const ManifoldConfig& cfg, double R) {
    auto [u, data] = ball_solution(cfg, R);
    const double lhs = std::abs(u.deriv(R));
    const double rhs = weighted_ball_volume(cfg, R) / weighted_ball_perimeter(cfg, R);
    IdentityReport rep = make_identity_report("flux", lhs, rhs, 1e-12);
    rep.detail = "c=" + fmt(data.c);
    return rep;
}

IdentityReport verify_energy(const ManifoldConfig& cfg, const DomainSpec& dom,
                             const RadialProfile& u, const QuadratureSettings& q, double tol) {
    u.validate();
    if (std::abs(u.value(dom.r_outer)) > 1e-12)
        throw BoundaryNotZero("verify_energy: profile does not vanish at the outer radius");
    if (dom.kind == DomainSpec::Kind::Annulus && std::abs(u.value(dom.r_inner)) > 1e-12)
        throw BoundaryNotZero("verify_energy: profile does not vanish at the inner radius");

    // |grad u|_g^2 = u'(r)^2 for radial u: r is g-arclength.
    const double lhs = integrate_radial(cfg, dom, [&](double r) { const double d = u.deriv(r); return d * d; }, q);
    const double rhs = integrate_radial(cfg, dom, u.value, q);
    return make_identity_report("energy", lhs, rhs, tol);
}

PohozaevReports verify_pohozaev(const ManifoldConfig& cfg, double R, const QuadratureSettings& q,
                                double tol) {
    auto [u, data] = ball_solution(cfg, R);
    const DomainSpec dom = DomainSpec::ball(R);
    const double na = cfg.n + cfg.alpha;
    const double c2 = data.c * data.c;

    const double vol = integrate_radial(cfg, dom, [](double) { return 1.0; }, q);
    const double int_u = integrate_radial(cfg, dom, u.value, q);
    const double int_grad2 =
        integrate_radial(cfg, dom, [&](double r) { const double d = u.deriv(r); return d * d; }, q);

    IdentityReport ratio =
        make_identity_report("pohozaev_ratio", int_u, na / (na + 2.0) * c2 * vol, tol);
    // Hess V(grad u, grad u) = u'(r)^2 / (n + alpha) for V = r^2/(2(n+alpha)).
    IdentityReport general =
        make_identity_report("pohozaev_general", c2 * vol, int_u + 2.0 * int_grad2 / na, tol);
    return PohozaevReports{std::move(ratio), std::move(general)};
}

IdentityReport verify_p_function(const ManifoldConfig& cfg, const DomainSpec& dom,
                                 const RadialProfile& u, double beta_hess, double tol) {
    u.validate();
    double pmin = std::numeric_limits<double>::infinity();
    double pmax = -pmin;
    auto P = [&](double r) {
        const double d = u.deriv(r);
        return d * d + 2.0 * beta_hess / cfg.n * u.value(r);
    };
    for (double r : interior_nodes(dom, 200)) {
        const double p = P(r);
        pmin = std::min(pmin, p);
        pmax = std::max(pmax, p);
    }
    IdentityReport rep = make_identity_report("p_function", pmax - pmin, 0.0, tol);
    rep.detail = "P(r_max)=" + fmt(P(dom.r_outer)) + " beta=" + fmt(beta_hess);
    return rep;
}

IdentityReport verify_bochner(const ManifoldConfig& cfg, const RadialProfile& u, const MParam& m,
                              const std::vector<double>& sample_radii, double tol) {
    u.validate();
    if (!m.infinite) {
        if (cfg.alpha == 0.0)
            throw DivergentParameter("verify_bochner: finite m needs alpha != 0");
        if (m.value == static_cast<double>(cfg.n))
            throw DivergentParameter("verify_bochner: m == n");
        if (m.value < static_cast<double>(cfg.n))
            throw std::invalid_argument("verify_bochner: finite m must exceed n");
    }

    double min_res = std::numeric_limits<double>::infinity();
    double max_abs_res = 0.0;
    bool displays_hold = true;

    for (double r : sample_radii) {
        const double h = fd_step(r);
        const double u1 = u.deriv(r);
        const double u2 = u.deriv2(r);
        const double u3 = (u.deriv2(r + h) - u.deriv2(r - h)) / (2.0 * h);

        const RadialOps at = ops_at(cfg, u, r);
        const AmbientData amb = ambient_data(cfg, at.x);

        // 1/2 Lap_f |grad u|^2 with G = u'^2 as a radial function.
        const double g1 = 2.0 * u1 * u2;
        const double g2 = 2.0 * (u2 * u2 + u1 * u3);
        RadialDerivatives rdG = radial_derivatives(cfg, r, g1, g2);
        const double half_lap_G = 0.5 * convert_operators(cfg, rdG.x, rdG.Du, rdG.D2u).lap_f;

        // g(grad u, grad Lap_f u): Lap_f u is radial, so its Euclidean
        // gradient at rho e_1 follows the same chart.
        const double Ap = (radial_lap_f(cfg, u, r + h) - radial_lap_f(cfg, u, r - h)) / (2.0 * h);
        RadialDerivatives rdA = radial_derivatives(cfg, r, Ap, 0.0);
        const double rho2g = std::pow(at.x.norm(), 2.0 * cfg.gamma);
        double du_dA = 0.0;
        RadialDerivatives rdU = radial_derivatives(cfg, r, u1, u2);
        for (int i = 0; i < cfg.n; ++i) du_dA += rdU.Du[static_cast<size_t>(i)] * rdA.Du[static_cast<size_t>(i)];
        const double cross = rho2g * du_dA;

        const double ric_term = bakry_emery_at(cfg, m, at.x).mat.quad_form(at.op.riem_grad);
        const double dim_term = m.infinite ? at.op.lap_g * at.op.lap_g / cfg.n
                                           : at.op.lap_f * at.op.lap_f / m.value;

        const double res = half_lap_G - dim_term - cross - ric_term;
        min_res = std::min(min_res, res);
        max_abs_res = std::max(max_abs_res, std::abs(res));

        // equality displays
        SymMat defect = at.op.riem_hess.mat - amb.metric.mat * (at.op.lap_g / cfg.n);
        if (defect.max_abs() > 1e-8) displays_hold = false;
        const double gfu = at.op.lap_g - at.op.lap_f;  // g(grad f, grad u)
        if (m.infinite) {
            if (std::abs(gfu) > 1e-8) displays_hold = false;
        } else {
            if (std::abs(at.op.lap_f + m.value / (m.value - cfg.n) * gfu) > 1e-8)
                displays_hold = false;
        }
    }

    IdentityReport rep = make_bound_report("bochner", min_res, tol);
    rep.equality = (max_abs_res <= 1e-8) && displays_hold;
    rep.detail = std::string("m=") + (m.infinite ? "inf" : fmt(m.value)) +
                 " max|residual|=" + fmt(max_abs_res);
    return rep;
}

IdentityReport verify_differential_identity(const ManifoldConfig& cfg, const RadialProfile& u,
                                            const std::vector<double>& sample_radii, double tol) {
    u.validate();
    // Radial flux of the divergence identity:
    //   X = phi(r) d_r with phi = u (G/2)' - u Lap_f u u' - (G/2) u',
    // and e^f div_g(e^{-f} X) = phi' + ((n+alpha-1)/r) phi, the coefficient
    // being the logarithmic derivative of the weighted volume density
    // r^{n+alpha-1}.
    auto phi = [&](double r) {
        const double val = u.value(r);
        const double u1 = u.deriv(r);
        const double u2 = u.deriv2(r);
        const double A = radial_lap_f(cfg, u, r);
        return val * u1 * u2 - val * A * u1 - 0.5 * u1 * u1 * u1;
    };

    const double dens_exp = cfg.n + cfg.alpha - 1.0;
    double worst = 0.0;
    for (double r : sample_radii) {
        const double h = fd_step(r);
        const double lhs = (phi(r + h) - phi(r - h)) / (2.0 * h) + dens_exp / r * phi(r);

        const RadialOps at = ops_at(cfg, u, r);
        const AmbientData amb = ambient_data(cfg, at.x);
        const double val = u.value(r);
        const double u1 = u.deriv(r);
        const double hess2 = tensor_norm_sq(at.op.riem_hess.mat, amb.inv_metric.mat);
        const double A = at.op.lap_f;
        const double ric_inf =
            bakry_emery_at(cfg, MParam::inf(), at.x).mat.quad_form(at.op.riem_grad);
        const double rhs = val * (hess2 - A * A) - 1.5 * u1 * u1 * A + val * ric_inf;

        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return make_identity_report("differential_identity", worst, 0.0, tol);
}

IdentityReport verify_gradf_sign(const ManifoldConfig& cfg, const DomainSpec& dom,
                                 const RadialProfile& u, double tol) {
    u.validate();
    double worst = -std::numeric_limits<double>::infinity();
    for (double r : interior_nodes(dom, 100)) {
        const RadialOps at = ops_at(cfg, u, r);
        worst = std::max(worst, at.op.lap_g - at.op.lap_f);
    }
    IdentityReport rep;
    rep.name = "gradf_sign";
    rep.lhs = worst;
    rep.rhs = 0.0;
    rep.abs_err = std::max(0.0, worst);
    rep.rel_err = rep.abs_err;
    rep.tol = tol;
    rep.pass = worst <= tol;
    return rep;
}

std::vector<IdentityReport> run_suite(const ManifoldConfig& cfg, const DomainSpec& dom,
                                      const RadialProfile& u, const SuiteOptions& opt) {
    std::vector<IdentityReport> reports;

    auto selected = [&](const std::string& name) {
        return opt.checks.empty() ||
               std::find(opt.checks.begin(), opt.checks.end(), name) != opt.checks.end();
    };
    auto guarded = [&](const std::string& name, auto&& fn) {
        if (!selected(name)) return;
        try {
            reports.push_back(fn());
        } catch (const std::exception& e) {
            IdentityReport rep;
            rep.name = name;
            rep.lhs = rep.rhs = std::numeric_limits<double>::quiet_NaN();
            rep.pass = false;
            rep.detail = std::string("error: ") + e.what();
            reports.push_back(std::move(rep));
        }
    };

    const bool ball = dom.kind == DomainSpec::Kind::Ball;
    const double beta = std::min(hessian_bound_beta(cfg), 1.0);
    const std::vector<double> mid_nodes = interior_nodes(dom, 50, 0.02);
    const std::vector<double> fd_nodes = interior_nodes(dom, 64, 0.02);

    double c;
    if (opt.boundary_slope)
        c = *opt.boundary_slope;
    else if (ball)
        c = dom.r_outer / (cfg.n + cfg.alpha);
    else
        c = 0.5 * (std::abs(u.deriv(dom.r_inner)) + std::abs(u.deriv(dom.r_outer)));

    guarded("pde", [&] { return verify_pde(cfg, dom, u); });

    if (ball) {
        if (cfg.mode == SingularityMode::OriginCentered)
            guarded("flux", [&] { return verify_flux(cfg, dom.r_outer); });
    } else {
        guarded("flux_magnitude", [&] {
            IdentityReport rep = make_identity_report(
                "flux_magnitude", std::abs(u.deriv(dom.r_inner)), std::abs(u.deriv(dom.r_outer)), 1e-12);
            rep.detail = "c=" + fmt(c);
            return rep;
        });
    }

    guarded("energy", [&] { return verify_energy(cfg, dom, u, opt.quad); });

    if (ball) {
        guarded("pohozaev_ratio", [&] { return verify_pohozaev(cfg, dom.r_outer, opt.quad).ratio; });
        guarded("pohozaev_general",
                [&] { return verify_pohozaev(cfg, dom.r_outer, opt.quad).general; });
    }

    guarded("p_function", [&] { return verify_p_function(cfg, dom, u, beta); });
    if (ball) {
        guarded("p_function_boundary", [&] {
            const double d = u.deriv(dom.r_outer);
            const double p_out = d * d + 2.0 * beta / cfg.n * u.value(dom.r_outer);
            return make_identity_report("p_function_boundary", p_out, c * c, 1e-10);
        });
    }

    if (ball && cfg.alpha > 0.0) {
        guarded("bochner_m_finite", [&] {
            IdentityReport rep = verify_bochner(cfg, u, MParam::finite(cfg.n + cfg.alpha), mid_nodes);
            rep.name = "bochner_m_finite";
            return rep;
        });
        guarded("bochner_m_infinite", [&] {
            IdentityReport rep = verify_bochner(cfg, u, MParam::inf(), mid_nodes);
            rep.name = "bochner_m_infinite";
            return rep;
        });
    }

    guarded("differential_identity", [&] { return verify_differential_identity(cfg, u, fd_nodes); });

    if (ball && cfg.alpha == 0.0)
        guarded("gradf_sign", [&] { return verify_gradf_sign(cfg, dom, u); });

    return reports;
}

}  // namespace serrin
