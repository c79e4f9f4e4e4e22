#include "serrin/quadrature.hpp"

#include <cmath>

namespace serrin {

namespace {

struct PanelResult {
    double value;
    bool converged;
};

// Recursive bisection with the standard |S2 - S1|/15 error estimate; the
// returned panel value is the Richardson-corrected S2 + (S2 - S1)/15.
PanelResult simpson_panel(const std::function<double(double)>& f, double a, double b, double fa,
                          double fm, double fb, double whole, double tol, double abs_tol,
                          int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double h6 = (b - a) / 12.0;
    const double left = h6 * (fa + 4.0 * flm + fm);
    const double right = h6 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;

    if (std::abs(delta) <= 15.0 * std::max(tol, abs_tol))
        return PanelResult{left + right + delta / 15.0, true};
    if (depth <= 0) return PanelResult{left + right + delta / 15.0, false};

    PanelResult l = simpson_panel(f, a, m, fa, flm, fm, left, 0.5 * tol, 0.5 * abs_tol, depth - 1);
    PanelResult r = simpson_panel(f, m, b, fm, frm, fb, right, 0.5 * tol, 0.5 * abs_tol, depth - 1);
    return PanelResult{l.value + r.value, l.converged && r.converged};
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        const QuadratureSettings& q) {
    q.validate();
    if (a == b) return 0.0;
    const double fa = f(a);
    const double fm = f(0.5 * (a + b));
    const double fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double scale = std::max(std::abs(whole), 1.0e-30);
    PanelResult res =
        simpson_panel(f, a, b, fa, fm, fb, whole, q.rel_tol * scale, q.abs_tol, q.max_depth);
    if (!res.converged) throw MaxDepthExceeded(res.value);
    return res.value;
}

double integrate_radial(const ManifoldConfig& cfg, const DomainSpec& dom,
                        const std::function<double(double)>& h, const QuadratureSettings& q) {
    const double density_const =
        unit_sphere_area(cfg.n) * std::pow(cfg.gamma_gap(), cfg.n - 1);
    const double exponent = cfg.n + cfg.alpha - 1.0;
    const double qpow = cfg.n + cfg.alpha;

    if (dom.kind == DomainSpec::Kind::Ball) {
        if (!(cfg.alpha > -cfg.n))
            throw NonIntegrableWeight("integrate_radial: ball integral requires alpha > -n");
        const double R = dom.r_outer;
        if (cfg.alpha < 0.0) {
            // substitute s = r^{q/2}: r^{q-1} dr = (2/q) s ds, integrand smooth
            const double s_max = std::pow(R, 0.5 * qpow);
            auto g = [&](double s) {
                if (s == 0.0) return 0.0;
                const double r = std::pow(s, 2.0 / qpow);
                return h(r) * (2.0 / qpow) * s;
            };
            return density_const * adaptive_simpson(g, 0.0, s_max, q);
        }
        auto g = [&](double r) { return r == 0.0 && exponent > 0.0 ? 0.0 : h(r) * std::pow(r, exponent); };
        return density_const * adaptive_simpson(g, 0.0, R, q);
    }

    auto g = [&](double r) { return h(r) * std::pow(r, exponent); };
    return density_const * adaptive_simpson(g, dom.r_inner, dom.r_outer, q);
}

std::vector<double> chebyshev_nodes(double a, double b, int count) {
    if (count < 1) throw std::invalid_argument("chebyshev_nodes: count must be positive");
    std::vector<double> nodes(static_cast<size_t>(count));
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (int i = 0; i < count; ++i) {
        const double theta = M_PI * (2.0 * i + 1.0) / (2.0 * count);
        nodes[static_cast<size_t>(count - 1 - i)] = mid + half * std::cos(theta);
    }
    return nodes;
}

}  // namespace serrin
