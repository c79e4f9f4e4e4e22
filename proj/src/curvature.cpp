#include "serrin/curvature.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace serrin {

namespace {

// coef * (delta - c * xhat xhat)
SymMat projector_form(const Point& x, double coef, double c) {
    const int n = x.dim();
    const double r2 = x.norm() * x.norm();
    SymMat m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            double v = -coef * c * x[i] * x[j] / r2;
            if (i == j) v += coef;
            m.set(i, j, v);
        }
    return m;
}

void cross_check(const SymMat& closed, const SymMat& reference, const char* what) {
    const double tol = 1e-12 * (1.0 + std::max(closed.max_abs(), reference.max_abs()));
    if (closed.max_abs_diff(reference) > tol)
        throw std::logic_error(std::string(what) + ": closed form disagrees with general formula");
}

// Ricci of e^{2 phi} delta with phi = -gamma log|x|, assembled from the
// general conformal expression rather than the simplified projector form.
SymMat ricci_general(const ManifoldConfig& cfg, const Point& x) {
    const int n = x.dim();
    const double r2 = x.norm() * x.norm();
    const double g = cfg.gamma;

    // Dphi = -gamma x/|x|^2, D2phi = -gamma (delta - 2 xhat xhat)/|x|^2
    const double lap_phi = -g * (n - 2) / r2;
    const double dphi_sq = g * g / r2;

    SymMat ric(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            const double d2phi = -g / r2 * ((i == j ? 1.0 : 0.0) - 2.0 * x[i] * x[j] / r2);
            const double dphidphi = g * g * x[i] * x[j] / (r2 * r2);
            double v = -(n - 2) * (d2phi - dphidphi);
            if (i == j) v -= lap_phi + (n - 2) * dphi_sq;
            ric.set(i, j, v);
        }
    return ric;
}

}  // namespace

SymTensor ricci_at(const ManifoldConfig& cfg, const Point& x) {
    if (x.dim() != cfg.n) throw std::invalid_argument("ricci_at: dimension mismatch");
    const double r2 = x.norm() * x.norm();
    const double coef = -(cfg.n - 2) * cfg.gamma * (cfg.gamma - 2.0) / r2;
    SymMat closed = projector_form(x, coef, 1.0);
    cross_check(closed, ricci_general(cfg, x), "ricci_at");
    return SymTensor{x, std::move(closed)};
}

SymTensor hessian_f_at(const ManifoldConfig& cfg, const Point& x) {
    if (x.dim() != cfg.n) throw std::invalid_argument("hessian_f_at: dimension mismatch");
    const double r2 = x.norm() * x.norm();
    const double om = 1.0 - cfg.gamma;
    const double coef = -cfg.alpha * om * om / r2;
    return SymTensor{x, projector_form(x, coef, 2.0)};
}

SymTensor df_tensor_df_at(const ManifoldConfig& cfg, const Point& x) {
    if (x.dim() != cfg.n) throw std::invalid_argument("df_tensor_df_at: dimension mismatch");
    const int n = x.dim();
    const double r2 = x.norm() * x.norm();
    const double om = 1.0 - cfg.gamma;
    const double coef = cfg.alpha * cfg.alpha * om * om / (r2 * r2);
    SymMat m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) m.set(i, j, coef * x[i] * x[j]);
    return SymTensor{x, std::move(m)};
}

SymTensor bakry_emery_at(const ManifoldConfig& cfg, const MParam& m, const Point& x) {
    double inv_mn = 0.0;
    if (!m.infinite) {
        if (m.value == static_cast<double>(cfg.n)) {
            if (cfg.alpha != 0.0)
                throw DivergentParameter("bakry_emery_at: m == n requires alpha == 0");
            // df (x) df vanishes identically; the coefficient is irrelevant.
        } else {
            inv_mn = 1.0 / (m.value - cfg.n);
        }
    }
    SymMat sum = ricci_at(cfg, x).mat;
    sum += hessian_f_at(cfg, x).mat;
    if (inv_mn != 0.0) sum -= df_tensor_df_at(cfg, x).mat * inv_mn;
    return SymTensor{x, std::move(sum)};
}

bool power_weight_condition(int n, double alpha, const MParam& m) {
    if (n < 2) throw std::invalid_argument("power_weight_condition: n must be >= 2");
    if (alpha == 0.0) return true;
    if (!m.infinite && m.value == static_cast<double>(n))
        throw DivergentParameter("power_weight_condition: m == n requires alpha == 0");
    if (m.infinite) return false;  // Hess f alone is indefinite for alpha != 0
    return alpha < 0.0 && n + alpha <= m.value && m.value <= static_cast<double>(n);
}

double admissibility_condition_value(int n, double alpha, double gamma) {
    const double om = 1.0 - gamma;
    return (n - 2) * gamma * (gamma - 2.0) + alpha * om * om;
}

SymTensor compatibility_tensor_at(const ManifoldConfig& cfg, const Point& x) {
    if (cfg.alpha == 0.0)
        throw DivergentParameter("compatibility_tensor_at: alpha must be nonzero");
    const double r2 = x.norm() * x.norm();
    const double coef = -admissibility_condition_value(cfg.n, cfg.alpha, cfg.gamma) / r2;
    SymMat closed = projector_form(x, coef, 1.0);

    SymMat assembled = ricci_at(cfg, x).mat;
    assembled += hessian_f_at(cfg, x).mat;
    assembled -= df_tensor_df_at(cfg, x).mat * (1.0 / cfg.alpha);
    cross_check(closed, assembled, "compatibility_tensor_at");

    return SymTensor{x, std::move(closed)};
}

AdmissibilityResult admissibility(int n, double alpha, double gamma) {
    if (n < 2) throw std::invalid_argument("admissibility: n must be >= 2");
    const double denom = alpha + n - 2;
    if (!(denom > 0.0))
        throw DegenerateThreshold("admissibility: requires alpha + n - 2 > 0");
    const double s = std::sqrt((n - 2) / denom);
    const double cond = admissibility_condition_value(n, alpha, gamma);
    return AdmissibilityResult{1.0 - s, 1.0 + s, cond, cond <= 0.0};
}

bool rigidity_admissible(const ManifoldConfig& cfg) {
    if (cfg.alpha <= 0.0) return false;
    const AdmissibilityResult a = admissibility(cfg.n, cfg.alpha, cfg.gamma);
    if (cfg.mode == SingularityMode::OriginCentered)
        return a.gamma1 <= cfg.gamma && cfg.gamma < 1.0;
    return 1.0 < cfg.gamma && cfg.gamma < a.gamma2;
}

std::vector<double> jacobi_eigenvalues(const SymMat& a) {
    const int n = a.dim();
    if (n > 16) throw std::invalid_argument("jacobi_eigenvalues: supports n <= 16");

    std::array<std::array<double, 16>, 16> m{};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = a(i, j);

    double scale = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) scale = std::max(scale, std::abs(m[static_cast<size_t>(i)][static_cast<size_t>(j)]));
    const double tiny = scale * 1e-15;

    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) off += std::abs(m[static_cast<size_t>(p)][static_cast<size_t>(q)]);
        if (off <= tiny) break;

        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = m[static_cast<size_t>(p)][static_cast<size_t>(q)];
                if (std::abs(apq) <= tiny * 1e-2) continue;
                const double app = m[static_cast<size_t>(p)][static_cast<size_t>(p)];
                const double aqq = m[static_cast<size_t>(q)][static_cast<size_t>(q)];
                const double theta = 0.5 * (aqq - app) / apq;
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (int k = 0; k < n; ++k) {
                    const double mkp = m[static_cast<size_t>(k)][static_cast<size_t>(p)];
                    const double mkq = m[static_cast<size_t>(k)][static_cast<size_t>(q)];
                    m[static_cast<size_t>(k)][static_cast<size_t>(p)] = c * mkp - s * mkq;
                    m[static_cast<size_t>(k)][static_cast<size_t>(q)] = s * mkp + c * mkq;
                }
                for (int k = 0; k < n; ++k) {
                    const double mpk = m[static_cast<size_t>(p)][static_cast<size_t>(k)];
                    const double mqk = m[static_cast<size_t>(q)][static_cast<size_t>(k)];
                    m[static_cast<size_t>(p)][static_cast<size_t>(k)] = c * mpk - s * mqk;
                    m[static_cast<size_t>(q)][static_cast<size_t>(k)] = s * mpk + c * mqk;
                }
            }
    }

    std::vector<double> eigs(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) eigs[static_cast<size_t>(i)] = m[static_cast<size_t>(i)][static_cast<size_t>(i)];
    std::sort(eigs.begin(), eigs.end());
    return eigs;
}

namespace {

// Dense lower-triangular Cholesky factor of G.
std::vector<double> cholesky_lower(const SymMat& g) {
    const int n = g.dim();
    std::vector<double> l(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            double s = g(i, j);
            for (int k = 0; k < j; ++k)
                s -= l[static_cast<size_t>(i) * n + k] * l[static_cast<size_t>(j) * n + k];
            if (i == j) {
                if (!(s > 0.0) || !std::isfinite(s))
                    throw NotPositiveDefinite("min_generalized_eigenvalue: metric is not positive definite");
                l[static_cast<size_t>(i) * n + j] = std::sqrt(s);
            } else {
                l[static_cast<size_t>(i) * n + j] = s / l[static_cast<size_t>(j) * n + j];
            }
        }
    }
    return l;
}

}  // namespace

double min_generalized_eigenvalue(const SymMat& t, const SymMat& g) {
    const int n = t.dim();
    if (g.dim() != n) throw std::invalid_argument("min_generalized_eigenvalue: dimension mismatch");
    const std::vector<double> l = cholesky_lower(g);

    // Y = L^{-1} T (column by column), then B = L^{-1} Y^T; B is symmetric.
    auto fwd_solve = [&](std::vector<double>& col) {
        for (int i = 0; i < n; ++i) {
            double s = col[static_cast<size_t>(i)];
            for (int k = 0; k < i; ++k) s -= l[static_cast<size_t>(i) * n + k] * col[static_cast<size_t>(k)];
            col[static_cast<size_t>(i)] = s / l[static_cast<size_t>(i) * n + i];
        }
    };

    std::vector<double> y(static_cast<size_t>(n) * n);
    std::vector<double> col(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) col[static_cast<size_t>(i)] = t(i, j);
        fwd_solve(col);
        for (int i = 0; i < n; ++i) y[static_cast<size_t>(i) * n + j] = col[static_cast<size_t>(i)];
    }

    SymMat b(n);
    std::vector<double> row(static_cast<size_t>(n));
    std::vector<std::vector<double>> bt(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n)));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) row[static_cast<size_t>(i)] = y[static_cast<size_t>(j) * n + i];
        fwd_solve(row);
        for (int i = 0; i < n; ++i) bt[static_cast<size_t>(j)][static_cast<size_t>(i)] = row[static_cast<size_t>(i)];
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j)
            b.set(i, j, 0.5 * (bt[static_cast<size_t>(i)][static_cast<size_t>(j)] +
                               bt[static_cast<size_t>(j)][static_cast<size_t>(i)]));

    return jacobi_eigenvalues(b).front();
}

double min_generalized_eigenvalue(const SymTensor& t, const SymTensor& g) {
    return min_generalized_eigenvalue(t.mat, g.mat);
}

}  // namespace serrin
