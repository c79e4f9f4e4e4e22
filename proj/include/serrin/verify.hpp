#pragma once

#include <optional>
#include <string>
#include <vector>

#include "serrin/quadrature.hpp"
#include "serrin/radial.hpp"
#include "serrin/types.hpp"

namespace serrin {

/// Outcome of one named identity or inequality check.
struct IdentityReport {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tol = 0.0;
    bool pass = false;
    std::optional<bool> equality;  // Bochner equality-case flag
    std::string detail;
};

/// Equality-style report: abs_err = |lhs-rhs|, rel_err scaled by the larger
/// magnitude, pass iff either error is within tol.
IdentityReport make_identity_report(std::string name, double lhs, double rhs, double tol);

/// Inequality-style report for checks of the form "residual >= -tol":
/// lhs is the worst (smallest) residual, errors record only the violation
/// max(0, -lhs).
IdentityReport make_bound_report(std::string name, double worst_residual, double tol);

// ---------------------------------------------------------------------------
// Identity checks.  Profiles enter through their exact radial derivatives;
// everything Riemannian is assembled through convert_operators at mapped
// Euclidean points, so the checks exercise the same conversion path as any
// non-radial caller would.
// ---------------------------------------------------------------------------

/// max |Lap_f u + 1| over a 200-node Chebyshev grid.
IdentityReport verify_pde(const ManifoldConfig& cfg, const DomainSpec& dom,
                          const RadialProfile& u, double tol = 1e-10);

/// |u'(R)| of the ball solution against |Omega|_f / |boundary|_f.
IdentityReport verify_flux(const ManifoldConfig& cfg, double R);

/// int |grad u|^2 dmu = int u dmu.  Requires u = 0 at the outer boundary
/// (and inner boundary for annuli) to 1e-12; throws BoundaryNotZero.
IdentityReport verify_energy(const ManifoldConfig& cfg, const DomainSpec& dom,
                             const RadialProfile& u, const QuadratureSettings& q = {},
                             double tol = 1e-8);

/// Pohozaev identity on the ball, two algebraic forms:
///   ratio:   int u dmu = (n+alpha)/(n+alpha+2) c^2 |Omega|_f,
///   general: c^2 |Omega|_f = int u dmu + 2 int Hess V(grad u, grad u) dmu
/// with Hess V(grad u, grad u) = u'(r)^2 / (n+alpha).  Both sides by
/// quadrature.
struct PohozaevReports {
    IdentityReport ratio;
    IdentityReport general;
};
PohozaevReports verify_pohozaev(const ManifoldConfig& cfg, double R,
                                const QuadratureSettings& q = {}, double tol = 1e-8);

/// Constancy of P(r) = u'(r)^2 + (2 beta / n) u(r) over 200 radii:
/// lhs = max P - min P, rhs = 0.  detail records P at the outer boundary
/// for comparison with c^2.
IdentityReport verify_p_function(const ManifoldConfig& cfg, const DomainSpec& dom,
                                 const RadialProfile& u, double beta_hess, double tol = 1e-10);

/// Bochner inequality residual
///   1/2 Lap_f |grad u|^2 - [(Lap_f u)^2/m + g(grad u, grad Lap_f u)
///                           + Ric_f^m(grad u, grad u)]
/// minimized over the sample radii; pass iff min >= -tol.  For m = infinity
/// the dimensional term is the trace-sharp (Lap_g u)^2 / n.  The equality
/// flag requires the inequality to be saturated at every radius AND both
/// equality displays to hold: Hess u = (Lap_g u / n) g, and
/// Lap_f u = -m/(m-n) g(grad f, grad u) (finite m) / g(grad f, grad u) = 0
/// (m = infinity).
IdentityReport verify_bochner(const ManifoldConfig& cfg, const RadialProfile& u, const MParam& m,
                              const std::vector<double>& sample_radii, double tol = 1e-8);

/// Pointwise residual of the weighted divergence identity
///   e^f div_g[e^{-f}(u grad(|grad u|^2/2) - u Lap_f u grad u
///                     - 1/2 |grad u|^2 grad u)]
///   = u [|Hess u|^2 - (Lap_f u)^2] - 3/2 |grad u|^2 Lap_f u
///     + u (Ric + Hess f)(grad u, grad u),
/// assembled radially; the radial derivative of the flux uses central
/// differences, so the tolerance is the looser 1e-7.
IdentityReport verify_differential_identity(const ManifoldConfig& cfg, const RadialProfile& u,
                                            const std::vector<double>& sample_radii,
                                            double tol = 1e-7);

/// g(grad f, grad u) <= 0 pointwise (hypothesis (iii) of the compact
/// rigidity theorem, checked when beta = 1).
IdentityReport verify_gradf_sign(const ManifoldConfig& cfg, const DomainSpec& dom,
                                 const RadialProfile& u, double tol = 1e-12);

/// Everything applicable for the given domain kind, in a fixed order.
/// checks: empty selects the full applicable suite; otherwise a subset of
/// the report names.  Per-check errors become failing reports rather than
/// aborting the run.
struct SuiteOptions {
    std::vector<std::string> checks;
    QuadratureSettings quad{};
    std::optional<double> boundary_slope;  // c, when known
};
std::vector<IdentityReport> run_suite(const ManifoldConfig& cfg, const DomainSpec& dom,
                                      const RadialProfile& u, const SuiteOptions& opt = {});

/// Weighted Laplacian of the radial extension of u at g-distance r, through
/// convert_operators.
double radial_lap_f(const ManifoldConfig& cfg, const RadialProfile& u, double r);

}  // namespace serrin
