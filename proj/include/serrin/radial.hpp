#pragma once

#include <functional>

#include "serrin/quadrature.hpp"
#include "serrin/types.hpp"

namespace serrin {

/// A radial function of the g-distance r, carried as evaluators so callers
/// control their own sampling grids.
struct RadialProfile {
    enum class Provenance { ClosedForm, Quadrature };

    double r_min;
    double r_max;
    std::function<double(double)> value;
    std::function<double(double)> deriv;
    std::function<double(double)> deriv2;
    Provenance provenance = Provenance::ClosedForm;

    void validate() const {
        if (!(r_min < r_max)) throw std::invalid_argument("RadialProfile: r_min < r_max required");
    }
};

/// Boundary data of an overdetermined torsion solution.
struct SerrinData {
    double c;                  // |u_nu| on the boundary, positive
    double torsional_rigidity; // int u dmu over the domain
};

/// Torsion solution on the g-ball of radius R,
///   u(r) = (R^2 - r^2) / (2 (n + alpha)),  c = R / (n + alpha).
/// The torsional rigidity int u dmu evaluates in closed form to
///   w_n (1-gamma)^{n-1} R^{n+alpha+2} / ((n+alpha)^2 (n+alpha+2))
/// (OriginCentered; the InfinityCentered value is computed by quadrature,
/// no closed form being asserted for that mode's volumes).
std::pair<RadialProfile, SerrinData> ball_solution(const ManifoldConfig& cfg, double R);

/// Torsion solution on a metric ball of the space form of curvature k:
///   k > 0: u = cos(sqrt(k) r) / (k n cos(sqrt(k) R)) - 1/(n k),
///   k = 0: u = (R^2 - r^2) / (2n),
///   k < 0: the cosh analogue.
/// Satisfies u'' = -(1/n + k u) exactly, u(R) = 0, u'(0) = 0.
/// Throws RadiusTooLarge for k > 0 and R >= pi/(2 sqrt(k)) (positivity).
RadialProfile space_form_solution(double k, int n, double R);

/// The Pohozaev potential V(r) = r^2 / (2 (n + alpha)); satisfies
/// Lap_f V = 1 with Hessian g / (n + alpha).
RadialProfile v_function(const ManifoldConfig& cfg);

/// Hessian-comparison constant of V: beta = n / (n + alpha).
double hessian_bound_beta(const ManifoldConfig& cfg);

/// Radial torsion solution on the annulus a < r < b for the weight
/// r^{beta_c - (n-1)}, i.e. the ODE (r^{beta_c} u')' = -r^{beta_c} with
/// u(a) = u(b) = 0.  Built from exact antiderivatives with explicit
/// logarithm branches at beta_c = +-1 and expm1-based power integrals, so
/// boundary derivatives stay at machine precision near the singular
/// exponents.
RadialProfile annulus_solve(int n, double beta_c, double a, double b);

/// c = |Omega|_f / |boundary|_f = R / (n + alpha) for g-balls.
/// Throws UnsupportedDomain for annuli, which admit no single constant.
double serrin_constant(const ManifoldConfig& cfg, const DomainSpec& dom);

}  // namespace serrin
