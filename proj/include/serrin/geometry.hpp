#pragma once

#include "serrin/types.hpp"

namespace serrin {

/// Surface measure of the unit (n-1)-sphere, w_n = 2 pi^{n/2} / Gamma(n/2).
/// Gamma is evaluated locally for the integer and half-integer arguments
/// that occur for n >= 2.
double unit_sphere_area(int n);

/// Geodesic distance from x to the singular end.
/// OriginCentered: d(x, O) = |x|^{1-gamma} / (1-gamma).
/// InfinityCentered: d(x, inf) = |x|^{1-gamma} / (gamma-1).
double geodesic_distance(const ManifoldConfig& cfg, const Point& x);

/// Same distance as a function of the Euclidean norm |x| alone.
double geodesic_distance_from_norm(const ManifoldConfig& cfg, double rho);

/// Euclidean radius rho of the coordinate sphere carrying the g-sphere of
/// radius R: the g-ball of radius R about the singular end is {|x| < rho}
/// (OriginCentered) or {|x| > rho} (InfinityCentered).
double euclidean_ball_radius(const ManifoldConfig& cfg, double R);

/// Weighted volume of the g-ball of radius R,
/// w_n (1-gamma)^{n-1} R^{alpha+n} / (alpha+n).
/// OriginCentered only; for the InfinityCentered mode use the quadrature
/// path (integrate_radial with h == 1), which carries no closed-form claim.
double weighted_ball_volume(const ManifoldConfig& cfg, double R);

/// Weighted perimeter of the g-sphere of radius R,
/// w_n (1-gamma)^{n-1} R^{alpha+n-1}: the g-area element at Euclidean
/// radius rho is rho^{(1-gamma)(n-1)} w_n with rho^{1-gamma} = (1-gamma) R,
/// times the boundary weight R^alpha.  OriginCentered only.
double weighted_ball_perimeter(const ManifoldConfig& cfg, double R);

/// Pointwise data of the ambient structure at x.
struct AmbientData {
    SymTensor metric;      // g_ij = |x|^{-2 gamma} delta_ij
    SymTensor inv_metric;  // g^ij = |x|^{+2 gamma} delta_ij
    double weight;         // e^{-f} = d(x)^alpha
    double f;              // -log(weight)
    std::vector<double> euclid_grad_f;    // Df = -alpha (1-gamma) x / |x|^2
    std::vector<double> euclid_grad_phi;  // Dphi = -gamma x / |x|^2
};
AmbientData ambient_data(const ManifoldConfig& cfg, const Point& x);

/// Riemannian differential operators at x obtained from Euclidean
/// derivatives of a function u, via the conformal conversion rules
///   grad_g u  = e^{-2 phi} Du,
///   Hess_g u  = D^2 u - (du (x) dphi + dphi (x) du) + (Du . Dphi) delta,
///   Lap_g u   = e^{-2 phi} (Lap u + (n-2) Du . Dphi),
/// and the weighted Laplacian Lap_f u = Lap_g u - g(grad f, grad u).
struct OperatorData {
    std::vector<double> riem_grad;  // contravariant components
    SymTensor riem_hess;            // (0,2) tensor, coordinate components
    double lap_g;
    double lap_f;
    double grad_norm_sq_g;  // |grad u|_g^2 = |x|^{2 gamma} |Du|^2
};
OperatorData convert_operators(const ManifoldConfig& cfg, const Point& x,
                               const std::vector<double>& Du, const SymMat& D2u);

/// Radial chart data at g-distance r: the Euclidean radius rho carrying
/// that distance and the derivatives of r(rho).  Used to turn radial
/// profiles into exact Euclidean derivatives at the point rho * e_1.
struct RadialChart {
    double rho;
    double dr_drho;
    double d2r_drho2;
};
RadialChart radial_chart(const ManifoldConfig& cfg, double r);

/// Euclidean gradient and Hessian at rho(r) * e_1 of the radial extension
/// u(d(x)) of a profile with values (u, u', u'') at r.
struct RadialDerivatives {
    Point x;
    std::vector<double> Du;
    SymMat D2u;
};
RadialDerivatives radial_derivatives(const ManifoldConfig& cfg, double r, double u1, double u2);

}  // namespace serrin
