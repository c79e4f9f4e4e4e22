#pragma once

#include "serrin/geometry.hpp"
#include "serrin/types.hpp"

namespace serrin {

/// Ricci tensor of the conformal metric, coordinate components
///   Ric_ij = -(n-2) gamma (gamma-2) / |x|^2 (delta_ij - x_i x_j / |x|^2).
/// Every call cross-checks the closed form against the general conformal
/// formula Ric = -(n-2)(D^2 phi - dphi (x) dphi) - (Lap phi + (n-2)|Dphi|^2) delta.
SymTensor ricci_at(const ManifoldConfig& cfg, const Point& x);

/// Riemannian Hessian of f = -alpha log d(x),
///   (Hess f)_ij = -alpha (1-gamma)^2 / |x|^2 (delta_ij - 2 x_i x_j / |x|^2).
SymTensor hessian_f_at(const ManifoldConfig& cfg, const Point& x);

/// df (x) df, components alpha^2 (1-gamma)^2 x_i x_j / |x|^4.
SymTensor df_tensor_df_at(const ManifoldConfig& cfg, const Point& x);

/// Bakry-Emery tensor Ric_f^m = Ric + Hess f - df (x) df / (m-n); the last
/// coefficient is exactly zero for m = infinity.
/// Throws DivergentParameter for finite m == n unless alpha == 0.
SymTensor bakry_emery_at(const ManifoldConfig& cfg, const MParam& m, const Point& x);

/// Flat-case (gamma = 0) nonnegativity of Ric_f^m for the power weight
/// |x|^alpha: true iff alpha == 0, or alpha < 0 and n+alpha <= m <= n
/// (finite m; the tensor is indefinite for every m when alpha > 0, and for
/// m = infinity when alpha != 0).
bool power_weight_condition(int n, double alpha, const MParam& m);

/// The curvature combination that gates rigidity,
///   Ric + Hess f - df (x) df / alpha
///     = -[(n-2) gamma (gamma-2) + alpha (1-gamma)^2] / |x|^2 (delta - xhat xhat).
/// Cross-checked against the sum of the three tensors on every call.
SymTensor compatibility_tensor_at(const ManifoldConfig& cfg, const Point& x);

/// Admissible parameter window of the rigidity theorem.
struct AdmissibilityResult {
    double gamma1;           // 1 - sqrt((n-2)/(alpha+n-2))
    double gamma2;           // 1 + sqrt((n-2)/(alpha+n-2))
    double condition_value;  // (n-2) gamma (gamma-2) + alpha (1-gamma)^2
    bool admissible;         // condition_value <= 0, by exact comparison
};
AdmissibilityResult admissibility(int n, double alpha, double gamma);

/// Full rigidity gate for a configuration: alpha > 0 together with
/// gamma_1 <= gamma < 1 (OriginCentered) or 1 < gamma < gamma_2
/// (InfinityCentered).
bool rigidity_admissible(const ManifoldConfig& cfg);

/// The closed-form condition value alone (no threshold computation).
double admissibility_condition_value(int n, double alpha, double gamma);

// --- small dependency-free symmetric eigensolver (n <= 16) ---

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
std::vector<double> jacobi_eigenvalues(const SymMat& a);

/// Smallest lambda with det(T - lambda G) = 0 for positive definite G,
/// via the symmetric reduction L^{-1} T L^{-T} with G = L L^T.
/// Throws NotPositiveDefinite when the factorization fails.
double min_generalized_eigenvalue(const SymMat& t, const SymMat& g);
double min_generalized_eigenvalue(const SymTensor& t, const SymTensor& g);

}  // namespace serrin
