#pragma once

#include "serrin/radial.hpp"
#include "serrin/types.hpp"

namespace serrin {

/// Parameters of the annulus compatibility condition: the radius ratio
/// rho = b/a > 1 and the reduced exponent beta_c = n + alpha - 1.
struct CompatParams {
    double rho;
    double beta_c;

    CompatParams(double rho_, double beta_c_) : rho(rho_), beta_c(beta_c_) {
        if (!(rho > 1.0)) throw std::invalid_argument("CompatParams: rho must be > 1");
    }
};

/// F_rho(beta) = (rho^{1-beta} - 1)/(1-beta) - (rho-1)/2 (rho^{-beta} + 1).
/// The first term is evaluated as expm1((1-beta) log rho)/(1-beta), which
/// is cancellation-free through beta = 1; at beta = 1 exactly the
/// continuous limit log(rho) - (rho-1)(1/rho+1)/2 is returned.
/// A radial power weight admits an overdetermined annulus solution at
/// ratio rho iff F_rho(beta_c) = 0.
double F_value(const CompatParams& p);
double F_value(double rho, double beta_c);

enum class Sign3 { Negative, Zero, Positive };

/// Sign classification of F: Negative for beta > 0 or beta < -1, Positive
/// for -1 < beta < 0, Zero at beta in {-1, 0}.  Computed from F_value with
/// |F| <= 1e-13 snapping to Zero.
Sign3 F_sign(const CompatParams& p);

/// Zeros of beta -> F_rho(beta) on [beta_lo, beta_hi]: sign scan at step
/// 1e-3, then bisection on each strict sign-change bracket down to an
/// interval of width 1e-10.  Sorted ascending.  Tangential zeros (no sign
/// crossing) are out of scope.
std::vector<double> find_roots(double rho, double beta_lo, double beta_hi);

/// Roots for several ratios at once; cells are independent and may be
/// evaluated in parallel, output ordered by (rho, beta) regardless.
std::vector<std::pair<double, double>> find_roots_many(const std::vector<double>& rhos,
                                                       double beta_lo, double beta_hi,
                                                       bool parallel = true);

/// f_beta(t) - L_beta(t): the gap between t^{-beta} and its secant over
/// [1, rho].  F_rho(beta) is the integral of this gap, so its sign pattern
/// is the convexity classification made pointwise testable.
double secant_gap(double rho, double beta_c, double t);

/// h(t) = t^2 - 1 - 2 t log t, the defect of the beta = +-1 special case
/// 2 t log t = t^2 - 1; h(1) = 0 and h > 0 for t > 1, so that case admits
/// no ratio.
double special_case_gap(double t);

/// The explicit annulus counterexample: weight exponent alpha = 1 - n
/// (beta_c = 0), profile u = (r-a)(b-r)/2, boundary slope magnitude
/// c = (b-a)/2 at both ends.
struct CounterexamplePackage {
    RadialProfile profile;
    double alpha;
    double c;
};
CounterexamplePackage counterexample(int n, double a, double b);

}  // namespace serrin
