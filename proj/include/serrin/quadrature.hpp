#pragma once

#include <functional>

#include "serrin/geometry.hpp"
#include "serrin/types.hpp"

namespace serrin {

struct QuadratureSettings {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_depth = 40;

    void validate() const {
        if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
            throw std::invalid_argument("QuadratureSettings: tolerances must be positive");
        if (max_depth < 4) throw std::invalid_argument("QuadratureSettings: max_depth must be >= 4");
    }
};

/// Adaptive Simpson integral of f over [a, b] with interval bisection and
/// Richardson-corrected panels.  Deterministic node placement.
/// Throws MaxDepthExceeded (carrying the best estimate) when bisection
/// bottoms out before the local error test is met.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        const QuadratureSettings& q = {});

/// Weighted integral of a radial integrand over a ball or annulus,
///   int_Omega h(r) dmu_g = w_n |1-gamma|^{n-1} int h(r) r^{n+alpha-1} dr,
/// the density being d|B_r|_f/dr in the g-distance variable r.
/// Ball domains with alpha in (-n, 0) get the regularizing substitution
/// s = r^{(n+alpha)/2} before Simpson, so the density singularity at r = 0
/// never reaches the sampler.
double integrate_radial(const ManifoldConfig& cfg, const DomainSpec& dom,
                        const std::function<double(double)>& h,
                        const QuadratureSettings& q = {});

/// Open Chebyshev nodes on (a, b), ascending; endpoint-free sampling grid
/// for max-residual scans.
std::vector<double> chebyshev_nodes(double a, double b, int count);

}  // namespace serrin
