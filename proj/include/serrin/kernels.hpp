#pragma once

#include <cstdint>

#include "serrin/types.hpp"

namespace serrin {

// Grid kernels.  Each has a serial reference implementation and an
// OpenMP-parallel one; cells are independent and written by index, so the
// two produce bit-identical output.  The *_serial variants are kept as the
// reference the parallel paths are tested and benchmarked against.

struct GridAxis {
    double lo;
    double hi;
    double step;

    int count() const;
    double at(int i) const { return lo + i * step; }
    void validate() const {
        if (!(lo < hi)) throw std::invalid_argument("GridAxis: lo < hi required");
        if (!(step > 0.0)) throw std::invalid_argument("GridAxis: step must be positive");
    }
};

enum class SweepQuantity { Admissibility, CompatRoots, SerrinConstant, PohozaevRatio };

const char* sweep_quantity_name(SweepQuantity q);
SweepQuantity sweep_quantity_from_name(const std::string& name);

/// A sweep over the (alpha, gamma) parameter grid; rows are emitted
/// row-major, alpha outer.  Grid size is capped at 10^7 cells.
/// Per-cell semantics:
///   Admissibility:  value = (n-2) gamma (gamma-2) + alpha (1-gamma)^2,
///                   flag = the rigidity gate for the gamma-side mode.
///   SerrinConstant: value = 1/(n+alpha) (the R = 1 constant),
///                   flag = alpha > -n.
///   PohozaevRatio:  value = (n+alpha)/(n+alpha+2), flag = alpha > -n.
///   CompatRoots:    the gamma axis is reused as the radius ratio rho;
///                   value = F_rho(n+alpha-1), flag = |value| <= 1e-13;
///                   rho <= 1 yields NaN / false.
struct SweepSpec {
    int n;
    SweepQuantity quantity;
    GridAxis alpha;
    GridAxis gamma;

    long long cells() const;
    void validate() const;
};

struct SweepCell {
    double alpha;
    double gamma;
    double value;
    bool flag;
};

std::vector<SweepCell> sweep_grid_serial(const SweepSpec& spec);
std::vector<SweepCell> sweep_grid_parallel(const SweepSpec& spec);
std::vector<SweepCell> sweep_grid(const SweepSpec& spec, bool parallel);

/// F_rho evaluated on a uniform beta grid (the root-scan inner loop).
std::vector<double> compat_scan_serial(double rho, double beta_lo, double beta_hi, double step);
std::vector<double> compat_scan_parallel(double rho, double beta_lo, double beta_hi, double step);

/// Agreement of the closed-form curvature gate with pointwise minimum
/// generalized eigenvalues of the compatibility tensor, over an
/// (alpha, gamma) grid with `points` deterministic pseudo-random sample
/// points per cell (threshold -1e-10 on the eigenvalue side).
struct EigAgreement {
    long long cells;
    long long mismatches;
};
EigAgreement admissibility_eig_agreement_serial(int n, const GridAxis& alpha,
                                                const GridAxis& gamma, int points, uint64_t seed);
EigAgreement admissibility_eig_agreement_parallel(int n, const GridAxis& alpha,
                                                  const GridAxis& gamma, int points, uint64_t seed);

}  // namespace serrin
