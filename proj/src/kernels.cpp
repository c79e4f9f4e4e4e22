#include "serrin/kernels.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "serrin/compat.hpp"
#include "serrin/curvature.hpp"
#include "serrin/geometry.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace serrin {

int GridAxis::count() const {
    validate();
    return static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

const char* sweep_quantity_name(SweepQuantity q) {
    switch (q) {
        case SweepQuantity::Admissibility: return "Admissibility";
        case SweepQuantity::CompatRoots: return "CompatRoots";
        case SweepQuantity::SerrinConstant: return "SerrinConstant";
        case SweepQuantity::PohozaevRatio: return "PohozaevRatio";
    }
    throw std::invalid_argument("sweep_quantity_name: bad quantity");
}

SweepQuantity sweep_quantity_from_name(const std::string& name) {
    if (name == "Admissibility") return SweepQuantity::Admissibility;
    if (name == "CompatRoots") return SweepQuantity::CompatRoots;
    if (name == "SerrinConstant") return SweepQuantity::SerrinConstant;
    if (name == "PohozaevRatio") return SweepQuantity::PohozaevRatio;
    throw std::invalid_argument("unknown sweep quantity: " + name);
}

long long SweepSpec::cells() const {
    return static_cast<long long>(alpha.count()) * gamma.count();
}

void SweepSpec::validate() const {
    if (n < 2) throw std::invalid_argument("SweepSpec: n must be >= 2");
    alpha.validate();
    gamma.validate();
    if (cells() > 10'000'000) throw std::invalid_argument("SweepSpec: grid exceeds 10^7 cells");
}

namespace {

bool gate_for_gamma_side(int n, double alpha, double gamma) {
    if (!(alpha > 0.0) || gamma == 1.0) return false;
    if (!(alpha + n - 2 > 0.0)) return false;
    const AdmissibilityResult a = admissibility(n, alpha, gamma);
    return gamma < 1.0 ? (a.gamma1 <= gamma) : (gamma < a.gamma2);
}

SweepCell eval_cell(const SweepSpec& spec, double alpha, double gamma) {
    SweepCell cell{alpha, gamma, 0.0, false};
    switch (spec.quantity) {
        case SweepQuantity::Admissibility:
            cell.value = admissibility_condition_value(spec.n, alpha, gamma);
            cell.flag = gate_for_gamma_side(spec.n, alpha, gamma);
            break;
        case SweepQuantity::SerrinConstant:
            cell.value = 1.0 / (spec.n + alpha);
            cell.flag = alpha > -spec.n;
            break;
        case SweepQuantity::PohozaevRatio:
            cell.value = (spec.n + alpha) / (spec.n + alpha + 2.0);
            cell.flag = alpha > -spec.n;
            break;
        case SweepQuantity::CompatRoots: {
            const double rho = gamma;  // gamma axis reused as the ratio
            if (rho > 1.0) {
                cell.value = F_value(rho, spec.n + alpha - 1.0);
                cell.flag = std::abs(cell.value) <= 1e-13;
            } else {
                cell.value = std::numeric_limits<double>::quiet_NaN();
            }
            break;
        }
    }
    return cell;
}

std::vector<SweepCell> sweep_impl(const SweepSpec& spec, bool parallel) {
    spec.validate();
    const int na = spec.alpha.count();
    const int ng = spec.gamma.count();
    std::vector<SweepCell> cells(static_cast<size_t>(na) * ng);

#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (long long idx = 0; idx < static_cast<long long>(cells.size()); ++idx) {
        const int i = static_cast<int>(idx / ng);
        const int j = static_cast<int>(idx % ng);
        cells[static_cast<size_t>(idx)] = eval_cell(spec, spec.alpha.at(i), spec.gamma.at(j));
    }
    (void)parallel;
    return cells;
}

}  // namespace

std::vector<SweepCell> sweep_grid_serial(const SweepSpec& spec) { return sweep_impl(spec, false); }
std::vector<SweepCell> sweep_grid_parallel(const SweepSpec& spec) { return sweep_impl(spec, true); }
std::vector<SweepCell> sweep_grid(const SweepSpec& spec, bool parallel) {
    return sweep_impl(spec, parallel);
}

namespace {

std::vector<double> scan_impl(double rho, double beta_lo, double beta_hi, double step,
                              bool parallel) {
    if (!(rho > 1.0)) throw std::invalid_argument("compat_scan: rho must be > 1");
    if (!(beta_lo < beta_hi) || !(step > 0.0))
        throw std::invalid_argument("compat_scan: bad scan interval");
    const long long count =
        static_cast<long long>(std::floor((beta_hi - beta_lo) / step + 1e-9)) + 1;
    std::vector<double> vals(static_cast<size_t>(count));
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (long long i = 0; i < count; ++i)
        vals[static_cast<size_t>(i)] = F_value(rho, beta_lo + i * step);
    (void)parallel;
    return vals;
}

// One deterministic sample point per (cell, k): direction from a hashed
// counter, radius in [0.5, 2].
Point sample_point(int n, uint64_t seed, long long cell, int k) {
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(cell + 1)) ^
                        (0xbf58476d1ce4e5b9ULL * static_cast<uint64_t>(k + 1)));
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<double> c(static_cast<size_t>(n));
    double norm = 0.0;
    do {
        norm = 0.0;
        for (int i = 0; i < n; ++i) {
            c[static_cast<size_t>(i)] = unit(rng);
            norm += c[static_cast<size_t>(i)] * c[static_cast<size_t>(i)];
        }
        norm = std::sqrt(norm);
    } while (norm < 0.1);
    std::uniform_real_distribution<double> rad(0.5, 2.0);
    const double target = rad(rng);
    for (double& v : c) v *= target / norm;
    return Point(std::move(c));
}

EigAgreement eig_agreement_impl(int n, const GridAxis& alpha, const GridAxis& gamma, int points,
                                uint64_t seed, bool parallel) {
    alpha.validate();
    gamma.validate();
    const int na = alpha.count();
    const int ng = gamma.count();
    const long long cells = static_cast<long long>(na) * ng;
    long long mismatches = 0;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : mismatches) if (parallel)
#endif
    for (long long idx = 0; idx < cells; ++idx) {
        const double a = alpha.at(static_cast<int>(idx / ng));
        const double g = gamma.at(static_cast<int>(idx % ng));
        const ManifoldConfig cfg(n, g, a);
        const bool closed_sign = admissibility_condition_value(n, a, g) <= 0.0;

        bool eig_sign = true;
        for (int k = 0; k < points; ++k) {
            const Point x = sample_point(n, seed, idx, k);
            const double lambda = min_generalized_eigenvalue(compatibility_tensor_at(cfg, x),
                                                             ambient_data(cfg, x).metric);
            if (lambda < -1e-10) {
                eig_sign = false;
                break;
            }
        }
        if (closed_sign != eig_sign) ++mismatches;
    }
    (void)parallel;
    return EigAgreement{cells, mismatches};
}

}  // namespace

std::vector<double> compat_scan_serial(double rho, double beta_lo, double beta_hi, double step) {
    return scan_impl(rho, beta_lo, beta_hi, step, false);
}
std::vector<double> compat_scan_parallel(double rho, double beta_lo, double beta_hi, double step) {
    return scan_impl(rho, beta_lo, beta_hi, step, true);
}

EigAgreement admissibility_eig_agreement_serial(int n, const GridAxis& alpha,
                                                const GridAxis& gamma, int points, uint64_t seed) {
    return eig_agreement_impl(n, alpha, gamma, points, seed, false);
}
EigAgreement admissibility_eig_agreement_parallel(int n, const GridAxis& alpha,
                                                  const GridAxis& gamma, int points,
                                                  uint64_t seed) {
    return eig_agreement_impl(n, alpha, gamma, points, seed, true);
}

}  // namespace serrin
