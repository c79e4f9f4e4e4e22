#include "serrin/compat.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace serrin {

double F_value(double rho, double beta_c) {
    return F_value(CompatParams(rho, beta_c));
}

double F_value(const CompatParams& p) {
    const double L = std::log(p.rho);
    const double one_minus = 1.0 - p.beta_c;
    const double first = (one_minus == 0.0) ? L : std::expm1(one_minus * L) / one_minus;
    const double second = 0.5 * (p.rho - 1.0) * (std::pow(p.rho, -p.beta_c) + 1.0);
    return first - second;
}

Sign3 F_sign(const CompatParams& p) {
    const double v = F_value(p);
    if (std::abs(v) <= 1e-13) return Sign3::Zero;
    return v < 0.0 ? Sign3::Negative : Sign3::Positive;
}

namespace {

// Bisection on a strict sign-change bracket, down to width <= tol.
double bisect_root(double rho, double lo, double hi, double flo, double tol) {
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = F_value(rho, mid);
        if (fm == 0.0) return mid;
        if ((flo < 0.0) == (fm < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> find_roots(double rho, double beta_lo, double beta_hi) {
    if (!(rho > 1.0)) throw std::invalid_argument("find_roots: rho must be > 1");
    if (!(beta_lo < beta_hi)) throw std::invalid_argument("find_roots: empty scan interval");

    const double step = 1e-3;
    const int nsteps = static_cast<int>(std::ceil((beta_hi - beta_lo) / step - 1e-9));

    std::vector<double> grid(static_cast<size_t>(nsteps) + 1);
    for (int i = 0; i < nsteps; ++i) grid[static_cast<size_t>(i)] = beta_lo + i * step;
    grid.back() = beta_hi;

    std::vector<double> fvals(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) fvals[i] = F_value(rho, grid[i]);

    std::vector<double> roots;
    for (size_t i = 0; i < grid.size(); ++i) {
        if (fvals[i] == 0.0) {
            roots.push_back(grid[i]);
            continue;
        }
        if (i + 1 < grid.size() && fvals[i + 1] != 0.0 &&
            (fvals[i] < 0.0) != (fvals[i + 1] < 0.0))
            roots.push_back(bisect_root(rho, grid[i], grid[i + 1], fvals[i], 1e-10));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<std::pair<double, double>> find_roots_many(const std::vector<double>& rhos,
                                                       double beta_lo, double beta_hi,
                                                       bool parallel) {
    std::vector<std::vector<double>> per_rho(rhos.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (long long i = 0; i < static_cast<long long>(rhos.size()); ++i)
        per_rho[static_cast<size_t>(i)] = find_roots(rhos[static_cast<size_t>(i)], beta_lo, beta_hi);

    std::vector<size_t> order(rhos.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return rhos[a] < rhos[b]; });

    std::vector<std::pair<double, double>> out;
    for (size_t i : order)
        for (double beta : per_rho[i]) out.emplace_back(rhos[i], beta);
    return out;
}

double secant_gap(double rho, double beta_c, double t) {
    if (!(rho > 1.0)) throw std::invalid_argument("secant_gap: rho must be > 1");
    if (!(t >= 1.0)) throw std::invalid_argument("secant_gap: t must be >= 1");
    const double f1 = 1.0;
    const double frho = std::pow(rho, -beta_c);
    const double secant = f1 + (frho - f1) * (t - 1.0) / (rho - 1.0);
    return std::pow(t, -beta_c) - secant;
}

double special_case_gap(double t) {
    if (!(t > 0.0)) throw std::invalid_argument("special_case_gap: t must be positive");
    return t * t - 1.0 - 2.0 * t * std::log(t);
}

CounterexamplePackage counterexample(int n, double a, double b) {
    if (n < 2) throw std::invalid_argument("counterexample: n must be >= 2");
    if (!(0.0 < a && a < b)) throw std::invalid_argument("counterexample: requires 0 < a < b");

    RadialProfile p{a,
                    b,
                    [a, b](double r) { return 0.5 * (r - a) * (b - r); },
                    [a, b](double r) { return 0.5 * (a + b) - r; },
                    [](double) { return -1.0; },
                    RadialProfile::Provenance::ClosedForm};
    return CounterexamplePackage{std::move(p), 1.0 - n, 0.5 * (b - a)};
}

}  // namespace serrin
