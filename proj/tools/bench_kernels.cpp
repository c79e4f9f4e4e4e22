// Benchmark comparing the serial reference kernels against their
// OpenMP-parallel counterparts.  Also asserts that the two produce
// identical output, since every cell is independent.

#include <bit>
#include <cstdio>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "serrin/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#else
#include <chrono>
#endif

namespace {

double now_seconds() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
        .count();
#endif
}

template <typename F>
double timed(F&& f) {
    const double t0 = now_seconds();
    f();
    return now_seconds() - t0;
}

void report(const char* name, double serial_s, double parallel_s, bool identical) {
    std::printf("%-28s %10.4fs %10.4fs %8.2fx   %s\n", name, serial_s, parallel_s,
                serial_s / parallel_s, identical ? "outputs identical" : "OUTPUT MISMATCH");
}

bool same_bits(double a, double b) {
    return std::bit_cast<uint64_t>(a) == std::bit_cast<uint64_t>(b);
}

bool cells_equal(const std::vector<serrin::SweepCell>& a, const std::vector<serrin::SweepCell>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!same_bits(a[i].alpha, b[i].alpha) || !same_bits(a[i].gamma, b[i].gamma) ||
            !same_bits(a[i].value, b[i].value) || a[i].flag != b[i].flag)
            return false;
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    int scale = 1;
    if (argc > 1) scale = std::max(1, std::atoi(argv[1]));

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (compiled without OpenMP; parallel paths run serially)\n");
#endif
    std::printf("%-28s %11s %11s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        serrin::SweepSpec spec{3,
                               serrin::SweepQuantity::Admissibility,
                               {0.25, 3.0, 2.75 / (1200.0 * scale)},
                               {0.0, 0.95, 0.95 / 1200.0}};
        std::vector<serrin::SweepCell> a, b;
        const double ts = timed([&] { a = serrin::sweep_grid_serial(spec); });
        const double tp = timed([&] { b = serrin::sweep_grid_parallel(spec); });
        report("sweep/admissibility", ts, tp, cells_equal(a, b));
    }

    {
        std::vector<double> a, b;
        const double step = 1e-6 / scale;
        const double ts = timed([&] { a = serrin::compat_scan_serial(2.0, -5.0, 5.0, step); });
        const double tp = timed([&] { b = serrin::compat_scan_parallel(2.0, -5.0, 5.0, step); });
        bool same = a == b;
        report("compat/F-scan", ts, tp, same);
    }

    {
        serrin::GridAxis alpha{0.25, 3.0, 2.75 / (40.0 * scale)};
        serrin::GridAxis gamma{0.0, 0.95, 0.95 / 40.0};
        serrin::EigAgreement a{}, b{};
        const double ts = timed(
            [&] { a = serrin::admissibility_eig_agreement_serial(3, alpha, gamma, 64, 42); });
        const double tp = timed(
            [&] { b = serrin::admissibility_eig_agreement_parallel(3, alpha, gamma, 64, 42); });
        bool same = a.cells == b.cells && a.mismatches == b.mismatches;
        report("curvature/eig-agreement", ts, tp, same);
        std::printf("  (eig-agreement mismatches: %lld of %lld cells)\n",
                    static_cast<long long>(a.mismatches), static_cast<long long>(a.cells));
    }

    return 0;
}
