// Timing comparison of the OpenMP scan kernels against the serial reference
// loops, on the same seeded instances. Not part of the test suite.

#include <cstdio>
#include <cstdlib>

#include <omp.h>

#include "gmepw/generate.hpp"
#include "gmepw/scan.hpp"

using namespace gmepw;

namespace {

template <class F>
double time_once(F&& f) {
    double t0 = omp_get_wtime();
    f();
    return omp_get_wtime() - t0;
}

void row(const char* name, uint64_t points, double serial, double parallel) {
    std::printf("%-28s %10llu pts   serial %8.3fs   openmp %8.3fs   speedup %5.2fx\n", name,
                static_cast<unsigned long long>(points), serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

} // namespace

int main(int argc, char** argv) {
    uint64_t p_strat = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 7;
    uint64_t p_decomp = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 3;

    std::printf("threads: %d\n", omp_get_max_threads());

    Lagrangian<Rat> a = random_graph_lagrangian(1, 9);
    Lagrangian<Fp> ap_strat = lagrangian_mod_p(a, p_strat);
    Lagrangian<Fp> ap_dec = lagrangian_mod_p(a, p_decomp);

    {
        StratReport r1, r2;
        double ts = time_once([&] { r1 = stratify_scan_reference(ap_strat, p_strat); });
        double tp = time_once([&] { r2 = stratify_scan(ap_strat, p_strat); });
        if (r1.counts != r2.counts) {
            std::fprintf(stderr, "stratify: kernel disagrees with reference\n");
            return 1;
        }
        row("stratify (crosscheck on)", r1.points, ts, tp);
    }
    {
        StratReport r1, r2;
        double ts = time_once(
            [&] { r1 = stratify_scan_reference(ap_strat, p_strat, kDefaultScanBudget, false); });
        double tp = time_once(
            [&] { r2 = stratify_scan(ap_strat, p_strat, kDefaultScanBudget, true, false); });
        if (r1.counts != r2.counts) {
            std::fprintf(stderr, "stratify: kernel disagrees with reference\n");
            return 1;
        }
        row("stratify (pairing only)", r1.points, ts, tp);
    }
    {
        DecompScanReport r1, r2;
        double ts = time_once([&] { r1 = scan_decomposables_reference(ap_dec, p_decomp); });
        double tp = time_once([&] { r2 = scan_decomposables(ap_dec, p_decomp); });
        if (r1.decomposables != r2.decomposables) {
            std::fprintf(stderr, "decomposables: kernel disagrees with reference\n");
            return 1;
        }
        row("decomposable scan", r1.points_scanned, ts, tp);
    }
    {
        GmData<Rat> gm = lagrangian_to_gm(a, e0_covector());
        GmData<Fp> gmp = gm_mod_p(gm, 3);
        SmoothnessReport r1, r2;
        double ts = time_once([&] { r1 = smoothness_spot_check_reference(gmp, 3); });
        double tp = time_once([&] { r2 = smoothness_spot_check(gmp, 3); });
        if (r1.points_on_x != r2.points_on_x) {
            std::fprintf(stderr, "smoothness: kernel disagrees with reference\n");
            return 1;
        }
        row("smoothness check", r1.points_scanned, ts, tp);
    }
    return 0;
}
