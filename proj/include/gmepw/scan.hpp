#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gmepw/gm.hpp"
#include "gmepw/subspace.hpp"

namespace gmepw {

// Finite-field enumeration scans. Each scan walks the points of a projective
// space over F_p by linear index, so the work splits into independent index
// ranges whose results merge by concatenation. The OpenMP kernels are the
// production path; the *_reference functions are plain serial loops kept as
// the comparison baseline for tests and the benchmark.

inline constexpr uint64_t kDefaultScanBudget = 10'000'000;

uint64_t projective_point_count(int ncoords, uint64_t p);

// Representative with first nonzero coordinate 1; idx in [0, count).
void decode_projective_point(int ncoords, uint64_t p, uint64_t idx, uint64_t* out);

struct DecompScanReport {
    uint64_t prime = 0;
    uint64_t points_scanned = 0;
    // projective representatives of the decomposable points of P(A)(F_p)
    std::vector<std::array<uint64_t, 10>> decomposables;
};

DecompScanReport scan_decomposables(const Lagrangian<Fp>& a, uint64_t p,
                                    uint64_t budget = kDefaultScanBudget, bool parallel = true);
DecompScanReport scan_decomposables_reference(const Lagrangian<Fp>& a, uint64_t p,
                                              uint64_t budget = kDefaultScanBudget);

struct StratReport {
    uint64_t prime = 0;
    uint64_t points = 0;
    std::array<uint64_t, 11> counts{};   // histogram of multiplicities 0..10
    bool yge3_nonempty = false;
    bool yge4_nonempty = false;
    std::vector<std::string> warnings;
};

// Full multiplicity histogram over P^5(F_p). With crosscheck on, every point
// is computed by both the pairing-rank and the direct-intersection route and
// any disagreement aborts.
StratReport stratify_scan(const Lagrangian<Fp>& a, uint64_t p,
                          uint64_t budget = kDefaultScanBudget, bool parallel = true,
                          bool crosscheck = true);
StratReport stratify_scan_reference(const Lagrangian<Fp>& a, uint64_t p,
                                    uint64_t budget = kDefaultScanBudget, bool crosscheck = true);

struct SmoothnessReport {
    uint64_t prime = 0;
    uint64_t points_scanned = 0;
    uint64_t points_on_x = 0;
    // points of the common quadric zero locus whose Jacobian rank is not 4
    std::vector<std::vector<uint64_t>> singular_points;

    bool all_rank4() const { return singular_points.empty(); }
};

// Enumerates the F_p points where all six quadrics vanish and checks that
// the 6 x dimW Jacobian has rank 4 there. Needs an odd prime: in
// characteristic 2 the gradients of quadratic forms collapse.
SmoothnessReport smoothness_spot_check(const GmData<Fp>& gm, uint64_t p,
                                       uint64_t budget = kDefaultScanBudget, bool parallel = true);
SmoothnessReport smoothness_spot_check_reference(const GmData<Fp>& gm, uint64_t p,
                                                 uint64_t budget = kDefaultScanBudget);

} // namespace gmepw
