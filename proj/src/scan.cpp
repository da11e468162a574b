#include "gmepw/scan.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gmepw {

uint64_t projective_point_count(int ncoords, uint64_t p) {
    // sum over the position of the first nonzero coordinate
    uint64_t total = 0, block = 1;
    for (int l = 0; l < ncoords; ++l) {
        total += block;
        block *= p;
    }
    return total;
}

void decode_projective_point(int ncoords, uint64_t p, uint64_t idx, uint64_t* out) {
    // blocks ordered by descending leading position: leading position
    // ncoords-1 first (1 point), then ncoords-2 (p points), ...
    uint64_t block = 1;
    int lead = ncoords - 1;
    while (idx >= block) {
        idx -= block;
        block *= p;
        --lead;
    }
    for (int i = 0; i < ncoords; ++i) out[i] = 0;
    out[lead] = 1;
    for (int i = lead + 1; i < ncoords; ++i) {
        out[i] = idx % p;
        idx /= p;
    }
}

namespace {

Mat<Fp> attached_rows(const Mat<Fp>& rows, uint64_t p) {
    Mat<Fp> out(rows.rows(), rows.cols());
    for (int i = 0; i < rows.rows(); ++i)
        for (int j = 0; j < rows.cols(); ++j) out.at(i, j) = rows.at(i, j).attach(p);
    return out;
}

void check_budget(uint64_t points, uint64_t budget) {
    require(points <= budget, "budget_exceeded",
            "enumeration of " + std::to_string(points) + " points exceeds the budget of "
                + std::to_string(budget));
}

// ---- decomposable-vector scan ----------------------------------------

struct DecompKernel {
    Mat<Fp> rows;   // 10x20, attached
    uint64_t p;

    bool decomposable_at(const uint64_t* c) const {
        Multivector<Fp> xi(3);
        for (int k = 0; k < 10; ++k) {
            if (c[k] == 0) continue;
            Fp ck(static_cast<long long>(c[k]), p);
            for (int j = 0; j < 20; ++j) xi.coeff(j) += ck * rows.at(k, j);
        }
        return decomposable_rank(xi) == 3;
    }
};

// ---- stratification scan ----------------------------------------------

struct StratKernel {
    Mat<Fp> rows;                    // 10x20, attached
    std::array<Mat<Fp>, 6> pairing; // pairing[t](k, col) = sympl(a_k, e_t∧pair(col))
    uint64_t p;
    bool crosscheck;

    explicit StratKernel(const Mat<Fp>& arows, uint64_t prime, bool check)
        : rows(attached_rows(arows, prime)), p(prime), crosscheck(check) {
        const auto& pairs = basis_masks(2);
        std::vector<Multivector<Fp>> abasis;
        for (int k = 0; k < 10; ++k) {
            Multivector<Fp> ak(3);
            for (int j = 0; j < 20; ++j) ak.coeff(j) = rows.at(k, j);
            abasis.push_back(std::move(ak));
        }
        for (int t = 0; t < 6; ++t) {
            pairing[t] = Mat<Fp>(10, 15);
            Multivector<Fp> et = Multivector<Fp>::basis_element(static_cast<uint8_t>(1u << t));
            for (int col = 0; col < 15; ++col) {
                Multivector<Fp> frame = wedge(et, Multivector<Fp>::basis_element(pairs[col]));
                for (int k = 0; k < 10; ++k) pairing[t].at(k, col) = symplectic(abasis[k], frame);
            }
        }
    }

    int multiplicity_at(const uint64_t* v) const {
        Mat<Fp> m(10, 15);
        for (int t = 0; t < 6; ++t) {
            if (v[t] == 0) continue;
            Fp vt(static_cast<long long>(v[t]), p);
            for (int k = 0; k < 10; ++k)
                for (int col = 0; col < 15; ++col) m.at(k, col) += vt * pairing[t].at(k, col);
        }
        int ell = 10 - rank_of(m);
        if (crosscheck) {
            int direct = direct_multiplicity_at(v);
            require(ell == direct, "oracle_mismatch",
                    "stratification: pairing route gives " + std::to_string(ell)
                        + ", direct route gives " + std::to_string(direct));
        }
        return ell;
    }

    int direct_multiplicity_at(const uint64_t* v) const {
        std::vector<Fp> vv(6);
        for (int i = 0; i < 6; ++i) vv[i] = Fp(static_cast<long long>(v[i]), p);
        Multivector<Fp> vm = Multivector<Fp>::from_vector(vv);
        Mat<Fp> stacked(25, 20);
        for (int i = 0; i < 10; ++i)
            for (int j = 0; j < 20; ++j) stacked.at(i, j) = rows.at(i, j);
        const auto& pairs = basis_masks(2);
        for (int col = 0; col < 15; ++col) {
            Multivector<Fp> w = wedge(vm, Multivector<Fp>::basis_element(pairs[col]));
            for (int j = 0; j < 20; ++j) stacked.at(10 + col, j) = w.coeff(j);
        }
        // dim(A ∩ T) = dim A + dim T - dim(A + T) with dim T = 10 for v != 0
        return 20 - rank_of(stacked);
    }
};

// ---- smoothness check ---------------------------------------------------

struct SmoothKernel {
    std::array<Mat<Fp>, 6> q;
    int m;
    uint64_t p;

    SmoothKernel(const GmData<Fp>& gm, uint64_t prime) : m(gm.w_dim()), p(prime) {
        for (int i = 0; i < 6; ++i) q[i] = attached_rows(gm.q[i], p);
    }

    bool on_x(const std::vector<Fp>& w) const {
        for (int i = 0; i < 6; ++i) {
            Fp acc(0, p);
            for (int a = 0; a < m; ++a) {
                if (is_zero(w[a])) continue;
                for (int b = 0; b < m; ++b) acc += w[a] * q[i].at(a, b) * w[b];
            }
            if (!is_zero(acc)) return false;
        }
        return true;
    }

    int jacobian_rank(const std::vector<Fp>& w) const {
        Mat<Fp> jac(6, m);
        for (int i = 0; i < 6; ++i)
            for (int a = 0; a < m; ++a) {
                Fp acc(0, p);
                for (int b = 0; b < m; ++b) acc += q[i].at(a, b) * w[b];
                jac.at(i, a) = Fp(2, p) * acc;
            }
        return rank_of(jac);
    }
};

} // namespace

DecompScanReport scan_decomposables_reference(const Lagrangian<Fp>& a, uint64_t p, uint64_t budget) {
    require(is_prime_u64(p), "bad_prime", std::to_string(p) + " is not prime");
    const uint64_t total = projective_point_count(10, p);
    check_budget(total, budget);
    DecompKernel kernel{attached_rows(a.rows(), p), p};

    DecompScanReport rep;
    rep.prime = p;
    rep.points_scanned = total;
    uint64_t c[10];
    for (uint64_t idx = 0; idx < total; ++idx) {
        decode_projective_point(10, p, idx, c);
        if (kernel.decomposable_at(c)) {
            std::array<uint64_t, 10> pt;
            std::copy(c, c + 10, pt.begin());
            rep.decomposables.push_back(pt);
        }
    }
    return rep;
}

DecompScanReport scan_decomposables(const Lagrangian<Fp>& a, uint64_t p, uint64_t budget,
                                    bool parallel) {
    if (!parallel) return scan_decomposables_reference(a, p, budget);
    require(is_prime_u64(p), "bad_prime", std::to_string(p) + " is not prime");
    const uint64_t total = projective_point_count(10, p);
    check_budget(total, budget);
    DecompKernel kernel{attached_rows(a.rows(), p), p};

    std::vector<std::pair<uint64_t, std::array<uint64_t, 10>>> found;
#pragma omp parallel
    {
        std::vector<std::pair<uint64_t, std::array<uint64_t, 10>>> local;
        uint64_t c[10];
#pragma omp for schedule(static) nowait
        for (long long idx = 0; idx < static_cast<long long>(total); ++idx) {
            decode_projective_point(10, p, static_cast<uint64_t>(idx), c);
            if (kernel.decomposable_at(c)) {
                std::array<uint64_t, 10> pt;
                std::copy(c, c + 10, pt.begin());
                local.emplace_back(static_cast<uint64_t>(idx), pt);
            }
        }
#pragma omp critical
        found.insert(found.end(), local.begin(), local.end());
    }
    std::sort(found.begin(), found.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });

    DecompScanReport rep;
    rep.prime = p;
    rep.points_scanned = total;
    rep.decomposables.reserve(found.size());
    for (auto& [idx, pt] : found) rep.decomposables.push_back(pt);
    return rep;
}

namespace {

StratReport finalize_strat(uint64_t p, uint64_t total, const std::array<uint64_t, 11>& counts) {
    StratReport rep;
    rep.prime = p;
    rep.points = total;
    rep.counts = counts;
    for (int k = 3; k <= 10; ++k)
        if (counts[k] > 0) {
            rep.yge3_nonempty = true;
            if (k >= 4) rep.yge4_nonempty = true;
        }
    if (rep.yge3_nonempty)
        rep.warnings.push_back("multiplicity >= 3 stratum is nonempty (general data has it empty)");
    if (rep.yge4_nonempty)
        rep.warnings.push_back(
            "multiplicity >= 4 stratum is nonempty (impossible without decomposable vectors)");
    return rep;
}

} // namespace

StratReport stratify_scan_reference(const Lagrangian<Fp>& a, uint64_t p, uint64_t budget,
                                    bool crosscheck) {
    require(is_prime_u64(p), "bad_prime", std::to_string(p) + " is not prime");
    const uint64_t total = projective_point_count(6, p);
    check_budget(total, budget);
    StratKernel kernel(a.rows(), p, crosscheck);

    std::array<uint64_t, 11> counts{};
    uint64_t v[6];
    for (uint64_t idx = 0; idx < total; ++idx) {
        decode_projective_point(6, p, idx, v);
        ++counts[static_cast<size_t>(kernel.multiplicity_at(v))];
    }
    return finalize_strat(p, total, counts);
}

StratReport stratify_scan(const Lagrangian<Fp>& a, uint64_t p, uint64_t budget, bool parallel,
                          bool crosscheck) {
    if (!parallel) return stratify_scan_reference(a, p, budget, crosscheck);
    require(is_prime_u64(p), "bad_prime", std::to_string(p) + " is not prime");
    const uint64_t total = projective_point_count(6, p);
    check_budget(total, budget);
    StratKernel kernel(a.rows(), p, crosscheck);

    std::array<uint64_t, 11> counts{};
#pragma omp parallel
    {
        std::array<uint64_t, 11> local{};
        uint64_t v[6];
#pragma omp for schedule(static) nowait
        for (long long idx = 0; idx < static_cast<long long>(total); ++idx) {
            decode_projective_point(6, p, static_cast<uint64_t>(idx), v);
            ++local[static_cast<size_t>(kernel.multiplicity_at(v))];
        }
#pragma omp critical
        for (int k = 0; k <= 10; ++k) counts[k] += local[k];
    }
    return finalize_strat(p, total, counts);
}

SmoothnessReport smoothness_spot_check_reference(const GmData<Fp>& gm, uint64_t p, uint64_t budget) {
    require(is_prime_u64(p) && p != 2, "bad_prime",
            "smoothness check needs an odd prime (quadric gradients collapse in characteristic 2)");
    const int m = gm.w_dim();
    const uint64_t total = projective_point_count(m, p);
    check_budget(total, budget);
    SmoothKernel kernel(gm, p);

    SmoothnessReport rep;
    rep.prime = p;
    rep.points_scanned = total;
    std::vector<uint64_t> c(m);
    std::vector<Fp> w(m);
    for (uint64_t idx = 0; idx < total; ++idx) {
        decode_projective_point(m, p, idx, c.data());
        for (int i = 0; i < m; ++i) w[i] = Fp(static_cast<long long>(c[i]), p);
        if (!kernel.on_x(w)) continue;
        ++rep.points_on_x;
        if (kernel.jacobian_rank(w) != 4) rep.singular_points.push_back(c);
    }
    return rep;
}

SmoothnessReport smoothness_spot_check(const GmData<Fp>& gm, uint64_t p, uint64_t budget,
                                       bool parallel) {
    if (!parallel) return smoothness_spot_check_reference(gm, p, budget);
    require(is_prime_u64(p) && p != 2, "bad_prime",
            "smoothness check needs an odd prime (quadric gradients collapse in characteristic 2)");
    const int m = gm.w_dim();
    const uint64_t total = projective_point_count(m, p);
    check_budget(total, budget);
    SmoothKernel kernel(gm, p);

    uint64_t on_x = 0;
    std::vector<std::pair<uint64_t, std::vector<uint64_t>>> singular;
#pragma omp parallel
    {
        uint64_t local_on_x = 0;
        std::vector<std::pair<uint64_t, std::vector<uint64_t>>> local;
        std::vector<uint64_t> c(m);
        std::vector<Fp> w(m);
#pragma omp for schedule(static) nowait
        for (long long idx = 0; idx < static_cast<long long>(total); ++idx) {
            decode_projective_point(m, p, static_cast<uint64_t>(idx), c.data());
            for (int i = 0; i < m; ++i) w[i] = Fp(static_cast<long long>(c[i]), p);
            if (!kernel.on_x(w)) continue;
            ++local_on_x;
            if (kernel.jacobian_rank(w) != 4) local.emplace_back(static_cast<uint64_t>(idx), c);
        }
#pragma omp critical
        {
            on_x += local_on_x;
            singular.insert(singular.end(), local.begin(), local.end());
        }
    }
    std::sort(singular.begin(), singular.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });

    SmoothnessReport rep;
    rep.prime = p;
    rep.points_scanned = total;
    rep.points_on_x = on_x;
    for (auto& [idx, pt] : singular) rep.singular_points.push_back(pt);
    return rep;
}

} // namespace gmepw
