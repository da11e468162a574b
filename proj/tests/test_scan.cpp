#include <doctest.h>

#include <set>

#include "gmepw/generate.hpp"
#include "gmepw/scan.hpp"

using namespace gmepw;

TEST_CASE("projective point decoding is a bijection onto representatives") {
    for (uint64_t p : {2, 3, 5}) {
        for (int n : {2, 3}) {
            uint64_t total = projective_point_count(n, p);
            uint64_t expect = 1;
            for (int i = 0; i < n; ++i) expect *= p;
            CHECK(total == (expect - 1) / (p - 1));

            std::set<std::vector<uint64_t>> seen;
            std::vector<uint64_t> c(n);
            for (uint64_t idx = 0; idx < total; ++idx) {
                decode_projective_point(n, p, idx, c.data());
                // canonical representative: first nonzero coordinate is 1
                int lead = -1;
                for (int i = 0; i < n; ++i)
                    if (c[i] != 0) { lead = i; break; }
                REQUIRE(lead >= 0);
                CHECK(c[lead] == 1);
                seen.insert(c);
            }
            CHECK(seen.size() == total);
        }
    }
}

TEST_CASE("budget guard fires before enumeration") {
    Lagrangian<Fp> ap = lagrangian_mod_p(random_graph_lagrangian(1, 9), 5);
    CHECK_THROWS_AS(scan_decomposables(ap, 5, 1000), Error);
    CHECK_THROWS_AS(stratify_scan(ap, 5, 100), Error);
}

TEST_CASE("decomposable scan at p=2 completes over 1023 points") {
    Lagrangian<Fp> ap = lagrangian_mod_p(random_graph_lagrangian(2, 9), 2);
    DecompScanReport rep = scan_decomposables(ap, 2);
    CHECK(rep.points_scanned == 1023);
}

TEST_CASE("generic graph Lagrangians scan clean over F_3") {
    for (uint64_t seed : {1, 2, 3, 4, 5}) {
        Lagrangian<Fp> ap = lagrangian_mod_p(random_graph_lagrangian(seed, 9), 3);
        DecompScanReport rep = scan_decomposables(ap, 3);
        CHECK(rep.points_scanned == 29524);
        CHECK(rep.decomposables.empty());
    }
}

TEST_CASE("the coordinate Lagrangian is full of decomposables") {
    Lagrangian<Rat> a0 = lagrangian_from_graph(SymmetricForm<Rat>(Mat<Rat>(10, 10)));
    DecompScanReport rep = scan_decomposables(lagrangian_mod_p(a0, 2), 2);
    CHECK(rep.decomposables.size() >= 10);   // at least the basis vectors
}

TEST_CASE("parallel kernels reproduce the serial reference exactly") {
    Lagrangian<Rat> a = random_graph_lagrangian(6, 9);

    for (uint64_t p : {2, 3}) {
        Lagrangian<Fp> ap = lagrangian_mod_p(a, p);
        DecompScanReport serial = scan_decomposables_reference(ap, p);
        DecompScanReport parallel = scan_decomposables(ap, p);
        CHECK(serial.points_scanned == parallel.points_scanned);
        CHECK(serial.decomposables == parallel.decomposables);
    }
    {
        Lagrangian<Rat> planted = lagrangian_from_graph(SymmetricForm<Rat>(Mat<Rat>(10, 10)));
        Lagrangian<Fp> ap = lagrangian_mod_p(planted, 3);
        DecompScanReport serial = scan_decomposables_reference(ap, 3);
        DecompScanReport parallel = scan_decomposables(ap, 3);
        CHECK(serial.decomposables == parallel.decomposables);
        CHECK(!serial.decomposables.empty());
    }
    for (uint64_t p : {3, 5}) {
        Lagrangian<Fp> ap = lagrangian_mod_p(a, p);
        StratReport serial = stratify_scan_reference(ap, p);
        StratReport parallel = stratify_scan(ap, p);
        CHECK(serial.counts == parallel.counts);
        CHECK(serial.points == parallel.points);
        CHECK(serial.yge3_nonempty == parallel.yge3_nonempty);
    }
    {
        GmData<Fp> gmp = gm_mod_p(lagrangian_to_gm(a, e0_covector()), 3);
        SmoothnessReport serial = smoothness_spot_check_reference(gmp, 3);
        SmoothnessReport parallel = smoothness_spot_check(gmp, 3);
        CHECK(serial.points_on_x == parallel.points_on_x);
        CHECK(serial.singular_points == parallel.singular_points);
        CHECK(serial.points_scanned == parallel.points_scanned);
    }
}

TEST_CASE("stratification crosscheck can be disabled without changing counts") {
    Lagrangian<Fp> ap = lagrangian_mod_p(random_graph_lagrangian(8, 9), 3);
    StratReport checked = stratify_scan(ap, 3, kDefaultScanBudget, true, true);
    StratReport unchecked = stratify_scan(ap, 3, kDefaultScanBudget, true, false);
    CHECK(checked.counts == unchecked.counts);
}
