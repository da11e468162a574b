#include <doctest.h>

#include "gmepw/generate.hpp"
#include "gmepw/rng.hpp"
#include "gmepw/subspace.hpp"

using namespace gmepw;

namespace {

Mat<Rat> random_mat(SplitMix64& rng, int r, int c, long long height) {
    Mat<Rat> m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = rat_from_int(rng.uniform(-height, height));
    return m;
}

// naive Laplace expansion, test-only determinant oracle
Rat det_cofactor(const Mat<Rat>& m) {
    int n = m.rows();
    if (n == 1) return m.at(0, 0);
    Rat acc(0);
    for (int j = 0; j < n; ++j) {
        if (is_zero(m.at(0, j))) continue;
        Mat<Rat> minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        Rat term = m.at(0, j) * det_cofactor(minor);
        if (j % 2 == 0) acc += term; else acc -= term;
    }
    return acc;
}

} // namespace

TEST_CASE("fraction-free rank agrees with Gauss-Jordan rank") {
    SplitMix64 rng(41);
    for (int t = 0; t < 40; ++t) {
        int r = static_cast<int>(rng.uniform(1, 8));
        int c = static_cast<int>(rng.uniform(1, 8));
        Mat<Rat> m = random_mat(rng, r, c, 9);
        // throw in some denominators
        for (int i = 0; i < r; ++i) m.at(i, 0) = m.at(i, 0) / Rat(7);
        Mat<Rat> copy = m;
        int rk1 = rank_fraction_free(m);
        int rk2 = static_cast<int>(rref_in_place(copy).size());
        CHECK(rk1 == rk2);
    }
}

TEST_CASE("Bareiss determinant agrees with cofactor expansion") {
    SplitMix64 rng(43);
    for (int t = 0; t < 25; ++t) {
        int n = static_cast<int>(rng.uniform(1, 5));
        Mat<Rat> m = random_mat(rng, n, n, 9);
        CHECK(det_bareiss(m) == det_cofactor(m));
    }
}

TEST_CASE("nullspace rows annihilate the matrix and have full rank") {
    SplitMix64 rng(47);
    for (int t = 0; t < 25; ++t) {
        int r = static_cast<int>(rng.uniform(1, 6));
        int c = static_cast<int>(rng.uniform(1, 8));
        Mat<Rat> m = random_mat(rng, r, c, 5);
        Mat<Rat> k = nullspace(m);
        CHECK(k.rows() + rank_of(m) == c);
        for (int v = 0; v < k.rows(); ++v)
            for (int i = 0; i < r; ++i) {
                Rat acc(0);
                for (int j = 0; j < c; ++j) acc += m.at(i, j) * k.at(v, j);
                CHECK(is_zero(acc));
            }
    }
}

TEST_CASE("echelon canonical form is independent of the spanning set") {
    SplitMix64 rng(53);
    for (int t = 0; t < 20; ++t) {
        Mat<Rat> basis = random_mat(rng, 4, 9, 9);
        Subspace<Rat> s = Subspace<Rat>::from_spanning(9, basis);
        // a second spanning set: random invertible combinations plus junk rows
        Mat<Rat> mixed(6, 9);
        for (int i = 0; i < 6; ++i) {
            std::vector<Rat> coeffs(4);
            for (auto& x : coeffs) x = rat_from_int(rng.uniform(-5, 5));
            for (int j = 0; j < 9; ++j) {
                Rat acc(0);
                for (int k = 0; k < 4; ++k) acc += coeffs[k] * basis.at(k, j);
                mixed.at(i, j) = acc;
            }
        }
        Subspace<Rat> s2 = Subspace<Rat>::from_spanning(9, mixed);
        if (s2.dim() == s.dim()) CHECK(s == s2);
        CHECK(sum(s, s2) == s);   // s2 is contained in s either way
    }
}

TEST_CASE("intersection and sum of subspaces") {
    Mat<Rat> m1(1, 6), m2(1, 6);
    m1.at(0, 0) = 1;
    m2.at(0, 1) = 1;
    Subspace<Rat> s = Subspace<Rat>::from_spanning(6, m1);
    Subspace<Rat> t = Subspace<Rat>::from_spanning(6, m2);
    CHECK(intersect(s, t).dim() == 0);
    CHECK(sum(s, t).dim() == 2);
    CHECK(intersect(s, s) == s);
    CHECK(sum(s, s) == s);

    Mat<Rat> bad(1, 5);
    bad.at(0, 0) = 1;
    CHECK_THROWS_AS(intersect(s, Subspace<Rat>::from_spanning(5, bad)), Error);

    // dimension identity against the stacked-matrix rank oracle
    SplitMix64 rng(59);
    for (int trial = 0; trial < 15; ++trial) {
        Subspace<Rat> a = Subspace<Rat>::from_spanning(20, random_mat(rng, 10, 20, 4));
        Subspace<Rat> b = Subspace<Rat>::from_spanning(20, random_mat(rng, 10, 20, 4));
        int dim_sum = rank_of(a.rows().vstack(b.rows()));
        CHECK(intersect(a, b).dim() == a.dim() + b.dim() - dim_sum);
        CHECK(sum(a, b).dim() == dim_sum);
    }
}

TEST_CASE("annihilator is an involution") {
    SplitMix64 rng(61);
    for (int t = 0; t < 15; ++t) {
        int d = static_cast<int>(rng.uniform(0, 7));
        Subspace<Rat> s = d == 0 ? Subspace<Rat>(8)
                                 : Subspace<Rat>::from_spanning(8, random_mat(rng, d, 8, 9));
        Subspace<Rat> ann = annihilator(s);
        CHECK(ann.dim() == 8 - s.dim());
        CHECK(annihilator(ann) == s);
        // every functional kills every vector
        for (int i = 0; i < ann.dim(); ++i)
            for (int j = 0; j < s.dim(); ++j) {
                Rat acc(0);
                for (int c = 0; c < 8; ++c) acc += ann.rows().at(i, c) * s.rows().at(j, c);
                CHECK(is_zero(acc));
            }
    }
}

TEST_CASE("graph construction: zero and identity matrices") {
    Lagrangian<Rat> a0 = lagrangian_from_graph(SymmetricForm<Rat>(Mat<Rat>(10, 10)));
    // the zero graph is the span of the triples containing index 0
    std::vector<Multivector<Rat>> e0triples;
    for (uint8_t m : basis_masks(3))
        if (m & 1) e0triples.push_back(Multivector<Rat>::basis_element(m));
    CHECK(a0.space() == Subspace<Rat>::span_of(e0triples));

    Lagrangian<Rat> a1 = lagrangian_from_graph(SymmetricForm<Rat>(Mat<Rat>::identity(10)));
    std::vector<Multivector<Rat>> v5triples;
    for (uint8_t m : basis_masks(3))
        if (!(m & 1)) v5triples.push_back(Multivector<Rat>::basis_element(m));
    Subspace<Rat> triples = Subspace<Rat>::span_of(v5triples);
    CHECK(intersect(a1.space(), triples).dim() == 0);   // graph of an invertible map
}

TEST_CASE("graph Lagrangians are isotropic for every symmetric matrix") {
    SplitMix64 rng(67);
    for (int t = 0; t < 5; ++t) {
        Mat<Rat> s = random_symmetric_matrix(rng, 10, 9);
        Lagrangian<Rat> a = lagrangian_from_graph(SymmetricForm<Rat>(s));
        CHECK(a.dim() == 10);
        for (int i = 0; i < 10; ++i)
            for (int j = i + 1; j < 10; ++j)
                CHECK(is_zero(symplectic(a.basis_vector(i), a.basis_vector(j))));
    }
    // a non-symmetric matrix is rejected before any graph is built
    Mat<Rat> ns(10, 10);
    ns.at(0, 1) = 1;
    CHECK_THROWS_AS(lagrangian_from_graph(SymmetricForm<Rat>(ns)), Error);
}

TEST_CASE("triple-side graphs meet the triple summand in the kernel") {
    std::vector<Multivector<Rat>> v5triples;
    for (uint8_t m : basis_masks(3))
        if (!(m & 1)) v5triples.push_back(Multivector<Rat>::basis_element(m));
    Subspace<Rat> triples = Subspace<Rat>::span_of(v5triples);

    SplitMix64 rng(71);
    for (int corank : {0, 1, 2, 3}) {
        Lagrangian<Rat> a = random_lagrangian_with_intersection(rng.next(), 5, corank);
        CHECK(intersect(a.space(), triples).dim() == corank);
    }
    // and the zero matrix gives the triple summand itself
    Lagrangian<Rat> az = lagrangian_from_v5_graph(SymmetricForm<Rat>(Mat<Rat>(10, 10)));
    CHECK(az.space() == triples);
}

TEST_CASE("reduction mod p keeps rank 10 and isotropy") {
    Lagrangian<Rat> a = random_graph_lagrangian(4, 9);
    for (uint64_t p : {3, 5}) {
        Lagrangian<Fp> ap = lagrangian_mod_p(a, p);
        CHECK(ap.dim() == 10);
        CHECK(rank_of(ap.rows()) == 10);
        for (int i = 0; i < 10; ++i)
            for (int j = i + 1; j < 10; ++j)
                CHECK(is_zero(symplectic(ap.basis_vector(i), ap.basis_vector(j))));
    }

    // a denominator hitting p is a bad prime
    Mat<Rat> s(10, 10);
    s.at(0, 0) = Rat(1, 3);
    Lagrangian<Rat> af = lagrangian_from_graph(SymmetricForm<Rat>(s));
    CHECK_THROWS_AS(lagrangian_mod_p(af, 3), Error);
    CHECK(lagrangian_mod_p(af, 5).dim() == 10);   // other primes are fine

    CHECK_THROWS_AS(lagrangian_mod_p(a, 4), Error);   // not prime
}
