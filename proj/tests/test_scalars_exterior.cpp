#include <doctest.h>

#include "gmepw/multivector.hpp"
#include "gmepw/rng.hpp"
#include "gmepw/subspace.hpp"

using namespace gmepw;

namespace {

Multivector<Rat> e(int i) { return Multivector<Rat>::basis_element(static_cast<uint8_t>(1u << i)); }

Multivector<Rat> random_mv(SplitMix64& rng, int degree, long long height) {
    Multivector<Rat> m(degree);
    for (int k = 0; k < m.dim(); ++k) m.coeff(k) = rat_from_int(rng.uniform(-height, height));
    return m;
}

Multivector<Fp> random_mv_p(SplitMix64& rng, int degree, uint64_t p) {
    Multivector<Fp> m(degree);
    for (int k = 0; k < m.dim(); ++k) m.coeff(k) = Fp(rng.uniform(0, static_cast<long long>(p) - 1), p);
    return m;
}

} // namespace

TEST_CASE("rationals stay reduced with positive denominator") {
    Rat x = rat_from_string("-6/4");
    CHECK(rat_to_string(x) == "-3/2");
    CHECK(x.get_den() == 2);
    Rat y = rat_from_string("5/-10");
    CHECK(rat_to_string(y) == "-1/2");
    CHECK(y.get_den() > 0);
    CHECK_THROWS_AS(rat_from_string("1/0"), Error);
    CHECK_THROWS_AS(rat_from_string("abc"), Error);
    CHECK_THROWS_AS(rat_from_string(""), Error);
}

TEST_CASE("prime field arithmetic is exact modular arithmetic") {
    Fp a(7, 11), b(8, 11);
    CHECK((a + b).value() == 4);
    CHECK((a * b).value() == 1);
    CHECK((a - b).value() == 10);
    CHECK((a / b) == a * b.inverse());
    CHECK((b * b.inverse()).value() == 1);
    CHECK((-a).value() == 4);
    CHECK(Fp(-3, 11).value() == 8);
    CHECK_THROWS_AS(Fp(0, 11).inverse(), Error);
    CHECK_THROWS_AS((void)(Fp(1, 5) + Fp(1, 7)), Error);
    // literals attach to whichever modulus they meet
    CHECK((Fp(1) + a).value() == 8);
    CHECK(is_zero(Fp(11, 11)));
}

TEST_CASE("entry-wise reduction rejects denominators divisible by p") {
    CHECK(reduce_mod_p(Rat(7, 2), 5).value() == 1);   // 7 * inv(2) = 7 * 3 = 21 = 1 mod 5
    CHECK_THROWS_AS(reduce_mod_p(Rat(1, 3), 3), Error);
}

TEST_CASE("wedge on basis elements") {
    auto e01 = wedge(e(0), e(1));
    auto e012 = wedge(e01, e(2));
    CHECK(e012.coeff(basis_index(0b111)) == Rat(1));

    auto e10 = wedge(e(1), e(0));
    CHECK(e10.coeff(basis_index(0b11)) == Rat(-1));

    auto lhs = wedge(wedge(e(0), wedge(e(1), e(2))), wedge(e(0), wedge(e(3), e(4))));
    CHECK(lhs.zero());

    CHECK_THROWS_AS(wedge(e012, wedge(e012, e012)), Error);
}

TEST_CASE("wedge is bilinear, graded-commutative and associative") {
    SplitMix64 rng(11);
    for (int t = 0; t < 40; ++t) {
        int p = static_cast<int>(rng.uniform(0, 2));
        int q = static_cast<int>(rng.uniform(0, 2));
        int r = static_cast<int>(rng.uniform(0, 2));
        auto a = random_mv(rng, p, 5), a2 = random_mv(rng, p, 5);
        auto b = random_mv(rng, q, 5);
        auto c = random_mv(rng, r, 5);

        CHECK(wedge(a + a2, b) == wedge(a, b) + wedge(a2, b));
        auto ab = wedge(a, b);
        auto ba = wedge(b, a);
        if ((p * q) % 2 == 1) ba = Rat(-1) * ba;
        CHECK(ab == ba);
        CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    }
}

TEST_CASE("volume fixes the top-degree trivialization") {
    Multivector<Rat> top = e(0);
    for (int i = 1; i < 6; ++i) top = wedge(top, e(i));
    CHECK(volume(top) == Rat(1));
    CHECK(volume(Rat(3) * top) == Rat(3));

    Multivector<Rat> swapped = e(1);
    for (int i : {0, 2, 3, 4, 5}) swapped = wedge(swapped, e(i));
    CHECK(volume(swapped) == Rat(-1));

    CHECK_THROWS_AS(volume(e(0)), Error);
}

TEST_CASE("symplectic form on degree 3") {
    auto e012 = wedge(wedge(e(0), e(1)), e(2));
    auto e345 = wedge(wedge(e(3), e(4)), e(5));
    auto e034 = wedge(wedge(e(0), e(3)), e(4));
    CHECK(symplectic(e012, e345) == Rat(1));
    CHECK(symplectic(e012, e012) == Rat(0));
    CHECK(symplectic(e012, e034) == Rat(0));

    SplitMix64 rng(5);
    for (int t = 0; t < 30; ++t) {
        auto xi = random_mv(rng, 3, 9);
        auto eta = random_mv(rng, 3, 9);
        CHECK(symplectic(xi, eta) == -symplectic(eta, xi));
        CHECK(symplectic(xi, xi) == Rat(0));
        CHECK(symplectic(xi, eta) == volume(wedge(xi, eta)));
    }
}

TEST_CASE("symplectic Gram matrix on the lex basis has determinant +-1") {
    Mat<Rat> gram(20, 20);
    const auto& masks = basis_masks(3);
    for (int i = 0; i < 20; ++i)
        for (int j = 0; j < 20; ++j)
            gram.at(i, j) = symplectic(Multivector<Rat>::basis_element(masks[i]),
                                       Multivector<Rat>::basis_element(masks[j]));
    Rat d = det_bareiss(gram);
    CHECK((d == Rat(1) || d == Rat(-1)));
    CHECK(rank_of(gram) == 20);   // nondegenerate
}

TEST_CASE("contraction: examples and the Leibniz identity") {
    std::vector<Rat> e0v(6, Rat(0));
    e0v[0] = 1;
    auto e012 = wedge(wedge(e(0), e(1)), e(2));
    auto r = contract(e0v, e012);
    CHECK(r == wedge(e(1), e(2)));

    auto e123 = wedge(wedge(e(1), e(2)), e(3));
    CHECK(contract(e0v, e123).zero());

    std::vector<Rat> lam(6, Rat(0));
    lam[0] = 1;
    lam[1] = 1;
    auto c = contract(lam, wedge(e(0), e(1)));
    CHECK(c == e(1) - e(0));   // Leibniz, expanded by hand

    CHECK_THROWS_AS(contract(e0v, Multivector<Rat>(0)), Error);

    SplitMix64 rng(17);
    for (int t = 0; t < 200; ++t) {
        int p = static_cast<int>(rng.uniform(1, 3));
        int q = static_cast<int>(rng.uniform(1, 2));
        auto a = random_mv(rng, p, 7);
        auto b = random_mv(rng, q, 7);
        std::vector<Rat> mu(6);
        for (auto& x : mu) x = rat_from_int(rng.uniform(-7, 7));
        auto lhs = contract(mu, wedge(a, b));
        auto rhs = wedge(contract(mu, a), b);
        auto second = wedge(a, contract(mu, b));
        rhs = (p % 2 == 1) ? rhs - second : rhs + second;
        CHECK(lhs == rhs);
    }
    for (int t = 0; t < 200; ++t) {
        const uint64_t p5 = 5;
        int p = static_cast<int>(rng.uniform(1, 3));
        int q = static_cast<int>(rng.uniform(1, 2));
        auto a = random_mv_p(rng, p, p5);
        auto b = random_mv_p(rng, q, p5);
        std::vector<Fp> mu(6);
        for (auto& x : mu) x = Fp(rng.uniform(0, 4), p5);
        auto lhs = contract(mu, wedge(a, b));
        auto rhs = wedge(contract(mu, a), b);
        auto second = wedge(a, contract(mu, b));
        rhs = (p % 2 == 1) ? rhs - second : rhs + second;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("decomposability rank test") {
    auto e012 = wedge(wedge(e(0), e(1)), e(2));
    auto e345 = wedge(wedge(e(3), e(4)), e(5));
    CHECK(decomposable_rank(e012) == 3);
    CHECK(decomposable_rank(e012 + e345) == 6);
    CHECK(decomposable_rank(Multivector<Rat>(3)) == 0);

    // v ∧ (rank-4 bivector) has a 1-dimensional kernel, hence rank 5; the
    // attainable values are {0,3,5,6} and rank 3 characterizes decomposables
    auto e034 = wedge(wedge(e(0), e(3)), e(4));
    CHECK(decomposable_rank(e012 + e034) == 5);

    SplitMix64 rng(23);
    for (int t = 0; t < 50; ++t) {
        auto v1 = random_mv(rng, 1, 5);
        auto v2 = random_mv(rng, 1, 5);
        auto v3 = random_mv(rng, 1, 5);
        auto xi = wedge(wedge(v1, v2), v3);
        if (xi.zero()) continue;
        CHECK(decomposable_rank(xi) == 3);
    }
}

TEST_CASE("decomposability rank never takes values 1, 2 or 4") {
    SplitMix64 rng(29);
    const uint64_t p = 5;
    int seen[7] = {0, 0, 0, 0, 0, 0, 0};
    for (int t = 0; t < 10000; ++t) {
        auto xi = random_mv_p(rng, 3, p);
        int r = decomposable_rank(xi);
        REQUIRE(r >= 0);
        REQUIRE(r <= 6);
        ++seen[r];
        CHECK(r != 1);
        CHECK(r != 2);
        CHECK(r != 4);
    }
    CHECK(seen[6] > 9000);   // generic trivectors dominate
}

TEST_CASE("kernel of a rank-4 skew form via sub-Pfaffians") {
    Mat<Rat> omega(5, 5);
    omega.at(0, 1) = 1; omega.at(1, 0) = -1;
    omega.at(2, 3) = 1; omega.at(3, 2) = -1;
    auto v = pfaffian_kernel(omega);
    REQUIRE(v.has_value());
    CHECK((*v)[4] == Rat(1));
    for (int k = 0; k < 4; ++k) CHECK(is_zero((*v)[k]));

    Mat<Rat> rank2(5, 5);
    rank2.at(0, 1) = 1; rank2.at(1, 0) = -1;
    CHECK(!pfaffian_kernel(rank2).has_value());

    Mat<Rat> notskew(5, 5);
    notskew.at(0, 1) = 1;
    CHECK_THROWS_AS(pfaffian_kernel(notskew), Error);

    SplitMix64 rng(31);
    int checked = 0;
    for (int t = 0; t < 40; ++t) {
        // u v^T - v u^T + x y^T - y x^T is skew of rank <= 4
        std::vector<std::vector<Rat>> vecs(4, std::vector<Rat>(5));
        for (auto& vec : vecs)
            for (auto& x : vec) x = rat_from_int(rng.uniform(-9, 9));
        Mat<Rat> w(5, 5);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                w.at(i, j) = vecs[0][i] * vecs[1][j] - vecs[1][i] * vecs[0][j]
                           + vecs[2][i] * vecs[3][j] - vecs[3][i] * vecs[2][j];
        auto kv = pfaffian_kernel(w);
        if (!kv.has_value()) continue;   // degenerate draw
        ++checked;
        for (int i = 0; i < 5; ++i) {
            Rat acc(0);
            for (int j = 0; j < 5; ++j) acc += w.at(i, j) * (*kv)[j];
            CHECK(is_zero(acc));   // omega v = 0 exactly
        }
        // cross-check against a direct nullspace solve
        Mat<Rat> ns = nullspace(w);
        REQUIRE(ns.rows() == 1);
        Mat<Rat> kvm(1, 5);
        for (int j = 0; j < 5; ++j) kvm.at(0, j) = (*kv)[j];
        CHECK(Subspace<Rat>::from_spanning(5, kvm).rows() == ns);
    }
    CHECK(checked >= 30);
}

TEST_CASE("corank and kernel of symmetric forms") {
    CHECK(form_corank(SymmetricForm<Rat>(Mat<Rat>::identity(5))).corank == 0);
    CHECK(form_corank(SymmetricForm<Rat>(Mat<Rat>(5, 5))).corank == 5);

    Mat<Rat> d(3, 3);
    d.at(0, 0) = 1;
    d.at(1, 1) = 1;
    auto r = form_corank(SymmetricForm<Rat>(d));
    CHECK(r.corank == 1);
    REQUIRE(r.kernel.rows() == 1);
    CHECK(r.kernel.at(0, 2) == Rat(1));
    CHECK(is_zero(r.kernel.at(0, 0)));
    CHECK(is_zero(r.kernel.at(0, 1)));

    Mat<Rat> ns(2, 2);
    ns.at(0, 1) = 1;
    CHECK_THROWS_AS(SymmetricForm<Rat>{ns}, Error);
}
