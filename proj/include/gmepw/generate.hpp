#pragma once

#include "gmepw/rng.hpp"
#include "gmepw/subspace.hpp"

namespace gmepw {

// Seeded instance generators. The seed fully determines the output; the
// generator (SplitMix64) and the draw order below are frozen interface.

inline Mat<Rat> random_symmetric_matrix(SplitMix64& rng, int size, long long height) {
    Mat<Rat> s(size, size);
    for (int i = 0; i < size; ++i)
        for (int j = i; j < size; ++j) {
            s.at(i, j) = rat_from_int(rng.uniform(-height, height));
            s.at(j, i) = s.at(i, j);
        }
    return s;
}

// Graph Lagrangian from a random symmetric 10x10 integer matrix with
// entries in [-height, height].
inline Lagrangian<Rat> random_graph_lagrangian(uint64_t seed, long long height) {
    require(height >= 0, "bad_height", "height must be nonnegative");
    SplitMix64 rng(seed);
    return lagrangian_from_graph(SymmetricForm<Rat>(random_symmetric_matrix(rng, 10, height)));
}

// Lagrangian with dim(A ∩ triples-of-hyperplane) exactly k, built as the
// graph over the triple summand of a symmetric matrix of corank k
// (R^T R with R of full row rank 10-k). Retries with fresh draws on the
// measure-zero event that R is rank-deficient.
inline Lagrangian<Rat> random_lagrangian_with_intersection(uint64_t seed, long long height, int k) {
    require(k >= 0 && k <= 10, "bad_corank", "intersection dimension must be in 0..10");
    if (k == 0) return random_graph_lagrangian(seed, height);
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Mat<Rat> r(10 - k, 10);
        for (int i = 0; i < 10 - k; ++i)
            for (int j = 0; j < 10; ++j) r.at(i, j) = rat_from_int(rng.uniform(-height, height));
        Mat<Rat> t(10, 10);
        for (int i = 0; i < 10; ++i)
            for (int j = 0; j < 10; ++j) {
                Rat acc(0);
                for (int l = 0; l < 10 - k; ++l) acc += r.at(l, i) * r.at(l, j);
                t.at(i, j) = acc;
            }
        if (rank_of(t) != 10 - k) continue;
        return lagrangian_from_v5_graph(SymmetricForm<Rat>(t));
    }
    fail("generation_failed", "could not realize the requested intersection dimension");
}

inline std::array<Rat, 6> e0_covector() {
    std::array<Rat, 6> l;
    l.fill(Rat(0));
    l[0] = 1;
    return l;
}

inline std::vector<Rat> e0_vector() {
    std::vector<Rat> v(6, Rat(0));
    v[0] = 1;
    return v;
}

} // namespace gmepw
