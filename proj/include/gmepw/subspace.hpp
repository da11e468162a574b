#pragma once

#include <vector>

#include "gmepw/matrix.hpp"
#include "gmepw/multivector.hpp"

namespace gmepw {

// Linear subspace stored as a reduced-row-echelon basis. The representation
// is unique per subspace, so equality of subspaces is equality of matrices.
template <class T>
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(int ambient) : ambient_(ambient), rows_(0, ambient) {}

    static Subspace from_spanning(int ambient, Mat<T> spanning) {
        require(spanning.cols() == ambient, "dimension_mismatch", "spanning rows have wrong width");
        std::vector<int> pivots = rref_in_place(spanning);
        Mat<T> basis(static_cast<int>(pivots.size()), ambient);
        for (int i = 0; i < basis.rows(); ++i)
            for (int j = 0; j < ambient; ++j) basis.at(i, j) = spanning.at(i, j);
        Subspace s;
        s.ambient_ = ambient;
        s.rows_ = std::move(basis);
        return s;
    }

    template <class U = T>
    static Subspace span_of(const std::vector<Multivector<U>>& vs) {
        require(!vs.empty(), "dimension_mismatch", "span_of needs at least one multivector");
        int ambient = vs[0].dim();
        Mat<T> m(static_cast<int>(vs.size()), ambient);
        for (size_t i = 0; i < vs.size(); ++i) {
            require(vs[i].degree() == vs[0].degree(), "degree_mismatch", "mixed degrees in span");
            for (int j = 0; j < ambient; ++j) m.at(static_cast<int>(i), j) = vs[i].coeff(j);
        }
        return from_spanning(ambient, std::move(m));
    }

    int ambient() const { return ambient_; }
    int dim() const { return rows_.rows(); }
    const Mat<T>& rows() const { return rows_; }

    bool contains(const std::vector<T>& v) const {
        if (dim() == 0) {
            for (const T& x : v)
                if (!is_zero(x)) return false;
            return true;
        }
        return solve_row_combination(rows_, v).has_value();
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    int ambient_ = 0;
    Mat<T> rows_;
};

template <class T>
Subspace<T> sum(const Subspace<T>& s, const Subspace<T>& t) {
    require(s.ambient() == t.ambient(), "ambient_mismatch", "sum of subspaces of different ambients");
    return Subspace<T>::from_spanning(s.ambient(), s.rows().vstack(t.rows()));
}

// S ∩ T via the left-nullspace of the stacked basis: a combination
// a·S = -b·T lies in both row spaces.
template <class T>
Subspace<T> intersect(const Subspace<T>& s, const Subspace<T>& t) {
    require(s.ambient() == t.ambient(), "ambient_mismatch", "intersection of different ambients");
    if (s.dim() == 0 || t.dim() == 0) return Subspace<T>(s.ambient());
    Mat<T> stacked = s.rows().vstack(t.rows());
    Mat<T> relations = nullspace(stacked.transpose());
    Mat<T> vecs(relations.rows(), s.ambient());
    for (int r = 0; r < relations.rows(); ++r)
        for (int j = 0; j < s.ambient(); ++j) {
            T acc = T(0);
            for (int k = 0; k < s.dim(); ++k) acc += relations.at(r, k) * s.rows().at(k, j);
            vecs.at(r, j) = acc;
        }
    return Subspace<T>::from_spanning(s.ambient(), std::move(vecs));
}

// Annihilator in the dual space (coordinates against the dual basis).
template <class T>
Subspace<T> annihilator(const Subspace<T>& s) {
    if (s.dim() == 0) {
        return Subspace<T>::from_spanning(s.ambient(), Mat<T>::identity(s.ambient()));
    }
    Mat<T> k = nullspace(s.rows());
    return Subspace<T>::from_spanning(s.ambient(), std::move(k));
}

// 10-dimensional subspace of the 20-dimensional degree-3 piece, isotropic
// for the wedge symplectic form. The constructor is the certificate: it
// verifies the dimension and all basis pairings and refuses anything else.
template <class T>
class Lagrangian {
public:
    explicit Lagrangian(Subspace<T> s) : space_(std::move(s)) {
        require(space_.ambient() == 20, "ambient_mismatch",
                "a Lagrangian lives in the 20-dimensional degree-3 piece");
        require(space_.dim() == 10, "not_lagrangian",
                "expected dimension 10, got " + std::to_string(space_.dim()));
        for (int i = 0; i < 10; ++i)
            for (int j = i + 1; j < 10; ++j)
                require(is_zero(symplectic(basis_vector(i), basis_vector(j))), "not_lagrangian",
                        "isotropy fails on basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }

    const Subspace<T>& space() const { return space_; }
    int dim() const { return space_.dim(); }
    const Mat<T>& rows() const { return space_.rows(); }

    Multivector<T> basis_vector(int k) const {
        Multivector<T> v(3);
        for (int j = 0; j < 20; ++j) v.coeff(j) = space_.rows().at(k, j);
        return v;
    }

    friend bool operator==(const Lagrangian& a, const Lagrangian& b) { return a.space_ == b.space_; }

private:
    Subspace<T> space_;
};

template <class T>
Lagrangian<T> certify_lagrangian(Subspace<T> s) {
    return Lagrangian<T>(std::move(s));
}

namespace detail {

// Basis masks of the two summands of the standard splitting of the degree-3
// piece: triples containing index 0 (in bijection with pairs from {1..5}),
// and triples inside {1..5}. Both inherit the global lex order.
inline const std::vector<uint8_t>& e0_pair_masks() {
    static const std::vector<uint8_t> v = [] {
        std::vector<uint8_t> r;
        for (uint8_t m : basis_masks(2))
            if (!(m & 1)) r.push_back(m);
        return r;
    }();
    return v;
}

inline const std::vector<uint8_t>& v5_triple_masks() {
    static const std::vector<uint8_t> v = [] {
        std::vector<uint8_t> r;
        for (uint8_t m : basis_masks(3))
            if (!(m & 1)) r.push_back(m);
        return r;
    }();
    return v;
}

} // namespace detail

// Graph Lagrangian over the splitting of the degree-3 piece into
// e0∧(pairs of e1..e5) and triples of e1..e5: the symmetric matrix S is the
// matrix of a map from the first summand to the second under the volume
// pairing, and symmetry of S is exactly isotropy of the graph.
template <class T>
Lagrangian<T> lagrangian_from_graph(const SymmetricForm<T>& s) {
    require(s.size() == 10, "dimension_mismatch", "graph matrix must be 10x10");
    const auto& pairs = detail::e0_pair_masks();

    Mat<T> rows(10, 20);
    for (int a = 0; a < 10; ++a) {
        uint8_t src = static_cast<uint8_t>(pairs[a] | 1);
        rows.at(a, basis_index(src)) = T(1);
        for (int b = 0; b < 10; ++b) {
            if (is_zero(s.m.at(a, b))) continue;
            // dual frame: the unique triple pairing to 1 against e0∧(pair b)
            uint8_t srcb = static_cast<uint8_t>(pairs[b] | 1);
            uint8_t comp = static_cast<uint8_t>(kFullMask ^ srcb);
            int sgn = wedge_sign(srcb, comp);
            if (sgn > 0) rows.at(a, basis_index(comp)) += s.m.at(a, b);
            else rows.at(a, basis_index(comp)) -= s.m.at(a, b);
        }
    }
    return certify_lagrangian(Subspace<T>::from_spanning(20, std::move(rows)));
}

// Mirror construction: graph over the triples of e1..e5, mapping into
// e0∧(pairs). The kernel of the symmetric matrix is exactly the
// intersection of the result with the triple summand, which is how
// instances with prescribed intersection dimension are produced.
template <class T>
Lagrangian<T> lagrangian_from_v5_graph(const SymmetricForm<T>& t) {
    require(t.size() == 10, "dimension_mismatch", "graph matrix must be 10x10");
    const auto& triples = detail::v5_triple_masks();

    Mat<T> rows(10, 20);
    for (int a = 0; a < 10; ++a) {
        rows.at(a, basis_index(triples[a])) = T(1);
        for (int b = 0; b < 10; ++b) {
            if (is_zero(t.m.at(a, b))) continue;
            uint8_t comp = static_cast<uint8_t>(kFullMask ^ triples[b]);   // contains index 0
            int sgn = wedge_sign(triples[b], comp);
            if (sgn > 0) rows.at(a, basis_index(comp)) += t.m.at(a, b);
            else rows.at(a, basis_index(comp)) -= t.m.at(a, b);
        }
    }
    return certify_lagrangian(Subspace<T>::from_spanning(20, std::move(rows)));
}

template <class T>
Subspace<Fp> subspace_mod_p(const Subspace<T>& s, uint64_t p) {
    require(is_prime_u64(p), "bad_prime", std::to_string(p) + " is not prime");
    Mat<Fp> rows = mat_mod_p(s.rows(), p);
    Subspace<Fp> r = Subspace<Fp>::from_spanning(s.ambient(), rows);
    require(r.dim() == s.dim(), "bad_prime", "rank drops mod " + std::to_string(p));
    return r;
}

// Entry-wise reduction of a rational Lagrangian; isotropy is re-certified
// over F_p and rank loss or denominator clashes surface as bad_prime.
inline Lagrangian<Fp> lagrangian_mod_p(const Lagrangian<Rat>& a, uint64_t p) {
    return certify_lagrangian(subspace_mod_p(a.space(), p));
}

} // namespace gmepw
