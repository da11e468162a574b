#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gmepw/error.hpp"
#include "gmepw/matrix.hpp"
#include "gmepw/scalar.hpp"

namespace gmepw {

// Exterior algebra of a fixed 6-dimensional space with ordered basis
// e0..e5. Basis elements of each graded piece are strictly increasing index
// tuples, listed lexicographically; a tuple is stored as a 6-bit mask.
// Dimensions 5 and 6 are hard-wired throughout the library.

inline constexpr int kDim = 6;
inline constexpr uint8_t kFullMask = 0x3f;
inline constexpr std::array<int, 7> kBinom6 = {1, 6, 15, 20, 15, 6, 1};

namespace detail {

struct BasisTables {
    // masks[p] lists the C(6,p) basis masks of degree p in tuple-lex order
    std::array<std::vector<uint8_t>, 7> masks;
    // index_of[mask] inverts the listing (degree implied by popcount)
    std::array<int, 64> index_of{};

    BasisTables() {
        for (uint8_t m = 0; m < 64; ++m) {
            int p = __builtin_popcount(m);
            masks[p].push_back(m);
        }
        // lex on increasing tuples (i1<i2<...) coincides with ordering masks
        // by their lowest set bits first; sort each degree accordingly.
        for (int p = 0; p <= 6; ++p) {
            std::sort(masks[p].begin(), masks[p].end(), [](uint8_t a, uint8_t b) {
                while (a && b) {
                    int la = __builtin_ctz(a), lb = __builtin_ctz(b);
                    if (la != lb) return la < lb;
                    a = static_cast<uint8_t>(a & (a - 1));
                    b = static_cast<uint8_t>(b & (b - 1));
                }
                return a < b;   // proper prefixes never happen at equal degree
            });
            for (size_t k = 0; k < masks[p].size(); ++k) index_of[masks[p][k]] = static_cast<int>(k);
        }
    }
};

inline const BasisTables& tables() {
    static const BasisTables t;
    return t;
}

} // namespace detail

inline const std::vector<uint8_t>& basis_masks(int degree) { return detail::tables().masks[degree]; }
inline int basis_index(uint8_t mask) { return detail::tables().index_of[mask]; }

// Sign of e_A ∧ e_B as (-1)^{#inversions}; 0 on a repeated index.
inline int wedge_sign(uint8_t a, uint8_t b) {
    if (a & b) return 0;
    int inv = 0;
    uint8_t bb = b;
    while (bb) {
        int j = __builtin_ctz(bb);
        inv += __builtin_popcount(a >> (j + 1));
        bb = static_cast<uint8_t>(bb & (bb - 1));
    }
    return (inv & 1) ? -1 : 1;
}

template <class T>
class Multivector {
public:
    Multivector() : deg_(0), c_(1) {}
    explicit Multivector(int degree) : deg_(degree), c_(kBinom6[degree]) {
        require(degree >= 0 && degree <= 6, "degree_overflow", "degree must be 0..6");
    }

    static Multivector basis_element(uint8_t mask) {
        Multivector m(__builtin_popcount(mask));
        m.c_[basis_index(mask)] = T(1);
        return m;
    }

    static Multivector from_vector(const std::vector<T>& v6) {
        require(v6.size() == 6, "dimension_mismatch", "vector must have 6 coordinates");
        Multivector m(1);
        for (int i = 0; i < 6; ++i) m.c_[i] = v6[i];
        return m;
    }

    int degree() const { return deg_; }
    int dim() const { return kBinom6[deg_]; }
    const T& coeff(int k) const { return c_[k]; }
    T& coeff(int k) { return c_[k]; }
    const std::vector<T>& coeffs() const { return c_; }

    bool zero() const {
        for (const T& x : c_)
            if (!is_zero(x)) return false;
        return true;
    }

    friend Multivector operator+(const Multivector& a, const Multivector& b) {
        require(a.deg_ == b.deg_, "degree_mismatch", "adding multivectors of different degree");
        Multivector r(a.deg_);
        for (int k = 0; k < a.dim(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
        return r;
    }
    friend Multivector operator-(const Multivector& a, const Multivector& b) {
        require(a.deg_ == b.deg_, "degree_mismatch", "subtracting multivectors of different degree");
        Multivector r(a.deg_);
        for (int k = 0; k < a.dim(); ++k) r.c_[k] = a.c_[k] - b.c_[k];
        return r;
    }
    friend Multivector operator*(const T& s, const Multivector& a) {
        Multivector r(a.deg_);
        for (int k = 0; k < a.dim(); ++k) r.c_[k] = s * a.c_[k];
        return r;
    }
    friend bool operator==(const Multivector& a, const Multivector& b) {
        return a.deg_ == b.deg_ && a.c_ == b.c_;
    }

private:
    int deg_;
    std::vector<T> c_;
};

template <class T>
Multivector<T> wedge(const Multivector<T>& a, const Multivector<T>& b) {
    int p = a.degree(), q = b.degree();
    require(p + q <= 6, "degree_overflow", "wedge exceeds degree 6");
    Multivector<T> r(p + q);
    const auto& ma = basis_masks(p);
    const auto& mb = basis_masks(q);
    for (int i = 0; i < kBinom6[p]; ++i) {
        if (is_zero(a.coeff(i))) continue;
        for (int j = 0; j < kBinom6[q]; ++j) {
            if (is_zero(b.coeff(j))) continue;
            int s = wedge_sign(ma[i], mb[j]);
            if (s == 0) continue;
            int k = basis_index(static_cast<uint8_t>(ma[i] | mb[j]));
            T term = a.coeff(i) * b.coeff(j);
            if (s > 0) r.coeff(k) += term; else r.coeff(k) -= term;
        }
    }
    return r;
}

// Coefficient of e0∧...∧e5; fixes the trivialization of the top power.
template <class T>
T volume(const Multivector<T>& a) {
    require(a.degree() == 6, "degree_mismatch", "volume needs a degree-6 multivector");
    return a.coeff(0);
}

// Wedge symplectic form on degree-3 multivectors: volume(xi ∧ eta), computed
// through the complement table rather than a full wedge.
template <class T>
T symplectic(const Multivector<T>& xi, const Multivector<T>& eta) {
    require(xi.degree() == 3 && eta.degree() == 3, "degree_mismatch",
            "symplectic form is defined on degree-3 multivectors");
    const auto& masks = basis_masks(3);
    T acc = T(0);
    for (int i = 0; i < 20; ++i) {
        if (is_zero(xi.coeff(i))) continue;
        uint8_t comp = static_cast<uint8_t>(kFullMask ^ masks[i]);
        int j = basis_index(comp);
        if (is_zero(eta.coeff(j))) continue;
        int s = wedge_sign(masks[i], comp);
        T term = xi.coeff(i) * eta.coeff(j);
        if (s > 0) acc += term; else acc -= term;
    }
    return acc;
}

// Leibniz contraction by a covector (6 coefficients against the dual basis).
template <class T>
Multivector<T> contract(std::span<const T, 6> lambda, const Multivector<T>& a) {
    int p = a.degree();
    require(p >= 1, "degree_mismatch", "cannot contract a degree-0 multivector");
    Multivector<T> r(p - 1);
    const auto& masks = basis_masks(p);
    for (int i = 0; i < kBinom6[p]; ++i) {
        if (is_zero(a.coeff(i))) continue;
        uint8_t m = masks[i];
        int pos = 0;   // slot of the factor being removed, for the (-1)^{pos} sign
        uint8_t mm = m;
        while (mm) {
            int k = __builtin_ctz(mm);
            if (!is_zero(lambda[k])) {
                int idx = basis_index(static_cast<uint8_t>(m & ~(1u << k)));
                T term = lambda[k] * a.coeff(i);
                if (pos & 1) r.coeff(idx) -= term; else r.coeff(idx) += term;
            }
            mm = static_cast<uint8_t>(mm & (mm - 1));
            ++pos;
        }
    }
    return r;
}

template <class T>
Multivector<T> contract(const std::vector<T>& lambda, const Multivector<T>& a) {
    require(lambda.size() == 6, "dimension_mismatch", "covector must have 6 coefficients");
    return contract(std::span<const T, 6>(lambda.data(), 6), a);
}

// Rank of v ↦ v∧ξ as a 6x15 matrix. A nonzero trivector is decomposable
// exactly when this rank is 3.
template <class T>
int decomposable_rank(const Multivector<T>& xi) {
    require(xi.degree() == 3, "degree_mismatch", "decomposability test needs a trivector");
    Mat<T> m(6, 15);
    const auto& masks3 = basis_masks(3);
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 20; ++j) {
            if (is_zero(xi.coeff(j))) continue;
            int s = wedge_sign(static_cast<uint8_t>(1u << i), masks3[j]);
            if (s == 0) continue;
            int col = basis_index(static_cast<uint8_t>((1u << i) | masks3[j]));
            if (s > 0) m.at(i, col) += xi.coeff(j); else m.at(i, col) -= xi.coeff(j);
        }
    }
    return rank_fraction_free(std::move(m));
}

// Kernel of a rank-4 skew 5x5 form: the vector of signed 4x4 sub-Pfaffians,
// quadratic in the entries. Returns nullopt when the rank is < 4 (all
// sub-Pfaffians vanish). The raw, unnormalized vector is returned so that
// pencils s*w1 + t*w2 yield coordinates that are honest binary quadratics.
template <class T>
std::optional<std::vector<T>> pfaffian_kernel(const Mat<T>& omega) {
    require(omega.rows() == 5 && omega.cols() == 5, "dimension_mismatch", "expected a 5x5 matrix");
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            require(omega.at(i, j) == -omega.at(j, i), "not_skew", "matrix is not skew-symmetric");

    std::vector<T> v(5, T(0));
    bool nonzero = false;
    for (int k = 0; k < 5; ++k) {
        int idx[4];
        int t = 0;
        for (int i = 0; i < 5; ++i)
            if (i != k) idx[t++] = i;
        const T pf = omega.at(idx[0], idx[1]) * omega.at(idx[2], idx[3])
                   - omega.at(idx[0], idx[2]) * omega.at(idx[1], idx[3])
                   + omega.at(idx[0], idx[3]) * omega.at(idx[1], idx[2]);
        if (k & 1) v[k] = -pf; else v[k] = pf;
        if (!is_zero(v[k])) nonzero = true;
    }
    if (!nonzero) return std::nullopt;
    return v;
}

// Symmetric bilinear form of size m with its exact corank and kernel.
template <class T>
struct SymmetricForm {
    Mat<T> m;

    explicit SymmetricForm(Mat<T> mat) : m(std::move(mat)) {
        require(m.rows() == m.cols(), "dimension_mismatch", "symmetric form must be square");
        for (int i = 0; i < m.rows(); ++i)
            for (int j = i + 1; j < m.cols(); ++j)
                require(m.at(i, j) == m.at(j, i), "not_symmetric", "matrix is not symmetric");
    }

    int size() const { return m.rows(); }
};

template <class T>
struct CorankResult {
    int corank;
    Mat<T> kernel;   // echelonized basis, one row per kernel vector
};

template <class T>
CorankResult<T> form_corank(const SymmetricForm<T>& q) {
    Mat<T> k = nullspace(q.m);
    return {k.rows(), std::move(k)};
}

} // namespace gmepw
