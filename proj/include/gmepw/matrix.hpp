#pragma once

#include <optional>
#include <vector>

#include "gmepw/error.hpp"
#include "gmepw/scalar.hpp"

namespace gmepw {

// Dense matrix over an exact scalar domain (Rat or Fp). Everything here is
// exact; there is no floating point anywhere in the library.
template <class T>
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : r_(rows), c_(cols), d_(static_cast<size_t>(rows) * cols) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }

    T& at(int i, int j) { return d_[static_cast<size_t>(i) * c_ + j]; }
    const T& at(int i, int j) const { return d_[static_cast<size_t>(i) * c_ + j]; }

    void swap_rows(int i, int j) {
        for (int k = 0; k < c_; ++k) std::swap(at(i, k), at(j, k));
    }

    Mat transpose() const {
        Mat t(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    std::vector<T> row(int i) const {
        return std::vector<T>(d_.begin() + static_cast<size_t>(i) * c_,
                              d_.begin() + static_cast<size_t>(i + 1) * c_);
    }

    void set_row(int i, const std::vector<T>& v) {
        for (int j = 0; j < c_; ++j) at(i, j) = v[j];
    }

    // Stack other below this.
    Mat vstack(const Mat& other) const {
        require(c_ == other.c_, "dimension_mismatch", "vstack needs equal column counts");
        Mat m(r_ + other.r_, c_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m.at(i, j) = at(i, j);
        for (int i = 0; i < other.r_; ++i)
            for (int j = 0; j < c_; ++j) m.at(r_ + i, j) = other.at(i, j);
        return m;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) return false;
        for (size_t k = 0; k < a.d_.size(); ++k)
            if (!(a.d_[k] == b.d_[k])) return false;
        return true;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

private:
    int r_ = 0, c_ = 0;
    std::vector<T> d_;
};

// Gauss-Jordan to reduced row echelon form (leading 1s, zeros above and
// below). Returns the pivot columns; rank = pivots.size(). This is the
// canonical form used for subspace identity, so it must be deterministic:
// pivots are taken at the first nonzero entry of each column scan.
template <class T>
std::vector<int> rref_in_place(Mat<T>& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!is_zero(m.at(i, col))) { p = i; break; }
        if (p < 0) continue;
        if (p != row) m.swap_rows(p, row);
        T inv = T(1) / m.at(row, col);
        for (int j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv;
        m.at(row, col) = T(1);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || is_zero(m.at(i, col))) continue;
            T f = m.at(i, col);
            for (int j = col; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - f * m.at(row, j);
            m.at(i, col) = T(0);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

namespace detail {

inline void clear_row_denominators(Mat<Rat>& m, int i) {
    mpz_class l(1);
    for (int j = 0; j < m.cols(); ++j)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
    if (l == 1) return;
    Rat f(l);
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) * f;
}

inline void clear_row_denominators(Mat<Fp>&, int) {}

} // namespace detail

// Rank by fraction-free (Bareiss) elimination. Over Q the rows are first
// scaled integral so intermediate entries stay integers (they are minors of
// the scaled matrix); over F_p the exact divisions are field divisions.
template <class T>
int rank_fraction_free(Mat<T> m) {
    for (int i = 0; i < m.rows(); ++i) detail::clear_row_denominators(m, i);
    int rank = 0;
    T prev = T(1);
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int p = -1;
        for (int i = rank; i < m.rows(); ++i)
            if (!is_zero(m.at(i, col))) { p = i; break; }
        if (p < 0) continue;
        if (p != rank) m.swap_rows(p, rank);
        const T pivot = m.at(rank, col);
        for (int i = rank + 1; i < m.rows(); ++i) {
            for (int j = col + 1; j < m.cols(); ++j)
                m.at(i, j) = (pivot * m.at(i, j) - m.at(i, col) * m.at(rank, j)) / prev;
            m.at(i, col) = T(0);
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

template <class T>
int rank_of(const Mat<T>& m) { return rank_fraction_free(m); }

// Determinant by Bareiss; exact over both domains, and integer-valued all
// the way through for integer input.
template <class T>
T det_bareiss(Mat<T> m) {
    require(m.rows() == m.cols(), "dimension_mismatch", "determinant of non-square matrix");
    int n = m.rows();
    if (n == 0) return T(1);
    T prev = T(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (!is_zero(m.at(i, k))) { p = i; break; }
        if (p < 0) return T(0);
        if (p != k) { m.swap_rows(p, k); sign = -sign; }
        const T pivot = m.at(k, k);
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (pivot * m.at(i, j) - m.at(i, k) * m.at(k, j)) / prev;
            m.at(i, k) = T(0);
        }
        prev = pivot;
    }
    T d = m.at(n - 1, n - 1);
    if (sign < 0) return -d;
    return d;
}

// Row-echelonized basis of { x : m x = 0 }, one kernel vector per row.
template <class T>
Mat<T> nullspace(const Mat<T>& m) {
    Mat<T> r = m;
    std::vector<int> pivots = rref_in_place(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<int> free_cols;
    for (int c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Mat<T> k(static_cast<int>(free_cols.size()), m.cols());
    for (size_t v = 0; v < free_cols.size(); ++v) {
        int fc = free_cols[v];
        k.at(static_cast<int>(v), fc) = T(1);
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            k.at(static_cast<int>(v), pivots[pi]) = -r.at(static_cast<int>(pi), fc);
    }
    rref_in_place(k);
    return k;
}

// Solve x * basis = target for a matrix of independent rows; nullopt when
// target is outside the row space.
template <class T>
std::optional<std::vector<T>> solve_row_combination(const Mat<T>& basis, const std::vector<T>& target) {
    int r = basis.rows(), n = basis.cols();
    require(static_cast<int>(target.size()) == n, "dimension_mismatch", "solve: bad target length");
    Mat<T> aug(n, r + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < r; ++j) aug.at(i, j) = basis.at(j, i);
        aug.at(i, r) = target[i];
    }
    std::vector<int> pivots = rref_in_place(aug);
    std::vector<T> x(r, T(0));
    for (size_t pi = 0; pi < pivots.size(); ++pi) {
        if (pivots[pi] == r) return std::nullopt;   // inconsistent system
        x[pivots[pi]] = aug.at(static_cast<int>(pi), r);
    }
    return x;
}

template <class T>
Mat<Fp> mat_mod_p(const Mat<T>& m, uint64_t p);

template <>
inline Mat<Fp> mat_mod_p(const Mat<Rat>& m, uint64_t p) {
    Mat<Fp> r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = reduce_mod_p(m.at(i, j), p);
    return r;
}

} // namespace gmepw
