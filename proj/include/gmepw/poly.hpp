#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gmepw/error.hpp"
#include "gmepw/scalar.hpp"

namespace gmepw {

// Exact-coefficient polynomial in a fixed number of variables. Terms are
// kept in a map ordered lexicographically on exponent tuples (which is also
// the monomial order used for division), with no zero coefficients stored.
class Mpoly {
public:
    using Exp = std::vector<int>;

    explicit Mpoly(int nvars = 0) : nvars_(nvars) {}

    static Mpoly constant(int nvars, const Rat& c) {
        Mpoly p(nvars);
        p.add_term(Exp(nvars, 0), c);
        return p;
    }

    static Mpoly variable(int nvars, int i) {
        Mpoly p(nvars);
        Exp e(nvars, 0);
        e[i] = 1;
        p.add_term(e, Rat(1));
        return p;
    }

    int nvars() const { return nvars_; }
    bool zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Exp, Rat>& terms() const { return terms_; }

    // -1 for the zero polynomial
    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            if (s > d) d = s;
        }
        return d;
    }

    bool homogeneous_of_degree(int d) const {
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            if (s != d) return false;
        }
        return true;
    }

    void add_term(const Exp& e, const Rat& c) {
        if (is_zero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    Rat coeff(const Exp& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    friend Mpoly operator+(const Mpoly& a, const Mpoly& b) {
        require(a.nvars_ == b.nvars_, "dimension_mismatch", "adding polynomials in different rings");
        Mpoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend Mpoly operator-(const Mpoly& a, const Mpoly& b) {
        require(a.nvars_ == b.nvars_, "dimension_mismatch", "subtracting polynomials in different rings");
        Mpoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    Mpoly operator-() const {
        Mpoly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    friend Mpoly operator*(const Mpoly& a, const Mpoly& b) {
        require(a.nvars_ == b.nvars_, "dimension_mismatch", "multiplying polynomials in different rings");
        Mpoly r(a.nvars_);
        Exp e(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    friend Mpoly operator*(const Rat& s, const Mpoly& a) {
        Mpoly r(a.nvars_);
        if (is_zero(s)) return r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, s * c);
        return r;
    }

    friend bool operator==(const Mpoly& a, const Mpoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    template <class T>
    T evaluate(const std::vector<T>& point) const {
        require(static_cast<int>(point.size()) == nvars_, "dimension_mismatch",
                "evaluation point has wrong arity");
        T acc = T(0);
        for (const auto& [e, c] : terms_) {
            T t = convert_coeff<T>(c, point);
            for (int i = 0; i < nvars_; ++i)
                for (int k = 0; k < e[i]; ++k) t *= point[i];
            acc += t;
        }
        return acc;
    }

    // Single-divisor division with remainder under the lex order. For an
    // exact multiple the remainder is empty.
    std::pair<Mpoly, Mpoly> divide(const Mpoly& divisor) const {
        require(!divisor.zero(), "division_by_zero", "polynomial division by zero");
        require(nvars_ == divisor.nvars_, "dimension_mismatch", "division across rings");
        Mpoly q(nvars_), r(nvars_);
        Mpoly cur = *this;
        const auto& dl = *divisor.terms_.rbegin();
        while (!cur.terms_.empty()) {
            const auto& cl = *cur.terms_.rbegin();
            Exp diff(nvars_);
            bool divisible = true;
            for (int i = 0; i < nvars_; ++i) {
                diff[i] = cl.first[i] - dl.first[i];
                if (diff[i] < 0) { divisible = false; break; }
            }
            if (!divisible) {
                r.add_term(cl.first, cl.second);
                cur.terms_.erase(std::prev(cur.terms_.end()));
                continue;
            }
            Rat f = cl.second / dl.second;
            q.add_term(diff, f);
            Mpoly t(nvars_);
            t.add_term(diff, f);
            cur = cur - t * divisor;
        }
        return {q, r};
    }

    std::optional<Mpoly> divide_exact(const Mpoly& divisor) const {
        auto [q, r] = divide(divisor);
        if (!r.zero()) return std::nullopt;
        return q;
    }

private:
    template <class T>
    static T convert_coeff(const Rat& c, const std::vector<T>& point);

    int nvars_;
    std::map<Exp, Rat> terms_;
};

template <>
inline Rat Mpoly::convert_coeff<Rat>(const Rat& c, const std::vector<Rat>&) { return c; }

template <>
inline Fp Mpoly::convert_coeff<Fp>(const Rat& c, const std::vector<Fp>& point) {
    uint64_t p = 0;
    for (const Fp& x : point)
        if (x.attached()) { p = x.modulus(); break; }
    require(p != 0, "bad_prime", "mod-p evaluation needs attached field elements");
    return reduce_mod_p(c, p);
}

// Determinant over the polynomial ring by fraction-free Bareiss; every
// division is exact (the quotients are minors). Row pivoting prefers the
// shortest nonzero entry to slow coefficient growth.
inline Mpoly mpoly_det_bareiss(std::vector<std::vector<Mpoly>> m) {
    const int n = static_cast<int>(m.size());
    require(n > 0, "dimension_mismatch", "empty determinant");
    for (auto& row : m)
        require(static_cast<int>(row.size()) == n, "dimension_mismatch", "determinant of non-square matrix");
    const int nv = m[0][0].nvars();

    Mpoly prev = Mpoly::constant(nv, Rat(1));
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        int pivot = -1;
        size_t best = 0;
        for (int i = k; i < n; ++i) {
            if (m[i][k].zero()) continue;
            if (pivot < 0 || m[i][k].term_count() < best) {
                pivot = i;
                best = m[i][k].term_count();
            }
        }
        if (pivot < 0) return Mpoly(nv);
        if (pivot != k) { std::swap(m[pivot], m[k]); sign = -sign; }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Mpoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                if (num.zero()) {
                    m[i][j] = Mpoly(nv);
                    continue;
                }
                auto q = num.divide_exact(prev);
                require(q.has_value(), "internal", "non-exact division in fraction-free elimination");
                m[i][j] = std::move(*q);
            }
            m[i][k] = Mpoly(nv);
        }
        prev = m[k][k];
    }
    Mpoly d = m[n - 1][n - 1];
    if (sign < 0) return -d;
    return d;
}

// Map a chart polynomial in 5 variables into the 6-variable ring: variable
// j becomes coordinate var_map[j], and every term is padded with the chart
// coordinate up to target_degree.
inline Mpoly homogenize_chart(const Mpoly& f, const std::vector<int>& var_map, int chart_var,
                              int target_degree) {
    require(f.nvars() == static_cast<int>(var_map.size()), "dimension_mismatch",
            "variable map does not match the chart polynomial");
    Mpoly out(6);
    for (const auto& [e, c] : f.terms()) {
        int d = 0;
        Mpoly::Exp e6(6, 0);
        for (size_t j = 0; j < var_map.size(); ++j) {
            e6[var_map[j]] = e[j];
            d += e[j];
        }
        require(d <= target_degree, "degree_overflow", "chart polynomial exceeds the target degree");
        e6[chart_var] = target_degree - d;
        out.add_term(e6, c);
    }
    return out;
}

// f(a + t*b) as a univariate coefficient vector (low to high).
inline std::vector<Rat> restrict_to_line(const Mpoly& f, const std::vector<Rat>& a,
                                         const std::vector<Rat>& b) {
    int deg = std::max(f.total_degree(), 0);
    std::vector<Rat> out(static_cast<size_t>(deg) + 1, Rat(0));
    // expand each variable power via binomials on (a_i + t b_i)
    for (const auto& [e, c] : f.terms()) {
        std::vector<Rat> term = {c};
        for (int i = 0; i < f.nvars(); ++i) {
            for (int k = 0; k < e[i]; ++k) {
                std::vector<Rat> next(term.size() + 1, Rat(0));
                for (size_t d = 0; d < term.size(); ++d) {
                    next[d] += term[d] * a[i];
                    next[d + 1] += term[d] * b[i];
                }
                term = std::move(next);
            }
        }
        for (size_t d = 0; d < term.size(); ++d) out[d] += term[d];
    }
    while (out.size() > 1 && is_zero(out.back())) out.pop_back();
    return out;
}

// Whether a univariate polynomial is squarefree: gcd with its derivative is
// constant.
inline bool univariate_squarefree(const std::vector<Rat>& f) {
    if (f.size() <= 1) return false;
    std::vector<Rat> df(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) df[i - 1] = Rat(static_cast<long>(i)) * f[i];
    // Euclid
    auto trim = [](std::vector<Rat> p) {
        while (!p.empty() && is_zero(p.back())) p.pop_back();
        return p;
    };
    std::vector<Rat> a = trim(f), b = trim(df);
    while (!b.empty()) {
        // a mod b
        while (a.size() >= b.size() && !a.empty()) {
            Rat q = a.back() / b.back();
            size_t off = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
            a = trim(std::move(a));
        }
        std::swap(a, b);
    }
    return a.size() == 1;
}

// Proportionality of two polynomials by one nonzero scalar; returns the
// scalar g = c*f when it exists.
inline std::optional<Rat> proportionality_scalar(const Mpoly& f, const Mpoly& g) {
    if (f.zero() || g.zero()) return std::nullopt;
    if (f.terms().size() != g.terms().size()) return std::nullopt;
    auto itf = f.terms().begin();
    auto itg = g.terms().begin();
    Rat c = itg->second / itf->second;
    for (; itf != f.terms().end(); ++itf, ++itg) {
        if (itf->first != itg->first) return std::nullopt;
        if (!(itg->second == c * itf->second)) return std::nullopt;
    }
    return c;
}

} // namespace gmepw
