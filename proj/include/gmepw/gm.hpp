#pragma once

#include <array>
#include <optional>
#include <sstream>
#include <vector>

#include "gmepw/multivector.hpp"
#include "gmepw/subspace.hpp"

namespace gmepw {

// GM data: a hyperplane cut out by a covector, a subspace W of the degree-2
// piece of that hyperplane (stored in coordinates of the echelonized
// hyperplane basis b1..b5), and six symmetric forms on W, the images of the
// ambient basis vectors under the quadric family. The scalar normalization
// of the forms depends on the choice of b1..b5 and on the trivialization
// b1∧...∧b5 ↦ 1; all cross-checks therefore compare convention-independent
// observables (ranks, coranks, subspace identity, proportionality).
template <class T>
struct GmData {
    int n = 0;                  // dim W - 5; ordinary geometry needs n in {3,4,5}
    bool degenerate = false;    // dim W outside {8,9,10}
    std::array<T, 6> lambda{};
    Mat<T> v5_basis;            // 5x6 reduced-row-echelon basis of ker(lambda)
    Subspace<T> w;              // ambient 10: coordinates in the b_i∧b_j basis
    std::array<Mat<T>, 6> q;    // q[i] is the (dim W)x(dim W) form attached to e_i

    int w_dim() const { return w.dim(); }

    Mat<T> q_of(const std::vector<T>& v) const {
        int m = w_dim();
        Mat<T> acc(m, m);
        for (int i = 0; i < 6; ++i) {
            if (is_zero(v[i])) continue;
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b) acc.at(a, b) += v[i] * q[i].at(a, b);
        }
        return acc;
    }

    T lambda_of(const std::vector<T>& v) const {
        T acc = T(0);
        for (int i = 0; i < 6; ++i) acc += lambda[i] * v[i];
        return acc;
    }
};

namespace gmdetail {

template <class T>
Mat<T> covector_kernel_basis(const std::array<T, 6>& lambda) {
    Mat<T> row(1, 6);
    bool nz = false;
    for (int i = 0; i < 6; ++i) {
        row.at(0, i) = lambda[i];
        nz = nz || !is_zero(lambda[i]);
    }
    require(nz, "bad_covector", "the covector cutting the hyperplane must be nonzero");
    Mat<T> k = nullspace(row);
    require(k.rows() == 5, "bad_covector", "hyperplane kernel has wrong dimension");
    return k;
}

template <class T>
Multivector<T> row_vector(const Mat<T>& m, int i) {
    Multivector<T> v(1);
    for (int j = 0; j < 6; ++j) v.coeff(j) = m.at(i, j);
    return v;
}

// b_i ∧ b_j for i<j in lex order: the basis of the degree-2 piece of the
// hyperplane, as ambient bivectors.
template <class T>
std::vector<Multivector<T>> b_pair_frame(const Mat<T>& v5_basis) {
    std::vector<Multivector<T>> out;
    out.reserve(10);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            out.push_back(wedge(row_vector(v5_basis, i), row_vector(v5_basis, j)));
    return out;
}

template <class T>
std::vector<Multivector<T>> b_triple_frame(const Mat<T>& v5_basis) {
    std::vector<Multivector<T>> out;
    out.reserve(10);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            for (int k = j + 1; k < 5; ++k)
                out.push_back(wedge(wedge(row_vector(v5_basis, i), row_vector(v5_basis, j)),
                                    row_vector(v5_basis, k)));
    return out;
}

template <class T>
Multivector<T> b_volume_form(const Mat<T>& v5_basis) {
    Multivector<T> acc = row_vector(v5_basis, 0);
    for (int i = 1; i < 5; ++i) acc = wedge(acc, row_vector(v5_basis, i));
    return acc;
}

// Scalar c with z = c * bvol; the input must be an exact multiple, anything
// else is an internal inconsistency.
template <class T>
T volume5(const Multivector<T>& z, const Multivector<T>& bvol) {
    require(z.degree() == 5 && bvol.degree() == 5, "degree_mismatch", "volume5 needs degree-5 inputs");
    int k = -1;
    for (int i = 0; i < 6; ++i)
        if (!is_zero(bvol.coeff(i))) { k = i; break; }
    require(k >= 0, "internal", "hyperplane volume form is zero");
    T c = z.coeff(k) / bvol.coeff(k);
    for (int i = 0; i < 6; ++i)
        require(z.coeff(i) == c * bvol.coeff(i), "internal",
                "degree-5 value does not lie on the hyperplane volume line");
    return c;
}

template <class T>
Mat<T> frame_matrix(const std::vector<Multivector<T>>& frame) {
    Mat<T> m(static_cast<int>(frame.size()), frame[0].dim());
    for (size_t i = 0; i < frame.size(); ++i)
        for (int j = 0; j < frame[0].dim(); ++j) m.at(static_cast<int>(i), j) = frame[i].coeff(j);
    return m;
}

template <class T>
Multivector<T> combine(const std::vector<Multivector<T>>& frame, const std::vector<T>& coords) {
    Multivector<T> acc(frame[0].degree());
    for (size_t i = 0; i < frame.size(); ++i)
        for (int j = 0; j < frame[0].dim(); ++j) acc.coeff(j) += coords[i] * frame[i].coeff(j);
    return acc;
}

} // namespace gmdetail

template <class T>
std::vector<T> v6_from_b_coords(const GmData<T>& gm, const std::vector<T>& b5) {
    std::vector<T> out(6, T(0));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 6; ++j) out[j] += b5[i] * gm.v5_basis.at(i, j);
    return out;
}

template <class T>
Multivector<T> bivector_from_w_coords(const GmData<T>& gm, const std::vector<T>& coords10) {
    return gmdetail::combine(gmdetail::b_pair_frame(gm.v5_basis), coords10);
}

// Lagrangian data -> GM data. W is the image of A under contraction by the
// covector, expressed in the hyperplane pair basis; each form is assembled
// from lifts and certified independent of the lift choice and exactly
// symmetric. Either failure means the input was not isotropic and aborts.
template <class T>
GmData<T> lagrangian_to_gm(const Lagrangian<T>& a, const std::array<T, 6>& lambda) {
    GmData<T> gm;
    gm.lambda = lambda;
    gm.v5_basis = gmdetail::covector_kernel_basis(lambda);

    std::vector<T> lam(lambda.begin(), lambda.end());
    auto bpairs = gmdetail::b_pair_frame(gm.v5_basis);
    auto btriples = gmdetail::b_triple_frame(gm.v5_basis);
    auto bvol = gmdetail::b_volume_form(gm.v5_basis);
    Mat<T> pair_mat = gmdetail::frame_matrix(bpairs);

    // images of the basis of A under contraction, in b-pair coordinates
    Mat<T> images(10, 10);
    std::vector<Multivector<T>> abasis;
    for (int k = 0; k < 10; ++k) {
        abasis.push_back(a.basis_vector(k));
        Multivector<T> img = contract(lam, abasis.back());
        std::vector<T> img15(15);
        for (int j = 0; j < 15; ++j) img15[j] = img.coeff(j);
        auto coords = solve_row_combination(pair_mat, img15);
        require(coords.has_value(), "internal", "contraction image escaped the hyperplane");
        images.set_row(k, *coords);
    }
    gm.w = Subspace<T>::from_spanning(10, images);

    int m = gm.w.dim();
    gm.n = m - 5;
    gm.degenerate = (m < 8);

    // one lift per basis vector of W
    std::vector<Multivector<T>> lifts;
    std::vector<Multivector<T>> w_biv;
    for (int j = 0; j < m; ++j) {
        std::vector<T> wj = gm.w.rows().row(j);
        auto x = solve_row_combination(images, wj);
        require(x.has_value(), "internal", "failed to lift a basis vector of W");
        Multivector<T> xi(3);
        for (int k = 0; k < 10; ++k)
            for (int c = 0; c < 20; ++c) xi.coeff(c) += (*x)[k] * abasis[k].coeff(c);
        lifts.push_back(std::move(xi));
        w_biv.push_back(gmdetail::combine(bpairs, wj));
    }

    for (int i = 0; i < 6; ++i) {
        Multivector<T> ei = Multivector<T>::basis_element(static_cast<uint8_t>(1u << i));
        Mat<T> qi(m, m);
        for (int j = 0; j < m; ++j) {
            Multivector<T> l4 = contract(lam, wedge(ei, lifts[j]));
            for (int k = 0; k < m; ++k)
                qi.at(j, k) = -gmdetail::volume5(wedge(l4, w_biv[k]), bvol);
        }
        for (int j = 0; j < m; ++j)
            for (int k = j + 1; k < m; ++k)
                require(qi.at(j, k) == qi.at(k, j), "not_lagrangian",
                        "constructed form is not symmetric; input was not isotropic");
        gm.q[i] = std::move(qi);
    }

    // lift independence: shifting a lift by the kernel of the contraction
    // must not change any form value
    Subspace<T> triples = Subspace<T>::span_of(btriples);
    Subspace<T> cap = intersect(a.space(), triples);
    for (int r = 0; r < cap.dim(); ++r) {
        Multivector<T> kappa(3);
        for (int c = 0; c < 20; ++c) kappa.coeff(c) = cap.rows().at(r, c);
        for (int i = 0; i < 6; ++i) {
            Multivector<T> ei = Multivector<T>::basis_element(static_cast<uint8_t>(1u << i));
            Multivector<T> l4 = contract(lam, wedge(ei, kappa));
            for (int k = 0; k < m; ++k)
                require(is_zero(gmdetail::volume5(wedge(l4, w_biv[k]), bvol)), "not_lagrangian",
                        "form depends on the choice of lift; input was not isotropic");
        }
    }

    return gm;
}

// GM data -> Lagrangian: kernel of the pairing map on (triples of the
// hyperplane) ⊕ W, embedded by (xi, w) ↦ xi + v0∧w. The admissible v0 are
// normalized against the covector; the result does not depend on the choice.
template <class T>
Lagrangian<T> gm_to_lagrangian(const GmData<T>& gm, const std::vector<T>& v0) {
    require(v0.size() == 6, "dimension_mismatch", "v0 must have 6 coordinates");
    require(gm.lambda_of(v0) == T(1), "bad_v0", "v0 must satisfy lambda(v0) = 1");

    int m = gm.w_dim();
    auto bpairs = gmdetail::b_pair_frame(gm.v5_basis);
    auto btriples = gmdetail::b_triple_frame(gm.v5_basis);
    auto bvol = gmdetail::b_volume_form(gm.v5_basis);

    std::vector<Multivector<T>> w_biv;
    for (int j = 0; j < m; ++j) w_biv.push_back(gmdetail::combine(bpairs, gm.w.rows().row(j)));

    Mat<T> q0 = gm.q_of(v0);

    // rows: the m functionals w' ↦ xi∧w' + q(v0)(w, w'); columns: 10 triple
    // coordinates then m coordinates of W
    Mat<T> map(m, 10 + m);
    for (int k = 0; k < m; ++k) {
        for (int a = 0; a < 10; ++a)
            map.at(k, a) = gmdetail::volume5(wedge(btriples[a], w_biv[k]), bvol);
        for (int j = 0; j < m; ++j) map.at(k, 10 + j) = q0.at(j, k);
    }

    Mat<T> ker = nullspace(map);
    require(ker.rows() == 10, "inconsistent_q",
            "kernel dimension " + std::to_string(ker.rows()) + " != 10; the forms are inconsistent");

    Multivector<T> v0mv = Multivector<T>::from_vector(v0);
    Mat<T> rows(10, 20);
    for (int r = 0; r < 10; ++r) {
        Multivector<T> acc(3);
        for (int a = 0; a < 10; ++a)
            for (int c = 0; c < 20; ++c) acc.coeff(c) += ker.at(r, a) * btriples[a].coeff(c);
        Multivector<T> wpart(2);
        for (int j = 0; j < m; ++j)
            for (int c = 0; c < 15; ++c) wpart.coeff(c) += ker.at(r, 10 + j) * w_biv[j].coeff(c);
        acc = acc + wedge(v0mv, wpart);
        for (int c = 0; c < 20; ++c) rows.at(r, c) = acc.coeff(c);
    }
    return certify_lagrangian(Subspace<T>::from_spanning(20, std::move(rows)));
}

struct AxiomReport {
    bool ok = true;
    std::string message = "all GM axioms hold";
};

// Checks symmetry of the six forms and the defining quadric condition
// q(v)(w,w') = vol5(v∧w∧w') on the spanning set b_l × (w_j, w_k).
template <class T>
AxiomReport verify_gm_axioms(const GmData<T>& gm) {
    int m = gm.w_dim();
    for (int i = 0; i < 6; ++i) {
        if (gm.q[i].rows() != m || gm.q[i].cols() != m)
            return {false, "form " + std::to_string(i) + " has the wrong size"};
        for (int j = 0; j < m; ++j)
            for (int k = j + 1; k < m; ++k)
                if (!(gm.q[i].at(j, k) == gm.q[i].at(k, j))) {
                    std::ostringstream os;
                    os << "form " << i << " is not symmetric at (" << j << "," << k << ")";
                    return {false, os.str()};
                }
    }

    auto bpairs = gmdetail::b_pair_frame(gm.v5_basis);
    auto bvol = gmdetail::b_volume_form(gm.v5_basis);
    std::vector<Multivector<T>> w_biv;
    for (int j = 0; j < m; ++j) w_biv.push_back(gmdetail::combine(bpairs, gm.w.rows().row(j)));

    for (int l = 0; l < 5; ++l) {
        std::vector<T> bl(6);
        for (int c = 0; c < 6; ++c) bl[c] = gm.v5_basis.at(l, c);
        Mat<T> ql = gm.q_of(bl);
        Multivector<T> blv = Multivector<T>::from_vector(bl);
        for (int j = 0; j < m; ++j)
            for (int k = j; k < m; ++k) {
                T expected = gmdetail::volume5(wedge(wedge(blv, w_biv[j]), w_biv[k]), bvol);
                if (!(ql.at(j, k) == expected)) {
                    std::ostringstream os;
                    os << "quadric condition fails at hyperplane basis vector " << l
                       << ", pair (" << j << "," << k << ")";
                    return {false, os.str()};
                }
            }
    }
    return {};
}

// Both sides of the kernel identity: corank of the form at v, and the
// dimension of A ∩ (v ∧ degree-2 piece). Computed by independent routes.
template <class T>
std::pair<int, int> kernel_correspondence(const GmData<T>& gm, const Lagrangian<T>& a,
                                          const std::vector<T>& v) {
    require(!is_zero(gm.lambda_of(v)), "v_in_v5", "v must lie outside the hyperplane");
    int corank = form_corank(SymmetricForm<T>(gm.q_of(v))).corank;

    Multivector<T> vm = Multivector<T>::from_vector(v);
    std::vector<Multivector<T>> span;
    for (uint8_t mask : basis_masks(2))
        span.push_back(wedge(vm, Multivector<T>::basis_element(mask)));
    Subspace<T> t = Subspace<T>::span_of(span);
    int d = intersect(a.space(), t).dim();
    return {corank, d};
}

// Homogeneous binary quadratic a·s² + b·st + c·t².
template <class T>
struct BinaryQuadratic {
    T a{}, b{}, c{};
    T eval(const T& s, const T& t) const { return a * s * s + b * s * t + c * t * t; }
    bool zero() const { return is_zero(a) && is_zero(b) && is_zero(c); }
};

template <class T>
struct Sigma1Locus {
    enum class Kind { empty, point, conic };
    Kind kind = Kind::empty;
    int n = 5;
    std::vector<T> point_b;                      // kernel point, hyperplane coordinates (n=4)
    std::vector<T> point_v6;                     //   ... and ambient coordinates
    std::array<BinaryQuadratic<T>, 5> conic_b;   // coordinate quadratics (n=3)

    std::vector<T> conic_point_b(const T& s, const T& t) const {
        std::vector<T> out(5);
        for (int k = 0; k < 5; ++k) out[k] = conic_b[k].eval(s, t);
        return out;
    }
};

namespace gmdetail {

// A functional on the pair basis of the hyperplane, viewed as the skew form
// B(b_i, b_j) = c_{(i,j)}.
template <class T>
Mat<T> skew_from_pair_functional(const std::vector<T>& coords10) {
    Mat<T> omega(5, 5);
    int idx = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            omega.at(i, j) = coords10[idx];
            omega.at(j, i) = -coords10[idx];
            ++idx;
        }
    return omega;
}

// Raw signed 4x4 sub-Pfaffian vector; zero iff rank < 4.
template <class T>
std::vector<T> sub_pfaffian_vector(const Mat<T>& omega) {
    std::vector<T> v(5, T(0));
    for (int k = 0; k < 5; ++k) {
        int idx[4];
        int t = 0;
        for (int i = 0; i < 5; ++i)
            if (i != k) idx[t++] = i;
        T pf = omega.at(idx[0], idx[1]) * omega.at(idx[2], idx[3])
             - omega.at(idx[0], idx[2]) * omega.at(idx[1], idx[3])
             + omega.at(idx[0], idx[3]) * omega.at(idx[1], idx[2]);
        if (k & 1) v[k] = -pf; else v[k] = pf;
    }
    return v;
}

template <class T>
bool all_zero(const std::vector<T>& v) {
    for (const T& x : v)
        if (!is_zero(x)) return false;
    return true;
}

// gcd of univariate polynomials (coefficients low-to-high), monic-normalized.
template <class T>
std::vector<T> poly_trim(std::vector<T> p) {
    while (!p.empty() && is_zero(p.back())) p.pop_back();
    return p;
}

template <class T>
std::vector<T> poly_mod(std::vector<T> a, const std::vector<T>& b) {
    while (a.size() >= b.size() && !a.empty()) {
        T f = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        a = poly_trim(std::move(a));
        if (a.size() < b.size()) break;
    }
    return a;
}

template <class T>
std::vector<T> poly_gcd(std::vector<T> a, std::vector<T> b) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        std::vector<T> r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        T lead = a.back();
        for (T& c : a) c = c / lead;
    }
    return a;
}

} // namespace gmdetail

// The union of the kernels of the nonzero elements of the annihilator of W,
// as skew forms on the hyperplane: empty, a single point, or a conic
// parametrized by binary quadratics, depending on n. Every nonzero element
// must have rank exactly 4; a rank-2 element aborts (non-smooth input).
template <class T>
Sigma1Locus<T> sigma1(const GmData<T>& gm) {
    require(!gm.degenerate && gm.n >= 3 && gm.n <= 5, "degenerate_gm",
            "sigma1 needs ordinary GM data with n in {3,4,5}");
    Sigma1Locus<T> out;
    out.n = gm.n;

    Subspace<T> wperp = annihilator(gm.w);
    require(wperp.dim() == 5 - gm.n, "internal", "annihilator of W has unexpected dimension");
    if (gm.n == 5) {
        out.kind = Sigma1Locus<T>::Kind::empty;
        return out;
    }

    if (gm.n == 4) {
        Mat<T> omega = gmdetail::skew_from_pair_functional(wperp.rows().row(0));
        std::vector<T> k = gmdetail::sub_pfaffian_vector(omega);
        require(!gmdetail::all_zero(k), "rank2_in_wperp",
                "the annihilator of W contains a rank-2 form (non-smooth configuration)");
        out.kind = Sigma1Locus<T>::Kind::point;
        out.point_b = k;
        out.point_v6 = v6_from_b_coords(gm, k);
        return out;
    }

    // n == 3: pencil s*w1 + t*w2; kernel coordinates are quadratic in (s,t)
    Mat<T> o1 = gmdetail::skew_from_pair_functional(wperp.rows().row(0));
    Mat<T> o2 = gmdetail::skew_from_pair_functional(wperp.rows().row(1));
    auto at = [&](const T& s, const T& t) {
        Mat<T> m(5, 5);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) m.at(i, j) = s * o1.at(i, j) + t * o2.at(i, j);
        return gmdetail::sub_pfaffian_vector(m);
    };
    std::vector<T> k10 = at(T(1), T(0)), k01 = at(T(0), T(1)), k11 = at(T(1), T(1));
    require(!gmdetail::all_zero(k10) && !gmdetail::all_zero(k01) && !gmdetail::all_zero(k11),
            "rank2_in_wperp", "a sampled pencil member has rank < 4 (non-smooth configuration)");
    for (int c = 0; c < 5; ++c) {
        out.conic_b[c].a = k10[c];
        out.conic_b[c].c = k01[c];
        out.conic_b[c].b = k11[c] - k10[c] - k01[c];
    }

    // pencil discriminant: a rank-2 member exists iff the five coordinate
    // quadratics share a projective root
    std::vector<std::vector<T>> dehom;
    bool all_a_zero = true, any_poly = false;
    for (int c = 0; c < 5; ++c) {
        if (!is_zero(out.conic_b[c].a)) all_a_zero = false;
        std::vector<T> p = {out.conic_b[c].c, out.conic_b[c].b, out.conic_b[c].a};
        p = gmdetail::poly_trim(std::move(p));
        if (!p.empty()) { dehom.push_back(std::move(p)); any_poly = true; }
    }
    require(any_poly, "rank2_in_wperp", "the whole pencil is degenerate");
    require(!all_a_zero, "rank2_in_wperp", "the pencil has a rank-2 member at (1:0)");
    std::vector<T> g = dehom[0];
    for (size_t i = 1; i < dehom.size() && g.size() > 1; ++i) g = gmdetail::poly_gcd(g, dehom[i]);
    require(g.size() == 1, "rank2_in_wperp", "the pencil contains a rank-2 member");

    out.kind = Sigma1Locus<T>::Kind::conic;
    return out;
}

template <class T>
struct FiberQuadric {
    int domain_dim = 0;   // n-1 away from the sigma1 locus, n on it
    int corank = 0;
    Mat<T> restricted;    // the form given by v0 restricted to (v∧V5) ∩ W
};

// Restriction of the non-hyperplane quadric to (v∧V5) ∩ W in coordinates of
// the echelonized intersection basis. The result does not depend on the
// admissible v0: every hyperplane form vanishes identically there because
// v appears twice in v∧u ∧ v∧u' ∧ v''.
template <class T>
FiberQuadric<T> fiber_quadric_corank(const GmData<T>& gm, const std::vector<T>& v,
                                     const std::vector<T>& v0) {
    require(is_zero(gm.lambda_of(v)), "v_not_in_v5", "v must lie in the hyperplane");
    require(!is_zero(gm.lambda_of(v0)), "bad_v0", "v0 must lie outside the hyperplane");

    auto bpairs = gmdetail::b_pair_frame(gm.v5_basis);
    Mat<T> pair_mat = gmdetail::frame_matrix(bpairs);
    Multivector<T> vm = Multivector<T>::from_vector(v);
    require(!vm.zero(), "zero_vector", "v must be nonzero");

    // v ∧ b_i, in pair-basis coordinates
    Mat<T> span(5, 10);
    for (int i = 0; i < 5; ++i) {
        Multivector<T> w = wedge(vm, gmdetail::row_vector(gm.v5_basis, i));
        std::vector<T> w15(15);
        for (int c = 0; c < 15; ++c) w15[c] = w.coeff(c);
        auto coords = solve_row_combination(pair_mat, w15);
        require(coords.has_value(), "internal", "v∧V5 escaped the hyperplane pair basis");
        span.set_row(i, *coords);
    }
    Subspace<T> domain = intersect(Subspace<T>::from_spanning(10, span), gm.w);

    Mat<T> q0 = gm.q_of(v0);
    int d = domain.dim();
    Mat<T> restricted(d, d);
    std::vector<std::vector<T>> in_w;
    for (int a = 0; a < d; ++a) {
        auto x = solve_row_combination(gm.w.rows(), domain.rows().row(a));
        require(x.has_value(), "internal", "intersection left W");
        in_w.push_back(*x);
    }
    int m = gm.w_dim();
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            T acc = T(0);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) acc += in_w[a][i] * q0.at(i, j) * in_w[b][j];
            restricted.at(a, b) = acc;
        }

    FiberQuadric<T> out;
    out.domain_dim = d;
    out.corank = form_corank(SymmetricForm<T>(restricted)).corank;
    out.restricted = std::move(restricted);
    return out;
}

// Membership of [v] in the sigma1 locus: some nonzero annihilator element
// kills v.
template <class T>
bool on_sigma1(const GmData<T>& gm, const std::vector<T>& v_b5) {
    Subspace<T> wperp = annihilator(gm.w);
    if (wperp.dim() == 0) return false;
    // stack the conditions (sum_c x_c Omega_c) v = 0 over the basis of wperp
    Mat<T> sys(5, wperp.dim());
    for (int c = 0; c < wperp.dim(); ++c) {
        Mat<T> omega = gmdetail::skew_from_pair_functional(wperp.rows().row(c));
        for (int r = 0; r < 5; ++r) {
            T acc = T(0);
            for (int j = 0; j < 5; ++j) acc += omega.at(r, j) * v_b5[j];
            sys.at(r, c) = acc;
        }
    }
    return rank_of(sys) < wperp.dim();
}

// GM data reduced entry-wise mod p, with rank checks.
inline GmData<Fp> gm_mod_p(const GmData<Rat>& gm, uint64_t p) {
    require(is_prime_u64(p), "bad_prime", std::to_string(p) + " is not prime");
    GmData<Fp> out;
    out.n = gm.n;
    out.degenerate = gm.degenerate;
    bool nz = false;
    for (int i = 0; i < 6; ++i) {
        out.lambda[i] = reduce_mod_p(gm.lambda[i], p);
        nz = nz || !is_zero(out.lambda[i]);
    }
    require(nz, "bad_prime", "covector vanishes mod " + std::to_string(p));
    out.v5_basis = mat_mod_p(gm.v5_basis, p);
    require(rank_of(out.v5_basis) == 5, "bad_prime", "hyperplane basis drops rank mod p");
    out.w = subspace_mod_p(gm.w, p);
    for (int i = 0; i < 6; ++i) out.q[i] = mat_mod_p(gm.q[i], p);
    return out;
}

} // namespace gmepw
