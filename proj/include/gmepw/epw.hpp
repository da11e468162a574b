#pragma once

#include "gmepw/gm.hpp"
#include "gmepw/poly.hpp"
#include "gmepw/subspace.hpp"

namespace gmepw {

// Multiplicity of a point: dim(A ∩ (v ∧ degree-2 piece)), by the direct
// intersection route.
template <class T>
int epw_multiplicity_direct(const Lagrangian<T>& a, const Multivector<T>& v) {
    require(v.degree() == 1, "degree_mismatch", "multiplicity point must be a vector");
    require(!v.zero(), "zero_vector", "multiplicity of the zero vector is undefined");
    std::vector<Multivector<T>> span;
    span.reserve(15);
    for (uint8_t mask : basis_masks(2))
        span.push_back(wedge(v, Multivector<T>::basis_element(mask)));
    return intersect(a.space(), Subspace<T>::span_of(span)).dim();
}

// Same value through the symplectic pairing: v ∧ (degree-2 piece) is itself
// Lagrangian, so it meets A exactly in the radical of the 10x15 pairing
// matrix between the two spanning sets.
template <class T>
int epw_multiplicity_pairing(const Lagrangian<T>& a, const Multivector<T>& v) {
    require(v.degree() == 1, "degree_mismatch", "multiplicity point must be a vector");
    require(!v.zero(), "zero_vector", "multiplicity of the zero vector is undefined");
    Mat<T> m(10, 15);
    const auto& pairs = basis_masks(2);
    std::vector<Multivector<T>> frame;
    frame.reserve(15);
    for (uint8_t mask : pairs) frame.push_back(wedge(v, Multivector<T>::basis_element(mask)));
    for (int k = 0; k < 10; ++k) {
        Multivector<T> ak = a.basis_vector(k);
        for (int j = 0; j < 15; ++j) m.at(k, j) = symplectic(ak, frame[j]);
    }
    return 10 - rank_of(m);
}

// Both routes, which must agree on every input.
template <class T>
int epw_multiplicity(const Lagrangian<T>& a, const Multivector<T>& v) {
    int direct = epw_multiplicity_direct(a, v);
    int pairing = epw_multiplicity_pairing(a, v);
    require(direct == pairing, "oracle_mismatch",
            "the two multiplicity computations disagree: " + std::to_string(direct) + " vs "
                + std::to_string(pairing));
    return direct;
}

template <class T>
int epw_multiplicity(const Lagrangian<T>& a, const std::vector<T>& v6) {
    return epw_multiplicity(a, Multivector<T>::from_vector(v6));
}

// Annihilator under the duality pairing, certified Lagrangian for the wedge
// form of the dual space (coordinates against the dual wedge basis).
template <class T>
Lagrangian<T> dual_lagrangian(const Lagrangian<T>& a) {
    Mat<T> k = nullspace(a.rows());
    return certify_lagrangian(Subspace<T>::from_spanning(20, std::move(k)));
}

// Symbolic sextic of the degeneracy locus on the affine chart v = e_c + sum
// of x_i e_i: determinant of the 10x10 pairing of A against the moving frame
// v(x)∧e_i∧e_j (i<j, i,j != c), computed fraction-free in the polynomial
// ring. Degree <= 6 is asserted (the naive bound is 10; hitting 6 is also a
// sign-convention self-test). The zero polynomial is returned as such.
Mpoly chart_sextic(const Lagrangian<Rat>& a, int chart);

// Indices of the 5 chart variables, in increasing ambient order.
std::vector<int> chart_variable_indices(int chart);

struct DiscriminantVerdict {
    Mpoly determinant;   // det of the quadric family, degree dim W
    Mpoly quotient;      // after exact division by the hyperplane form, degree 6
    Mpoly chart6;        // homogenized chart sextic of the associated Lagrangian
    Rat scale;           // quotient = scale * chart6
    int chart = -1;
};

// The determinant of the quadric family divides exactly by lambda^(n-1);
// the quotient must be proportional to the chart sextic of the associated
// Lagrangian by a single nonzero rational. Violations abort with a
// diagnostic, as they falsify the input data.
DiscriminantVerdict discriminant_sextic(const GmData<Rat>& gm);

} // namespace gmepw
