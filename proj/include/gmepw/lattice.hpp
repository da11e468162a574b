#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "gmepw/error.hpp"

namespace gmepw {

// Integer symmetric Gram matrix with exact discriminant and signature.
struct GramLattice {
    int rank = 0;
    std::vector<std::vector<long long>> entries;

    GramLattice() = default;
    explicit GramLattice(std::vector<std::vector<long long>> m);
};

mpz_class discriminant(const GramLattice& l);

struct Signature {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};

// Sylvester inertia by exact symmetric (congruence) elimination.
Signature signature(const GramLattice& l);

bool lattice_even(const GramLattice& l);

// E8 ⊕ E8 ⊕ U ⊕ U ⊕ <2> ⊕ <2>: the rank-22 even lattice of signature (20,2)
// and determinant 4 carried by the middle vanishing cohomology of the
// fourfolds in question.
GramLattice lambda_lattice();

enum class DdComponents { empty, one, two };

// Component count of the rank-3 special locus of discriminant d: one
// irreducible hypersurface when d ≡ 0 (mod 4), two when d ≡ 2 (mod 8),
// nothing otherwise.
DdComponents dd_components(long long d);

std::string to_string(DdComponents c);

// Whether the nonspecial lattice of discriminant d matches (minus) the
// primitive cohomology of a degree-d polarized K3 surface: d ≡ 2 or 4
// (mod 8) with every odd prime divisor ≡ 1 (mod 4).
bool k3_associated(long long d);

struct HodgeDiamond {
    int n = 0;
    std::vector<std::vector<long long>> rows;   // 2n+1 rows, row k has min(k,2n-k)+1 entries
    std::vector<long long> vanishing;           // middle row minus the ambient contribution
};

HodgeDiamond hodge_diamond(int n);
std::vector<long long> vanishing_numbers(int n);

// 25 - (5-n)(6-n)/2
int moduli_dimension(int n);

// Gram matrix of pairwise products of independent classes in an ambient
// lattice, and its discriminant.
GramLattice sublattice_gram(const std::vector<std::vector<long long>>& classes,
                            const GramLattice& ambient);
mpz_class sublattice_discriminant(const std::vector<std::vector<long long>>& classes,
                                  const GramLattice& ambient);

} // namespace gmepw
