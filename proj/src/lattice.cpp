#include "gmepw/lattice.hpp"

#include "gmepw/matrix.hpp"

namespace gmepw {

GramLattice::GramLattice(std::vector<std::vector<long long>> m) : entries(std::move(m)) {
    rank = static_cast<int>(entries.size());
    for (const auto& row : entries)
        require(static_cast<int>(row.size()) == rank, "dimension_mismatch", "Gram matrix must be square");
    for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j)
            require(entries[i][j] == entries[j][i], "not_symmetric", "Gram matrix must be symmetric");
}

namespace {

Mat<Rat> to_rat(const GramLattice& l) {
    Mat<Rat> m(l.rank, l.rank);
    for (int i = 0; i < l.rank; ++i)
        for (int j = 0; j < l.rank; ++j) m.at(i, j) = rat_from_int(l.entries[i][j]);
    return m;
}

} // namespace

mpz_class discriminant(const GramLattice& l) {
    if (l.rank == 0) return 1;
    Rat d = det_bareiss(to_rat(l));
    require(d.get_den() == 1, "internal", "integer determinant came out non-integral");
    return d.get_num();
}

Signature signature(const GramLattice& l) {
    Mat<Rat> w = to_rat(l);
    const int n = l.rank;
    Signature sig;
    int k = 0;
    while (k < n) {
        // find a nonzero diagonal entry in the active block
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (!is_zero(w.at(i, i))) { piv = i; break; }
        if (piv < 0) {
            // repair with a congruence row/col addition if any off-diagonal
            // entry survives; otherwise the rest of the form is zero
            int ri = -1, rj = -1;
            for (int i = k; i < n && ri < 0; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (!is_zero(w.at(i, j))) { ri = i; rj = j; break; }
            if (ri < 0) {
                sig.zero += n - k;
                return sig;
            }
            for (int c = 0; c < n; ++c) w.at(ri, c) += w.at(rj, c);
            for (int r = 0; r < n; ++r) w.at(r, ri) += w.at(r, rj);
            piv = ri;
        }
        if (piv != k) {
            w.swap_rows(piv, k);
            for (int r = 0; r < n; ++r) std::swap(w.at(r, piv), w.at(r, k));
        }
        const Rat d = w.at(k, k);
        if (sgn(d) > 0) ++sig.positive; else ++sig.negative;
        for (int i = k + 1; i < n; ++i) {
            if (is_zero(w.at(i, k))) continue;
            Rat f = w.at(i, k) / d;
            for (int c = k; c < n; ++c) w.at(i, c) -= f * w.at(k, c);
        }
        for (int j = k + 1; j < n; ++j) w.at(k, j) = Rat(0);
        ++k;
    }
    return sig;
}

bool lattice_even(const GramLattice& l) {
    for (int i = 0; i < l.rank; ++i)
        if (l.entries[i][i] % 2 != 0) return false;
    return true;
}

GramLattice lambda_lattice() {
    std::vector<std::vector<long long>> g(22, std::vector<long long>(22, 0));
    // E8 Cartan matrix, Bourbaki numbering: chain 1-3-4-5-6-7-8, node 2 on 4
    const int edges[][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
    for (int block = 0; block < 2; ++block) {
        int off = 8 * block;
        for (int i = 0; i < 8; ++i) g[off + i][off + i] = 2;
        for (auto [a, b] : edges) {
            g[off + a][off + b] = -1;
            g[off + b][off + a] = -1;
        }
    }
    for (int block = 0; block < 2; ++block) {
        int off = 16 + 2 * block;
        g[off][off + 1] = 1;
        g[off + 1][off] = 1;
    }
    g[20][20] = 2;
    g[21][21] = 2;
    return GramLattice(g);
}

DdComponents dd_components(long long d) {
    if (d <= 0) return DdComponents::empty;
    if (d % 4 == 0) return DdComponents::one;
    if (d % 8 == 2) return DdComponents::two;
    return DdComponents::empty;
}

std::string to_string(DdComponents c) {
    switch (c) {
        case DdComponents::empty: return "empty";
        case DdComponents::one: return "one";
        case DdComponents::two: return "two";
    }
    return "?";
}

bool k3_associated(long long d) {
    require(d > 0, "bad_input", "the discriminant must be positive");
    long long r = d % 8;
    if (r != 2 && r != 4) return false;
    long long m = d;
    while (m % 2 == 0) m /= 2;
    for (long long q = 3; q * q <= m; q += 2) {
        while (m % q == 0) {
            if (q % 4 != 1) return false;
            m /= q;
        }
    }
    if (m > 1 && m % 4 != 1) return false;
    return true;
}

namespace {

struct DiamondData {
    std::vector<std::vector<long long>> rows;
    std::vector<long long> vanishing;
    std::vector<long long> ambient_contribution;   // middle row minus vanishing
};

const DiamondData& diamond_data(int n) {
    static const std::vector<DiamondData> table = {
        // n = 1: a genus-6 curve
        {{{1}, {6, 6}, {1}}, {6, 6}, {0, 0}},
        // n = 2: a degree-10 K3 surface
        {{{1}, {0, 0}, {1, 20, 1}, {0, 0}, {1}}, {1, 19, 1}, {0, 1, 0}},
        // n = 3
        {{{1}, {0, 0}, {0, 1, 0}, {0, 10, 10, 0}, {0, 1, 0}, {0, 0}, {1}},
         {0, 10, 10, 0},
         {0, 0, 0, 0}},
        // n = 4
        {{{1}, {0, 0}, {0, 1, 0}, {0, 0, 0, 0}, {0, 1, 22, 1, 0}, {0, 0, 0, 0}, {0, 1, 0}, {0, 0}, {1}},
         {0, 1, 20, 1, 0},
         {0, 0, 2, 0, 0}},
        // n = 5
        {{{1}, {0, 0}, {0, 1, 0}, {0, 0, 0, 0}, {0, 0, 2, 0, 0}, {0, 0, 10, 10, 0, 0},
          {0, 0, 2, 0, 0}, {0, 0, 0, 0}, {0, 1, 0}, {0, 0}, {1}},
         {0, 0, 10, 10, 0, 0},
         {0, 0, 0, 0, 0, 0}},
        // n = 6
        {{{1}, {0, 0}, {0, 1, 0}, {0, 0, 0, 0}, {0, 0, 2, 0, 0}, {0, 0, 0, 0, 0, 0},
          {0, 0, 1, 22, 1, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 2, 0, 0}, {0, 0, 0, 0}, {0, 1, 0},
          {0, 0}, {1}},
         {0, 0, 1, 20, 1, 0, 0},
         {0, 0, 0, 2, 0, 0, 0}},
    };
    require(n >= 1 && n <= 6, "bad_input", "dimension must be in 1..6");
    return table[static_cast<size_t>(n - 1)];
}

} // namespace

HodgeDiamond hodge_diamond(int n) {
    const DiamondData& d = diamond_data(n);
    HodgeDiamond out;
    out.n = n;
    out.rows = d.rows;
    out.vanishing = d.vanishing;
    // transcription consistency: the middle row must exceed the vanishing
    // row by exactly the tabulated ambient contribution
    const auto& middle = d.rows[static_cast<size_t>(n)];
    require(middle.size() == d.vanishing.size() && middle.size() == d.ambient_contribution.size(),
            "internal", "diamond table rows are misaligned");
    for (size_t i = 0; i < middle.size(); ++i)
        require(middle[i] - d.vanishing[i] == d.ambient_contribution[i], "internal",
                "vanishing row is inconsistent with the tabulated ambient contribution");
    return out;
}

std::vector<long long> vanishing_numbers(int n) { return hodge_diamond(n).vanishing; }

int moduli_dimension(int n) {
    require(n >= 3 && n <= 6, "bad_input", "moduli dimension is defined for n in 3..6");
    return 25 - (5 - n) * (6 - n) / 2;
}

GramLattice sublattice_gram(const std::vector<std::vector<long long>>& classes,
                            const GramLattice& ambient) {
    const int k = static_cast<int>(classes.size());
    require(k > 0, "bad_input", "need at least one class");
    Mat<Rat> cls(k, ambient.rank);
    for (int i = 0; i < k; ++i) {
        require(static_cast<int>(classes[i].size()) == ambient.rank, "dimension_mismatch",
                "class vector does not match the ambient rank");
        for (int j = 0; j < ambient.rank; ++j) cls.at(i, j) = rat_from_int(classes[i][j]);
    }
    require(rank_of(cls) == k, "dependent_classes", "the classes are linearly dependent");

    std::vector<std::vector<long long>> g(k, std::vector<long long>(k, 0));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            long long acc = 0;
            for (int i = 0; i < ambient.rank; ++i)
                for (int j = 0; j < ambient.rank; ++j)
                    acc += classes[a][i] * ambient.entries[i][j] * classes[b][j];
            g[a][b] = acc;
        }
    return GramLattice(g);
}

mpz_class sublattice_discriminant(const std::vector<std::vector<long long>>& classes,
                                  const GramLattice& ambient) {
    return discriminant(sublattice_gram(classes, ambient));
}

} // namespace gmepw
