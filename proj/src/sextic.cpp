#include <algorithm>

#include "gmepw/epw.hpp"

namespace gmepw {

std::vector<int> chart_variable_indices(int chart) {
    require(chart >= 0 && chart < 6, "bad_chart", "chart index must be in 0..5");
    std::vector<int> vars;
    for (int i = 0; i < 6; ++i)
        if (i != chart) vars.push_back(i);
    return vars;
}

Mpoly chart_sextic(const Lagrangian<Rat>& a, int chart) {
    const std::vector<int> vars = chart_variable_indices(chart);

    // frame columns: pairs (i,j) with i<j, both away from the chart index
    std::vector<std::pair<int, int>> cols;
    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j) cols.emplace_back(vars[i], vars[j]);

    // pairing[t][k][col] = symplectic(a_k, e_t ∧ e_i ∧ e_j)
    std::vector<Multivector<Rat>> abasis;
    for (int k = 0; k < 10; ++k) abasis.push_back(a.basis_vector(k));

    std::vector<std::vector<Mpoly>> m(10, std::vector<Mpoly>(10, Mpoly(5)));
    for (int k = 0; k < 10; ++k) {
        for (size_t c = 0; c < cols.size(); ++c) {
            Mpoly entry(5);
            for (int t = 0; t < 6; ++t) {
                if (t == cols[c].first || t == cols[c].second) continue;
                Multivector<Rat> tri = wedge(
                    Multivector<Rat>::basis_element(static_cast<uint8_t>(1u << t)),
                    wedge(Multivector<Rat>::basis_element(static_cast<uint8_t>(1u << cols[c].first)),
                          Multivector<Rat>::basis_element(static_cast<uint8_t>(1u << cols[c].second))));
                Rat w = symplectic(abasis[k], tri);
                if (is_zero(w)) continue;
                if (t == chart) {
                    entry.add_term(Mpoly::Exp(5, 0), w);
                } else {
                    Mpoly::Exp e(5, 0);
                    e[static_cast<size_t>(std::find(vars.begin(), vars.end(), t) - vars.begin())] = 1;
                    entry.add_term(e, w);
                }
            }
            m[k][c] = std::move(entry);
        }
    }

    Mpoly det = mpoly_det_bareiss(std::move(m));
    require(det.total_degree() <= 6, "sextic_degree",
            "chart determinant has degree " + std::to_string(det.total_degree())
                + " > 6; sign conventions are broken");
    return det;
}

DiscriminantVerdict discriminant_sextic(const GmData<Rat>& gm) {
    require(!gm.degenerate && gm.n >= 3 && gm.n <= 5, "degenerate_gm",
            "discriminant comparison needs ordinary GM data with n in {3,4,5}");
    const int m = gm.w_dim();

    std::vector<std::vector<Mpoly>> family(m, std::vector<Mpoly>(m, Mpoly(6)));
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k) {
            Mpoly entry(6);
            for (int i = 0; i < 6; ++i) {
                if (is_zero(gm.q[i].at(j, k))) continue;
                Mpoly::Exp e(6, 0);
                e[i] = 1;
                entry.add_term(e, gm.q[i].at(j, k));
            }
            family[j][k] = std::move(entry);
        }

    DiscriminantVerdict out;
    out.determinant = mpoly_det_bareiss(std::move(family));
    require(!out.determinant.zero(), "degenerate_data", "the quadric family has identically zero determinant");
    require(out.determinant.homogeneous_of_degree(m), "internal",
            "family determinant is not homogeneous of degree dim W");

    Mpoly lin(6);
    for (int i = 0; i < 6; ++i) {
        if (is_zero(gm.lambda[i])) continue;
        Mpoly::Exp e(6, 0);
        e[i] = 1;
        lin.add_term(e, gm.lambda[i]);
    }

    Mpoly quotient = out.determinant;
    for (int t = 0; t < gm.n - 1; ++t) {
        auto q = quotient.divide_exact(lin);
        require(q.has_value(), "multiplicity_violation",
                "hyperplane form does not divide the family determinant "
                    + std::to_string(gm.n - 1) + " times");
        quotient = std::move(*q);
    }
    require(quotient.homogeneous_of_degree(6), "internal", "quotient is not a sextic");
    out.quotient = std::move(quotient);

    // associated Lagrangian via any v0 with lambda(v0) = 1
    std::vector<Rat> v0(6, Rat(0));
    for (int i = 0; i < 6; ++i)
        if (!is_zero(gm.lambda[i])) {
            v0[i] = Rat(1) / gm.lambda[i];
            break;
        }
    Lagrangian<Rat> a = gm_to_lagrangian(gm, v0);

    for (int c = 0; c < 6; ++c) {
        Mpoly f = chart_sextic(a, c);
        if (f.total_degree() != 6) continue;
        out.chart = c;
        out.chart6 = homogenize_chart(f, chart_variable_indices(c), c, 6);
        break;
    }
    require(out.chart >= 0, "degenerate_data", "no chart realizes a degree-6 determinant");

    auto scale = proportionality_scalar(out.chart6, out.quotient);
    require(scale.has_value(), "sextic_mismatch",
            "the reduced discriminant is not proportional to the chart sextic");
    out.scale = *scale;
    return out;
}

} // namespace gmepw
