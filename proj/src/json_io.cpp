#include "gmepw/json_io.hpp"

namespace gmepw {

namespace {

Rat scalar_from_json(const ojson& j) {
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    if (j.is_number_integer()) return rat_from_int(j.get<long long>());
    fail("schema", "expected a scalar as \"num/den\" string or integer, got " + j.dump());
}

ojson rows_to_json(const Mat<Rat>& m) {
    ojson rows = ojson::array();
    for (int i = 0; i < m.rows(); ++i) {
        ojson row = ojson::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat<Rat> rows_from_json(const ojson& j, int expected_cols) {
    require(j.is_array(), "schema", "\"rows\" must be an array of arrays");
    const int r = static_cast<int>(j.size());
    Mat<Rat> m(r, expected_cols);
    for (int i = 0; i < r; ++i) {
        require(j[i].is_array() && static_cast<int>(j[i].size()) == expected_cols, "schema",
                "row " + std::to_string(i) + " must have " + std::to_string(expected_cols)
                    + " entries");
        for (int c = 0; c < expected_cols; ++c) m.at(i, c) = scalar_from_json(j[i][c]);
    }
    return m;
}

} // namespace

ojson subspace_to_json(const Subspace<Rat>& s) {
    ojson j;
    j["ambient"] = s.ambient();
    j["rows"] = rows_to_json(s.rows());
    return j;
}

Subspace<Rat> subspace_from_json(const ojson& j) {
    require(j.contains("ambient") && j["ambient"].is_number_integer(), "schema",
            "subspace needs an integer \"ambient\"");
    require(j.contains("rows"), "schema", "subspace needs \"rows\"");
    int ambient = j["ambient"].get<int>();
    require(ambient > 0, "schema", "\"ambient\" must be positive");
    return Subspace<Rat>::from_spanning(ambient, rows_from_json(j["rows"], ambient));
}

ojson lagrangian_to_json(const Lagrangian<Rat>& a) {
    ojson j;
    j["type"] = "lagrangian";
    j["ambient"] = 20;
    j["rows"] = rows_to_json(a.rows());
    j["certificate"] = ojson{{"isotropic", true}, {"dimension", 10}};
    return j;
}

Lagrangian<Rat> lagrangian_from_json(const ojson& j) {
    Subspace<Rat> s = subspace_from_json(j);
    return certify_lagrangian(std::move(s));   // re-certifies on load
}

ojson gm_to_json(const GmData<Rat>& gm) {
    ojson j;
    j["type"] = "gm_data";
    j["n"] = gm.n;
    j["degenerate"] = gm.degenerate;
    ojson lam = ojson::array();
    for (int i = 0; i < 6; ++i) lam.push_back(rat_to_string(gm.lambda[i]));
    j["lambda"] = std::move(lam);
    j["v5_basis"] = rows_to_json(gm.v5_basis);
    j["w_rows"] = rows_to_json(gm.w.rows());
    ojson q = ojson::array();
    for (int i = 0; i < 6; ++i) q.push_back(rows_to_json(gm.q[i]));
    j["q"] = std::move(q);
    return j;
}

GmData<Rat> gm_from_json(const ojson& j) {
    require(j.contains("lambda") && j["lambda"].is_array() && j["lambda"].size() == 6, "schema",
            "gm data needs a 6-entry \"lambda\"");
    require(j.contains("v5_basis") && j.contains("w_rows") && j.contains("q"), "schema",
            "gm data needs \"v5_basis\", \"w_rows\" and \"q\"");
    GmData<Rat> gm;
    for (int i = 0; i < 6; ++i) gm.lambda[i] = scalar_from_json(j["lambda"][i]);
    gm.v5_basis = rows_from_json(j["v5_basis"], 6);
    require(gm.v5_basis.rows() == 5, "schema", "\"v5_basis\" must have 5 rows");
    {
        // the stored basis must cut out exactly the kernel of lambda
        std::vector<Rat> lam(gm.lambda.begin(), gm.lambda.end());
        for (int i = 0; i < 5; ++i) {
            Rat acc(0);
            for (int c = 0; c < 6; ++c) acc += gm.v5_basis.at(i, c) * lam[c];
            require(is_zero(acc), "schema", "\"v5_basis\" row " + std::to_string(i)
                                                + " is not annihilated by lambda");
        }
        require(rank_of(gm.v5_basis) == 5, "schema", "\"v5_basis\" rows are dependent");
    }
    gm.w = Subspace<Rat>::from_spanning(10, rows_from_json(j["w_rows"], 10));
    const int m = gm.w.dim();
    require(static_cast<int>(j["w_rows"].size()) == m, "schema", "\"w_rows\" are dependent");
    gm.n = m - 5;
    gm.degenerate = (m < 8);
    require(j["q"].is_array() && j["q"].size() == 6, "schema", "\"q\" must list six matrices");
    for (int i = 0; i < 6; ++i) {
        gm.q[i] = rows_from_json(j["q"][i], m);
        require(gm.q[i].rows() == m, "schema", "form " + std::to_string(i) + " must be "
                                                   + std::to_string(m) + "x" + std::to_string(m));
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b)
                require(gm.q[i].at(a, b) == gm.q[i].at(b, a), "schema",
                        "form " + std::to_string(i) + " is not symmetric");
    }
    if (j.contains("n"))
        require(j["n"].get<int>() == gm.n, "schema", "stored n disagrees with dim W - 5");
    return gm;
}

ojson poly_to_json(const Mpoly& f, const std::vector<std::string>& var_names) {
    require(static_cast<int>(var_names.size()) == f.nvars(), "dimension_mismatch",
            "variable name list does not match the polynomial");
    ojson j;
    j["vars"] = var_names;
    ojson terms = ojson::array();
    for (const auto& [e, c] : f.terms()) {
        ojson t;
        t["exp"] = e;
        t["coef"] = rat_to_string(c);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

Mpoly poly_from_json(const ojson& j) {
    require(j.contains("vars") && j["vars"].is_array(), "schema", "polynomial needs \"vars\"");
    require(j.contains("terms") && j["terms"].is_array(), "schema", "polynomial needs \"terms\"");
    const int nv = static_cast<int>(j["vars"].size());
    Mpoly f(nv);
    for (const auto& t : j["terms"]) {
        require(t.contains("exp") && t["exp"].is_array()
                    && static_cast<int>(t["exp"].size()) == nv && t.contains("coef"),
                "schema", "bad polynomial term " + t.dump());
        Mpoly::Exp e(nv);
        for (int i = 0; i < nv; ++i) {
            e[i] = t["exp"][i].get<int>();
            require(e[i] >= 0, "schema", "negative exponent in polynomial term");
        }
        f.add_term(e, scalar_from_json(t["coef"]));
    }
    return f;
}

ojson strat_to_json(const StratReport& r) {
    ojson j;
    j["prime"] = r.prime;
    j["points"] = r.points;
    j["counts"] = r.counts;
    j["yge3_nonempty"] = r.yge3_nonempty;
    j["yge4_nonempty"] = r.yge4_nonempty;
    j["warnings"] = r.warnings;
    return j;
}

ojson decomp_to_json(const DecompScanReport& r) {
    ojson j;
    j["prime"] = r.prime;
    j["points_scanned"] = r.points_scanned;
    j["decomposables_found"] = r.decomposables.size();
    ojson pts = ojson::array();
    for (const auto& pt : r.decomposables) pts.push_back(std::vector<uint64_t>(pt.begin(), pt.end()));
    j["decomposables"] = std::move(pts);
    j["certificate_kind"] = "per-prime heuristic";
    return j;
}

ojson smooth_to_json(const SmoothnessReport& r) {
    ojson j;
    j["prime"] = r.prime;
    j["points_scanned"] = r.points_scanned;
    j["points_on_x"] = r.points_on_x;
    j["all_rank4"] = r.all_rank4();
    j["singular_points"] = r.singular_points;
    return j;
}

ojson sigma1_to_json(const Sigma1Locus<Rat>& s, const GmData<Rat>& gm) {
    ojson j;
    j["n"] = s.n;
    switch (s.kind) {
        case Sigma1Locus<Rat>::Kind::empty:
            j["kind"] = "empty";
            break;
        case Sigma1Locus<Rat>::Kind::point: {
            j["kind"] = "point";
            ojson pb = ojson::array(), pv = ojson::array();
            for (const Rat& x : s.point_b) pb.push_back(rat_to_string(x));
            for (const Rat& x : s.point_v6) pv.push_back(rat_to_string(x));
            j["point_in_v5_basis"] = std::move(pb);
            j["point_in_v6"] = std::move(pv);
            break;
        }
        case Sigma1Locus<Rat>::Kind::conic: {
            j["kind"] = "conic";
            ojson quads = ojson::array();
            for (int c = 0; c < 5; ++c) {
                Mpoly q(2);
                q.add_term({2, 0}, s.conic_b[c].a);
                q.add_term({1, 1}, s.conic_b[c].b);
                q.add_term({0, 2}, s.conic_b[c].c);
                quads.push_back(poly_to_json(q, {"s", "t"}));
            }
            j["coordinate_quadratics"] = std::move(quads);
            ojson samples = ojson::array();
            const long long st[5][2] = {{1, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 1}};
            for (auto& [sv, tv] : st) {
                std::vector<Rat> b = s.conic_point_b(rat_from_int(sv), rat_from_int(tv));
                std::vector<Rat> v6 = v6_from_b_coords(gm, b);
                ojson sample;
                sample["s"] = sv;
                sample["t"] = tv;
                ojson pv = ojson::array();
                for (const Rat& x : v6) pv.push_back(rat_to_string(x));
                sample["point_in_v6"] = std::move(pv);
                samples.push_back(std::move(sample));
            }
            j["samples"] = std::move(samples);
            break;
        }
    }
    return j;
}

std::string dump_json(const ojson& j) { return j.dump(2) + "\n"; }

} // namespace gmepw
