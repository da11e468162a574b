#include "gmepw/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gmepw/epw.hpp"
#include "gmepw/generate.hpp"
#include "gmepw/json_io.hpp"
#include "gmepw/lattice.hpp"
#include "gmepw/scan.hpp"

namespace gmepw {

namespace {

ojson read_json_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "io", "cannot open " + path);
    ojson j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        fail("schema", path + ": " + e.what());
    }
    return j;
}

// JSON goes to --out when given (with a one-line summary on stdout),
// otherwise to stdout verbatim.
void emit(const ojson& j, const std::string& out_path, const std::string& summary) {
    if (out_path.empty()) {
        std::cout << dump_json(j);
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    require(out.good(), "io", "cannot write " + out_path);
    out << dump_json(j);
    std::cout << summary << "\n";
}

std::array<Rat, 6> parse_covector(const std::string& text) {
    std::array<Rat, 6> lam;
    std::stringstream ss(text);
    std::string piece;
    int i = 0;
    while (std::getline(ss, piece, ',')) {
        require(i < 6, "schema", "covector needs exactly 6 comma-separated entries");
        lam[i++] = rat_from_string(piece);
    }
    require(i == 6, "schema", "covector needs exactly 6 comma-separated entries");
    return lam;
}

// first admissible v0 for a covector: a scaled coordinate vector
std::vector<Rat> admissible_v0(const std::array<Rat, 6>& lam) {
    std::vector<Rat> v0(6, Rat(0));
    for (int i = 0; i < 6; ++i)
        if (!is_zero(lam[i])) {
            v0[i] = Rat(1) / lam[i];
            return v0;
        }
    fail("bad_covector", "covector is zero");
}

int cmd_gen(uint64_t seed, long long height, int intersection, const std::string& out) {
    Lagrangian<Rat> a = random_lagrangian_with_intersection(seed, height, intersection);
    ojson j = lagrangian_to_json(a);
    std::string summary = "generated certified Lagrangian (seed " + std::to_string(seed) + ")";
    if (height == 0) summary += " [degenerate: zero graph matrix]";
    emit(j, out, summary);
    return 0;
}

int cmd_check(const std::string& in, const std::vector<uint64_t>& primes, uint64_t budget,
              const std::string& out) {
    Lagrangian<Rat> a = lagrangian_from_json(read_json_file(in));
    ojson j;
    j["lagrangian"] = true;
    j["dimension"] = a.dim();
    ojson scans = ojson::array();
    bool clean = true;
    for (uint64_t p : primes) {
        DecompScanReport rep = scan_decomposables(lagrangian_mod_p(a, p), p, budget);
        clean = clean && rep.decomposables.empty();
        scans.push_back(decomp_to_json(rep));
    }
    j["scans"] = std::move(scans);
    j["decomposable_free"] = clean;
    j["certificate_kind"] = "per-prime heuristic";
    emit(j, out, clean ? "no decomposable vectors found (per-prime heuristic)"
                       : "decomposable vectors FOUND");
    return 0;
}

int cmd_gm(const std::string& in, const std::string& lambda_text, const std::string& out) {
    Lagrangian<Rat> a = lagrangian_from_json(read_json_file(in));
    GmData<Rat> gm = lagrangian_to_gm(a, parse_covector(lambda_text));
    ojson j = gm_to_json(gm);
    std::string summary = "GM data: n = " + std::to_string(gm.n) + ", dim W = "
        + std::to_string(gm.w_dim()) + (gm.degenerate ? " [degenerate]" : "");
    emit(j, out, summary);
    return 0;
}

int cmd_roundtrip(const std::string& in, const std::string& lambda_text) {
    Lagrangian<Rat> a = lagrangian_from_json(read_json_file(in));
    std::array<Rat, 6> lam = parse_covector(lambda_text);
    GmData<Rat> gm = lagrangian_to_gm(a, lam);
    Lagrangian<Rat> back = gm_to_lagrangian(gm, admissible_v0(lam));
    if (back == a) {
        std::cout << "roundtrip: PASS (echelon bases identical)\n";
        return 0;
    }
    std::cout << "roundtrip: FAIL\n";
    std::cerr << dump_json(ojson{{"error", "roundtrip_mismatch"},
                                 {"message", "gm_to_lagrangian(lagrangian_to_gm(A)) != A"}});
    return 1;
}

int cmd_sextic(const std::string& in, int chart, const std::string& out) {
    Lagrangian<Rat> a = lagrangian_from_json(read_json_file(in));
    Mpoly f = chart_sextic(a, chart);
    std::vector<std::string> names;
    for (int v : chart_variable_indices(chart)) names.push_back("x" + std::to_string(v));
    ojson j = poly_to_json(f, names);
    j["chart"] = chart;
    j["total_degree"] = f.total_degree();
    std::string summary = "chart " + std::to_string(chart) + " determinant: degree "
        + std::to_string(f.total_degree()) + ", " + std::to_string(f.term_count()) + " terms";
    if (f.zero()) summary += " [identically zero: every point is degenerate]";
    emit(j, out, summary);
    return 0;
}

int cmd_dis(const std::string& in, const std::string& out) {
    GmData<Rat> gm = gm_from_json(read_json_file(in));
    DiscriminantVerdict v = discriminant_sextic(gm);
    ojson j;
    j["n"] = gm.n;
    j["determinant_degree"] = v.determinant.total_degree();
    j["quotient"] = poly_to_json(v.quotient, {"v0", "v1", "v2", "v3", "v4", "v5"});
    j["chart"] = v.chart;
    j["proportionality_scale"] = rat_to_string(v.scale);
    j["verdict"] = "equal up to a nonzero scalar";
    emit(j, out,
         "discriminant sextic matches the chart sextic (scale " + rat_to_string(v.scale) + ")");
    return 0;
}

int cmd_scan(const std::string& in, uint64_t p, uint64_t budget, bool serial,
             const std::string& out) {
    Lagrangian<Rat> a = lagrangian_from_json(read_json_file(in));
    StratReport rep = stratify_scan(lagrangian_mod_p(a, p), p, budget, !serial);
    ojson j = strat_to_json(rep);
    std::ostringstream os;
    os << "P^5(F_" << p << "): " << rep.points << " points; counts";
    for (int k = 0; k <= 10; ++k) os << " " << rep.counts[k];
    emit(j, out, os.str());
    return 0;
}

int cmd_dual(const std::string& in, const std::string& out) {
    Lagrangian<Rat> a = lagrangian_from_json(read_json_file(in));
    Lagrangian<Rat> d = dual_lagrangian(a);
    ojson j = lagrangian_to_json(d);
    j["space"] = "dual";
    emit(j, out, "dual Lagrangian computed (coordinates in the dual wedge basis)");
    return 0;
}

int cmd_sigma1(const std::string& in, const std::string& out) {
    GmData<Rat> gm = gm_from_json(read_json_file(in));
    Sigma1Locus<Rat> s = sigma1(gm);
    ojson j = sigma1_to_json(s, gm);
    emit(j, out, "sigma1 locus: " + std::string(j["kind"].get<std::string>()));
    return 0;
}

GramLattice gram_from_text(const std::string& text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail("schema", std::string("bad Gram matrix JSON: ") + e.what());
    }
    require(j.is_array(), "schema", "Gram matrix must be a JSON array of arrays");
    std::vector<std::vector<long long>> m;
    for (const auto& row : j) {
        require(row.is_array(), "schema", "Gram matrix must be a JSON array of arrays");
        std::vector<long long> r;
        for (const auto& x : row) {
            if (x.is_number_integer()) r.push_back(x.get<long long>());
            else if (x.is_string()) r.push_back(std::stoll(x.get<std::string>()));
            else fail("schema", "Gram entries must be integers");
        }
        m.push_back(std::move(r));
    }
    return GramLattice(m);
}

int cmd_lattice(const std::string& sub, const std::vector<std::string>& args,
                const std::string& out) {
    ojson j;
    std::string summary;
    if (sub == "disc") {
        require(args.size() == 1, "schema", "usage: lattice disc '<gram-json>'");
        mpz_class d = discriminant(gram_from_text(args[0]));
        j["discriminant"] = d.get_str();
        summary = "discriminant = " + d.get_str();
    } else if (sub == "signature") {
        require(args.size() == 1, "schema", "usage: lattice signature '<gram-json>'");
        Signature s = signature(gram_from_text(args[0]));
        j["signature"] = {s.positive, s.negative, s.zero};
        summary = "signature = (" + std::to_string(s.positive) + "," + std::to_string(s.negative)
            + "," + std::to_string(s.zero) + ")";
    } else if (sub == "lambda") {
        GramLattice l = lambda_lattice();
        Signature s = signature(l);
        j["rank"] = l.rank;
        j["gram"] = l.entries;
        j["determinant"] = discriminant(l).get_str();
        j["signature"] = {s.positive, s.negative, s.zero};
        j["even"] = lattice_even(l);
        summary = "rank-22 lattice: det " + discriminant(l).get_str() + ", signature ("
            + std::to_string(s.positive) + "," + std::to_string(s.negative) + ")";
    } else if (sub == "dd") {
        require(args.size() == 1, "schema", "usage: lattice dd <d>");
        long long d = std::stoll(args[0]);
        j["d"] = d;
        j["components"] = to_string(dd_components(d));
        summary = "components(" + std::to_string(d) + ") = " + to_string(dd_components(d));
    } else if (sub == "k3") {
        require(args.size() == 1, "schema", "usage: lattice k3 <d>");
        long long d = std::stoll(args[0]);
        j["d"] = d;
        j["k3_associated"] = k3_associated(d);
        summary = std::to_string(d) + (k3_associated(d) ? " is" : " is not") + " K3-associated";
    } else if (sub == "hodge") {
        require(args.size() == 1, "schema", "usage: lattice hodge <n>");
        int n = std::stoi(args[0]);
        HodgeDiamond h = hodge_diamond(n);
        j["n"] = n;
        j["diamond"] = h.rows;
        j["vanishing"] = h.vanishing;
        std::ostringstream os;
        os << "middle row:";
        for (long long x : h.rows[static_cast<size_t>(n)]) os << " " << x;
        summary = os.str();
    } else if (sub == "moduli") {
        require(args.size() == 1, "schema", "usage: lattice moduli <n>");
        int n = std::stoi(args[0]);
        j["n"] = n;
        j["dimension"] = moduli_dimension(n);
        summary = "moduli dimension = " + std::to_string(moduli_dimension(n));
    } else if (sub == "subdisc") {
        require(args.size() == 2, "schema", "usage: lattice subdisc '<classes-json>' '<gram-json>'");
        ojson cj;
        try {
            cj = ojson::parse(args[0]);
        } catch (const nlohmann::json::exception& e) {
            fail("schema", std::string("bad classes JSON: ") + e.what());
        }
        std::vector<std::vector<long long>> classes;
        for (const auto& row : cj) classes.push_back(row.get<std::vector<long long>>());
        GramLattice ambient = gram_from_text(args[1]);
        GramLattice g = sublattice_gram(classes, ambient);
        j["gram"] = g.entries;
        j["discriminant"] = sublattice_discriminant(classes, ambient).get_str();
        summary = "sublattice discriminant = " + sublattice_discriminant(classes, ambient).get_str();
    } else {
        fail("schema", "unknown lattice subcommand: " + sub);
    }
    emit(j, out, summary);
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"exact linear algebra for GM data, Lagrangian subspaces and EPW stratifications"};
    app.require_subcommand(1);

    uint64_t seed = 1;
    long long height = 9;
    int intersection = 0;
    int chart = 0;
    uint64_t budget = kDefaultScanBudget;
    bool serial = false;
    std::vector<uint64_t> primes;
    uint64_t prime = 3;
    std::string in_path, out_path, lambda_text = "1,0,0,0,0,0";
    std::string lattice_sub;
    std::vector<std::string> lattice_args;

    auto* gen = app.add_subcommand("gen", "emit a seeded random graph Lagrangian");
    gen->add_option("--seed", seed, "64-bit generator seed");
    gen->add_option("--height", height, "entry bound for the symmetric matrix")->check(CLI::NonNegativeNumber);
    gen->add_option("--intersection", intersection,
                    "prescribed dimension of the intersection with the hyperplane triples");
    gen->add_option("--out", out_path, "output JSON path");

    auto* check = app.add_subcommand("check", "certify a Lagrangian and scan for decomposables");
    check->add_option("--in", in_path, "Lagrangian JSON")->required();
    check->add_option("--prime", primes, "primes for the decomposable scans");
    check->add_option("--budget", budget, "enumeration budget");
    check->add_option("--out", out_path, "output JSON path");

    auto* gmc = app.add_subcommand("gm", "build GM data from a Lagrangian and a covector");
    gmc->add_option("--in", in_path, "Lagrangian JSON")->required();
    gmc->add_option("--lambda", lambda_text, "covector, 6 comma-separated rationals");
    gmc->add_option("--out", out_path, "output JSON path");

    auto* rt = app.add_subcommand("roundtrip", "check that the two constructions invert each other");
    rt->add_option("--in", in_path, "Lagrangian JSON")->required();
    rt->add_option("--lambda", lambda_text, "covector, 6 comma-separated rationals");

    auto* sx = app.add_subcommand("sextic", "chart determinant of the degeneracy locus");
    sx->add_option("--in", in_path, "Lagrangian JSON")->required();
    sx->add_option("--chart", chart, "chart index 0..5")->check(CLI::Range(0, 5));
    sx->add_option("--out", out_path, "output JSON path");

    auto* dis = app.add_subcommand("dis", "discriminant sextic comparison for GM data");
    dis->add_option("--in", in_path, "GM JSON")->required();
    dis->add_option("--out", out_path, "output JSON path");

    auto* sc = app.add_subcommand("scan", "multiplicity histogram over P^5(F_p)");
    sc->add_option("--in", in_path, "Lagrangian JSON")->required();
    sc->add_option("--prime", prime, "field characteristic");
    sc->add_option("--budget", budget, "enumeration budget");
    sc->add_flag("--serial", serial, "use the serial reference kernel");
    sc->add_option("--out", out_path, "output JSON path");

    auto* du = app.add_subcommand("dual", "annihilator Lagrangian in the dual space");
    du->add_option("--in", in_path, "Lagrangian JSON")->required();
    du->add_option("--out", out_path, "output JSON path");

    auto* sg = app.add_subcommand("sigma1", "kernel locus of the annihilator of W");
    sg->add_option("--in", in_path, "GM JSON")->required();
    sg->add_option("--out", out_path, "output JSON path");

    auto* lat = app.add_subcommand("lattice", "integer lattice tables and predicates");
    lat->add_option("subcommand", lattice_sub,
                    "disc | signature | lambda | dd | k3 | hodge | moduli | subdisc")
        ->required();
    // raw positionals; going through a vector option would re-tokenize
    // bracketed JSON arguments
    lat->allow_extras();
    lat->add_option("--out", out_path, "output JSON path");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(seed, height, intersection, out_path);
        if (check->parsed()) {
            if (primes.empty()) primes = {2, 3};
            return cmd_check(in_path, primes, budget, out_path);
        }
        if (gmc->parsed()) return cmd_gm(in_path, lambda_text, out_path);
        if (rt->parsed()) return cmd_roundtrip(in_path, lambda_text);
        if (sx->parsed()) return cmd_sextic(in_path, chart, out_path);
        if (dis->parsed()) return cmd_dis(in_path, out_path);
        if (sc->parsed()) return cmd_scan(in_path, prime, budget, serial, out_path);
        if (du->parsed()) return cmd_dual(in_path, out_path);
        if (sg->parsed()) return cmd_sigma1(in_path, out_path);
        if (lat->parsed()) {
            lattice_args = lat->remaining();
            return cmd_lattice(lattice_sub, lattice_args, out_path);
        }
    } catch (const Error& e) {
        std::cerr << dump_json(ojson{{"error", e.kind()}, {"message", e.what()}});
        return 1;
    } catch (const std::exception& e) {
        std::cerr << dump_json(ojson{{"error", "internal"}, {"message", e.what()}});
        return 1;
    }
    return 2;
}

} // namespace gmepw
