// apolar: lower and upper bounds for Waring and multihomogeneous ranks.
#include "report_json.hpp"

#include "apolar/bounds.hpp"
#include "apolar/catalecticant.hpp"
#include "apolar/fixtures.hpp"
#include "apolar/formulas.hpp"
#include "apolar/groebner.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace apolar;
using apolar::cli::Json;

namespace {

enum Exit { ok = 0, input_error = 1, guard = 2, invariant = 3 };

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string sig;
    std::string poly;
    std::string strategy = "auto";
    std::optional<std::uint64_t> seed;
    long long max_cells = 10000;
    std::size_t gb_budget = 200000;
    std::string format = "text";
};

void add_common(CLI::App* app, Common& c, bool with_poly = true) {
    app->add_option("--sig", c.sig, "variable groups, e.g. [3] or [2,2]");
    if (with_poly) app->add_option("--poly", c.poly, "polynomial text, or @file");
    app->add_option("--strategy", c.strategy, "rank strategy")->check(CLI::IsMember({"exact", "modp", "auto"}));
    app->add_option("--seed", c.seed, "random seed (overrides APOLAR_RANK_SEED)");
    app->add_option("--max-cells", c.max_cells, "largest multidegree box to scan");
    app->add_option("--gb-budget", c.gb_budget, "S-pair budget per Groebner basis");
    app->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// '@file' indirection. Lines starting with '#' are comments; a comment of the
// form '# signature: [..]' supplies the signature when --sig is absent.
std::string resolve_text(const std::string& arg, std::string* sig_hint = nullptr) {
    if (arg.empty() || arg[0] != '@') return arg;
    std::istringstream in(slurp(arg.substr(1)));
    std::string line, out;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t");
        if (first != std::string::npos && line[first] == '#') {
            auto p = line.find("signature:");
            if (sig_hint && p != std::string::npos && sig_hint->empty()) *sig_hint = line.substr(p + 10);
            continue;
        }
        out += line + "\n";
    }
    return out;
}

std::uint64_t pick_seed(const Common& c) {
    if (c.seed) return *c.seed;
    if (const char* env = std::getenv("APOLAR_RANK_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw InputError("APOLAR_RANK_SEED is not an integer");
        }
    }
    return entropy_seed();
}

ComputeOptions compute_options(const Common& c) {
    ComputeOptions o;
    o.strategy = parse_strategy(c.strategy);
    o.max_cells = c.max_cells;
    o.gb_budget = c.gb_budget;
    return o;
}

MultiPoly read_poly(Common& c) {
    if (c.poly.empty()) throw InputError("--poly is required");
    std::string hint;
    std::string text = resolve_text(c.poly, &hint);
    if (c.sig.empty()) c.sig = hint;
    if (c.sig.empty()) throw InputError("--sig is required");
    return parse_poly(text, VarSignature::parse(c.sig));
}

Multidegree parse_md(const std::string& s) {
    Multidegree a;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), [](char ch) { return ch == '(' || ch == ')' || ch == ' '; }),
                  tok.end());
        if (tok.empty()) continue;
        a.push_back(std::stoi(tok));
    }
    return a;
}

void dump_matrices(const MultiPoly& M, const std::string& dir) {
    std::filesystem::create_directories(dir);
    for (const auto& a : md_box(*M.multidegree())) {
        Catalecticant c = catalecticant(M, a);
        std::string name = "C";
        for (int x : a) name += "_" + std::to_string(x);
        std::ofstream out(std::filesystem::path(dir) / (name + ".mtx"));
        out << "%%MatrixMarket matrix coordinate rational general\n";
        out << "% catalecticant C^" << md_str(a) << "\n";
        out << c.matrix.rows() << " " << c.matrix.cols() << " " << c.matrix.nonzeros() << "\n";
        for (int i = 0; i < c.matrix.rows(); ++i)
            for (const auto& [j, v] : c.matrix.row(i)) out << i + 1 << " " << j + 1 << " " << v.get_str() << "\n";
    }
}

// ---------------------------------------------------------------- analyze

struct AnalyzeArgs {
    Common common;
    std::vector<std::string> a;
    std::vector<std::string> skip;
    std::string dump;
};

int cmd_analyze(AnalyzeArgs& args) {
    MultiPoly M = read_poly(args.common);
    const std::uint64_t seed = pick_seed(args.common);
    Rng rng(seed);
    ReportOptions ro;
    ro.compute = compute_options(args.common);
    for (const auto& s : args.a) ro.a_list.push_back(parse_md(s));
    for (const auto& s : args.skip) {
        if (s == "lt") ro.lt = false;
        else if (s == "rs-eps") ro.rs_eps = false;
        else if (s == "carlini") ro.carlini = false;
        else if (s == "uppers") ro.uppers = false;
        else throw InputError("unknown bound family '" + s + "' (lt, rs-eps, carlini, uppers)");
    }
    if (!args.dump.empty()) dump_matrices(M, args.dump);
    BoundReport r = report(M, ro, rng);
    cli::RunMeta meta{seed, args.common.strategy};
    if (args.common.format == "json")
        std::cout << cli::report_json(M, r, meta).dump(2) << "\n";
    else
        std::cout << cli::report_text(M, r, meta);
    return ok;
}

// ---------------------------------------------------------------- decompose

struct DecomposeArgs {
    std::string family;
    int n = 3, k = 3, a = 2, b = 2;
    bool waring = false;
    std::string sig, exponent;
    std::string format = "text";
};

void print_points(const Decomposition& d, bool ok_flag) {
    std::cout << "# " << d.target << "\n# signature: " << d.polynomial.signature().str() << "\n";
    for (const auto& t : d.terms) std::cout << t.point.str() << "  # coefficient " << t.coefficient.get_str() << "\n";
    std::cout << "# verified: " << (ok_flag ? "true" : "false") << " (" << d.length() << " terms)\n";
}

int cmd_decompose(const DecomposeArgs& args) {
    const std::string& f = args.family;
    if (f == "monomial-power") {
        if (args.sig.empty() || args.exponent.empty()) throw InputError("monomial-power needs --sig and --exp");
        VarSignature sig = VarSignature::parse(args.sig);
        CycloDecomposition d = monomial_power(sig, parse_md(args.exponent));
        bool v = verify_cyclo(d);
        if (args.format == "json") {
            std::cout << cli::decomposition_json(d).dump(2) << "\n";
        } else {
            std::cout << "# " << d.target << "\n# signature: " << sig.str() << "\n";
            for (const auto& t : d.terms) std::cout << d.term_str(t) << "\n";
            std::cout << "# verified: " << (v ? "true" : "false") << " (" << d.length() << " terms)\n";
        }
        return v ? ok : invariant;
    }
    Decomposition d;
    if (f == "monomial") d = monomial_product(args.n);
    else if (f == "glynn") d = glynn_permanent(args.k);
    else if (f == "ryser") d = ryser_permanent(args.k);
    else if (f == "derksen-det3") d = derksen_det3();
    else if (f == "bihomog") d = bihomog_product(args.a, args.b);
    else throw InputError("unknown family '" + f + "' (monomial, glynn, ryser, derksen-det3, bihomog, monomial-power)");
    if (args.waring) d = split_to_waring(d);
    bool v = verify_decomposition(d.polynomial, d.terms).ok;
    if (args.format == "json")
        std::cout << cli::decomposition_json(d).dump(2) << "\n";
    else
        print_points(d, v);
    return v ? ok : invariant;
}

// ---------------------------------------------------------------- check-apolar

struct CheckArgs {
    Common common;
    std::string points;
};

int cmd_check_apolar(CheckArgs& args) {
    if (args.points.empty()) throw InputError("--points is required");
    MultiPoly M = read_poly(args.common);
    std::vector<ProductPoint> pts;
    std::istringstream in(slurp(args.points));
    std::string line;
    while (std::getline(in, line)) {
        std::string body = line.substr(0, line.find('#'));
        if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
        pts.push_back(ProductPoint::parse(body, M.signature()));
    }
    if (pts.empty()) throw InputError("no points in '" + args.points + "'");
    PointsCheck pc = apolarity_check_points(pts, M);
    if (args.common.format == "json") {
        Json j = {{"member", pc.member}, {"points", pts.size()}};
        Json cs = Json::array();
        for (const auto& c : pc.coefficients) cs.push_back(c.get_str());
        if (pc.member) j["coefficients"] = cs;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (pc.member ? "true" : "false") << "\n";
        if (pc.member)
            for (std::size_t i = 0; i < pts.size(); ++i)
                std::cout << pc.coefficients[i].get_str() << "  " << pts[i].str() << "\n";
    }
    return ok;
}

// ---------------------------------------------------------------- groebner

struct GroebnerArgs {
    Common common;
    std::string gens;
};

int cmd_groebner(GroebnerArgs& args) {
    if (args.gens.empty()) throw InputError("--gens is required");
    std::string hint;
    std::string text = resolve_text(args.gens, &hint);
    if (args.common.sig.empty()) args.common.sig = hint;
    if (args.common.sig.empty()) throw InputError("--sig is required");
    VarSignature sig = VarSignature::parse(args.common.sig);
    std::vector<MultiPoly> gens;
    std::string piece;
    for (char ch : text + ";") {
        if (ch == ';' || ch == '\n') {
            if (piece.find_first_not_of(" \t\r") != std::string::npos) gens.push_back(parse_poly(piece, sig));
            piece.clear();
        } else {
            piece += ch;
        }
    }
    if (gens.empty()) throw InputError("no generators");
    Rng rng(pick_seed(args.common));
    ComputeOptions co = compute_options(args.common);
    GbOptions go = choose_gb_field(gens, co, rng);
    GroebnerBasis gb = buchberger(gens, go);
    const int dim = affine_dim(gens, sig, go);
    if (args.common.format == "json") {
        Json basis = Json::array();
        for (const auto& p : gb.polys) basis.push_back(to_string(p));
        std::cout << Json{{"basis", basis}, {"dimension", dim}, {"prime", gb.prime}, {"pairs", gb.pairs_processed}}.dump(2)
                  << "\n";
    } else {
        for (const auto& p : gb.polys) std::cout << to_string(p) << "\n";
        std::cout << "# dimension " << dim << (gb.prime ? " (mod " + std::to_string(gb.prime) + ")" : "") << "\n";
    }
    return ok;
}

// ---------------------------------------------------------------- fixture

int cmd_fixture(const std::string& name, std::uint64_t seed) {
    MultiPoly M = fixtures::by_name(name, seed);
    std::cout << "# fixture " << name;
    if (name == "bi") std::cout << " (seed " << seed << ")";
    std::cout << "\n# signature: " << M.signature().str() << "\n" << to_string(M) << "\n";
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lower and upper bounds for Waring and multihomogeneous ranks"};
    app.require_subcommand(1);

    AnalyzeArgs analyze;
    auto* an = app.add_subcommand("analyze", "catalecticant profile, apolar algebra and every bound");
    add_common(an, analyze.common);
    an->add_option("--a", analyze.a, "restrict a-scans to these multidegrees (repeatable, e.g. --a 1,1)");
    an->add_option("--skip", analyze.skip, "bound families to skip: lt, rs-eps, carlini, uppers");
    an->add_option("--dump-matrices", analyze.dump, "write every catalecticant as Matrix Market into DIR");

    DecomposeArgs dec;
    auto* de = app.add_subcommand("decompose", "emit and verify a known decomposition");
    de->add_option("family", dec.family, "monomial | glynn | ryser | derksen-det3 | bihomog | monomial-power")->required();
    de->add_option("--n", dec.n, "monomial: number of variables");
    de->add_option("--k", dec.k, "glynn/ryser: matrix size");
    de->add_option("--a", dec.a, "bihomog: first group size");
    de->add_option("--b", dec.b, "bihomog: second group size");
    de->add_flag("--waring", dec.waring, "expand split products into powers");
    de->add_option("--sig", dec.sig, "monomial-power: signature");
    de->add_option("--exp", dec.exponent, "monomial-power: exponent vector, comma separated");
    de->add_option("--format", dec.format)->check(CLI::IsMember({"text", "json"}));

    CheckArgs check;
    auto* ca = app.add_subcommand("check-apolar", "is M in the span of the given product point powers?");
    add_common(ca, check.common);
    ca->add_option("--points", check.points, "points file")->required();

    GroebnerArgs gro;
    auto* gb = app.add_subcommand("groebner", "reduced Groebner basis and affine dimension");
    add_common(gb, gro.common, false);
    gb->add_option("--gens", gro.gens, "generators separated by ';' or newlines, or @file")->required();

    std::string fixture_name;
    std::uint64_t fixture_seed = 20240601;
    auto* fx = app.add_subcommand("fixture", "print a built-in example polynomial");
    fx->add_option("name", fixture_name, "fixture name")->required();
    fx->add_option("--seed", fixture_seed, "generation seed (bi only)");
    fx->add_flag_callback("--list", [] {
        for (const auto& n : fixtures::names()) std::cout << n << "\n";
        std::exit(0);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : input_error;
    }

    try {
        if (*an) return cmd_analyze(analyze);
        if (*de) return cmd_decompose(dec);
        if (*ca) return cmd_check_apolar(check);
        if (*gb) return cmd_groebner(gro);
        if (*fx) return cmd_fixture(fixture_name, fixture_seed);
    } catch (const ProfileTooLarge& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return guard;
    } catch (const GbBudgetExceeded& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return guard;
    } catch (const ReportInvariantViolation& e) {
        std::cerr << "invariant violated: " << e.what() << "\n";
        return invariant;
    } catch (const std::logic_error& e) {
        // invalid_argument derives from logic_error but is an input problem
        if (dynamic_cast<const std::invalid_argument*>(&e)) {
            std::cerr << "input error: " << e.what() << "\n";
            return input_error;
        }
        std::cerr << "internal check failed: " << e.what() << "\n";
        return invariant;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return input_error;
    }
    return ok;
}
