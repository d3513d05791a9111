#include "apolar/bounds.hpp"

#include "apolar/catalecticant.hpp"
#include "apolar/fixtures.hpp"
#include "apolar/sigma.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace apolar {

std::string target_name(Target t) {
    switch (t) {
        case Target::waring: return "waring";
        case Target::multihomogeneous: return "multihomogeneous";
        case Target::k_ary: return "k-ary";
    }
    return "?";
}

namespace {

long ceil_div(long a, long b) { return (a + b - 1) / b; }

std::vector<long> as_params(const Multidegree& a) { return std::vector<long>(a.begin(), a.end()); }

int single_degree(const MultiPoly& F, const char* who) {
    if (F.signature().groups() != 1) throw std::invalid_argument(std::string(who) + " expects a single-group form");
    return require_homogeneous(F)[0];
}

struct Biform {
    int m, n, D;
};

Biform require_biform(const MultiPoly& W, const char* who) {
    Multidegree d = require_homogeneous(W);
    if (W.signature().groups() != 2 || d[0] != 1)
        throw std::invalid_argument(std::string(who) + " expects a biform of multidegree (1, d)");
    return {W.signature().size(0), W.signature().size(1), d[1]};
}

}  // namespace

// ---------------------------------------------------------------- lower bounds

BoundEntry bound_catalecticant(const std::vector<ProfileCell>& profile, Target target) {
    BoundEntry e{"catalecticant", target, 0, {}, true, "", "catalecticant", true};
    const ProfileCell* best = nullptr;
    for (const auto& c : profile)
        if (!best || c.rank > best->rank) best = &c;
    if (best) {
        e.value = best->rank;
        e.parameters = {{"a", as_params(best->a)}};
        e.certified = best->certified;
    }
    return e;
}

BoundEntry bound_catalecticant(const MultiPoly& M, const ComputeOptions& opt, Rng& rng) {
    Target t = M.signature().groups() == 1 ? Target::waring : Target::multihomogeneous;
    return bound_catalecticant(profile(M, opt.strategy, rng, opt.max_cells), t);
}

BoundEntry bound_lt(const MultiPoly& F, int a, const ComputeOptions& opt, Rng& rng, std::optional<bool> concise) {
    const int d = single_degree(F, "bound_lt");
    if (a < 0 || a >= d) throw std::invalid_argument("bound_lt needs 0 <= a < d");
    BoundEntry e{"lt", Target::waring, 0, {{"a", {a}}}, true, "", "singular-locus", true};
    if (!concise) concise = conciseness_check(F, opt.strategy, rng).overall;
    RankResult r = catalecticant_rank(F, {d - a}, opt.strategy, rng);
    e.certified = r.certified;
    if (!*concise) {
        e.applicable = false;
        e.reason = "conciseness check failed";
        e.value = r.rank;
        return e;
    }
    DimResult s = sigma_hat_dim(F, a, opt, rng);
    e.value = r.rank + s.dim;
    e.certified = e.certified && s.certified;
    return e;
}

BoundEntry bound_lt_multi(const MultiPoly& M, const Multidegree& a, const ComputeOptions& opt, Rng& rng) {
    Multidegree d = require_homogeneous(M);
    if (!md_leq(a, d) || std::any_of(a.begin(), a.end(), [](int x) { return x < 0; }))
        throw std::invalid_argument("bound_lt_multi needs 0 <= a <= d");
    BoundEntry e{"lt-multi", Target::multihomogeneous, 0, {{"a", as_params(a)}}, true, "", "singular-locus-multi", true};
    const Multidegree da = md_sub(d, a);
    RankResult r = catalecticant_rank(M, da, opt.strategy, rng);
    e.certified = r.certified;
    if (!injectivity_check(M, md_rad(da), opt.strategy, rng)) {
        e.applicable = false;
        e.reason = "injectivity check failed for C^" + md_str(md_rad(da));
        e.value = r.rank;
        return e;
    }
    DimResult s = sigma_dim_multi(M, a, opt, rng);
    // Groups with a_i = d_i contribute a whole projective factor to Sigma_a
    // that collapses in the Segre-Veronese image; count only the projection.
    int dim = s.dim;
    if (dim >= 0)
        for (int g = 0; g < M.signature().groups(); ++g)
            if (a[g] == d[g]) dim -= M.signature().size(g) - 1;
    e.value = r.rank + dim + 1;
    e.certified = e.certified && s.certified;
    return e;
}

BoundEntry bound_series_v1(const MultiPoly& W, int a, const ComputeOptions& opt, Rng& rng) {
    Biform b = require_biform(W, "bound_series_v1");
    if (a < 0 || a >= b.D) throw std::invalid_argument("bound_series_v1 needs 0 <= a < d");
    BoundEntry e{"series-v1", Target::multihomogeneous, 0, {{"a", {a}}}, true, "", "series-singular-v1", true};
    RankResult surj = catalecticant_rank(W, {1, b.D - 1}, opt.strategy, rng);
    RankResult r = catalecticant_rank(W, {0, b.D - a}, opt.strategy, rng);
    e.certified = surj.certified && r.certified;
    if (surj.rank != b.n) {
        e.applicable = false;
        e.reason = "series not concise: C^(1," + std::to_string(b.D - 1) + ") not surjective";
        e.value = r.rank;
        return e;
    }
    std::vector<MultiPoly> image = catalecticant_image(W, {1, a});
    DimResult s = image.empty() ? DimResult{b.n, true} : affine_dim_in_group(image, 1, opt, rng);
    e.value = r.rank + s.dim;
    e.certified = e.certified && s.certified;
    return e;
}

BoundEntry bound_series_v2(const MultiPoly& W, int a, const ComputeOptions& opt, Rng& rng) {
    Biform b = require_biform(W, "bound_series_v2");
    if (a < 0 || a >= b.D) throw std::invalid_argument("bound_series_v2 needs 0 <= a < d");
    BoundEntry e{"series-v2", Target::multihomogeneous, 0, {{"a", {a}}}, true, "", "series-singular-v2", true};
    RankResult surj = catalecticant_rank(W, {0, b.D - 1}, opt.strategy, rng);
    RankResult r = catalecticant_rank(W, {1, b.D - a}, opt.strategy, rng);
    e.certified = surj.certified && r.certified;
    if (surj.rank != static_cast<long>(b.m) * b.n) {
        e.applicable = false;
        e.reason = "C^(0," + std::to_string(b.D - 1) + ") not surjective";
        e.value = r.rank;
        return e;
    }
    DimResult s = sigma_dim_multi(W, {0, a}, opt, rng);
    e.value = r.rank + s.dim + 1;
    e.certified = e.certified && s.certified;
    return e;
}

BoundEntry bound_rs(const ApolarProfile& ap) {
    BoundEntry e{"rs", Target::waring, 0, {}, true, "", "ranestad-schreyer", ap.certified};
    const int delta = std::max(ap.delta, 1);
    e.value = ceil_div(ap.length, delta);
    e.parameters = {{"length", {ap.length}}, {"delta", {delta}}};
    return e;
}

BoundEntry bound_rs(const MultiPoly& F, const ComputeOptions& opt, Rng& rng) {
    single_degree(F, "bound_rs");
    return bound_rs(apolar_profile(F, opt, rng));
}

BoundEntry bound_rs_eps(const MultiPoly& F, const ApolarProfile& ap, const ComputeOptions& opt, Rng& rng,
                        const std::vector<MultiPoly>* generators) {
    const int d = single_degree(F, "bound_rs_eps");
    BoundEntry e{"rs-eps", Target::waring, 0, {}, true, "", "ranestad-schreyer-eps", ap.certified};
    std::vector<MultiPoly> own;
    if (!generators) {
        own = minimal_generators(F, ap.generators);
        generators = &own;
    }
    for (int eps = 1; eps <= d + 1; ++eps) {
        std::vector<MultiPoly> gens;
        for (const auto& g : *generators)
            if (g.total_degree() <= eps) gens.push_back(g);
        if (gens.empty()) continue;
        DimResult dim = gb_dimension(gens, F.signature(), opt, rng);
        e.certified = e.certified && dim.certified;
        if (dim.dim <= 0) {
            e.value = ceil_div(ap.length, eps);
            e.parameters = {{"length", {ap.length}}, {"epsilon", {eps}}};
            return e;
        }
    }
    throw std::logic_error("apolar ideal is not zero-dimensional up to degree d+1");
}

BoundEntry bound_rs_multi(const ApolarProfile& ap) {
    BoundEntry e{"rs-multi", Target::multihomogeneous, 0, {}, true, "", "ranestad-schreyer-multi", ap.certified};
    long prod = 1;
    std::vector<long> deltas;
    for (int x : ap.delta_multi) {
        prod *= std::max(x, 1);
        deltas.push_back(std::max(x, 1));
    }
    e.value = ceil_div(ap.length, prod);
    e.parameters = {{"length", {ap.length}}, {"delta", deltas}};
    return e;
}

GeneratorPrefix zero_dim_prefix(const MultiPoly& F, const std::vector<MultiPoly>& gens, const ComputeOptions& opt,
                                Rng& rng) {
    GeneratorPrefix out;
    auto zero_dim = [&](std::size_t j) {
        std::vector<MultiPoly> prefix(gens.begin(), gens.begin() + static_cast<long>(j));
        DimResult dim = gb_dimension(prefix, F.signature(), opt, rng);
        out.certified = out.certified && dim.certified;
        return dim.dim <= 0;
    };
    if (gens.empty() || !zero_dim(gens.size())) throw std::logic_error("apolar ideal generators are not zero-dimensional");
    // zero-dimensionality is monotone in the prefix, so bisect; fewer than n
    // generators never suffice
    std::size_t lo = std::clamp<std::size_t>(static_cast<std::size_t>(F.signature().total()), 1, gens.size());
    std::size_t hi = gens.size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (zero_dim(mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    for (std::size_t i = 0; i < hi; ++i) out.degrees.push_back(gens[i].total_degree());
    std::sort(out.degrees.begin(), out.degrees.end());
    return out;
}

BoundEntry bound_carlini_k(const GeneratorPrefix& prefix, long length, int k) {
    if (k < 1) throw std::invalid_argument("bound_carlini_k needs k >= 1");
    BoundEntry e{"carlini-k", k == 1 ? Target::waring : Target::k_ary, 0, {{"k", {k}}}, true, "", "carlini-k",
                 prefix.certified};
    long prod = 1;
    const auto& deg = prefix.degrees;
    for (std::size_t i = 0; i < deg.size() && i < static_cast<std::size_t>(k); ++i) prod *= deg[deg.size() - 1 - i];
    e.value = ceil_div(length, prod);
    e.parameters.push_back({"prefix", {static_cast<long>(deg.size())}});
    e.parameters.push_back({"length", {length}});
    return e;
}

BoundEntry bound_carlini_k(const MultiPoly& F, int k, const ApolarProfile& ap, const ComputeOptions& opt, Rng& rng) {
    single_degree(F, "bound_carlini_k");
    if (k < 1 || k > F.signature().total()) throw std::invalid_argument("bound_carlini_k needs 1 <= k <= n");
    GeneratorPrefix p = zero_dim_prefix(F, minimal_generators(F, ap.generators), opt, rng);
    BoundEntry e = bound_carlini_k(p, ap.length, k);
    e.certified = e.certified && ap.certified;
    return e;
}

RkBracket monomial_rk_conjecture(const std::vector<int>& degrees, int k) {
    const int n = static_cast<int>(degrees.size());
    if (k < 1 || k > n) throw std::invalid_argument("monomial_rk_conjecture needs 1 <= k <= n");
    if (!std::is_sorted(degrees.begin(), degrees.end())) throw std::invalid_argument("degrees must be ascending");
    RkBracket b{1, 1, true};
    for (int i = 0; i < n - k; ++i) b.lower *= degrees[i] + 1;
    for (int i = 1; i < n - k + 1; ++i) b.upper *= degrees[i] + 1;
    for (int i = 1; i < n - k + 1; ++i) b.equal = b.equal && degrees[i] == degrees[0];
    return b;
}

// ---------------------------------------------------------------- closed forms

namespace {

BigRational pow_q(const BigRational& b, long e) {
    BigRational r = 1;
    for (long i = 0; i < e; ++i) r *= b;
    return r;
}

BigInt ceil_q(const BigRational& q) {
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

BigInt pow2(long k) { return BigInt(1) << static_cast<mp_bitcnt_t>(k); }

void need(const std::vector<long>& p, std::size_t count, const std::string& name) {
    if (p.size() != count) throw std::invalid_argument(name + " takes " + std::to_string(count) + " parameter(s)");
    for (long x : p)
        if (x < 1) throw std::invalid_argument(name + " parameters must be positive");
}

}  // namespace

std::vector<std::string> upper_formula_names() {
    return {"derksen_waring", "derksen_split",  "glynn_waring",    "ryser_waring",      "monomial_waring",
            "bihomog_mh",     "monomial_power", "rookfree_series", "minors_series", "permanents_series"};
}

BigInt upper_formula(const std::string& name, const std::vector<long>& p) {
    const BigRational five_sixths(5, 6);
    if (name == "derksen_waring") {
        need(p, 1, name);
        return ceil_q(pow_q(five_sixths, p[0] / 3) * BigRational(pow2(p[0] - 1) * factorial(static_cast<int>(p[0]))));
    }
    if (name == "derksen_split") {
        need(p, 1, name);
        return ceil_q(pow_q(five_sixths, p[0] / 3) * BigRational(factorial(static_cast<int>(p[0]))));
    }
    if (name == "glynn_waring") {
        need(p, 1, name);
        return pow2(2 * p[0] - 2);
    }
    if (name == "ryser_waring") {
        need(p, 1, name);
        return pow2(2 * p[0] - 1) - pow2(p[0] - 1);
    }
    if (name == "monomial_waring") {
        need(p, 1, name);
        return pow2(p[0] - 1);
    }
    if (name == "bihomog_mh") {
        need(p, 2, name);
        return pow2(p[0] + p[1] - 2);
    }
    if (name == "monomial_power") {
        if (p.empty()) throw std::invalid_argument(name + " needs the exponents");
        std::vector<long> d = p;
        std::sort(d.begin(), d.end());
        BigInt r = 1;
        for (std::size_t i = 1; i < d.size(); ++i) r *= d[i] + 1;
        return r;
    }
    if (name == "rookfree_series" || name == "minors_series" || name == "permanents_series") {
        need(p, 3, name);
        const int m = static_cast<int>(p[0]), n = static_cast<int>(p[1]), k = static_cast<int>(p[2]);
        if (k > std::min(m, n)) throw std::invalid_argument(name + " needs k <= min(m, n)");
        BigInt dim = binomial(m, k) * binomial(n, k);
        if (name == "rookfree_series") return pow2(k - 1) * dim * factorial(k);
        if (name == "minors_series")
            return ceil_q(pow_q(five_sixths, k / 3) * BigRational(pow2(k - 1) * factorial(k) * dim));
        return pow2(2 * k - 2) * dim;
    }
    throw std::invalid_argument("unknown upper-bound formula '" + name + "'");
}

// ---------------------------------------------------------------- report

MultiPoly flatten(const MultiPoly& M) {
    MultiPoly out(VarSignature({M.signature().total()}));
    for (const auto& [e, c] : M.terms()) out.add_term(e, c);
    return out;
}

std::pair<long, std::string> best_lower_of(const std::vector<BoundEntry>& entries, Target t) {
    long best = 0;
    std::string prov;
    for (const auto& e : entries) {
        if (!e.applicable || e.target != t) continue;
        if (e.value > best || (e.value == best && (prov.empty() || e.provenance < prov))) {
            best = e.value;
            prov = e.provenance;
        }
    }
    return {best, prov};
}

void check_report_invariant(const BoundReport& r) {
    auto min_upper = [&](Target t) -> std::optional<BigInt> {
        std::optional<BigInt> u;
        for (const auto& x : r.uppers)
            if (x.verified && x.target == t && (!u || x.value < *u)) u = x.value;
        return u;
    };
    for (Target t : {Target::waring, Target::multihomogeneous}) {
        auto [lower, prov] = best_lower_of(r.entries, t);
        auto u = min_upper(t);
        if (u && BigInt(lower) > *u)
            throw ReportInvariantViolation("lower bound " + std::to_string(lower) + " (" + prov + ") exceeds verified " +
                                           target_name(t) + " upper bound " + u->get_str());
    }
    // r_k <= r_1 = r
    if (auto u = min_upper(Target::waring))
        for (const auto& e : r.entries)
            if (e.applicable && e.target == Target::k_ary && BigInt(e.value) > *u)
                throw ReportInvariantViolation("k-ary lower bound " + std::to_string(e.value) +
                                               " exceeds verified Waring upper bound " + u->get_str());
}

namespace {

// Roots-of-unity decompositions of every term, when cheap enough to expand.
std::optional<UpperEntry> termwise_upper(const MultiPoly& M, Target target) {
    const VarSignature& sig = M.signature();
    // verification walks every monomial of the multidegree once per decomposition term
    double basis = 1;
    const Multidegree d = require_homogeneous(M);
    for (int g = 0; g < sig.groups(); ++g) basis *= binomial(d[g] + sig.size(g) - 1, sig.size(g) - 1).get_d();
    double cost = 0;
    for (const auto& [e, c] : M.terms()) {
        double terms = 1;
        for (int g = 0; g < sig.groups(); ++g) {
            int lo = std::numeric_limits<int>::max();
            for (int j = 0; j < sig.size(g); ++j) {
                int x = e[sig.offset(g) + j];
                if (x == 0) continue;
                terms *= x + 1;
                lo = std::min(lo, x);
            }
            if (lo != std::numeric_limits<int>::max()) terms /= lo + 1;
        }
        cost += terms * basis * sig.total();
    }
    if (cost > 5e8) return std::nullopt;
    BigInt total = 0;
    for (const auto& [e, c] : M.terms()) total += static_cast<long>(monomial_power(sig, e).length());
    std::string name = M.size() == 1 ? "monomial" : "termwise-monomial";
    return UpperEntry{name, target, total, true, "roots-of-unity monomial expansion"};
}

std::vector<int> ones(int k) { return std::vector<int>(k, 1); }

void family_uppers(const MultiPoly& M, std::vector<UpperEntry>& out) {
    const VarSignature& sig = M.signature();
    for (int n = 2; n <= 4; ++n) {
        const int q = n * n;
        if (sig == VarSignature({q})) {
            if (M == fixtures::det(n)) {
                if (n == 3)
                    out.push_back({"derksen-det3", Target::waring, static_cast<long>(split_to_waring(derksen_det3()).length()),
                                   true, "Derksen split formula + monomial expansion"});
                out.push_back({"derksen_waring", Target::waring, upper_formula("derksen_waring", {n}), false,
                               "closed form (5/6)^floor(n/3) 2^(n-1) n!"});
            }
            if (M == fixtures::per(n)) {
                out.push_back({"glynn", Target::waring, static_cast<long>(split_to_waring(glynn_permanent(n)).length()), true,
                               "Glynn split formula + monomial expansion"});
                out.push_back({"ryser_waring", Target::waring, upper_formula("ryser_waring", {n}), false,
                               "Ryser split formula, closed form"});
            }
        }
        if (sig == fixtures::matrix_signature(n, ones(n))) {
            if (n == 3 && M == fixtures::determinant(3, ones(3)))
                out.push_back({"derksen-det3-split", Target::multihomogeneous,
                               static_cast<long>(derksen_det3().length()), true, "Derksen split formula"});
            if (M == fixtures::permanent(n, ones(n)))
                out.push_back({"glynn-split", Target::multihomogeneous, static_cast<long>(glynn_permanent(n).length()),
                               true, "Glynn split formula"});
        }
    }
}

void add(std::vector<BoundEntry>& v, BoundEntry e) { v.push_back(std::move(e)); }

}  // namespace

BoundReport report(const MultiPoly& M, const ReportOptions& options, Rng& rng) {
    const ComputeOptions& opt = options.compute;
    const Multidegree d = require_homogeneous(M);
    const VarSignature& sig = M.signature();
    const int s = sig.groups();

    BoundReport r;
    r.target = s == 1 ? Target::waring : Target::multihomogeneous;
    r.apolar = apolar_profile(M, opt, rng);
    r.profile = r.apolar.hilbert;

    auto wanted = [&](const Multidegree& a) {
        return options.a_list.empty() || std::find(options.a_list.begin(), options.a_list.end(), a) != options.a_list.end();
    };

    add(r.entries, bound_catalecticant(r.profile, r.target));

    if (s == 1) {
        const int n = sig.total();
        if (options.lt) {
            bool concise = conciseness_check(M, opt.strategy, rng).overall;
            for (int a = 0; a < d[0]; ++a)
                if (wanted({a})) add(r.entries, bound_lt(M, a, opt, rng, concise));
        }
        add(r.entries, bound_rs(r.apolar));
        if (options.rs_eps || options.carlini) {
            const std::vector<MultiPoly> gens = minimal_generators(M, r.apolar.generators);
            if (options.rs_eps) add(r.entries, bound_rs_eps(M, r.apolar, opt, rng, &gens));
            if (options.carlini) {
                GeneratorPrefix prefix = zero_dim_prefix(M, gens, opt, rng);
                prefix.certified = prefix.certified && r.apolar.certified;
                for (int k = 1; k < n; ++k) add(r.entries, bound_carlini_k(prefix, r.apolar.length, k));
            }
        }
    } else {
        if (options.lt)
            for (const auto& a : md_box(d))
                if (wanted(a)) add(r.entries, bound_lt_multi(M, a, opt, rng));
        add(r.entries, bound_rs_multi(r.apolar));
        if (s == 2 && d[0] == 1 && options.lt) {
            for (int a = 0; a < d[1]; ++a) {
                if (!wanted({1, a}) && !wanted({0, a})) continue;
                add(r.entries, bound_series_v1(M, a, opt, rng));
                add(r.entries, bound_series_v2(M, a, opt, rng));
            }
        }
        // total-grading view: bounds on the Waring rank of the flattened form
        MultiPoly flat = flatten(M);
        ApolarProfile fap = apolar_profile(flat, opt, rng);
        BoundEntry cat = bound_catalecticant(fap.hilbert, Target::waring);
        cat.name = "catalecticant-total";
        add(r.entries, cat);
        BoundEntry rs = bound_rs(fap);
        rs.name = "rs-total";
        add(r.entries, rs);
    }

    if (options.uppers) {
        if (auto u = termwise_upper(M, r.target)) r.uppers.push_back(*u);
        if (s > 1)
            if (auto u = termwise_upper(flatten(M), Target::waring)) r.uppers.push_back(*u);
        family_uppers(M, r.uppers);
    }

    for (const auto& e : r.entries) r.certified = r.certified && e.certified;
    r.certified = r.certified && r.apolar.certified;
    std::tie(r.best_lower, r.best_lower_provenance) = best_lower_of(r.entries, r.target);
    for (const auto& u : r.uppers)
        if (u.verified && u.target == r.target && (!r.best_upper || u.value < *r.best_upper)) r.best_upper = u.value;

    const std::string rk = r.target == Target::waring ? "r" : "r_MH";
    if (r.best_upper && BigInt(r.best_lower) == *r.best_upper)
        r.status = "rank determined = " + std::to_string(r.best_lower);
    else if (r.best_upper)
        r.status = std::to_string(r.best_lower) + " ≤ " + rk + " ≤ " + r.best_upper->get_str();
    else
        r.status = rk + " ≥ " + std::to_string(r.best_lower);
    check_report_invariant(r);
    return r;
}

}  // namespace apolar
