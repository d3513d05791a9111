#include "apolar/sigma.hpp"

#include "apolar/catalecticant.hpp"

#include <algorithm>

namespace apolar {

GbOptions choose_gb_field(const std::vector<MultiPoly>& gens, const ComputeOptions& opt, Rng& rng) {
    GbOptions g;
    g.budget = opt.gb_budget;
    bool modular = opt.strategy == RankStrategy::modp;
    if (opt.strategy == RankStrategy::automatic) {
        std::size_t bits = 0;
        for (const auto& p : gens)
            for (const auto& [e, c] : p.terms())
                bits = std::max({bits, mpz_sizeinbase(c.get_num_mpz_t(), 2), mpz_sizeinbase(c.get_den_mpz_t(), 2)});
        modular = gens.size() > 200 || bits > 256;
    }
    if (modular) g.prime = rng.prime31();
    return g;
}

namespace {

// Retry with a fresh prime when some coefficient denominator vanishes mod p.
int dim_with_retry(const std::vector<MultiPoly>& gens, const VarSignature& sig, GbOptions g, Rng& rng) {
    for (int attempt = 0;; ++attempt) {
        try {
            return affine_dim(gens, sig, g);
        } catch (const DenominatorDivisibleByPrime&) {
            if (attempt >= 8) throw;
            g.prime = rng.prime31();
        }
    }
}

}  // namespace

DimResult gb_dimension(const std::vector<MultiPoly>& gens, const VarSignature& sig, const ComputeOptions& opt, Rng& rng) {
    GbOptions g = choose_gb_field(gens, opt, rng);
    return {dim_with_retry(gens, sig, g, rng), g.prime == 0};
}

DimResult sigma_hat_dim(const MultiPoly& F, int a, const ComputeOptions& opt, Rng& rng) {
    if (F.signature().groups() != 1) throw std::invalid_argument("sigma_hat_dim expects a single-group form");
    Multidegree d = require_homogeneous(F);
    if (a < 0 || a >= d[0]) throw std::invalid_argument("sigma_hat_dim needs 0 <= a < d");
    std::vector<MultiPoly> gens = catalecticant_image(F, {a});
    GbOptions g = choose_gb_field(gens, opt, rng);
    int dim = dim_with_retry(gens, F.signature(), g, rng);
    return {std::max(dim, 0), g.prime == 0};
}

DimResult sigma_dim_multi(const MultiPoly& M, const Multidegree& a, const ComputeOptions& opt, Rng& rng, int tries) {
    const VarSignature& sig = M.signature();
    Multidegree d = require_homogeneous(M);
    if (!md_leq(a, d) || std::any_of(a.begin(), a.end(), [](int x) { return x < 0; }))
        throw std::invalid_argument("sigma_dim_multi needs 0 <= a <= d");
    std::vector<MultiPoly> image = catalecticant_image(M, a);
    DimResult best{-1, true};
    for (int t = 0; t < tries; ++t) {
        std::vector<MultiPoly> gens = image;
        for (int g = 0; g < sig.groups(); ++g) {
            std::vector<BigRational> c(sig.size(g));
            bool nonzero = false;
            while (!nonzero) {
                for (auto& x : c) {
                    x = static_cast<long>(rng.uniform(-50, 50));
                    nonzero = nonzero || x != 0;
                }
            }
            gens.push_back(linear_form(sig, g, c) - MultiPoly::constant(sig, 1));
        }
        GbOptions go = choose_gb_field(image, opt, rng);
        int dim = dim_with_retry(gens, sig, go, rng);
        if (dim > best.dim) best.dim = dim;
        best.certified = best.certified && go.prime == 0;
    }
    return best;
}

DimResult affine_dim_in_group(const std::vector<MultiPoly>& gens, int group, const ComputeOptions& opt, Rng& rng) {
    if (gens.empty()) throw std::invalid_argument("affine_dim_in_group needs generators");
    const VarSignature& big = gens.front().signature();
    VarSignature small({big.size(group)});
    const int off = big.offset(group);
    std::vector<MultiPoly> proj;
    for (const auto& p : gens) {
        MultiPoly q(small);
        for (const auto& [e, c] : p.terms()) {
            Exponent s(big.size(group));
            for (int v = 0; v < big.total(); ++v) {
                if (v >= off && v < off + big.size(group))
                    s[v - off] = e[v];
                else if (e[v] != 0)
                    throw std::invalid_argument("generator involves variables outside the group");
            }
            q.add_term(s, c);
        }
        proj.push_back(std::move(q));
    }
    GbOptions g = choose_gb_field(proj, opt, rng);
    return {dim_with_retry(proj, small, g, rng), g.prime == 0};
}

}  // namespace apolar
