#include "apolar/apolar.hpp"

#include <algorithm>
#include <numeric>

namespace apolar {

MultiPoly partial(const MultiPoly& p, int var) {
    MultiPoly out(p.signature(), p.role());
    for (const auto& [e, c] : p.terms()) {
        if (e[var] == 0) continue;
        Exponent f = e;
        --f[var];
        out.add_term(f, c * e[var]);
    }
    return out;
}

QVector coordinates(const MultiPoly& p, const std::map<Exponent, int>& index, int dim) {
    QVector v(dim);
    for (const auto& [e, c] : p.terms()) v[index.at(e)] = c;
    return v;
}

namespace {

std::map<Exponent, int> index_map(const std::vector<Exponent>& basis) {
    std::map<Exponent, int> idx;
    for (int i = 0; i < static_cast<int>(basis.size()); ++i) idx.emplace(basis[i], i);
    return idx;
}

MultiPoly from_coordinates(const QVector& v, const std::vector<Exponent>& basis, const VarSignature& sig, Role role) {
    MultiPoly p(sig, role);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) p.add_term(basis[i], v[i]);
    return p;
}

const ProfileCell& cell_at(const std::vector<ProfileCell>& hilbert, const Multidegree& a) {
    for (const auto& c : hilbert)
        if (c.a == a) return c;
    throw std::logic_error("multidegree " + md_str(a) + " missing from Hilbert table");
}

}  // namespace

std::vector<MultiPoly> apolar_piece(const MultiPoly& M, const Multidegree& k) {
    Multidegree d = require_homogeneous(M);
    const VarSignature& sig = M.signature();
    if (std::any_of(k.begin(), k.end(), [](int x) { return x < 0; })) return {};
    std::vector<MultiPoly> out;
    if (!md_leq(k, d)) {
        for (const auto& e : monomial_basis(sig, k)) out.push_back(MultiPoly::monomial(sig, e, 1, Role::dual));
        return out;
    }
    Catalecticant c = catalecticant(M, k);
    for (const auto& v : kernel_basis(c.matrix))
        out.push_back(from_coordinates(v, c.matrix.col_labels, sig, Role::dual));
    return out;
}

std::vector<ProfileCell> hilbert_function(const MultiPoly& M, const ComputeOptions& opt, Rng& rng) {
    return profile(M, opt.strategy, rng, opt.max_cells);
}

long apolar_length(const std::vector<ProfileCell>& hilbert) {
    long s = 0;
    for (const auto& c : hilbert) s += c.rank;
    return s;
}

std::vector<GeneratorDegree> min_generator_degrees(const MultiPoly& M, const std::vector<ProfileCell>& hilbert,
                                                   const ComputeOptions& opt, Rng& rng, bool* certified) {
    Multidegree d = require_homogeneous(M);
    const VarSignature& sig = M.signature();
    const int s = sig.groups();
    bool all_certified = true;

    // Span of the derivatives of M of multidegree c (the image of C^{d-c}).
    std::map<Multidegree, std::vector<MultiPoly>> im;
    auto image_of = [&](const Multidegree& c) -> const std::vector<MultiPoly>& {
        auto it = im.find(c);
        if (it != im.end()) return it->second;
        Catalecticant cat = catalecticant(M, md_sub(d, c));
        const ProfileCell& h = cell_at(hilbert, c);
        std::vector<int> cols;
        if (opt.strategy == RankStrategy::exact ||
            (opt.strategy == RankStrategy::automatic && std::min(cat.matrix.rows(), cat.matrix.cols()) <= 200)) {
            cols = independent_columns(cat.matrix);
        } else {
            for (int attempt = 0;; ++attempt) {
                try {
                    cols = independent_columns_modp(cat.matrix, rng.prime31());
                    break;
                } catch (const DenominatorDivisibleByPrime&) {
                    if (attempt > 8) throw;
                }
            }
            if (!h.certified || static_cast<long>(cols.size()) != h.rank) all_certified = false;
        }
        std::vector<MultiPoly> basis;
        for (int j : cols) basis.push_back(catalecticant_column(cat, M, j));
        return im.emplace(c, std::move(basis)).first->second;
    };

    std::vector<GeneratorDegree> out;
    Multidegree top = d;
    for (auto& x : top) ++x;
    for (const auto& b : md_box(top)) {
        if (md_total(b) == 0) continue;
        // unknown blocks: every variable v of a group i with b_i >= 1 gets a
        // vector of coefficients on the basis of Im_{b - e_i}
        struct Block {
            int var;
            const std::vector<MultiPoly>* basis;
            int offset;
        };
        std::vector<Block> blocks;
        int unknowns = 0;
        for (int g = 0; g < s; ++g) {
            if (b[g] == 0) continue;
            Multidegree c = b;
            --c[g];
            if (!md_leq(c, d)) continue;
            const auto& basis = image_of(c);
            for (int j = 0; j < sig.size(g); ++j) {
                blocks.push_back({sig.offset(g) + j, &basis, unknowns});
                unknowns += static_cast<int>(basis.size());
            }
        }
        long h = md_leq(b, d) ? cell_at(hilbert, b).rank : 0;
        if (unknowns == 0) {
            if (h != 0) throw std::logic_error("generator count negative at " + md_str(b));
            continue;
        }
        // compatibility: d/dx_w g_v = d/dx_v g_w for every pair of active variables
        std::vector<int> active;
        for (int g = 0; g < s; ++g)
            if (b[g] > 0)
                for (int j = 0; j < sig.size(g); ++j) active.push_back(sig.offset(g) + j);
        std::vector<int> block_of(sig.total(), -1);
        for (int k = 0; k < static_cast<int>(blocks.size()); ++k) block_of[blocks[k].var] = k;

        std::map<std::pair<long, Exponent>, int> row_index;
        std::vector<std::tuple<int, int, BigRational>> trip;
        const long N = sig.total();
        for (const auto& blk : blocks) {
            const int v = blk.var;
            for (int k = 0; k < static_cast<int>(blk.basis->size()); ++k) {
                for (int w : active) {
                    if (w == v) continue;
                    MultiPoly dp = partial((*blk.basis)[k], w);
                    if (dp.is_zero()) continue;
                    long pair = std::min(v, w) * N + std::max(v, w);
                    int sign = v < w ? 1 : -1;
                    for (const auto& [e, c] : dp.terms()) {
                        auto key = std::make_pair(pair, e);
                        auto it = row_index.find(key);
                        int r;
                        if (it == row_index.end()) {
                            r = static_cast<int>(row_index.size());
                            row_index.emplace(std::move(key), r);
                        } else {
                            r = it->second;
                        }
                        trip.emplace_back(r, blk.offset + k, sign * c);
                    }
                }
            }
        }
        long rk = 0;
        if (!trip.empty()) {
            QMatrix A = QMatrix::from_triplets(static_cast<int>(row_index.size()), unknowns, std::move(trip));
            RankResult r = rank(A, opt.strategy, rng);
            rk = r.rank;
            all_certified = all_certified && r.certified;
        }
        long count = unknowns - rk - h;
        if (count < 0) throw std::logic_error("generator count negative at " + md_str(b));
        if (count > 0) out.push_back({b, count});
    }
    std::stable_sort(out.begin(), out.end(), [](const GeneratorDegree& x, const GeneratorDegree& y) {
        return md_total(x.degree) < md_total(y.degree);
    });
    if (certified) *certified = all_certified;
    return out;
}

ApolarProfile apolar_profile(const MultiPoly& M, const ComputeOptions& opt, Rng& rng) {
    ApolarProfile p;
    p.hilbert = hilbert_function(M, opt, rng);
    p.length = apolar_length(p.hilbert);
    for (const auto& c : p.hilbert) p.certified = p.certified && c.certified;
    bool cert = true;
    p.generators = min_generator_degrees(M, p.hilbert, opt, rng, &cert);
    p.certified = p.certified && cert;
    p.delta_multi.assign(M.signature().groups(), 0);
    for (const auto& g : p.generators) {
        p.delta = std::max(p.delta, md_total(g.degree));
        for (std::size_t i = 0; i < g.degree.size(); ++i) p.delta_multi[i] = std::max(p.delta_multi[i], g.degree[i]);
    }
    return p;
}

std::vector<MultiPoly> minimal_generators(const MultiPoly& M, const std::vector<GeneratorDegree>& degrees) {
    const VarSignature& sig = M.signature();
    std::vector<GeneratorDegree> order = degrees;
    std::stable_sort(order.begin(), order.end(), [](const GeneratorDegree& x, const GeneratorDegree& y) {
        return md_total(x.degree) < md_total(y.degree);
    });
    std::vector<MultiPoly> out;
    for (const auto& gd : order) {
        const Multidegree& b = gd.degree;
        auto basis = monomial_basis(sig, b);
        auto idx = index_map(basis);
        const int dim = static_cast<int>(basis.size());
        std::vector<QVector> cols;
        for (int g = 0; g < sig.groups(); ++g) {
            if (b[g] == 0) continue;
            Multidegree c = b;
            --c[g];
            for (const auto& k : apolar_piece(M, c))
                for (int j = 0; j < sig.size(g); ++j) {
                    Exponent e(sig.total(), 0);
                    e[sig.offset(g) + j] = 1;
                    cols.push_back(coordinates(k * MultiPoly::monomial(sig, e, 1, Role::dual), idx, dim));
                }
        }
        const int products = static_cast<int>(cols.size());
        std::vector<MultiPoly> piece = apolar_piece(M, b);
        for (const auto& k : piece) cols.push_back(coordinates(k, idx, dim));
        std::vector<std::tuple<int, int, BigRational>> trip;
        for (int j = 0; j < static_cast<int>(cols.size()); ++j)
            for (int i = 0; i < dim; ++i)
                if (cols[j][i] != 0) trip.emplace_back(i, j, cols[j][i]);
        QMatrix A = QMatrix::from_triplets(dim, static_cast<int>(cols.size()), std::move(trip));
        long found = 0;
        for (int j : independent_columns(A))
            if (j >= products) {
                out.push_back(piece[j - products]);
                ++found;
            }
        if (found != gd.count)
            throw std::logic_error("explicit generators at " + md_str(b) + " disagree with the generator count");
    }
    return out;
}

PointsCheck apolarity_check_points(const std::vector<ProductPoint>& points, const MultiPoly& M) {
    Multidegree d = require_homogeneous(M);
    std::vector<MultiPoly> powers;
    std::map<Exponent, int> idx;
    auto touch = [&](const MultiPoly& p) {
        for (const auto& [e, c] : p.terms()) idx.emplace(e, 0);
    };
    touch(M);
    for (const auto& P : points) {
        powers.push_back(power_of_point(P, d, M.signature()));
        touch(powers.back());
    }
    int k = 0;
    for (auto& [e, i] : idx) i = k++;
    std::vector<QVector> basis;
    for (const auto& p : powers) basis.push_back(coordinates(p, idx, k));
    SpanResult r = in_span(coordinates(M, idx, k), basis);
    return {r.member, r.coefficients};
}

bool carlini_subspace_check(const std::vector<std::vector<std::vector<BigRational>>>& subspaces, const MultiPoly& F) {
    const VarSignature& sig = F.signature();
    if (sig.groups() != 1) throw std::invalid_argument("carlini_subspace_check expects a single-group form");
    const int n = sig.total();
    const int d = require_homogeneous(F)[0];
    // W^perp in T_1 for each W, as dual linear forms
    std::vector<std::vector<QVector>> perps;
    for (const auto& W : subspaces) {
        for (const auto& w : W)
            if (static_cast<int>(w.size()) != n) throw std::invalid_argument("subspace vector has wrong length");
        QMatrix m = QMatrix::from_dense(W);
        if (W.empty() || rank_exact(m) != static_cast<long>(W.size()))
            throw std::invalid_argument("subspace basis is not linearly independent");
        perps.push_back(kernel_basis(m));
    }
    for (int k = 1; k <= d; ++k) {
        auto basis = monomial_basis(sig, {k});
        auto idx = index_map(basis);
        const int dim = static_cast<int>(basis.size());
        auto lower = monomial_basis(sig, {k - 1});
        std::vector<QVector> meet;
        bool first = true;
        for (const auto& perp : perps) {
            // I(W)_k = W^perp * T_{k-1}
            std::vector<QVector> span;
            for (const auto& h : perp) {
                MultiPoly hp(sig, Role::dual);
                for (int j = 0; j < n; ++j)
                    if (h[j] != 0) {
                        Exponent e(n, 0);
                        e[j] = 1;
                        hp.add_term(e, h[j]);
                    }
                for (const auto& m : lower)
                    span.push_back(coordinates(hp * MultiPoly::monomial(sig, m, 1, Role::dual), idx, dim));
            }
            std::vector<QVector> piece = span.empty() ? std::vector<QVector>{} : image_basis(QMatrix::from_dense(span));
            meet = first ? piece : intersect_subspaces(meet, piece, dim);
            first = false;
            if (meet.empty()) break;
        }
        for (const auto& v : meet)
            if (!diff_apply(from_coordinates(v, basis, sig, Role::dual), F).is_zero()) return false;
    }
    return true;
}

Verification verify_decomposition(const MultiPoly& M, const std::vector<DecompTerm>& terms) {
    Multidegree d = require_homogeneous(M);
    MultiPoly residual = M;
    for (const auto& t : terms) residual -= power_of_point(t.point, d, M.signature()).scaled(t.coefficient);
    return {residual.is_zero(), residual};
}

}  // namespace apolar
