#include "apolar/catalecticant.hpp"

#include <functional>

namespace apolar {

Multidegree require_homogeneous(const MultiPoly& M) {
    auto d = M.multidegree();
    if (!d) throw std::invalid_argument(M.is_zero() ? "polynomial is zero" : "polynomial is not multihomogeneous");
    return *d;
}

namespace {

std::map<Exponent, int> index_of(const std::vector<Exponent>& basis) {
    std::map<Exponent, int> idx;
    for (int i = 0; i < static_cast<int>(basis.size()); ++i) idx.emplace(basis[i], i);
    return idx;
}

// Calls f(alpha, falling) for every alpha <= beta whose group sums equal a;
// falling = prod beta_i! / (beta_i - alpha_i)!.
void for_each_subexponent(const Exponent& beta, const Multidegree& a, const VarSignature& sig,
                          const std::function<void(const Exponent&, const BigInt&)>& f) {
    Exponent alpha(beta.size(), 0);
    std::vector<int> remaining = a;
    std::function<void(int, const BigInt&)> rec = [&](int v, const BigInt& acc) {
        if (v == sig.total()) {
            for (int r : remaining)
                if (r != 0) return;
            f(alpha, acc);
            return;
        }
        int g = sig.group_of(v);
        bool last_in_group = (v == sig.offset(g) + sig.size(g) - 1);
        int lo = last_in_group ? remaining[g] : 0;
        int hi = std::min(beta[v], remaining[g]);
        for (int k = lo; k <= hi; ++k) {
            BigInt next = acc;
            for (int t = 0; t < k; ++t) next *= (beta[v] - t);
            alpha[v] = k;
            remaining[g] -= k;
            rec(v + 1, next);
            remaining[g] += k;
        }
        alpha[v] = 0;
    };
    rec(0, BigInt(1));
}

}  // namespace

Catalecticant catalecticant(const MultiPoly& M, const Multidegree& a) {
    Multidegree d = require_homogeneous(M);
    if (a.size() != d.size()) throw std::invalid_argument("multidegree length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < 0 || a[i] > d[i]) throw std::invalid_argument("catalecticant degree " + md_str(a) + " out of range for " + md_str(d));
    const VarSignature& sig = M.signature();
    Catalecticant c;
    c.source = a;
    c.target = md_sub(d, a);
    auto rows = monomial_basis(sig, c.target);
    auto cols = monomial_basis(sig, a);
    auto ridx = index_of(rows);
    auto cidx = index_of(cols);
    std::vector<std::tuple<int, int, BigRational>> trip;
    Exponent rest(sig.total());
    for (const auto& [beta, coef] : M.terms()) {
        for_each_subexponent(beta, a, sig, [&](const Exponent& alpha, const BigInt& falling) {
            for (int i = 0; i < sig.total(); ++i) rest[i] = beta[i] - alpha[i];
            trip.emplace_back(ridx.at(rest), cidx.at(alpha), coef * falling);
        });
    }
    c.matrix = QMatrix::from_triplets(static_cast<int>(rows.size()), static_cast<int>(cols.size()), std::move(trip));
    c.matrix.row_labels = std::move(rows);
    c.matrix.col_labels = std::move(cols);
    return c;
}

MultiPoly catalecticant_column(const Catalecticant& c, const MultiPoly& M, int j) {
    MultiPoly p(M.signature());
    for (int i = 0; i < c.matrix.rows(); ++i) {
        BigRational v = c.matrix.at(i, j);
        if (v != 0) p.add_term(c.matrix.row_labels[i], v);
    }
    return p;
}

std::vector<MultiPoly> catalecticant_image(const MultiPoly& M, const Multidegree& a) {
    Catalecticant c = catalecticant(M, a);
    // walk the transpose so each column is one sparse row
    QMatrix t = c.matrix.transpose();
    std::vector<MultiPoly> out;
    for (int j = 0; j < t.rows(); ++j) {
        if (t.row(j).empty()) continue;
        MultiPoly p(M.signature());
        for (const auto& [i, v] : t.row(j)) p.add_term(c.matrix.row_labels[i], v);
        out.push_back(std::move(p));
    }
    return out;
}

RankResult catalecticant_rank(const MultiPoly& M, const Multidegree& a, RankStrategy strategy, Rng& rng) {
    return rank(catalecticant(M, a).matrix, strategy, rng);
}

std::vector<ProfileCell> profile(const MultiPoly& M, RankStrategy strategy, Rng& rng, long long max_cells) {
    Multidegree d = require_homogeneous(M);
    long long cells = md_box_size(d);
    if (max_cells > 0 && cells > max_cells) throw ProfileTooLarge(cells);
    std::vector<Multidegree> box = md_box(d);
    std::map<Multidegree, ProfileCell> done;
    std::vector<ProfileCell> out;
    for (const auto& a : box) {
        Multidegree mirror = md_sub(d, a);
        auto it = done.find(mirror);
        if (it != done.end()) {
            ProfileCell cell = it->second;
            cell.a = a;
            std::swap(cell.rows, cell.cols);
            out.push_back(cell);
            done.emplace(a, cell);
            continue;
        }
        Catalecticant c = catalecticant(M, a);
        RankResult r = rank(c.matrix, strategy, rng);
        ProfileCell cell{a, r.rank, r.certified, c.matrix.rows(), c.matrix.cols()};
        out.push_back(cell);
        done.emplace(a, cell);
    }
    return out;
}

MultiPoly series_to_biform(const std::vector<MultiPoly>& series) {
    if (series.empty()) throw std::invalid_argument("empty linear series");
    const VarSignature& s0 = series[0].signature();
    if (s0.groups() != 1) throw std::invalid_argument("linear series members must be single-group forms");
    Multidegree d0 = require_homogeneous(series[0]);
    const int m = static_cast<int>(series.size());
    const int n = s0.total();
    VarSignature sig({m, n});
    MultiPoly M(sig);
    for (int i = 0; i < m; ++i) {
        if (series[i].signature() != s0) throw std::invalid_argument("linear series members have different signatures");
        if (require_homogeneous(series[i]) != d0) throw std::invalid_argument("linear series members have different degrees");
        for (const auto& [e, c] : series[i].terms()) {
            Exponent big(m + n, 0);
            big[i] = 1;
            for (int j = 0; j < n; ++j) big[m + j] = e[j];
            M.add_term(big, c);
        }
    }
    return M;
}

Conciseness conciseness_check(const MultiPoly& M, RankStrategy strategy, Rng& rng) {
    Multidegree d = require_homogeneous(M);
    const VarSignature& sig = M.signature();
    Conciseness out;
    for (int g = 0; g < sig.groups(); ++g) {
        bool ok = false;
        if (d[g] >= 1) {
            Multidegree e(sig.groups(), 0);
            e[g] = 1;
            RankResult r = rank(catalecticant(M, e).matrix, strategy, rng);
            ok = r.rank == sig.size(g);
        }
        out.per_group.push_back(ok);
        out.overall = out.overall && ok;
    }
    return out;
}

bool injectivity_check(const MultiPoly& M, const Multidegree& a, RankStrategy strategy, Rng& rng) {
    Multidegree d = require_homogeneous(M);
    Multidegree r = md_rad(a);
    if (!md_leq(r, d)) return false;
    Catalecticant c = catalecticant(M, r);
    return rank(c.matrix, strategy, rng).rank == c.matrix.cols();
}

}  // namespace apolar
