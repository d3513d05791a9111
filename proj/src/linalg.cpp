#include "apolar/linalg.hpp"

#include "apolar/modp_kernels.hpp"

#include <algorithm>
#include <limits>

namespace apolar {

QMatrix::QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

QMatrix QMatrix::from_dense(const std::vector<QVector>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    QMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged dense matrix");
        for (int j = 0; j < c; ++j)
            if (rows[i][j] != 0) m.data_[i].emplace_back(j, rows[i][j]);
    }
    return m;
}

QMatrix QMatrix::from_triplets(int rows, int cols, std::vector<std::tuple<int, int, BigRational>> t) {
    std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) {
        return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
    });
    QMatrix m(rows, cols);
    for (auto& [i, j, v] : t) {
        if (i < 0 || i >= rows || j < 0 || j >= cols) throw std::out_of_range("triplet out of range");
        auto& row = m.data_[i];
        if (!row.empty() && row.back().first == j)
            row.back().second += v;
        else
            row.emplace_back(j, std::move(v));
    }
    for (auto& row : m.data_)
        row.erase(std::remove_if(row.begin(), row.end(), [](const Entry& e) { return e.second == 0; }),
                  row.end());
    return m;
}

BigRational QMatrix::at(int i, int j) const {
    const Row& r = data_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, int c) { return e.first < c; });
    return (it != r.end() && it->first == j) ? it->second : BigRational(0);
}

void QMatrix::set(int i, int j, const BigRational& v) {
    Row& r = data_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, int c) { return e.first < c; });
    if (it != r.end() && it->first == j) {
        if (v == 0)
            r.erase(it);
        else
            it->second = v;
    } else if (v != 0) {
        r.insert(it, Entry{j, v});
    }
}

std::size_t QMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, v] : data_[i]) t.data_[j].emplace_back(i, v);
    t.row_labels = col_labels;
    t.col_labels = row_labels;
    return t;
}

QVector QMatrix::multiply(const QVector& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("dimension mismatch in multiply");
    QVector out(rows_);
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, a] : data_[i]) out[i] += a * v[j];
    return out;
}

QVector QMatrix::column(int j) const {
    QVector c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

std::vector<QVector> QMatrix::dense() const {
    std::vector<QVector> out(rows_, QVector(cols_));
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, v] : data_[i]) out[i][j] = v;
    return out;
}

// ---------------------------------------------------------------- F_p

std::uint32_t reduce_mod(const BigRational& q, std::uint32_t p) {
    unsigned long den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
    if (den == 0) throw DenominatorDivisibleByPrime(p);
    unsigned long num = mpz_fdiv_ui(q.get_num_mpz_t(), p);  // floor mod: in [0, p)
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(num) *
                                      inv_mod(static_cast<std::uint32_t>(den), p) % p);
}

FpMatrix::FpMatrix(std::uint32_t p, int rows, int cols)
    : p_(p), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

FpMatrix FpMatrix::reduce(const QMatrix& a, std::uint32_t p) {
    FpMatrix m(p, a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (const auto& [j, v] : a.row(i)) m.at(i, j) = reduce_mod(v, p);
    return m;
}

long rank_modp(FpMatrix a) {
    const std::uint32_t p = a.prime();
    const int R = a.rows(), C = a.cols();
    long rank = 0;
    for (int c = 0; c < C && rank < R; ++c) {
        int piv = -1;
        for (int i = static_cast<int>(rank); i < R; ++i)
            if (a.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank) std::swap_ranges(a.row(piv) + c, a.row(piv) + C, a.row(static_cast<int>(rank)) + c);
        const std::uint32_t* prow = a.row(static_cast<int>(rank));
        const std::uint32_t pinv = inv_mod(prow[c], p);
        for (int i = static_cast<int>(rank) + 1; i < R; ++i) {
            std::uint32_t v = a.at(i, c);
            if (v == 0) continue;
            // row_i -= (v / pivot) * pivot_row
            auto f = static_cast<std::uint32_t>(static_cast<std::uint64_t>(p - v) * pinv % p);
            kernels::axpy_mod(a.row(i) + c, prow + c, static_cast<std::size_t>(C - c), f, p);
        }
        ++rank;
    }
    return rank;
}

long rank_modp(const QMatrix& a, std::uint32_t p) {
    // eliminate along the shorter side to keep the dense buffer small
    if (a.rows() > a.cols() * 4) return rank_modp(FpMatrix::reduce(a.transpose(), p));
    return rank_modp(FpMatrix::reduce(a, p));
}

// ---------------------------------------------------------------- exact

namespace {

using ZRow = std::vector<std::pair<int, BigInt>>;

ZRow to_integer_row(const QMatrix::Row& r) {
    BigInt lcm = 1;
    for (const auto& [j, v] : r) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
    ZRow out;
    out.reserve(r.size());
    for (const auto& [j, v] : r) out.emplace_back(j, BigInt(v.get_num() * (lcm / v.get_den())));
    return out;
}

void make_primitive(ZRow& r) {
    if (r.empty()) return;
    BigInt g = 0;
    for (const auto& [j, v] : r) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) return;
    }
    for (auto& [j, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

const BigInt* entry_at(const ZRow& r, int c) {
    auto it = std::lower_bound(r.begin(), r.end(), c, [](const auto& e, int x) { return e.first < x; });
    return (it != r.end() && it->first == c) ? &it->second : nullptr;
}

// r <- (a/g) r - (b/g) p where a = p[c], b = r[c]; column c cancels.
ZRow combine(const ZRow& r, const ZRow& p, int c) {
    const BigInt& a = *entry_at(p, c);
    const BigInt& b = *entry_at(r, c);
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    BigInt fa = a / g, fb = b / g;
    ZRow out;
    out.reserve(r.size() + p.size());
    std::size_t i = 0, k = 0;
    BigInt t;
    while (i < r.size() || k < p.size()) {
        if (k == p.size() || (i < r.size() && r[i].first < p[k].first)) {
            out.emplace_back(r[i].first, BigInt(fa * r[i].second));
            ++i;
        } else if (i == r.size() || p[k].first < r[i].first) {
            out.emplace_back(p[k].first, BigInt(-fb * p[k].second));
            ++k;
        } else {
            t = fa * r[i].second - fb * p[k].second;
            if (t != 0) out.emplace_back(r[i].first, t);
            ++i;
            ++k;
        }
    }
    make_primitive(out);
    return out;
}

struct Echelon {
    std::vector<ZRow> rows;       // rows[k] has its pivot at pivot_cols[k]
    std::vector<int> pivot_cols;
    std::vector<ZRow> leftover;   // rows whose entries all sit at columns >= pivot_limit
};

// Fraction-free sparse elimination. Pivot column: fewest nonzeros among the
// remaining rows; pivot row: smallest |entry| in that column. With `jordan`
// the pivot column is also cleared from earlier pivot rows. Columns at or
// beyond `pivot_limit` are never chosen as pivots.
Echelon eliminate(std::vector<ZRow> active, int ncols, bool jordan, int pivot_limit = -1) {
    if (pivot_limit < 0) pivot_limit = ncols;
    Echelon out;
    std::vector<long> count(ncols, 0);
    for (auto& r : active) {
        make_primitive(r);
        for (const auto& e : r) ++count[e.first];
    }
    active.erase(std::remove_if(active.begin(), active.end(), [](const ZRow& r) { return r.empty(); }),
                 active.end());
    while (!active.empty()) {
        int c = -1;
        long best = std::numeric_limits<long>::max();
        for (int j = 0; j < pivot_limit; ++j)
            if (count[j] > 0 && count[j] < best) {
                best = count[j];
                c = j;
            }
        if (c < 0) break;
        std::size_t pi = active.size();
        for (std::size_t i = 0; i < active.size(); ++i) {
            const BigInt* v = entry_at(active[i], c);
            if (!v) continue;
            if (pi == active.size()) {
                pi = i;
                continue;
            }
            int cmp = mpz_cmpabs(v->get_mpz_t(), entry_at(active[pi], c)->get_mpz_t());
            if (cmp < 0 || (cmp == 0 && active[i].size() < active[pi].size())) pi = i;
        }
        ZRow pivot = std::move(active[pi]);
        active.erase(active.begin() + static_cast<long>(pi));
        for (const auto& e : pivot) --count[e.first];

        std::vector<ZRow> next;
        next.reserve(active.size());
        for (auto& r : active) {
            if (!entry_at(r, c)) {
                next.push_back(std::move(r));
                continue;
            }
            for (const auto& e : r) --count[e.first];
            ZRow nr = combine(r, pivot, c);
            for (const auto& e : nr) ++count[e.first];
            if (!nr.empty()) next.push_back(std::move(nr));
        }
        active = std::move(next);
        if (jordan)
            for (auto& r : out.rows)
                if (entry_at(r, c)) r = combine(r, pivot, c);
        out.rows.push_back(std::move(pivot));
        out.pivot_cols.push_back(c);
    }
    out.leftover = std::move(active);
    return out;
}

std::vector<ZRow> integer_rows(const QMatrix& a) {
    std::vector<ZRow> rows;
    rows.reserve(a.rows());
    for (int i = 0; i < a.rows(); ++i)
        if (!a.row(i).empty()) rows.push_back(to_integer_row(a.row(i)));
    return rows;
}

}  // namespace

long rank_exact(const QMatrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    // eliminating the transpose is cheaper when it has fewer rows
    if (a.cols() < a.rows()) {
        QMatrix t = a.transpose();
        return static_cast<long>(eliminate(integer_rows(t), t.cols(), false).rows.size());
    }
    return static_cast<long>(eliminate(integer_rows(a), a.cols(), false).rows.size());
}

RankStrategy parse_strategy(const std::string& s) {
    if (s == "exact") return RankStrategy::exact;
    if (s == "modp") return RankStrategy::modp;
    if (s == "auto") return RankStrategy::automatic;
    throw std::invalid_argument("unknown rank strategy '" + s + "' (expected exact|modp|auto)");
}

std::string strategy_name(RankStrategy s) {
    switch (s) {
        case RankStrategy::exact: return "exact";
        case RankStrategy::modp: return "modp";
        case RankStrategy::automatic: return "auto";
    }
    return "auto";
}

RankResult rank(const QMatrix& a, RankStrategy strategy, Rng& rng, long bound) {
    const long dim_bound = std::min(a.rows(), a.cols());
    if (bound < 0 || bound > dim_bound) bound = dim_bound;
    if (strategy == RankStrategy::exact) return {rank_exact(a), true, 0};

    long r = -1;
    std::uint32_t p = 0;
    for (int attempt = 0; attempt < 8 && r < 0; ++attempt) {
        p = rng.prime31();
        try {
            r = rank_modp(a, p);
        } catch (const DenominatorDivisibleByPrime&) {
        }
    }
    if (r < 0) throw std::runtime_error("could not find a usable prime for modular rank");
    // the modular rank never exceeds the true rank, so reaching the bound certifies it
    if (r == bound) return {r, true, p};
    if (strategy == RankStrategy::automatic && dim_bound <= 200) return {rank_exact(a), true, 0};
    return {r, false, p};
}

std::vector<QVector> kernel_basis(const QMatrix& a) {
    Echelon ech = eliminate(integer_rows(a), a.cols(), true);
    std::vector<int> pivot_row_of(a.cols(), -1);
    for (std::size_t k = 0; k < ech.pivot_cols.size(); ++k) pivot_row_of[ech.pivot_cols[k]] = static_cast<int>(k);
    std::vector<QVector> out;
    for (int f = 0; f < a.cols(); ++f) {
        if (pivot_row_of[f] >= 0) continue;
        QVector v(a.cols());
        v[f] = 1;
        for (std::size_t k = 0; k < ech.rows.size(); ++k) {
            const BigInt* e = entry_at(ech.rows[k], f);
            if (!e) continue;
            int pc = ech.pivot_cols[k];
            v[pc] = BigRational(-*e, *entry_at(ech.rows[k], pc));
            v[pc].canonicalize();
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<QVector> image_basis(const QMatrix& a) {
    Echelon ech = eliminate(integer_rows(a), a.cols(), true);
    std::vector<std::size_t> order(ech.rows.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return ech.pivot_cols[x] < ech.pivot_cols[y]; });
    std::vector<QVector> out;
    for (std::size_t k : order) {
        const ZRow& r = ech.rows[k];
        const BigInt& lead = *entry_at(r, ech.pivot_cols[k]);
        QVector v(a.cols());
        for (const auto& [j, e] : r) {
            v[j] = BigRational(e, lead);
            v[j].canonicalize();
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<int> independent_columns(const QMatrix& a) {
    // greedy over the columns in order: keep one when it is independent of
    // those kept before it (reduced against an echelon of the kept ones)
    QMatrix t = a.transpose();
    std::vector<int> keep;
    std::vector<ZRow> basis;
    std::vector<int> pivots;
    for (int i = 0; i < t.rows(); ++i) {
        if (t.row(i).empty()) continue;
        ZRow r = to_integer_row(t.row(i));
        make_primitive(r);
        for (std::size_t b = 0; b < basis.size() && !r.empty(); ++b)
            if (entry_at(r, pivots[b])) r = combine(r, basis[b], pivots[b]);
        if (r.empty()) continue;
        pivots.push_back(r.front().first);
        basis.push_back(std::move(r));
        keep.push_back(i);
    }
    return keep;
}

std::vector<int> independent_columns_modp(const QMatrix& a, std::uint32_t p) {
    FpMatrix t = FpMatrix::reduce(a.transpose(), p);
    const int n = t.cols();
    std::vector<int> keep;
    std::vector<std::vector<std::uint32_t>> basis;   // normalized: pivot entry 1
    std::vector<int> pivots;
    std::vector<std::uint32_t> r(n);
    for (int i = 0; i < t.rows(); ++i) {
        std::copy(t.row(i), t.row(i) + n, r.begin());
        for (std::size_t b = 0; b < basis.size(); ++b) {
            std::uint32_t v = r[pivots[b]];
            if (v) kernels::axpy_mod(r.data(), basis[b].data(), n, p - v, p);
        }
        int lead = -1;
        for (int j = 0; j < n; ++j)
            if (r[j]) {
                lead = j;
                break;
            }
        if (lead < 0) continue;
        std::uint32_t inv = inv_mod(r[lead], p);
        for (auto& x : r) x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * inv % p);
        basis.push_back(r);
        pivots.push_back(lead);
        keep.push_back(i);
    }
    return keep;
}

SpanResult in_span(const QVector& v, const std::vector<QVector>& basis) {
    SpanResult res;
    res.coefficients.assign(basis.size(), 0);
    if (std::all_of(v.begin(), v.end(), [](const BigRational& x) { return x == 0; })) {
        res.member = true;
        return res;
    }
    if (basis.empty()) return res;
    // solve B^T c = v with B's vectors as columns
    const int n = static_cast<int>(v.size());
    std::vector<std::tuple<int, int, BigRational>> t;
    for (int k = 0; k < static_cast<int>(basis.size()); ++k) {
        if (static_cast<int>(basis[k].size()) != n) throw std::invalid_argument("in_span: length mismatch");
        for (int i = 0; i < n; ++i)
            if (basis[k][i] != 0) t.emplace_back(i, k, basis[k][i]);
    }
    QMatrix a = QMatrix::from_triplets(n, static_cast<int>(basis.size()), std::move(t));
    auto sol = solve_linear(a, v);
    if (!sol) return res;
    res.member = true;
    res.coefficients = std::move(*sol);
    return res;
}

std::optional<QVector> solve_linear(const QMatrix& a, const QVector& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("solve_linear: length mismatch");
    // augmented system [A | b]; inconsistent iff a row reduces to (0 | nonzero)
    const int C = a.cols();
    std::vector<ZRow> rows;
    for (int i = 0; i < a.rows(); ++i) {
        QMatrix::Row r = a.row(i);
        if (b[i] != 0) r.emplace_back(C, b[i]);
        if (!r.empty()) rows.push_back(to_integer_row(r));
    }
    Echelon ech = eliminate(std::move(rows), C + 1, true, C);
    if (!ech.leftover.empty()) return std::nullopt;
    QVector x(C);
    for (std::size_t k = 0; k < ech.rows.size(); ++k) {
        int pc = ech.pivot_cols[k];
        const BigInt* rhs = entry_at(ech.rows[k], C);
        if (rhs) {
            x[pc] = BigRational(*rhs, *entry_at(ech.rows[k], pc));
            x[pc].canonicalize();
        }
    }
    return x;
}

std::vector<QVector> intersect_subspaces(const std::vector<QVector>& a, const std::vector<QVector>& b, int dim) {
    if (a.empty() || b.empty()) return {};
    // x in A ∩ B iff x = A u = B w; kernel of [A | -B] gives (u, w)
    const int ka = static_cast<int>(a.size()), kb = static_cast<int>(b.size());
    std::vector<std::tuple<int, int, BigRational>> t;
    for (int k = 0; k < ka; ++k)
        for (int i = 0; i < dim; ++i)
            if (a[k][i] != 0) t.emplace_back(i, k, a[k][i]);
    for (int k = 0; k < kb; ++k)
        for (int i = 0; i < dim; ++i)
            if (b[k][i] != 0) t.emplace_back(i, ka + k, -b[k][i]);
    QMatrix m = QMatrix::from_triplets(dim, ka + kb, std::move(t));
    std::vector<QVector> gens;
    for (const auto& kv : kernel_basis(m)) {
        QVector x(dim);
        for (int k = 0; k < ka; ++k)
            if (kv[k] != 0)
                for (int i = 0; i < dim; ++i) x[i] += kv[k] * a[k][i];
        gens.push_back(std::move(x));
    }
    if (gens.empty()) return {};
    return image_basis(QMatrix::from_dense(gens));
}

}  // namespace apolar
