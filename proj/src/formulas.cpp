#include "apolar/formulas.hpp"

#include "apolar/catalecticant.hpp"
#include "apolar/fixtures.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace apolar {

Decomposition make_decomposition(std::string target, MultiPoly polynomial, std::vector<DecompTerm> terms) {
    Decomposition d{std::move(target), std::move(polynomial), {}, std::move(terms)};
    d.degree = require_homogeneous(d.polynomial);
    Verification v = verify_decomposition(d.polynomial, d.terms);
    if (!v.ok) throw std::logic_error("decomposition of " + d.target + " does not verify; residual " + v.residual.str());
    return d;
}

namespace {

// All sign vectors in {+1,-1}^len, the all-plus vector first.
std::vector<std::vector<int>> sign_vectors(int len) {
    std::vector<std::vector<int>> out;
    for (unsigned long mask = 0; mask < (1UL << len); ++mask) {
        std::vector<int> s(len);
        for (int i = 0; i < len; ++i) s[i] = (mask >> i) & 1 ? -1 : 1;
        out.push_back(std::move(s));
    }
    return out;
}

BigRational pow2(int k) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(k));
    return BigRational(r);
}

std::vector<int> ones(int k) { return std::vector<int>(k, 1); }

}  // namespace

Decomposition monomial_product(int n) {
    if (n < 1) throw std::invalid_argument("monomial_product needs n >= 1");
    std::vector<DecompTerm> terms;
    const BigRational scale = 1 / (pow2(n - 1) * BigRational(factorial(n)));
    for (const auto& eps : sign_vectors(n - 1)) {
        std::vector<BigRational> form{1};
        int sign = 1;
        for (int e : eps) {
            form.push_back(e);
            sign *= e;
        }
        terms.push_back({scale * sign, ProductPoint{{form}}});
    }
    return make_decomposition("x1*...*x" + std::to_string(n), fixtures::squarefree_monomial(n), std::move(terms));
}

Decomposition glynn_permanent(int k) {
    if (k < 1) throw std::invalid_argument("glynn_permanent needs k >= 1");
    // The normalising 2^{1-k} is easy to lose; without it the sum is 2^{k-1} per_k.
    std::vector<DecompTerm> terms;
    const BigRational scale = 1 / pow2(k - 1);
    for (const auto& tail : sign_vectors(k - 1)) {
        std::vector<BigRational> row{1};
        int sign = 1;
        for (int e : tail) {
            row.push_back(e);
            sign *= e;
        }
        terms.push_back({scale * sign, ProductPoint{std::vector<std::vector<BigRational>>(k, row)}});
    }
    return make_decomposition("per" + std::to_string(k) + " (Glynn, split)", fixtures::permanent(k, ones(k)),
                              std::move(terms));
}

Decomposition ryser_permanent(int k) {
    if (k < 1) throw std::invalid_argument("ryser_permanent needs k >= 1");
    std::vector<DecompTerm> terms;
    // largest subsets first, matching the usual display
    std::vector<unsigned long> masks;
    for (unsigned long m = 1; m < (1UL << k); ++m) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(),
                     [](unsigned long a, unsigned long b) { return __builtin_popcountl(a) > __builtin_popcountl(b); });
    for (unsigned long mask : masks) {
        std::vector<BigRational> row(k);
        for (int j = 0; j < k; ++j) row[j] = (mask >> j) & 1;
        int sign = (k - __builtin_popcountl(mask)) % 2 ? -1 : 1;
        terms.push_back({sign, ProductPoint{std::vector<std::vector<BigRational>>(k, row)}});
    }
    return make_decomposition("per" + std::to_string(k) + " (Ryser, split)", fixtures::permanent(k, ones(k)),
                              std::move(terms));
}

Decomposition derksen_det3() {
    using F = std::vector<BigRational>;
    const BigRational half(1, 2);
    std::vector<DecompTerm> terms = {
        {half, ProductPoint{{F{0, 1, 1}, F{1, -1, 0}, F{1, 1, 0}}}},
        {half, ProductPoint{{F{1, 1, 0}, F{0, 1, -1}, F{0, 1, 1}}}},
        {1, ProductPoint{{F{0, 1, 0}, F{-1, 0, 1}, F{1, 0, 1}}}},
        {half, ProductPoint{{F{0, -1, 1}, F{1, 1, 0}, F{-1, 1, 0}}}},
        {half, ProductPoint{{F{1, -1, 0}, F{0, 1, 1}, F{0, -1, 1}}}},
    };
    return make_decomposition("det3 (Derksen, split)", fixtures::determinant(3, {1, 1, 1}), std::move(terms));
}

Decomposition split_to_waring(const Decomposition& split) {
    const VarSignature& sig = split.polynomial.signature();
    const int s = sig.groups();
    for (int g = 0; g < s; ++g)
        if (split.degree[g] != 1) throw std::invalid_argument("split_to_waring: term is not a product of linear forms");
    VarSignature flat({sig.total()});
    MultiPoly target(flat);
    for (const auto& [e, c] : split.polynomial.terms()) target.add_term(e, c);

    std::vector<DecompTerm> terms;
    const BigRational scale = 1 / (pow2(s - 1) * BigRational(factorial(s)));
    for (const auto& t : split.terms) {
        for (const auto& eps : sign_vectors(s - 1)) {
            std::vector<BigRational> form;
            int sign = 1;
            for (int g = 0; g < s; ++g) {
                int e = g == 0 ? 1 : eps[g - 1];
                sign *= e;
                for (const auto& c : t.point.forms[g]) form.push_back(c * e);
            }
            terms.push_back({t.coefficient * scale * sign, ProductPoint{{form}}});
        }
    }
    std::string name = split.target;
    if (auto p = name.find(", split"); p != std::string::npos) name.erase(p, 7);
    return make_decomposition(name + " via split", std::move(target), std::move(terms));
}

Decomposition product_decomposition(const std::vector<Decomposition>& factors) {
    std::vector<int> sizes;
    for (const auto& f : factors) {
        if (f.polynomial.signature().groups() != 1) throw std::invalid_argument("product_decomposition wants single-group factors");
        sizes.push_back(f.polynomial.signature().total());
    }
    VarSignature sig(sizes);
    // embed each factor's polynomial and multiply
    MultiPoly poly = MultiPoly::constant(sig, 1);
    int off = 0;
    for (const auto& f : factors) {
        MultiPoly emb(sig);
        for (const auto& [e, c] : f.polynomial.terms()) {
            Exponent x(sig.total(), 0);
            std::copy(e.begin(), e.end(), x.begin() + off);
            emb.add_term(x, c);
        }
        poly = poly * emb;
        off += f.polynomial.signature().total();
    }
    std::vector<DecompTerm> terms{{1, ProductPoint{}}};
    for (const auto& f : factors) {
        std::vector<DecompTerm> next;
        for (const auto& a : terms)
            for (const auto& b : f.terms) {
                DecompTerm t{a.coefficient * b.coefficient, a.point};
                t.point.forms.push_back(b.point.forms[0]);
                next.push_back(std::move(t));
            }
        terms = std::move(next);
    }
    std::string name;
    for (const auto& f : factors) name += (name.empty() ? "" : " * ") + f.target;
    return make_decomposition(name, std::move(poly), std::move(terms));
}

Decomposition bihomog_product(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("bihomog_product needs a, b >= 1");
    Decomposition d = product_decomposition({monomial_product(a), monomial_product(b)});
    d.target = "x1*...*x" + std::to_string(a) + " * y1*...*y" + std::to_string(b);
    return d;
}

// ---------------------------------------------------------------- cyclotomic

namespace {

using QPoly = std::vector<BigRational>;   // low degree first

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// remainder of a by monic b
QPoly poly_rem(QPoly a, const QPoly& b) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        BigRational lead = a.back();
        std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= lead * b[i];
        trim(a);
    }
    return a;
}

QPoly poly_div_exact(QPoly a, const QPoly& b) {
    trim(a);
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) return {};
    QPoly q(a.size() - db);
    while (a.size() > db) {
        BigRational lead = a.back() / b.back();
        std::size_t shift = a.size() - 1 - db;
        q[shift] = lead;
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= lead * b[i];
        trim(a);
    }
    if (!a.empty()) throw std::logic_error("cyclotomic division left a remainder");
    return q;
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial needs n >= 1");
    QPoly p(n + 1);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d) continue;
        std::vector<BigInt> phi = cyclotomic_polynomial(d);
        p = poly_div_exact(p, QPoly(phi.begin(), phi.end()));
    }
    std::vector<BigInt> out;
    for (const auto& c : p) out.push_back(c.get_num());
    return out;
}

std::string CycloDecomposition::term_str(const CycloTerm& t) const {
    auto root = [&](int k) { return k == 0 ? std::string("1") : "z^" + std::to_string(k); };
    std::string s;
    for (std::size_t g = 0; g < t.forms.size(); ++g) {
        if (g) s += " | ";
        for (std::size_t j = 0; j < t.forms[g].size(); ++j) {
            if (j) s += ",";
            s += t.forms[g][j] < 0 ? "0" : root(t.forms[g][j]);
        }
    }
    s += "  # coefficient " + t.coefficient.get_str() + (t.root ? "*" + root(t.root) : "") + ", z = exp(2 pi i/" +
         std::to_string(order) + ")";
    return s;
}

CycloDecomposition monomial_power(const VarSignature& sig, const Exponent& e) {
    if (static_cast<int>(e.size()) != sig.total()) throw std::invalid_argument("exponent length mismatch");
    CycloDecomposition dec;
    dec.polynomial = MultiPoly::monomial(sig, e, 1);
    dec.degree = multidegree_of(e, sig);
    dec.target = "monomial " + to_string(dec.polynomial);
    int N = 1;
    for (int x : e)
        if (x > 0) N = std::lcm(N, x + 1);
    dec.order = N;

    struct Partial {
        BigRational coefficient;
        int root;
        std::vector<std::vector<int>> forms;
    };
    std::vector<Partial> acc{{1, 0, {}}};
    for (int g = 0; g < sig.groups(); ++g) {
        const int off = sig.offset(g), n = sig.size(g);
        std::vector<int> support;
        for (int j = 0; j < n; ++j)
            if (e[off + j] > 0) support.push_back(j);
        std::vector<Partial> group_terms;
        if (support.empty()) {
            group_terms.push_back({1, 0, {std::vector<int>(n, -1)}});
        } else {
            int pivot = *std::min_element(support.begin(), support.end(),
                                          [&](int a, int b) { return e[off + a] < e[off + b]; });
            std::vector<int> others;
            BigInt multinom = factorial(dec.degree[g]);
            BigInt count = 1;
            for (int j : support) {
                multinom /= factorial(e[off + j]);
                if (j != pivot) {
                    others.push_back(j);
                    count *= e[off + j] + 1;
                }
            }
            const BigRational base = 1 / (BigRational(multinom) * BigRational(count));
            std::vector<int> t(others.size(), 0);
            while (true) {
                std::vector<int> form(n, -1);
                form[pivot] = 0;
                long root = 0;
                for (std::size_t i = 0; i < others.size(); ++i) {
                    int a = e[off + others[i]];
                    int k = t[i] * (N / (a + 1));
                    form[others[i]] = k;
                    root -= static_cast<long>(k) * a;
                }
                int r = static_cast<int>(((root % N) + N) % N);
                group_terms.push_back({base, r, {form}});
                std::size_t i = 0;
                for (; i < others.size(); ++i) {
                    if (++t[i] <= e[off + others[i]]) break;
                    t[i] = 0;
                }
                if (i == others.size()) break;
            }
        }
        std::vector<Partial> next;
        for (const auto& a : acc)
            for (const auto& b : group_terms) {
                Partial p{a.coefficient * b.coefficient, (a.root + b.root) % N, a.forms};
                p.forms.push_back(b.forms[0]);
                next.push_back(std::move(p));
            }
        acc = std::move(next);
    }
    for (auto& p : acc) dec.terms.push_back({p.coefficient, p.root, std::move(p.forms)});
    if (!verify_cyclo(dec)) throw std::logic_error("roots-of-unity decomposition of " + dec.target + " does not verify");
    return dec;
}

bool verify_cyclo(const CycloDecomposition& dec) {
    const VarSignature& sig = dec.polynomial.signature();
    const int N = dec.order;
    const int nv = sig.total();
    // The coefficient of x^b in c * zeta^r * prod_g (sum_j zeta^{k_j} x_j)^{D_g} is
    // c * multinom(b) * zeta^{r + k.b}. Terms are grouped by c so each monomial
    // only needs integer counts per power of zeta.
    std::map<BigRational, std::vector<const CycloTerm*>> classes;
    for (const auto& t : dec.terms) {
        if (static_cast<int>(t.forms.size()) != sig.groups()) return false;
        for (int g = 0; g < sig.groups(); ++g)
            if (static_cast<int>(t.forms[g].size()) != sig.size(g)) return false;
        classes[t.coefficient].push_back(&t);
    }
    // flattened forms: -1 marks a zero coefficient
    std::vector<std::vector<int>> flat;
    std::vector<int> roots;
    std::vector<std::size_t> class_end;
    std::vector<BigRational> class_coef;
    for (const auto& [c, ts] : classes) {
        for (const CycloTerm* t : ts) {
            std::vector<int> f;
            f.reserve(nv);
            for (const auto& g : t->forms) f.insert(f.end(), g.begin(), g.end());
            flat.push_back(std::move(f));
            roots.push_back(((t->root % N) + N) % N);
        }
        class_end.push_back(flat.size());
        class_coef.push_back(c);
    }
    std::vector<BigInt> phi = cyclotomic_polynomial(N);
    const QPoly phiq(phi.begin(), phi.end());
    std::vector<long> counts(N);
    for (const auto& b : monomial_basis(sig, dec.degree)) {
        BigInt multinom = 1;
        for (int g = 0; g < sig.groups(); ++g) {
            BigInt m = factorial(dec.degree[g]);
            for (int j = 0; j < sig.size(g); ++j) m /= factorial(b[sig.offset(g) + j]);
            multinom *= m;
        }
        QPoly slot(N);
        std::size_t begin = 0;
        for (std::size_t c = 0; c < class_end.size(); ++c) {
            std::fill(counts.begin(), counts.end(), 0);
            bool any = false;
            for (std::size_t t = begin; t < class_end[c]; ++t) {
                const auto& f = flat[t];
                long r = roots[t];
                bool zero = false;
                for (int v = 0; v < nv && !zero; ++v) {
                    if (b[v] == 0) continue;
                    if (f[v] < 0)
                        zero = true;
                    else
                        r += static_cast<long>(f[v]) * b[v];
                }
                if (zero) continue;
                ++counts[static_cast<std::size_t>(r % N)];
                any = true;
            }
            if (any) {
                const BigRational w = class_coef[c] * BigRational(multinom);
                for (int r = 0; r < N; ++r)
                    if (counts[r]) slot[r] += w * counts[r];
            }
            begin = class_end[c];
        }
        slot[0] -= dec.polynomial.coefficient(b);
        if (!poly_rem(slot, phiq).empty()) return false;
    }
    // terms of the wrong multidegree would have been silently ignored above
    for (const auto& [e, c] : dec.polynomial.terms())
        if (multidegree_of(e, sig) != dec.degree) return false;
    return true;
}

}  // namespace apolar
