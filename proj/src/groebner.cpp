#include "apolar/groebner.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace apolar {

namespace {

// ---------------------------------------------------------------- fields

struct RationalField {
    using E = BigRational;
    static bool is_zero(const E& a) { return a == 0; }
    static E one() { return 1; }
    E mul(const E& a, const E& b) const { return a * b; }
    E sub(const E& a, const E& b) const { return a - b; }
    E inv(const E& a) const { return 1 / a; }
    E from(const BigRational& q) const { return q; }
    BigRational to(const E& a) const { return a; }
};

struct PrimeField {
    std::uint32_t p;
    using E = std::uint32_t;
    static bool is_zero(E a) { return a == 0; }
    static E one() { return 1; }
    E mul(E a, E b) const { return static_cast<E>(static_cast<std::uint64_t>(a) * b % p); }
    E sub(E a, E b) const { return a >= b ? a - b : a + (p - b); }
    E inv(E a) const { return inv_mod(a, p); }
    E from(const BigRational& q) const { return reduce_mod(q, p); }
    BigRational to(E a) const { return BigRational(a); }
};

// ---------------------------------------------------------------- monomials
// A monomial is a row of width n+1: slot 0 holds the total degree.

using Exp = std::uint16_t;

int grevlex_cmp(const Exp* a, const Exp* b, int n) {
    if (a[0] != b[0]) return a[0] > b[0] ? 1 : -1;
    for (int i = n; i >= 1; --i)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
}

bool divides(const Exp* a, const Exp* b, int n) {
    if (a[0] > b[0]) return false;
    for (int i = 1; i <= n; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

std::uint64_t divmask(const Exp* a, int n) {
    std::uint64_t m = 0;
    for (int i = 1; i <= n; ++i)
        if (a[i]) m |= (std::uint64_t{1} << ((i - 1) & 63));
    return m;
}

using Mono = std::vector<Exp>;

Mono lcm(const Exp* a, const Exp* b, int n) {
    Mono m(n + 1);
    int deg = 0;
    for (int i = 1; i <= n; ++i) {
        m[i] = std::max(a[i], b[i]);
        deg += m[i];
    }
    m[0] = static_cast<Exp>(deg);
    return m;
}

Mono quotient(const Exp* a, const Exp* b, int n) {  // a / b
    Mono m(n + 1);
    for (int i = 0; i <= n; ++i) m[i] = static_cast<Exp>(a[i] - b[i]);
    return m;
}

bool coprime(const Exp* a, const Exp* b, int n) {
    for (int i = 1; i <= n; ++i)
        if (a[i] && b[i]) return false;
    return true;
}

template <class E>
struct GPoly {
    std::vector<Exp> ex;   // len * (n + 1), grevlex-descending
    std::vector<E> co;
    int sugar = 0;

    std::size_t len() const { return co.size(); }
    bool empty() const { return co.empty(); }
    const Exp* mono(std::size_t k, int w) const { return ex.data() + k * w; }
};

template <class F>
class Engine {
public:
    using E = typename F::E;
    using Poly = GPoly<E>;

    Engine(F field, int n, std::size_t budget) : K_(field), n_(n), w_(n + 1), budget_(budget) {}

    Poly convert(const MultiPoly& p) const {
        std::vector<std::pair<Mono, E>> terms;
        for (const auto& [e, c] : p.terms()) {
            E v = K_.from(c);
            if (F::is_zero(v)) continue;
            Mono m(w_);
            int deg = 0;
            for (int i = 0; i < n_; ++i) {
                if (e[i] > 60000) throw std::overflow_error("exponent too large for Groebner engine");
                m[i + 1] = static_cast<Exp>(e[i]);
                deg += e[i];
            }
            if (deg > 60000) throw std::overflow_error("degree too large for Groebner engine");
            m[0] = static_cast<Exp>(deg);
            terms.emplace_back(std::move(m), v);
        }
        std::sort(terms.begin(), terms.end(),
                  [&](const auto& a, const auto& b) { return grevlex_cmp(a.first.data(), b.first.data(), n_) > 0; });
        Poly out;
        for (auto& [m, v] : terms) {
            out.ex.insert(out.ex.end(), m.begin(), m.end());
            out.co.push_back(v);
        }
        out.sugar = out.empty() ? 0 : out.ex[0];
        return out;
    }

    MultiPoly back(const Poly& p, const VarSignature& sig) const {
        MultiPoly out(sig);
        for (std::size_t k = 0; k < p.len(); ++k) {
            const Exp* m = p.mono(k, w_);
            Exponent e(n_);
            for (int i = 0; i < n_; ++i) e[i] = m[i + 1];
            out.add_term(e, K_.to(p.co[k]));
        }
        return out;
    }

    // f[from+1..] - c * m * g[1..]: the leading terms cancel by construction.
    Poly sub_mul(const Poly& f, std::size_t from, const E& c, const Mono& m, const Poly& g) const {
        Poly out;
        out.ex.reserve((f.len() - from + g.len()) * w_);
        out.co.reserve(f.len() - from + g.len());
        std::size_t i = from + 1, j = 1;
        Mono t(w_);
        auto load = [&](std::size_t jj) {
            const Exp* gm = g.mono(jj, w_);
            for (int k = 0; k < w_; ++k) t[k] = static_cast<Exp>(gm[k] + m[k]);
        };
        if (j < g.len()) load(j);
        while (i < f.len() || j < g.len()) {
            int cmp;
            if (j >= g.len())
                cmp = 1;
            else if (i >= f.len())
                cmp = -1;
            else
                cmp = grevlex_cmp(f.mono(i, w_), t.data(), n_);
            if (cmp > 0) {
                const Exp* fm = f.mono(i, w_);
                out.ex.insert(out.ex.end(), fm, fm + w_);
                out.co.push_back(f.co[i]);
                ++i;
            } else if (cmp < 0) {
                out.ex.insert(out.ex.end(), t.begin(), t.end());
                out.co.push_back(K_.sub(E(0), K_.mul(c, g.co[j])));
                ++j;
                if (j < g.len()) load(j);
            } else {
                E v = K_.sub(f.co[i], K_.mul(c, g.co[j]));
                if (!F::is_zero(v)) {
                    out.ex.insert(out.ex.end(), t.begin(), t.end());
                    out.co.push_back(v);
                }
                ++i;
                ++j;
                if (j < g.len()) load(j);
            }
        }
        out.sugar = std::max(f.sugar, static_cast<int>(m[0]) + g.sugar);
        return out;
    }

    int find_reducer(const Exp* mono, std::uint64_t mask, int skip) const {
        for (int k : active_) {
            if (k == skip) continue;
            if ((masks_[k] & ~mask) != 0) continue;
            if (divides(basis_[k].mono(0, w_), mono, n_)) return k;
        }
        return -1;
    }

    // Full reduction of f by the active basis (optionally skipping one element).
    Poly reduce(Poly f, int skip = -1) const {
        Poly rem;
        rem.sugar = f.sugar;
        std::size_t head = 0;
        while (head < f.len()) {
            const Exp* lm = f.mono(head, w_);
            int k = find_reducer(lm, divmask(lm, n_), skip);
            if (k < 0) {
                rem.ex.insert(rem.ex.end(), lm, lm + w_);
                rem.co.push_back(f.co[head]);
                ++head;
                continue;
            }
            const Poly& g = basis_[k];
            Mono m = quotient(lm, g.mono(0, w_), n_);
            // g is monic, so the multiplier is the leading coefficient of f
            f = sub_mul(f, head, f.co[head], m, g);
            rem.sugar = std::max(rem.sugar, f.sugar);
            head = 0;
        }
        return rem;
    }

    void make_monic(Poly& f) const {
        if (f.empty()) return;
        E c = K_.inv(f.co[0]);
        for (auto& v : f.co) v = K_.mul(v, c);
    }

    struct Pair {
        int i, j;
        Mono lcm;
        int sugar;
    };

    void insert(Poly h) {
        make_monic(h);
        const int k = static_cast<int>(basis_.size());
        basis_.push_back(std::move(h));
        masks_.push_back(divmask(basis_[k].mono(0, w_), n_));
        const Exp* lm_k = basis_[k].mono(0, w_);

        // Gebauer-Moeller update
        std::vector<Pair> fresh;
        for (int i : active_) {
            const Exp* lm_i = basis_[i].mono(0, w_);
            Mono l = lcm(lm_i, lm_k, n_);
            int s = std::max(basis_[i].sugar + l[0] - lm_i[0], basis_[k].sugar + l[0] - lm_k[0]);
            fresh.push_back({i, k, std::move(l), s});
        }
        // M: drop (i,k) when another new lcm properly divides it
        std::vector<bool> drop(fresh.size(), false);
        for (std::size_t a = 0; a < fresh.size(); ++a)
            for (std::size_t b = 0; b < fresh.size(); ++b) {
                if (a == b) continue;
                if (divides(fresh[b].lcm.data(), fresh[a].lcm.data(), n_) &&
                    grevlex_cmp(fresh[b].lcm.data(), fresh[a].lcm.data(), n_) != 0) {
                    drop[a] = true;
                    break;
                }
            }
        // F: one pair per lcm; a coprime pair in the class kills the class
        std::map<Mono, std::vector<std::size_t>> classes;
        for (std::size_t a = 0; a < fresh.size(); ++a)
            if (!drop[a]) classes[fresh[a].lcm].push_back(a);
        std::vector<Pair> kept;
        for (auto& [l, members] : classes) {
            bool any_coprime = false;
            for (std::size_t a : members)
                if (coprime(basis_[fresh[a].i].mono(0, w_), lm_k, n_)) any_coprime = true;
            if (!any_coprime) kept.push_back(std::move(fresh[members.front()]));
        }
        // B: old pairs made redundant by the chain through k
        std::vector<Pair> old;
        old.reserve(pairs_.size());
        for (auto& p : pairs_) {
            if (divides(lm_k, p.lcm.data(), n_)) {
                Mono l1 = lcm(basis_[p.i].mono(0, w_), lm_k, n_);
                Mono l2 = lcm(basis_[p.j].mono(0, w_), lm_k, n_);
                if (l1 != p.lcm && l2 != p.lcm) continue;
            }
            old.push_back(std::move(p));
        }
        pairs_ = std::move(old);
        for (auto& p : kept) pairs_.push_back(std::move(p));

        std::vector<int> still;
        for (int i : active_)
            if (!divides(lm_k, basis_[i].mono(0, w_), n_)) still.push_back(i);
        still.push_back(k);
        active_ = std::move(still);
    }

    Poly spoly(const Pair& p) const {
        const Poly& f = basis_[p.i];
        const Poly& g = basis_[p.j];
        Mono mf = quotient(p.lcm.data(), f.mono(0, w_), n_);
        Mono mg = quotient(p.lcm.data(), g.mono(0, w_), n_);
        // mf*f - mg*g with both monic: build mf*f explicitly, then subtract
        Poly a;
        a.sugar = f.sugar + mf[0];
        for (std::size_t k = 0; k < f.len(); ++k) {
            const Exp* fm = f.mono(k, w_);
            for (int t = 0; t < w_; ++t) a.ex.push_back(static_cast<Exp>(fm[t] + mf[t]));
            a.co.push_back(f.co[k]);
        }
        Poly s = sub_mul(a, 0, F::one(), mg, g);
        s.sugar = std::max(s.sugar, p.sugar);
        return s;
    }

    std::size_t run(const std::vector<Poly>& inputs) {
        std::vector<Poly> sorted = inputs;
        std::sort(sorted.begin(), sorted.end(), [&](const Poly& a, const Poly& b) {
            return grevlex_cmp(a.mono(0, w_), b.mono(0, w_), n_) < 0;
        });
        for (auto& f : sorted) {
            Poly r = reduce(f);
            if (!r.empty()) insert(std::move(r));
        }
        std::size_t processed = 0;
        while (!pairs_.empty()) {
            std::size_t best = 0;
            for (std::size_t a = 1; a < pairs_.size(); ++a) {
                const Pair& x = pairs_[a];
                const Pair& y = pairs_[best];
                if (x.sugar != y.sugar ? x.sugar < y.sugar : grevlex_cmp(x.lcm.data(), y.lcm.data(), n_) < 0) best = a;
            }
            Pair p = std::move(pairs_[best]);
            pairs_[best] = std::move(pairs_.back());
            pairs_.pop_back();
            if (++processed > budget_) throw GbBudgetExceeded(budget_);
            Poly r = reduce(spoly(p));
            if (!r.empty()) {
                insert(std::move(r));
                if (is_unit_poly(basis_.back())) break;
            }
        }
        return processed;
    }

    bool is_unit_poly(const Poly& p) const { return p.len() == 1 && p.mono(0, w_)[0] == 0; }

    std::vector<Poly> reduced_basis() {
        for (const auto& p : basis_)
            if (is_unit_poly(p)) return {p};
        std::vector<int> order = active_;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return grevlex_cmp(basis_[a].mono(0, w_), basis_[b].mono(0, w_), n_) < 0;
        });
        std::vector<Poly> out;
        for (int k : order) {
            Poly r = reduce(basis_[k], k);
            make_monic(r);
            out.push_back(std::move(r));
        }
        return out;
    }

    // For verification: normal form w.r.t. an explicit list.
    void load_basis(const std::vector<Poly>& g) {
        basis_ = g;
        masks_.clear();
        active_.clear();
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            masks_.push_back(divmask(basis_[k].mono(0, w_), n_));
            active_.push_back(static_cast<int>(k));
        }
    }

    Poly spoly_of(int i, int j) const {
        Pair p{i, j, lcm(basis_[i].mono(0, w_), basis_[j].mono(0, w_), n_), 0};
        return spoly(p);
    }

    int width() const { return w_; }

private:
    F K_;
    int n_, w_;
    std::size_t budget_;
    std::vector<Poly> basis_;
    std::vector<std::uint64_t> masks_;
    std::vector<int> active_;
    std::vector<Pair> pairs_;
};

template <class F>
GroebnerBasis run_buchberger(const std::vector<MultiPoly>& gens, const VarSignature& sig, F field,
                             const GbOptions& opt) {
    Engine<F> eng(field, sig.total(), opt.budget);
    std::vector<typename Engine<F>::Poly> in;
    for (const auto& g : gens) {
        auto p = eng.convert(g);
        if (!p.empty()) in.push_back(std::move(p));
    }
    GroebnerBasis gb;
    gb.prime = opt.prime;
    gb.pairs_processed = eng.run(in);
    for (const auto& p : eng.reduced_basis()) gb.polys.push_back(eng.back(p, sig));
    return gb;
}

template <class F>
bool check_basis(const GroebnerBasis& gb, const VarSignature& sig, F field) {
    Engine<F> eng(field, sig.total(), 0);
    std::vector<typename Engine<F>::Poly> polys;
    for (const auto& g : gb.polys) polys.push_back(eng.convert(g));
    for (auto& p : polys) {
        if (p.empty()) return false;
        eng.make_monic(p);
    }
    eng.load_basis(polys);
    const int k = static_cast<int>(polys.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (!eng.reduce(eng.spoly_of(i, j)).empty()) return false;
    return true;
}

}  // namespace

bool grevlex_greater(const Exponent& a, const Exponent& b) {
    int da = std::accumulate(a.begin(), a.end(), 0), db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

Exponent leading_exponent(const MultiPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("leading exponent of zero polynomial");
    const Exponent* best = nullptr;
    for (const auto& [e, c] : p.terms())
        if (!best || grevlex_greater(e, *best)) best = &e;
    return *best;
}

bool GroebnerBasis::is_unit() const {
    for (const auto& p : polys)
        if (p.size() == 1 && p.total_degree() == 0) return true;
    return false;
}

MonomialIdeal MonomialIdeal::from(std::vector<Exponent> gens, int num_vars) {
    auto deg = [](const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); };
    std::sort(gens.begin(), gens.end(), [&](const Exponent& a, const Exponent& b) {
        return deg(a) != deg(b) ? deg(a) < deg(b) : a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    MonomialIdeal I;
    I.num_vars = num_vars;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& h : I.gens) {
            bool div = true;
            for (int i = 0; i < num_vars && div; ++i) div = h[i] <= g[i];
            if (div) {
                redundant = true;
                break;
            }
        }
        if (!redundant) I.gens.push_back(g);
    }
    return I;
}

GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, const GbOptions& opt) {
    if (gens.empty()) return {};
    const VarSignature& sig = gens.front().signature();
    for (const auto& g : gens)
        if (g.signature() != sig) throw std::invalid_argument("generators have different signatures");
    if (opt.prime == 0) return run_buchberger(gens, sig, RationalField{}, opt);
    return run_buchberger(gens, sig, PrimeField{opt.prime}, opt);
}

MonomialIdeal initial_ideal(const GroebnerBasis& gb) {
    std::vector<Exponent> lms;
    int n = 0;
    for (const auto& p : gb.polys) {
        lms.push_back(leading_exponent(p));
        n = p.signature().total();
    }
    return MonomialIdeal::from(std::move(lms), n);
}

bool is_groebner_basis(const GroebnerBasis& gb) {
    if (gb.polys.empty()) return true;
    const VarSignature& sig = gb.polys.front().signature();
    if (gb.prime == 0) return check_basis(gb, sig, RationalField{});
    return check_basis(gb, sig, PrimeField{gb.prime});
}

namespace {

// Smallest hitting set of the generator supports, by branching on the
// variables of an unhit generator with the fewest support variables.
void hitting_set(const std::vector<std::vector<int>>& supports, std::vector<char>& chosen, int size, int& best) {
    if (size >= best) return;
    const std::vector<int>* pick = nullptr;
    for (const auto& s : supports) {
        bool hit = false;
        for (int v : s)
            if (chosen[v]) {
                hit = true;
                break;
            }
        if (!hit && (!pick || s.size() < pick->size())) pick = &s;
    }
    if (!pick) {
        best = size;
        return;
    }
    if (size + 1 >= best) return;
    for (int v : *pick) {
        chosen[v] = 1;
        hitting_set(supports, chosen, size + 1, best);
        chosen[v] = 0;
    }
}

}  // namespace

int dim_monomial(const MonomialIdeal& I) {
    std::vector<std::vector<int>> supports;
    for (const auto& g : I.gens) {
        std::vector<int> s;
        for (int i = 0; i < I.num_vars; ++i)
            if (g[i] > 0) s.push_back(i);
        if (s.empty()) return -1;  // the unit ideal
        supports.push_back(std::move(s));
    }
    std::vector<char> chosen(I.num_vars, 0);
    int best = I.num_vars + 1;
    hitting_set(supports, chosen, 0, best);
    return I.num_vars - best;
}

int affine_dim(const std::vector<MultiPoly>& gens, const VarSignature& sig, const GbOptions& opt) {
    std::vector<MultiPoly> nz;
    for (const auto& g : gens) {
        if (g.signature() != sig) throw std::invalid_argument("generator signature mismatch");
        if (!g.is_zero()) nz.push_back(g);
    }
    if (nz.empty()) return sig.total();
    GroebnerBasis gb = buchberger(nz, opt);
    if (gb.is_unit()) return -1;
    return dim_monomial(initial_ideal(gb));
}

bool zero_dim_check(const std::vector<MultiPoly>& gens, const VarSignature& sig, const GbOptions& opt) {
    return affine_dim(gens, sig, opt) <= 0;
}

}  // namespace apolar
