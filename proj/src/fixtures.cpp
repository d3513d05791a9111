#include "apolar/fixtures.hpp"

#include "apolar/random.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace apolar::fixtures {

VarSignature matrix_signature(int cols, const std::vector<int>& row_groups) {
    std::vector<int> sizes;
    for (int r : row_groups) sizes.push_back(r * cols);
    return VarSignature(sizes);
}

namespace {

int sign_of(const std::vector<int>& perm) {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

// Sum over permutations of prod_i x_{rows[i], cols[perm[i]]}, flattened into
// an m x n matrix numbered row-major.
MultiPoly perm_sum(const VarSignature& sig, int n_cols, const std::vector<int>& rows, const std::vector<int>& cols,
                   bool alternating) {
    std::vector<int> perm(rows.size());
    std::iota(perm.begin(), perm.end(), 0);
    MultiPoly out(sig);
    do {
        Exponent e(sig.total(), 0);
        for (std::size_t i = 0; i < rows.size(); ++i) e[rows[i] * n_cols + cols[perm[i]]] += 1;
        out.add_term(e, alternating ? sign_of(perm) : 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

void combinations(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

std::vector<int> iota_vec(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

}  // namespace

MultiPoly determinant(int n, const std::vector<int>& row_groups) {
    if (std::accumulate(row_groups.begin(), row_groups.end(), 0) != n) throw std::invalid_argument("row groups must sum to n");
    return perm_sum(matrix_signature(n, row_groups), n, iota_vec(n), iota_vec(n), true);
}

MultiPoly permanent(int n, const std::vector<int>& row_groups) {
    if (std::accumulate(row_groups.begin(), row_groups.end(), 0) != n) throw std::invalid_argument("row groups must sum to n");
    return perm_sum(matrix_signature(n, row_groups), n, iota_vec(n), iota_vec(n), false);
}

MultiPoly monomial(const VarSignature& sig, const Exponent& e) { return MultiPoly::monomial(sig, e, 1); }

MultiPoly squarefree_monomial(int n) { return monomial(VarSignature({n}), Exponent(n, 1)); }

MultiPoly uniform_power_monomial(const std::vector<int>& sizes, const std::vector<int>& degrees) {
    VarSignature sig(sizes);
    Exponent e;
    for (std::size_t g = 0; g < sizes.size(); ++g)
        for (int j = 0; j < sizes[g]; ++j) e.push_back(degrees[g]);
    return monomial(sig, e);
}

std::vector<MultiPoly> minors_series(int m, int n, int k) {
    VarSignature sig({m * n});
    std::vector<std::vector<int>> rs, cs;
    combinations(m, k, rs);
    combinations(n, k, cs);
    std::vector<MultiPoly> out;
    for (const auto& r : rs)
        for (const auto& c : cs) out.push_back(perm_sum(sig, n, r, c, true));
    return out;
}

std::vector<MultiPoly> permanents_series(int m, int n, int k) {
    VarSignature sig({m * n});
    std::vector<std::vector<int>> rs, cs;
    combinations(m, k, rs);
    combinations(n, k, cs);
    std::vector<MultiPoly> out;
    for (const auto& r : rs)
        for (const auto& c : cs) out.push_back(perm_sum(sig, n, r, c, false));
    return out;
}

std::vector<Exponent> rookfree_exponents(int m, int n, int t) {
    std::vector<std::vector<int>> rs, cs;
    combinations(m, t, rs);
    combinations(n, t, cs);
    std::vector<Exponent> out;
    for (const auto& r : rs)
        for (const auto& c : cs) {
            std::vector<int> perm = iota_vec(t);
            do {
                Exponent e(m * n, 0);
                for (int i = 0; i < t; ++i) e[r[i] * n + c[perm[i]]] = 1;
                out.push_back(std::move(e));
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    return out;
}

std::vector<MultiPoly> rookfree_series(int m, int n, int k) {
    VarSignature sig({m * n});
    std::vector<MultiPoly> out;
    for (const auto& e : rookfree_exponents(m, n, k)) out.push_back(monomial(sig, e));
    return out;
}

MultiPoly stanley() {
    // variables x, y, z, t_1..t_10; F = sum_i t_i m_i with m_i the cubic monomials in x, y, z
    VarSignature sig({13});
    MultiPoly F(sig);
    int i = 0;
    for (const auto& m : monomial_basis(VarSignature({3}), {3})) {
        Exponent e(13, 0);
        e[0] = m[0];
        e[1] = m[1];
        e[2] = m[2];
        e[3 + i++] = 1;
        F.add_term(e, 1);
    }
    return F;
}

SeededForm bernstein_iarrobino(std::uint64_t seed) {
    // variables x, y, z, s, t
    VarSignature sig({5});
    Rng rng(seed);
    MultiPoly F(sig);
    const auto ternary = monomial_basis(VarSignature({3}), {15});
    for (int slot : {3, 4})
        for (const auto& m : ternary) {
            long c = static_cast<long>(rng.uniform(-9, 9));
            Exponent e(5, 0);
            e[0] = m[0];
            e[1] = m[1];
            e[2] = m[2];
            e[slot] = 1;
            F.add_term(e, c);
        }
    return {F, seed};
}

MultiPoly mult(int n) {
    // groups A, B, C, each n x n row-major; sum a_ij b_jk c_ki
    const int q = n * n;
    VarSignature sig({q, q, q});
    MultiPoly F(sig);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Exponent e(3 * q, 0);
                e[i * n + j] = 1;
                e[q + j * n + k] = 1;
                e[2 * q + k * n + i] = 1;
                F.add_term(e, 1);
            }
    return F;
}

std::vector<std::string> names() {
    return {"det2", "det3", "det4", "det3-rows", "det4-rows22", "per2", "per3", "per3-rows", "stanley", "bi", "mult2", "xyz"};
}

MultiPoly by_name(const std::string& name, std::uint64_t seed) {
    if (name == "det2") return det(2);
    if (name == "det3") return det(3);
    if (name == "det4") return det(4);
    if (name == "det3-rows") return determinant(3, {1, 1, 1});
    if (name == "det4-rows22") return determinant(4, {2, 2});
    if (name == "per2") return per(2);
    if (name == "per3") return per(3);
    if (name == "per3-rows") return permanent(3, {1, 1, 1});
    if (name == "stanley") return stanley();
    if (name == "bi") return bernstein_iarrobino(seed).form;
    if (name == "mult2") return mult(2);
    if (name == "xyz") return squarefree_monomial(3);
    throw std::invalid_argument("unknown fixture '" + name + "'");
}

}  // namespace apolar::fixtures
