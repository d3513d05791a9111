#ifndef APOLAR_FORMULAS_HPP
#define APOLAR_FORMULAS_HPP

#include "apolar/apolar.hpp"
#include "apolar/poly.hpp"

#include <string>
#include <vector>

namespace apolar {

// An explicit expression M = sum c_i P_i^d. Every constructor below checks
// the expansion against `polynomial` and throws std::logic_error on a nonzero
// residual, so a Decomposition in hand is always verified.
struct Decomposition {
    std::string target;
    MultiPoly polynomial;
    Multidegree degree;
    std::vector<DecompTerm> terms;

    std::size_t length() const { return terms.size(); }
};

Decomposition make_decomposition(std::string target, MultiPoly polynomial, std::vector<DecompTerm> terms);

// x_1 ... x_n = sum_eps eps_2...eps_n (x_1 + eps_2 x_2 + ... )^n / (2^{n-1} n!)
Decomposition monomial_product(int n);
// Split decompositions of per_k / det_3 over the row-grouped signature (k groups of k).
Decomposition glynn_permanent(int k);
Decomposition ryser_permanent(int k);
Decomposition derksen_det3();
// Each product of s linear forms becomes 2^{s-1} powers; the result lives on
// one group holding all variables. Requires multidegree (1, ..., 1).
Decomposition split_to_waring(const Decomposition& split);
Decomposition bihomog_product(int a, int b);
// Multihomogeneous decomposition from one single-group decomposition per group.
Decomposition product_decomposition(const std::vector<Decomposition>& factors);

// Decompositions whose coefficients live in Q(zeta_N): every linear-form
// coordinate is 0 or a power of zeta, every scalar is a rational times a
// power of zeta. Verified exactly in Q[x]/(Phi_N).
struct CycloTerm {
    BigRational coefficient;
    int root = 0;                             // scalar = coefficient * zeta^root
    std::vector<std::vector<int>> forms;      // per group, per variable: zeta power, or -1 for 0
};

struct CycloDecomposition {
    std::string target;
    MultiPoly polynomial;
    Multidegree degree;
    int order = 1;                            // N
    std::vector<CycloTerm> terms;

    std::size_t length() const { return terms.size(); }
    std::string term_str(const CycloTerm& t) const;
};

// Monomial with exponent e over sig: per group, the roots-of-unity expansion
// around the smallest exponent, prod_{i != min} (a_i + 1) terms; groups multiply.
CycloDecomposition monomial_power(const VarSignature& sig, const Exponent& e);
bool verify_cyclo(const CycloDecomposition& dec);
// Phi_N with integer coefficients, low degree first.
std::vector<BigInt> cyclotomic_polynomial(int n);

}  // namespace apolar

#endif
