#ifndef APOLAR_GROEBNER_HPP
#define APOLAR_GROEBNER_HPP

#include "apolar/linalg.hpp"
#include "apolar/poly.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace apolar {

class GbBudgetExceeded : public std::runtime_error {
public:
    explicit GbBudgetExceeded(std::size_t budget)
        : std::runtime_error("GB budget exceeded (" + std::to_string(budget) + " S-pairs)"), budget(budget) {}
    std::size_t budget;
};

struct GbOptions {
    std::size_t budget = 200000;
    // 0: compute over Q. Otherwise a prime below 2^31; coefficients are reduced
    // mod p and the result is only generically equal to the one over Q.
    std::uint32_t prime = 0;
};

// Reduced Groebner basis for grevlex on the flattened variable list (ties by
// variable index). Over F_p the coefficients are stored as integers in [0, p).
struct GroebnerBasis {
    std::vector<MultiPoly> polys;
    bool reduced = true;
    std::uint32_t prime = 0;
    std::size_t pairs_processed = 0;

    bool is_unit() const;
};

struct MonomialIdeal {
    std::vector<Exponent> gens;   // minimal, antichain under divisibility
    int num_vars = 0;

    static MonomialIdeal from(std::vector<Exponent> gens, int num_vars);
};

GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, const GbOptions& opt = {});
// Leading exponent under grevlex.
Exponent leading_exponent(const MultiPoly& p);
bool grevlex_greater(const Exponent& a, const Exponent& b);
MonomialIdeal initial_ideal(const GroebnerBasis& gb);
// Check that every S-pair of the basis reduces to zero. Independent of the
// bookkeeping used during construction.
bool is_groebner_basis(const GroebnerBasis& gb);

// Krull dimension of k[x]/I: N minus the smallest set of variables meeting
// every generator's support.
int dim_monomial(const MonomialIdeal& I);
// Dimension of V(gens) in affine N-space; -1 for the unit ideal.
int affine_dim(const std::vector<MultiPoly>& gens, const VarSignature& sig, const GbOptions& opt = {});
bool zero_dim_check(const std::vector<MultiPoly>& gens, const VarSignature& sig, const GbOptions& opt = {});

}  // namespace apolar

#endif
