#ifndef APOLAR_APOLAR_HPP
#define APOLAR_APOLAR_HPP

#include "apolar/catalecticant.hpp"
#include "apolar/options.hpp"
#include "apolar/poly.hpp"

#include <map>
#include <vector>

namespace apolar {

// Basis of (M^perp)_k as dual polynomials. For k not <= d the piece is all of T_k.
std::vector<MultiPoly> apolar_piece(const MultiPoly& M, const Multidegree& k);

struct GeneratorDegree {
    Multidegree degree;
    long count = 0;
};

struct ApolarProfile {
    std::vector<ProfileCell> hilbert;   // over the full box 0 <= a <= d
    long length = 0;
    std::vector<GeneratorDegree> generators;
    int delta = 0;               // max total degree of a minimal generator
    Multidegree delta_multi;     // componentwise max of generator multidegrees
    bool certified = true;
};

std::vector<ProfileCell> hilbert_function(const MultiPoly& M, const ComputeOptions& opt, Rng& rng);
long apolar_length(const std::vector<ProfileCell>& hilbert);

// Number of minimal generators of M^perp in each multidegree b <= d + 1.
// Uses the dual description: the count at b is dim U_b - h(b), where U_b is
// the set of G in S_b whose group-i partials lie in the span of the
// derivatives of M of multidegree b - e_i.
std::vector<GeneratorDegree> min_generator_degrees(const MultiPoly& M, const std::vector<ProfileCell>& hilbert,
                                                   const ComputeOptions& opt, Rng& rng, bool* certified = nullptr);

ApolarProfile apolar_profile(const MultiPoly& M, const ComputeOptions& opt, Rng& rng);

// Explicit minimal generators, sorted by total degree; within a degree in the
// order they are found. Built from the quotient (M^perp)_b / sum T_{e_i} (M^perp)_{b-e_i}
// at the multidegrees listed in `degrees`. Exact arithmetic.
std::vector<MultiPoly> minimal_generators(const MultiPoly& M, const std::vector<GeneratorDegree>& degrees);

struct PointsCheck {
    bool member = false;
    std::vector<BigRational> coefficients;
};
PointsCheck apolarity_check_points(const std::vector<ProductPoint>& points, const MultiPoly& M);

// subspaces[i] lists basis vectors of W_i in V (rows of length n).
bool carlini_subspace_check(const std::vector<std::vector<std::vector<BigRational>>>& subspaces, const MultiPoly& F);

struct DecompTerm {
    BigRational coefficient;
    ProductPoint point;
};

struct Verification {
    bool ok = false;
    MultiPoly residual;
};
Verification verify_decomposition(const MultiPoly& M, const std::vector<DecompTerm>& terms);

// Partial derivative with respect to one flattened variable.
MultiPoly partial(const MultiPoly& p, int var);
// Coordinates of p in the monomial basis of its multidegree.
QVector coordinates(const MultiPoly& p, const std::map<Exponent, int>& index, int dim);

}  // namespace apolar

#endif
