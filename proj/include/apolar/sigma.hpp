#ifndef APOLAR_SIGMA_HPP
#define APOLAR_SIGMA_HPP

#include "apolar/options.hpp"
#include "apolar/poly.hpp"

namespace apolar {

// dim of the affine cone cut out by the a-th partials of a single-group F.
// The origin always lies in it, so the result is >= 0.
DimResult sigma_hat_dim(const MultiPoly& F, int a, const ComputeOptions& opt, Rng& rng);

// Multiprojective dimension of the locus defined by the image of C^a_M, via
// one random affine slice per group (best of `tries`); -1 when empty.
DimResult sigma_dim_multi(const MultiPoly& M, const Multidegree& a, const ComputeOptions& opt, Rng& rng,
                          int tries = 3);

// Affine dimension of V(gens) where gens only involve the variables of one
// group; computed in that group's polynomial ring.
// Affine dimension of V(gens) with the field picked by choose_gb_field;
// -1 for the unit ideal.
DimResult gb_dimension(const std::vector<MultiPoly>& gens, const VarSignature& sig, const ComputeOptions& opt, Rng& rng);

DimResult affine_dim_in_group(const std::vector<MultiPoly>& gens, int group, const ComputeOptions& opt, Rng& rng);

}  // namespace apolar

#endif
