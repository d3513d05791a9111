#ifndef APOLAR_OPTIONS_HPP
#define APOLAR_OPTIONS_HPP

#include "apolar/groebner.hpp"
#include "apolar/linalg.hpp"

#include <cstddef>
#include <vector>

namespace apolar {

struct ComputeOptions {
    RankStrategy strategy = RankStrategy::automatic;
    std::size_t gb_budget = 200000;
    long long max_cells = 10000;
};

// Field choice for a Groebner computation. exact -> Q; modp -> random prime;
// auto -> Q unless the input is large (many generators or huge coefficients).
GbOptions choose_gb_field(const std::vector<MultiPoly>& gens, const ComputeOptions& opt, Rng& rng);

// A dimension or rank that may come from a modular computation.
struct DimResult {
    int dim = 0;
    bool certified = true;
};

}  // namespace apolar

#endif
