#ifndef APOLAR_CATALECTICANT_HPP
#define APOLAR_CATALECTICANT_HPP

#include "apolar/linalg.hpp"
#include "apolar/poly.hpp"

#include <map>
#include <vector>

namespace apolar {

// C^a_M : S^a V* -> S^{d-a} V. Column j is D_j M for the j-th dual monomial
// of multidegree a; rows index monomials of multidegree d - a.
struct Catalecticant {
    Multidegree source;
    Multidegree target;
    QMatrix matrix;   // row_labels / col_labels carry the monomial bases
};

Catalecticant catalecticant(const MultiPoly& M, const Multidegree& a);

// Column j as a polynomial of multidegree d - a.
MultiPoly catalecticant_column(const Catalecticant& c, const MultiPoly& M, int j);
// All nonzero columns, i.e. a spanning set of the image of C^a_M.
std::vector<MultiPoly> catalecticant_image(const MultiPoly& M, const Multidegree& a);

RankResult catalecticant_rank(const MultiPoly& M, const Multidegree& a, RankStrategy strategy, Rng& rng);

struct ProfileCell {
    Multidegree a;
    long rank = 0;
    bool certified = true;
    int rows = 0, cols = 0;
};

class ProfileTooLarge : public std::runtime_error {
public:
    explicit ProfileTooLarge(long long cells)
        : std::runtime_error("multidegree box has " + std::to_string(cells) + " cells, above --max-cells"),
          cells(cells) {}
    long long cells;
};

// Full table over 0 <= a <= d. The symmetric half is filled from the
// transpose identity rank C^a = rank C^{d-a}.
std::vector<ProfileCell> profile(const MultiPoly& M, RankStrategy strategy, Rng& rng,
                                 long long max_cells = 10000);

// M = sum_i t_i F_i over signature (m, n), multidegree (1, d).
MultiPoly series_to_biform(const std::vector<MultiPoly>& series);

struct Conciseness {
    std::vector<bool> per_group;
    bool overall = true;
};
Conciseness conciseness_check(const MultiPoly& M, RankStrategy strategy, Rng& rng);

// True iff C^{rad(a)}_M has zero kernel.
bool injectivity_check(const MultiPoly& M, const Multidegree& a, RankStrategy strategy, Rng& rng);

Multidegree require_homogeneous(const MultiPoly& M);

}  // namespace apolar

#endif
