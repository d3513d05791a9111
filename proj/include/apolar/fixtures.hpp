#ifndef APOLAR_FIXTURES_HPP
#define APOLAR_FIXTURES_HPP

#include "apolar/poly.hpp"

#include <cstdint>
#include <string>
#include <vector>

// Builders for the worked examples: determinants, permanents, matrix linear
// series, Stanley's quartic, the Bernstein-Iarrobino form and matrix
// multiplication. Matrix entries x_{i,j} are numbered row-major; rows are
// distributed over groups by `row_groups` (e.g. {n} for one group).
namespace apolar::fixtures {

VarSignature matrix_signature(int cols, const std::vector<int>& row_groups);
MultiPoly determinant(int n, const std::vector<int>& row_groups);
MultiPoly permanent(int n, const std::vector<int>& row_groups);
inline MultiPoly det(int n) { return determinant(n, {n}); }
inline MultiPoly per(int n) { return permanent(n, {n}); }

// x_1^{e_1} ... over the given signature.
MultiPoly monomial(const VarSignature& sig, const Exponent& e);
// x_1 ... x_n in one group.
MultiPoly squarefree_monomial(int n);
// prod_i prod_j x_{i,j}^{d_i} over signature `sizes`.
MultiPoly uniform_power_monomial(const std::vector<int>& sizes, const std::vector<int>& degrees);

// Members of the linear series of a generic m x n matrix, single group (m*n vars).
std::vector<MultiPoly> minors_series(int m, int n, int k);
std::vector<MultiPoly> permanents_series(int m, int n, int k);
std::vector<MultiPoly> rookfree_series(int m, int n, int k);
// Rook-free square-free monomials of degree t as exponents (the ideal R_t).
std::vector<Exponent> rookfree_exponents(int m, int n, int t);

MultiPoly stanley();
struct SeededForm {
    MultiPoly form;
    std::uint64_t seed;
};
// F = G s + H t with G, H of degree 15 in x, y, z, coefficients uniform in [-9, 9].
SeededForm bernstein_iarrobino(std::uint64_t seed);
MultiPoly mult(int n);

// Named fixtures for the CLI: det3, det4, per3, stanley, bi, mult2, ...
std::vector<std::string> names();
MultiPoly by_name(const std::string& name, std::uint64_t seed = 20240601);

}  // namespace apolar::fixtures

#endif
