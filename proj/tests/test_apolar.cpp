#include "oracles.hpp"

#include "apolar/apolar.hpp"
#include "apolar/fixtures.hpp"
#include "apolar/options.hpp"

#include <doctest.h>

using namespace apolar;

namespace {

// Minimal generator count in each degree of Ann(F), for a single-group form:
// dim I_k - dim(T_1 * I_{k-1}), all in dense linear algebra.
std::map<int, long> generator_oracle(const MultiPoly& F) {
    const int n = F.signature().total();
    const int d = F.total_degree();
    auto ideal_piece = [&](int k) {
        std::vector<MultiPoly> out;
        auto cols = oracle::exponents(n, k);
        if (k > d) {
            for (const auto& e : cols) out.push_back(MultiPoly::monomial(F.signature(), e));
            return out;
        }
        auto C = oracle::catalecticant(F, {k}, {d});
        if (C.empty()) C.assign(1, std::vector<BigRational>(cols.size()));
        for (const auto& v : oracle::kernel(C, cols.size())) {
            MultiPoly p(F.signature());
            for (std::size_t j = 0; j < cols.size(); ++j)
                if (v[j] != 0) p.add_term(cols[j], v[j]);
            out.push_back(p);
        }
        return out;
    };
    std::map<int, long> counts;
    for (int k = 1; k <= d + 1; ++k) {
        auto basis = oracle::exponents(n, k);
        auto Ik = ideal_piece(k);
        oracle::Dense products;
        for (const auto& g : ideal_piece(k - 1))
            for (int v = 0; v < n; ++v) {
                Exponent e(n, 0);
                e[v] = 1;
                MultiPoly p = g * MultiPoly::monomial(F.signature(), e);
                std::vector<BigRational> row;
                for (const auto& b : basis) row.push_back(p.coefficient(b));
                products.push_back(row);
            }
        long c = static_cast<long>(Ik.size()) - oracle::rank(products);
        if (c > 0) counts[k] = c;
    }
    return counts;
}

}  // namespace

TEST_SUITE("apolar") {

TEST_CASE("Hilbert function matches the oracle") {
    Rng rng(41);
    ComputeOptions opt;
    for (int t = 0; t < 12; ++t) {
        VarSignature sig(t % 3 == 0 ? std::vector<int>{2, 2} : std::vector<int>{3});
        Multidegree d = t % 3 == 0 ? Multidegree{2, 1} : Multidegree{4};
        MultiPoly M = oracle::random_poly(rng, sig, d, 2 + t);
        auto h = hilbert_function(M, opt, rng);
        CHECK(h.size() == md_box_size(d));
        long total = 0;
        for (const auto& cell : h) {
            CHECK(cell.rank == oracle::hilbert(M, cell.a, d));
            total += cell.rank;
        }
        CHECK(apolar_length(h) == total);
    }
}

TEST_CASE("minimal generator counts match the quotient oracle") {
    Rng rng(42);
    ComputeOptions opt;
    opt.strategy = RankStrategy::exact;
    VarSignature s3({3});
    std::vector<MultiPoly> forms = {
        parse_poly("x1*x2*x3", s3),
        parse_poly("x1^2*x2^2", VarSignature({2})),
        parse_poly("x1^3 + x2^3 + x3^3", s3),
        parse_poly("x1^2*x2 + x3^3", s3),
        fixtures::det(2),
    };
    for (int t = 0; t < 6; ++t) forms.push_back(oracle::random_poly(rng, s3, {3}, 2 + t));
    for (const auto& F : forms) {
        ApolarProfile ap = apolar_profile(F, opt, rng);
        std::map<int, long> got;
        for (const auto& g : ap.generators)
            if (g.count > 0) got[g.degree[0]] += g.count;
        CHECK(got == generator_oracle(F));
        CHECK(ap.certified);
    }
}

TEST_CASE("generators of simple monomials") {
    Rng rng(43);
    ComputeOptions opt;
    // Ann(x1 x2 x3) = (y1^2, y2^2, y3^2)
    ApolarProfile ap = apolar_profile(fixtures::squarefree_monomial(3), opt, rng);
    REQUIRE(ap.generators.size() == 1);
    CHECK(ap.generators[0].degree == Multidegree{2});
    CHECK(ap.generators[0].count == 3);
    CHECK(ap.delta == 2);
    CHECK(ap.length == 8);
}

TEST_CASE("minimal generators annihilate the form") {
    Rng rng(44);
    ComputeOptions opt;
    std::vector<MultiPoly> forms = {fixtures::det(3), parse_poly("x1*y1^2 + x2*y2^2", VarSignature({2, 2})),
                                    fixtures::monomial(VarSignature({2, 2}), {1, 2, 2, 1})};
    for (const auto& M : forms) {
        ApolarProfile ap = apolar_profile(M, opt, rng);
        auto gens = minimal_generators(M, ap.generators);
        long expected = 0;
        for (const auto& g : ap.generators) expected += g.count;
        CHECK(static_cast<long>(gens.size()) == expected);
        for (const auto& g : gens) CHECK(diff_apply(g, M).is_zero());
    }
}

TEST_CASE("apolarity of point sets") {
    VarSignature s({3});
    MultiPoly xyz = parse_poly("x1*x2*x3", s);
    std::vector<ProductPoint> pts;
    for (const char* p : {"1,1,1", "1,1,-1", "1,-1,1", "1,-1,-1"}) pts.push_back(ProductPoint::parse(p, s));
    PointsCheck c = apolarity_check_points(pts, xyz);
    CHECK(c.member);
    REQUIRE(c.coefficients.size() == 4);
    CHECK(c.coefficients[0] == BigRational(1, 24));
    CHECK(c.coefficients[1] == BigRational(-1, 24));
    pts.pop_back();
    CHECK_FALSE(apolarity_check_points(pts, xyz).member);

    VarSignature s2({2});
    CHECK_FALSE(apolarity_check_points({ProductPoint::parse("1,0", s2), ProductPoint::parse("0,1", s2)},
                                       parse_poly("x1*x2", s2)).member);

    // x1*y1 + x2*y2 is a sum of two product points
    VarSignature b({2, 2});
    CHECK(apolarity_check_points({ProductPoint::parse("1,0 | 1,0", b), ProductPoint::parse("0,1 | 0,1", b)},
                                 parse_poly("x1*y1 + x2*y2", b)).member);
}

TEST_CASE("verify_decomposition reports the residual") {
    VarSignature s({2});
    MultiPoly F = parse_poly("x1^2 - x2^2", s);
    std::vector<DecompTerm> good = {{1, ProductPoint::parse("1,0", s)}, {-1, ProductPoint::parse("0,1", s)}};
    CHECK(verify_decomposition(F, good).ok);
    good[1].coefficient = 1;
    Verification v = verify_decomposition(F, good);
    CHECK_FALSE(v.ok);
    CHECK(v.residual == parse_poly("-2*x2^2", s));
}

TEST_CASE("Carlini subspace check") {
    VarSignature s({3});
    MultiPoly xyz = parse_poly("x1*x2*x3", s);
    using Sub = std::vector<std::vector<BigRational>>;
    Sub all = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK(carlini_subspace_check({all}, xyz));
    Sub w12 = {{1, 0, 0}, {0, 1, 0}}, w3 = {{0, 0, 1}};
    CHECK_FALSE(carlini_subspace_check({w12, w3}, xyz));
    // x1^3 + x2^3 splits along the two coordinate lines
    MultiPoly f = parse_poly("x1^3 + x2^3", s);
    CHECK(carlini_subspace_check({Sub{{1, 0, 0}}, Sub{{0, 1, 0}}}, f));
    CHECK_THROWS(carlini_subspace_check({Sub{{1, 0}}}, f));
    CHECK_THROWS(carlini_subspace_check({Sub{{1, 0, 0}, {2, 0, 0}}}, f));
}

}  // TEST_SUITE
