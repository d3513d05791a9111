#ifndef APOLAR_POLY_HPP
#define APOLAR_POLY_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace apolar {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Multidegrees and exponents are plain integer tuples; helpers below give
// them the componentwise order used throughout.
using Multidegree = std::vector<int>;
using Exponent = std::vector<int>;

class VarSignature {
public:
    VarSignature() = default;
    explicit VarSignature(std::vector<int> group_sizes);

    int groups() const { return static_cast<int>(sizes_.size()); }
    int total() const { return total_; }
    int size(int g) const { return sizes_[g]; }
    int offset(int g) const { return offsets_[g]; }
    int group_of(int var) const;
    const std::vector<int>& sizes() const { return sizes_; }

    std::string str() const;
    // Accepts "[3,3]" or "3,3".
    static VarSignature parse(std::string_view text);

    bool operator==(const VarSignature& o) const { return sizes_ == o.sizes_; }
    bool operator!=(const VarSignature& o) const { return !(*this == o); }

private:
    std::vector<int> sizes_;
    std::vector<int> offsets_;
    int total_ = 0;
};

bool md_leq(const Multidegree& a, const Multidegree& b);
Multidegree md_add(const Multidegree& a, const Multidegree& b);
Multidegree md_sub(const Multidegree& a, const Multidegree& b);
Multidegree md_rad(const Multidegree& a);
int md_total(const Multidegree& a);
std::string md_str(const Multidegree& a);
// All b with 0 <= b <= d, in lexicographic order.
std::vector<Multidegree> md_box(const Multidegree& d);
long long md_box_size(const Multidegree& d);

Multidegree multidegree_of(const Exponent& e, const VarSignature& sig);

// Descending graded-lex on the flattened variable list; the storage order
// of MultiPoly, so iteration yields the canonical print order.
struct GrlexDesc {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

enum class Role { primal, dual };

class MultiPoly {
public:
    using TermMap = std::map<Exponent, BigRational, GrlexDesc>;

    MultiPoly() = default;
    explicit MultiPoly(VarSignature sig, Role role = Role::primal);

    static MultiPoly monomial(const VarSignature& sig, Exponent e, BigRational c = 1,
                              Role role = Role::primal);
    static MultiPoly constant(const VarSignature& sig, BigRational c);

    const VarSignature& signature() const { return sig_; }
    Role role() const { return role_; }
    MultiPoly with_role(Role r) const;

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponent& e, const BigRational& c);
    BigRational coefficient(const Exponent& e) const;

    bool is_homogeneous() const;
    // Set iff nonzero and every term shares one multidegree.
    std::optional<Multidegree> multidegree() const;
    int total_degree() const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly scaled(const BigRational& c) const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    BigRational evaluate(const std::vector<BigRational>& point) const;

    std::string str() const;

private:
    void check_compatible(const MultiPoly& o) const;

    VarSignature sig_;
    Role role_ = Role::primal;
    TermMap terms_;
};

// A point of V_1 x ... x V_s: one linear form per group.
struct ProductPoint {
    std::vector<std::vector<BigRational>> forms;

    void validate(const VarSignature& sig) const;
    std::string str() const;
    static ProductPoint parse(std::string_view line, const VarSignature& sig);
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos);
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

MultiPoly parse_poly(std::string_view text, const VarSignature& sig);
std::string to_string(const MultiPoly& p);
std::string exponent_str(const Exponent& e, const VarSignature& sig, Role role);

MultiPoly diff_apply(const MultiPoly& D, const MultiPoly& F);
MultiPoly power_of_point(const ProductPoint& P, const Multidegree& d, const VarSignature& sig);
MultiPoly linear_form(const VarSignature& sig, int group, const std::vector<BigRational>& coeffs);
std::vector<Exponent> monomial_basis(const VarSignature& sig, const Multidegree& a);

BigInt factorial(int n);
BigInt binomial(int n, int k);

}  // namespace apolar

#endif
