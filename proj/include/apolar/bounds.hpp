#ifndef APOLAR_BOUNDS_HPP
#define APOLAR_BOUNDS_HPP

#include "apolar/apolar.hpp"
#include "apolar/formulas.hpp"
#include "apolar/options.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace apolar {

// Which rank an entry bounds. Waring rank r (total grading), the
// multihomogeneous rank r_MH (which for a biform is the simultaneous rank of
// the series), or the k-ary rank r_k for k >= 2.
enum class Target { waring, multihomogeneous, k_ary };
std::string target_name(Target t);

using BoundParams = std::vector<std::pair<std::string, std::vector<long>>>;

struct BoundEntry {
    std::string name;
    Target target = Target::waring;
    long value = 0;
    BoundParams parameters;
    bool applicable = true;
    std::string reason;       // set when not applicable
    std::string provenance;
    bool certified = true;    // false when some rank or dimension came from F_p
};

struct UpperEntry {
    std::string name;
    Target target = Target::waring;
    BigInt value;
    bool verified = false;    // true: backed by an expanded, checked decomposition
    std::string provenance;
};

// Thrown when best_lower exceeds a verified upper bound of the same kind.
class ReportInvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// ---- lower bounds
BoundEntry bound_catalecticant(const std::vector<ProfileCell>& profile, Target target);
BoundEntry bound_catalecticant(const MultiPoly& M, const ComputeOptions& opt, Rng& rng);

// `concise` lets callers reuse one conciseness computation across a.
BoundEntry bound_lt(const MultiPoly& F, int a, const ComputeOptions& opt, Rng& rng,
                    std::optional<bool> concise = std::nullopt);
BoundEntry bound_lt_multi(const MultiPoly& M, const Multidegree& a, const ComputeOptions& opt, Rng& rng);
BoundEntry bound_series_v1(const MultiPoly& W, int a, const ComputeOptions& opt, Rng& rng);
BoundEntry bound_series_v2(const MultiPoly& W, int a, const ComputeOptions& opt, Rng& rng);

BoundEntry bound_rs(const ApolarProfile& ap);
BoundEntry bound_rs(const MultiPoly& F, const ComputeOptions& opt, Rng& rng);
// The ideal generated by the pieces of degree <= eps is the one generated by
// the minimal generators of degree <= eps; pass them in to avoid recomputing.
BoundEntry bound_rs_eps(const MultiPoly& F, const ApolarProfile& ap, const ComputeOptions& opt, Rng& rng,
                        const std::vector<MultiPoly>* generators = nullptr);
BoundEntry bound_rs_multi(const ApolarProfile& ap);

// Shortest prefix of the degree-sorted minimal generators that cuts out a
// zero-dimensional scheme; shared by every k.
struct GeneratorPrefix {
    std::vector<long> degrees;    // degrees of the prefix, ascending
    bool certified = true;
};
GeneratorPrefix zero_dim_prefix(const MultiPoly& F, const std::vector<MultiPoly>& generators, const ComputeOptions& opt,
                                Rng& rng);
BoundEntry bound_carlini_k(const GeneratorPrefix& prefix, long length, int k);
BoundEntry bound_carlini_k(const MultiPoly& F, int k, const ApolarProfile& ap, const ComputeOptions& opt, Rng& rng);

struct RkBracket {
    BigInt lower, upper;
    bool equal = false;
};
RkBracket monomial_rk_conjecture(const std::vector<int>& degrees, int k);

// ---- closed-form upper bounds, rounded up when not integral
// derksen_waring(n), derksen_split(n), glynn_waring(k), ryser_waring(k),
// monomial_waring(n), bihomog_mh(a, b), monomial_power(d_1, ..., d_n),
// rookfree_series(m, n, k), minors_series(m, n, k), permanents_series(m, n, k)
BigInt upper_formula(const std::string& name, const std::vector<long>& params);
std::vector<std::string> upper_formula_names();

// ---- report
struct ReportOptions {
    ComputeOptions compute;
    bool lt = true;           // singular-locus bounds (Groebner bases)
    bool rs_eps = true;
    bool carlini = true;
    bool uppers = true;
    // Restrict the a-scans; empty means the whole box.
    std::vector<Multidegree> a_list;
};

struct BoundReport {
    Target target = Target::waring;          // the rank best.* refers to
    std::vector<ProfileCell> profile;
    ApolarProfile apolar;
    std::vector<BoundEntry> entries;
    std::vector<UpperEntry> uppers;
    long best_lower = 0;
    std::string best_lower_provenance;
    std::optional<BigInt> best_upper;
    std::string status;
    bool certified = true;
};

BoundReport report(const MultiPoly& M, const ReportOptions& options, Rng& rng);

// Best lower bound among applicable entries of one target; ties resolved by the
// lexicographically first provenance tag.
std::pair<long, std::string> best_lower_of(const std::vector<BoundEntry>& entries, Target t);
void check_report_invariant(const BoundReport& r);

// Single-group copy of M (all variables in one group).
MultiPoly flatten(const MultiPoly& M);

}  // namespace apolar

#endif
