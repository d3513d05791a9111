#ifndef APOLAR_LINALG_HPP
#define APOLAR_LINALG_HPP

#include "apolar/poly.hpp"
#include "apolar/random.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace apolar {

using QVector = std::vector<BigRational>;

// Row-sparse exact rational matrix. Rows hold (column, value) pairs sorted by
// column with no stored zeros.
class QMatrix {
public:
    using Entry = std::pair<int, BigRational>;
    using Row = std::vector<Entry>;

    QMatrix() = default;
    QMatrix(int rows, int cols);

    static QMatrix from_dense(const std::vector<QVector>& rows);
    // Duplicate (i, j) entries are summed.
    static QMatrix from_triplets(int rows, int cols, std::vector<std::tuple<int, int, BigRational>> t);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Row& row(int i) const { return data_[i]; }
    BigRational at(int i, int j) const;
    void set(int i, int j, const BigRational& v);
    std::size_t nonzeros() const;

    QMatrix transpose() const;
    QVector multiply(const QVector& v) const;
    QVector column(int j) const;
    std::vector<QVector> dense() const;

    std::vector<Exponent> row_labels;
    std::vector<Exponent> col_labels;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Row> data_;
};

// Dense matrix over F_p, p a prime in (2^30, 2^31).
class FpMatrix {
public:
    FpMatrix(std::uint32_t p, int rows, int cols);
    // Throws DenominatorDivisibleByPrime when some denominator vanishes mod p.
    static FpMatrix reduce(const QMatrix& a, std::uint32_t p);

    std::uint32_t prime() const { return p_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::uint32_t* row(int i) { return data_.data() + static_cast<std::size_t>(i) * cols_; }
    const std::uint32_t* row(int i) const { return data_.data() + static_cast<std::size_t>(i) * cols_; }
    std::uint32_t& at(int i, int j) { return row(i)[j]; }

private:
    std::uint32_t p_;
    int rows_, cols_;
    std::vector<std::uint32_t> data_;
};

class DenominatorDivisibleByPrime : public std::runtime_error {
public:
    explicit DenominatorDivisibleByPrime(std::uint32_t p)
        : std::runtime_error("denominator divisible by p = " + std::to_string(p)), prime(p) {}
    std::uint32_t prime;
};

std::uint32_t reduce_mod(const BigRational& q, std::uint32_t p);

enum class RankStrategy { exact, modp, automatic };
RankStrategy parse_strategy(const std::string& s);
std::string strategy_name(RankStrategy s);

struct RankResult {
    long rank = 0;
    bool certified = true;     // false: modular value, equal to the true rank w.h.p.
    std::uint32_t prime = 0;   // 0 when computed exactly over Q
};

long rank_exact(const QMatrix& a);
long rank_modp(const QMatrix& a, std::uint32_t p);
long rank_modp(FpMatrix a);
// Dispatches on the strategy. `bound` is an a priori upper bound on the rank
// (defaults to min(rows, cols)); a modular rank reaching it is exact.
RankResult rank(const QMatrix& a, RankStrategy strategy, Rng& rng, long bound = -1);

std::vector<QVector> kernel_basis(const QMatrix& a);
// Reduced row echelon basis of the row space.
std::vector<QVector> image_basis(const QMatrix& a);
// Indices of a maximal independent subset of the columns (pivot columns).
std::vector<int> independent_columns(const QMatrix& a);
// Same greedy choice computed mod p. Columns independent mod p are
// independent over Q; they span when the modular rank equals the true rank.
std::vector<int> independent_columns_modp(const QMatrix& a, std::uint32_t p);

struct SpanResult {
    bool member = false;
    QVector coefficients;
};
SpanResult in_span(const QVector& v, const std::vector<QVector>& basis);

// Basis of span(A) ∩ span(B); vectors of length `dim`.
std::vector<QVector> intersect_subspaces(const std::vector<QVector>& a, const std::vector<QVector>& b, int dim);
// Some x with A x = b, or nullopt.
std::optional<QVector> solve_linear(const QMatrix& a, const QVector& b);

}  // namespace apolar

#endif
