#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace netctrl {

using Integer = mpz_class;
using Rational = mpq_class;
using IntegerVector = std::vector<Integer>;

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Dense matrix of exact rationals, row-major. Entries are kept in lowest
/// terms with positive denominators (GMP canonical form).
class RationalMatrix {
public:
    RationalMatrix() = default;
    /// Zero matrix.
    RationalMatrix(std::size_t rows, std::size_t cols);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from_integers(std::initializer_list<std::initializer_list<long>> rows);
    /// e_i e_j^T with 1-based i, j.
    static RationalMatrix unit(std::size_t n, std::size_t i, std::size_t j);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;
    bool is_symmetric() const;

    /// 0-based element access.
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    /// Row-major vectorization.
    const std::vector<Rational>& entries() const { return data_; }

    std::vector<Rational> column(std::size_t c) const;
    RationalMatrix transpose() const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& c, const RationalMatrix& a);
std::vector<Rational> operator*(const RationalMatrix& a, const std::vector<Rational>& x);

RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b);
/// a^k with a^0 = I.
RationalMatrix mat_pow(const RationalMatrix& a, unsigned k);
/// xy - yx.
RationalMatrix commutator(const RationalMatrix& x, const RationalMatrix& y);

/// Exact rank over Q via fraction-free elimination.
std::size_t rank(const RationalMatrix& m);

/// Matrix text format: "rows cols" then row-major entries, integers or p/q.
RationalMatrix parse_matrix(std::string_view text);
RationalMatrix read_matrix_file(const std::string& path);
std::string format_matrix(const RationalMatrix& m);

/// Multiplies by the least common denominator and returns the row-major
/// integer entries. Same span direction as the input.
IntegerVector scaled_integer_entries(const RationalMatrix& m);
IntegerVector scaled_integer_entries(std::span<const Rational> v);

/// Divides out the content so the entries are coprime; zero stays zero.
void make_primitive(IntegerVector& v);

/// Subspace of Q^d held in reduced row-echelon form. Each row is stored as
/// the primitive integer multiple of its RREF row (positive pivot, zeros in
/// every other pivot column), which is a unique scaling of the RREF, so two
/// bases of the same subspace compare equal.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    bool full() const { return rows_.size() == ambient_; }

    /// Reduces v against the basis in place; v ends primitive.
    void reduce(IntegerVector& v) const;

    /// Inserts v; returns true iff v was outside the span. When it grew and
    /// residual is non-null, *residual receives the reduced primitive vector
    /// that was added (a new independent direction of the span).
    bool insert(IntegerVector v, IntegerVector* residual = nullptr);
    bool contains(IntegerVector v) const;

    const std::vector<IntegerVector>& integer_rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    /// RREF rows with leading entry 1.
    std::vector<std::vector<Rational>> rref_rows() const;

    friend bool operator==(const EchelonBasis&, const EchelonBasis&) = default;

private:
    std::size_t ambient_;
    std::vector<IntegerVector> rows_;   // sorted by pivot
    std::vector<std::size_t> pivots_;   // strictly increasing
};

/// Span of n x n matrices, vectorized row-major into Q^{n^2}.
class MatrixSpaceBasis {
public:
    explicit MatrixSpaceBasis(std::size_t side) : side_(side), echelon_(side * side) {}

    std::size_t side() const { return side_; }
    std::size_t ambient_dim() const { return echelon_.ambient_dim(); }
    std::size_t dim() const { return echelon_.dim(); }
    bool full() const { return echelon_.full(); }

    /// Returns grew. Throws DimensionError when m is not side x side.
    bool insert(const RationalMatrix& m);
    bool contains(const RationalMatrix& m) const;

    const EchelonBasis& echelon() const { return echelon_; }
    EchelonBasis& echelon() { return echelon_; }
    const std::vector<std::size_t>& pivots() const { return echelon_.pivots(); }

    /// Basis matrices in canonical RREF order.
    std::vector<RationalMatrix> basis() const;

    friend bool operator==(const MatrixSpaceBasis&, const MatrixSpaceBasis&) = default;

private:
    void check(const RationalMatrix& m) const;

    std::size_t side_;
    EchelonBasis echelon_;
};

/// Functional form: returns the enlarged basis and whether it grew.
std::pair<MatrixSpaceBasis, bool> span_insert(MatrixSpaceBasis b, const RationalMatrix& m);

/// Square integer matrix helpers for hot loops (flattened row-major).
IntegerVector integer_commutator(std::span<const Integer> x, std::span<const Integer> y, std::size_t n);

}  // namespace netctrl
