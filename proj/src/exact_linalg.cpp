#include "netctrl/exact_linalg.hpp"

#include "netctrl/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace netctrl {

namespace {

void require_same_shape(const RationalMatrix& a, const RationalMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                             std::to_string(b.cols()));
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// RationalMatrix

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_integers(std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.begin()->size() : 0;
    RationalMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw DimensionError("from_integers: ragged rows");
        std::size_t j = 0;
        for (long x : row) m(i, j++) = x;
        ++i;
    }
    return m;
}

RationalMatrix RationalMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
    if (i < 1 || i > n || j < 1 || j > n) throw DimensionError("unit: index outside 1..n");
    RationalMatrix m(n, n);
    m(i - 1, j - 1) = 1;
    return m;
}

bool RationalMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool RationalMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

std::vector<Rational> RationalMatrix::column(std::size_t c) const {
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
    require_same_shape(a, b, "add");
    RationalMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) + b(r, c);
    return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
    require_same_shape(a, b, "subtract");
    RationalMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) - b(r, c);
    return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("multiply: inner dimensions " + std::to_string(a.cols()) + " and " +
                             std::to_string(b.rows()) + " differ");
    }
    RationalMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (sgn(b(k, j)) != 0) out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

RationalMatrix operator*(const Rational& c, const RationalMatrix& a) {
    RationalMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) out(r, k) = c * a(r, k);
    return out;
}

std::vector<Rational> operator*(const RationalMatrix& a, const std::vector<Rational>& x) {
    if (a.cols() != x.size()) throw DimensionError("matrix-vector: length mismatch");
    std::vector<Rational> y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (sgn(x[k]) != 0) y[i] += a(i, k) * x[k];
    return y;
}

RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b) { return a * b; }

RationalMatrix mat_pow(const RationalMatrix& a, unsigned k) {
    if (!a.is_square()) throw DimensionError("mat_pow: matrix is not square");
    RationalMatrix result = RationalMatrix::identity(a.rows());
    RationalMatrix base = a;
    while (k) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k) base = base * base;
    }
    return result;
}

RationalMatrix commutator(const RationalMatrix& x, const RationalMatrix& y) {
    if (!x.is_square()) throw DimensionError("commutator: operands must be square");
    require_same_shape(x, y, "commutator");
    return x * y - y * x;
}

std::size_t rank(const RationalMatrix& m) {
    EchelonBasis rows(m.cols());
    for (std::size_t r = 0; r < m.rows() && !rows.full(); ++r) {
        rows.insert(scaled_integer_entries(std::span(m.entries()).subspan(r * m.cols(), m.cols())));
    }
    return rows.dim();
}

// ---------------------------------------------------------------------------
// Text format

RationalMatrix parse_matrix(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string tok;
        while (fields >> tok) tokens.push_back(tok);
    }
    if (tokens.size() < 2) throw InputError("matrix document: missing \"rows cols\" header");
    auto parse_dim = [](const std::string& s) {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(s, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != s.size() || v == 0 || s.front() == '-') throw InputError("matrix document: bad dimension '" + s + "'");
        return static_cast<std::size_t>(v);
    };
    const std::size_t rows = parse_dim(tokens[0]);
    const std::size_t cols = parse_dim(tokens[1]);
    if (tokens.size() - 2 != rows * cols) {
        throw InputError("matrix document: expected " + std::to_string(rows * cols) + " entries, found " +
                         std::to_string(tokens.size() - 2));
    }
    RationalMatrix m(rows, cols);
    for (std::size_t k = 0; k < rows * cols; ++k) {
        const std::string& tok = tokens[k + 2];
        Rational value;
        const auto slash = tok.find('/');
        if (mpq_set_str(value.get_mpq_t(), tok.c_str(), 10) != 0 ||
            (slash != std::string::npos && tok.find_first_not_of("0123456789", slash + 1) != std::string::npos)) {
            throw InputError("matrix document: malformed entry '" + tok + "'");
        }
        if (sgn(value.get_den()) == 0) throw InputError("matrix document: zero denominator in '" + tok + "'");
        value.canonicalize();
        m(k / cols, k % cols) = value;
    }
    return m;
}

RationalMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open matrix file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_matrix(buffer.str());
}

std::string format_matrix(const RationalMatrix& m) {
    std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out += ' ';
            out += m(r, c).get_str();
        }
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// Integer vectors

IntegerVector scaled_integer_entries(std::span<const Rational> v) {
    Integer lcm_den = 1;
    for (const Rational& x : v) {
        if (x.get_den() != 1) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
    }
    IntegerVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(v[i]) == 0) continue;
        if (lcm_den == 1) {
            out[i] = v[i].get_num();
        } else {
            out[i] = v[i].get_num() * (lcm_den / v[i].get_den());
        }
    }
    return out;
}

IntegerVector scaled_integer_entries(const RationalMatrix& m) { return scaled_integer_entries(std::span(m.entries())); }

void make_primitive(IntegerVector& v) {
    Integer g = 0;
    for (const Integer& x : v) {
        if (sgn(x) == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) return;
    }
    if (sgn(g) == 0) return;
    for (Integer& x : v) {
        if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
}

IntegerVector integer_commutator(std::span<const Integer> x, std::span<const Integer> y, std::size_t n) {
    if (x.size() != n * n || y.size() != n * n) throw DimensionError("integer_commutator: shape mismatch");
    IntegerVector out(n * n);
    Integer t;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Integer& xik = x[i * n + k];
            const Integer& yik = y[i * n + k];
            const bool xz = sgn(xik) == 0;
            const bool yz = sgn(yik) == 0;
            if (xz && yz) continue;
            for (std::size_t j = 0; j < n; ++j) {
                Integer& o = out[i * n + j];
                if (!xz && sgn(y[k * n + j]) != 0) mpz_addmul(o.get_mpz_t(), xik.get_mpz_t(), y[k * n + j].get_mpz_t());
                if (!yz && sgn(x[k * n + j]) != 0) mpz_submul(o.get_mpz_t(), yik.get_mpz_t(), x[k * n + j].get_mpz_t());
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// EchelonBasis

EchelonBasis::EchelonBasis(std::size_t ambient_dim) : ambient_(ambient_dim) {}

void EchelonBasis::reduce(IntegerVector& v) const {
    if (v.size() != ambient_) {
        throw DimensionError("echelon: vector length " + std::to_string(v.size()) + " != ambient dimension " +
                             std::to_string(ambient_));
    }
    Integer g, a, b;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::size_t p = pivots_[i];
        if (sgn(v[p]) == 0) continue;
        const IntegerVector& row = rows_[i];
        // v <- a*v - b*row with a = row[p]/g, b = v[p]/g; zeroes v[p].
        mpz_gcd(g.get_mpz_t(), row[p].get_mpz_t(), v[p].get_mpz_t());
        mpz_divexact(a.get_mpz_t(), row[p].get_mpz_t(), g.get_mpz_t());
        mpz_divexact(b.get_mpz_t(), v[p].get_mpz_t(), g.get_mpz_t());
        const bool scale = a != 1;
        for (std::size_t k = 0; k < ambient_; ++k) {
            if (scale && sgn(v[k]) != 0) v[k] *= a;
            if (sgn(row[k]) != 0) mpz_submul(v[k].get_mpz_t(), b.get_mpz_t(), row[k].get_mpz_t());
        }
    }
    make_primitive(v);
}

bool EchelonBasis::insert(IntegerVector v, IntegerVector* residual) {
    if (full()) {
        if (v.size() != ambient_) throw DimensionError("echelon: vector length mismatch");
        return false;
    }
    reduce(v);
    auto lead = std::find_if(v.begin(), v.end(), [](const Integer& x) { return sgn(x) != 0; });
    if (lead == v.end()) return false;
    const auto q = static_cast<std::size_t>(lead - v.begin());
    if (sgn(v[q]) < 0) {
        for (Integer& x : v) x = -x;
    }

    // Clear column q from the existing rows to keep the form reduced.
    Integer g, a, b;
    for (IntegerVector& row : rows_) {
        if (sgn(row[q]) == 0) continue;
        mpz_gcd(g.get_mpz_t(), v[q].get_mpz_t(), row[q].get_mpz_t());
        mpz_divexact(a.get_mpz_t(), v[q].get_mpz_t(), g.get_mpz_t());
        mpz_divexact(b.get_mpz_t(), row[q].get_mpz_t(), g.get_mpz_t());
        for (std::size_t k = 0; k < ambient_; ++k) {
            if (sgn(row[k]) != 0) row[k] *= a;
            if (sgn(v[k]) != 0) mpz_submul(row[k].get_mpz_t(), b.get_mpz_t(), v[k].get_mpz_t());
        }
        make_primitive(row);
    }

    const auto at = std::lower_bound(pivots_.begin(), pivots_.end(), q) - pivots_.begin();
    if (residual) *residual = v;
    pivots_.insert(pivots_.begin() + at, q);
    rows_.insert(rows_.begin() + at, std::move(v));
    return true;
}

bool EchelonBasis::contains(IntegerVector v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) == 0; });
}

std::vector<std::vector<Rational>> EchelonBasis::rref_rows() const {
    std::vector<std::vector<Rational>> out;
    out.reserve(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Integer& lead = rows_[i][pivots_[i]];
        std::vector<Rational> row(ambient_);
        for (std::size_t k = 0; k < ambient_; ++k) {
            row[k] = Rational(rows_[i][k], lead);
            row[k].canonicalize();
        }
        out.push_back(std::move(row));
    }
    return out;
}

// ---------------------------------------------------------------------------
// MatrixSpaceBasis

void MatrixSpaceBasis::check(const RationalMatrix& m) const {
    if (m.rows() != side_ || m.cols() != side_) {
        throw DimensionError("matrix space of side " + std::to_string(side_) + " cannot hold a " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
    }
}

bool MatrixSpaceBasis::insert(const RationalMatrix& m) {
    check(m);
    return echelon_.insert(scaled_integer_entries(m));
}

bool MatrixSpaceBasis::contains(const RationalMatrix& m) const {
    check(m);
    return echelon_.contains(scaled_integer_entries(m));
}

std::vector<RationalMatrix> MatrixSpaceBasis::basis() const {
    std::vector<RationalMatrix> out;
    for (auto& row : echelon_.rref_rows()) {
        RationalMatrix m(side_, side_);
        for (std::size_t k = 0; k < row.size(); ++k) m(k / side_, k % side_) = row[k];
        out.push_back(std::move(m));
    }
    return out;
}

std::pair<MatrixSpaceBasis, bool> span_insert(MatrixSpaceBasis b, const RationalMatrix& m) {
    const bool grew = b.insert(m);
    return {std::move(b), grew};
}

}  // namespace netctrl
