#include "netctrl/control.hpp"

#include "netctrl/zero_forcing.hpp"

#include <charconv>
#include <random>

namespace netctrl {

namespace {

void require_control_set(const PatternMatrix& a, const VertexSet& s) {
    if (s.empty()) throw InputError("control set must be nonempty");
    if (s.order() != a.order()) {
        throw InputError("control set over 1.." + std::to_string(s.order()) + " used with a matrix of order " +
                         std::to_string(a.order()));
    }
}

Graph pattern_of(const RationalMatrix& m) {
    std::vector<Graph::Edge> edges;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (sgn(m(i, j)) != 0) edges.emplace_back(i + 1, j + 1);
    return Graph(m.rows(), edges);
}

SignClass sign_class_of(const RationalMatrix& m) {
    bool positive = false;
    bool negative = false;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = i + 1; j < m.cols(); ++j) {
            const int s = sgn(m(i, j));
            positive |= s > 0;
            negative |= s < 0;
        }
    }
    if (positive && negative) return SignClass::mixed;
    return negative ? SignClass::all_negative_offdiag : SignClass::all_positive_offdiag;
}

const RationalMatrix& validated(const RationalMatrix& m) {
    if (m.rows() == 0 || !m.is_square()) throw InputError("matrix must be square and nonempty");
    if (!m.is_symmetric()) throw InputError("matrix must be symmetric");
    return m;
}

// Columns A^m e_j, m = 0..n-1, each scaled to a primitive integer vector.
std::vector<IntegerVector> krylov_columns(const PatternMatrix& a, Vertex j) {
    const std::size_t n = a.order();
    std::vector<IntegerVector> cols;
    std::vector<Rational> x(n);
    x[j - 1] = 1;
    for (std::size_t m = 0; m < n; ++m) {
        IntegerVector v = scaled_integer_entries(std::span<const Rational>(x));
        make_primitive(v);
        cols.push_back(std::move(v));
        if (m + 1 < n) x = a.matrix() * x;
    }
    return cols;
}

}  // namespace

// ---------------------------------------------------------------------------
// Enums

std::string_view to_string(SignClass c) {
    switch (c) {
    case SignClass::all_positive_offdiag: return "all_positive_offdiag";
    case SignClass::all_negative_offdiag: return "all_negative_offdiag";
    case SignClass::mixed: return "mixed";
    }
    return "mixed";
}

SignClass parse_sign_class(std::string_view s) {
    if (s == "all_positive_offdiag") return SignClass::all_positive_offdiag;
    if (s == "all_negative_offdiag") return SignClass::all_negative_offdiag;
    if (s == "mixed") return SignClass::mixed;
    throw InputError("unknown sign class '" + std::string(s) + "'");
}

std::string_view to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::not_applicable: return "not_applicable";
    }
    return "fail";
}

CheckStatus parse_check_status(std::string_view s) {
    if (s == "pass") return CheckStatus::pass;
    if (s == "fail") return CheckStatus::fail;
    if (s == "not_applicable") return CheckStatus::not_applicable;
    throw InputError("unknown check status '" + std::string(s) + "'");
}

MatrixKind MatrixKind::parse(std::string_view spec) {
    if (spec == "adjacency") return {Type::adjacency, 0};
    if (spec == "laplacian") return {Type::laplacian, 0};
    constexpr std::string_view prefix = "random:";
    if (spec.substr(0, prefix.size()) == prefix) {
        auto digits = spec.substr(prefix.size());
        std::uint64_t seed = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), seed);
        if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
            throw InputError("malformed seed in matrix kind '" + std::string(spec) + "'");
        }
        return {Type::random_same_sign, seed};
    }
    throw InputError("unknown matrix kind '" + std::string(spec) + "' (expected adjacency, laplacian or random:SEED)");
}

std::string MatrixKind::to_string() const {
    switch (type) {
    case Type::adjacency: return "adjacency";
    case Type::laplacian: return "laplacian";
    case Type::random_same_sign: return "random:" + std::to_string(seed);
    }
    return "adjacency";
}

// ---------------------------------------------------------------------------
// PatternMatrix and builders

PatternMatrix::PatternMatrix(RationalMatrix m)
    : matrix_(std::move(m)), sign_class_(sign_class_of(validated(matrix_))), pattern_(pattern_of(matrix_)) {}

PatternMatrix build_matrix(const Graph& g, MatrixKind kind) {
    const std::size_t n = g.order();
    RationalMatrix m(n, n);
    switch (kind.type) {
    case MatrixKind::Type::adjacency:
        for (auto [u, v] : g.edges()) m(u - 1, v - 1) = m(v - 1, u - 1) = 1;
        break;
    case MatrixKind::Type::laplacian:
        for (Vertex v = 1; v <= n; ++v) m(v - 1, v - 1) = static_cast<long>(g.degree(v));
        for (auto [u, v] : g.edges()) m(u - 1, v - 1) = m(v - 1, u - 1) = -1;
        break;
    case MatrixKind::Type::random_same_sign: {
        std::mt19937_64 rng(kind.seed);
        std::uniform_int_distribution<long> diagonal(-9, 9);
        std::uniform_int_distribution<long> weight(1, 9);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = diagonal(rng);
        for (auto [u, v] : g.edges()) m(u - 1, v - 1) = m(v - 1, u - 1) = weight(rng);
        break;
    }
    }
    return PatternMatrix(std::move(m));
}

// ---------------------------------------------------------------------------
// Linear (Kalman) side

RationalMatrix walk_matrix(const PatternMatrix& a, const VertexSet& s) {
    require_control_set(a, s);
    const std::size_t n = a.order();
    RationalMatrix w(n, n * s.size());
    std::size_t col = 0;
    for (Vertex j : s) {
        std::vector<Rational> x(n);
        x[j - 1] = 1;
        for (std::size_t m = 0; m < n; ++m, ++col) {
            for (std::size_t r = 0; r < n; ++r) w(r, col) = x[r];
            if (m + 1 < n) x = a.matrix() * x;
        }
    }
    return w;
}

RankVerdict kalman_controllable(const PatternMatrix& a, const VertexSet& s) {
    const std::size_t r = rank(walk_matrix(a, s));
    return {r == a.order(), r};
}

std::vector<RationalMatrix> p_products(const PatternMatrix& a, const VertexSet& s) {
    require_control_set(a, s);
    const std::size_t n = a.order();
    std::vector<RationalMatrix> powers;
    powers.reserve(n);
    powers.push_back(RationalMatrix::identity(n));
    for (std::size_t m = 1; m < n; ++m) powers.push_back(powers.back() * a.matrix());

    std::vector<RationalMatrix> out;
    for (Vertex k : s)
        for (Vertex j : s)
            for (std::size_t m = 0; m < n; ++m)
                for (std::size_t l = 0; l < n; ++l)
                    out.push_back(powers[m] * RationalMatrix::unit(n, k, j) * powers[l]);
    return out;
}

std::size_t p_span_dim(const PatternMatrix& a, const VertexSet& s) {
    require_control_set(a, s);
    const std::size_t n = a.order();
    // A symmetric: A^m e_k e_j^T A^l is the outer product (A^m e_k)(A^l e_j)^T.
    std::vector<std::vector<IntegerVector>> cols;
    for (Vertex j : s) cols.push_back(krylov_columns(a, j));

    EchelonBasis span(n * n);
    IntegerVector outer(n * n);
    for (std::size_t k = 0; k < cols.size(); ++k) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            for (std::size_t m = 0; m < n; ++m) {
                for (std::size_t l = 0; l < n; ++l) {
                    if (span.full()) return span.dim();
                    const IntegerVector& left = cols[k][m];
                    const IntegerVector& right = cols[j][l];
                    for (std::size_t r = 0; r < n; ++r)
                        for (std::size_t c = 0; c < n; ++c) outer[r * n + c] = left[r] * right[c];
                    span.insert(outer);
                }
            }
        }
    }
    return span.dim();
}

// ---------------------------------------------------------------------------
// Lie side

LieClosure lie_closure(const std::vector<RationalMatrix>& generators, std::optional<std::size_t> cap,
                       std::size_t order_cap) {
    if (generators.empty()) throw DimensionError("lie_closure: no generators");
    const std::size_t n = generators.front().rows();
    for (const auto& g : generators) {
        if (!g.is_square() || g.rows() != n) throw DimensionError("lie_closure: generators must be square of equal side");
    }
    if (n > order_cap) {
        throw InputError("lie_closure: order " + std::to_string(n) + " exceeds the cap " + std::to_string(order_cap) +
                         " (raise it via NETCTRL_MAX_ORDER)");
    }
    const std::size_t limit = cap.value_or(n * n);

    MatrixSpaceBasis basis(n);
    // Independent directions in insertion order; elements[i] is commuted
    // with elements[0..i-1] when it is dequeued.
    std::vector<IntegerVector> elements;
    IntegerVector residual;
    for (const auto& g : generators) {
        if (basis.dim() >= limit) break;
        if (basis.echelon().insert(scaled_integer_entries(g), &residual)) elements.push_back(std::move(residual));
    }
    for (std::size_t i = 0; i < elements.size() && basis.dim() < limit; ++i) {
        for (std::size_t j = 0; j < i && basis.dim() < limit; ++j) {
            IntegerVector c = integer_commutator(elements[i], elements[j], n);
            if (basis.echelon().insert(std::move(c), &residual)) elements.push_back(std::move(residual));
        }
    }
    return {basis.dim(), std::move(basis)};
}

std::vector<RationalMatrix> control_generators(const PatternMatrix& a, const VertexSet& s) {
    require_control_set(a, s);
    std::vector<RationalMatrix> gens{a.matrix()};
    for (Vertex j : s) gens.push_back(RationalMatrix::unit(a.order(), j, j));
    return gens;
}

LieVerdict lie_controllable(const PatternMatrix& a, const VertexSet& s, std::size_t order_cap) {
    const std::size_t n = a.order();
    const auto closure = lie_closure(control_generators(a, s), std::nullopt, order_cap);
    return {closure.dim == n * n, closure.dim};
}

// ---------------------------------------------------------------------------
// Report

bool ControllabilityReport::theorem_violation() const {
    for (const auto& c : consistency)
        if (c.status == CheckStatus::fail) return true;
    return false;
}

const ConsistencyCheck* ControllabilityReport::check(std::string_view name) const {
    for (const auto& c : consistency)
        if (c.name == name) return &c;
    return nullptr;
}

ControllabilityReport analyze(const PatternMatrix& a, const VertexSet& s, std::size_t order_cap) {
    require_control_set(a, s);
    ControllabilityReport r;
    r.n = a.order();
    r.control_set = s;

    const auto kalman = kalman_controllable(a, s);
    r.walk_rank = kalman.rank;
    r.kalman_controllable = kalman.controllable;
    r.p_span_dim = p_span_dim(a, s);
    const auto lie = lie_controllable(a, s, order_cap);
    r.lie_dim = lie.dim;
    r.lie_controllable = lie.controllable;
    r.zfs_status = is_zfs(a.pattern(), s);
    r.hypotheses = {is_connected(a.pattern()), a.same_sign()};

    auto verdicts = [&] {
        return "walk_rank " + std::to_string(r.walk_rank) + ", lie_dim " + std::to_string(r.lie_dim) + ", n " +
               std::to_string(r.n);
    };
    std::string unmet;
    if (!r.hypotheses.connected) unmet += "graph of A is disconnected";
    if (!r.hypotheses.same_sign) unmet += std::string(unmet.empty() ? "" : "; ") + "off-diagonal signs are mixed";

    auto status = [](bool ok) { return ok ? CheckStatus::pass : CheckStatus::fail; };

    if (r.hypotheses.hold()) {
        r.consistency.push_back({std::string(kCheckKalmanIffLie), status(r.kalman_controllable == r.lie_controllable),
                                 verdicts()});
    } else {
        r.consistency.push_back({std::string(kCheckKalmanIffLie), CheckStatus::not_applicable,
                                 "hypothesis not met: " + unmet});
    }

    if (!r.hypotheses.hold()) {
        r.consistency.push_back({std::string(kCheckZfsImpliesLie), CheckStatus::not_applicable,
                                 "hypothesis not met: " + unmet});
    } else if (!r.zfs_status) {
        r.consistency.push_back({std::string(kCheckZfsImpliesLie), CheckStatus::not_applicable,
                                 "control set is not a zero forcing set"});
    } else {
        r.consistency.push_back({std::string(kCheckZfsImpliesLie), status(r.lie_controllable), verdicts()});
    }

    r.consistency.push_back({std::string(kCheckPSpanIsRankSquared), status(r.p_span_dim == r.walk_rank * r.walk_rank),
                             "p_span_dim " + std::to_string(r.p_span_dim) + ", walk_rank^2 " +
                                 std::to_string(r.walk_rank * r.walk_rank)});

    if (s.size() == 1) {
        r.consistency.push_back({std::string(kCheckSingleControlEquivalence),
                                 status(r.kalman_controllable == r.lie_controllable), verdicts()});
    } else {
        r.consistency.push_back({std::string(kCheckSingleControlEquivalence), CheckStatus::not_applicable,
                                 "more than one control vertex"});
    }
    return r;
}

}  // namespace netctrl
