#pragma once

#include "netctrl/exact_linalg.hpp"
#include "netctrl/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace netctrl {

enum class SignClass { all_positive_offdiag, all_negative_offdiag, mixed };

std::string_view to_string(SignClass c);
SignClass parse_sign_class(std::string_view s);

/// Exact symmetric matrix together with its graph G(A) (edge {k,j} iff
/// a_kj != 0, k != j) and the sign class of its off-diagonal entries.
/// A matrix with no nonzero off-diagonal entry counts as all_positive_offdiag.
class PatternMatrix {
public:
    /// Throws InputError unless m is square and exactly symmetric.
    explicit PatternMatrix(RationalMatrix m);

    std::size_t order() const { return matrix_.rows(); }
    const RationalMatrix& matrix() const { return matrix_; }
    SignClass sign_class() const { return sign_class_; }
    bool same_sign() const { return sign_class_ != SignClass::mixed; }
    const Graph& pattern() const { return pattern_; }

private:
    RationalMatrix matrix_;
    SignClass sign_class_;
    Graph pattern_;
};

struct MatrixKind {
    enum class Type { adjacency, laplacian, random_same_sign };
    Type type = Type::adjacency;
    std::uint64_t seed = 0;

    /// "adjacency", "laplacian" or "random:SEED".
    static MatrixKind parse(std::string_view spec);
    std::string to_string() const;

    friend bool operator==(const MatrixKind&, const MatrixKind&) = default;
};

/// A_G, L_G = D_G - A_G, or a seeded same-sign matrix with off-diagonal
/// entries uniform in {1..9} on edges and diagonal uniform in {-9..9}.
PatternMatrix build_matrix(const Graph& g, MatrixKind kind);

/// n x (n|S|) matrix [e_j, A e_j, ..., A^{n-1} e_j] over j in S ascending.
RationalMatrix walk_matrix(const PatternMatrix& a, const VertexSet& s);

struct RankVerdict {
    bool controllable;
    std::size_t rank;
};

RankVerdict kalman_controllable(const PatternMatrix& a, const VertexSet& s);

/// All products A^m e_k e_j^T A^l, 0 <= m,l <= n-1, k,j in S.
std::vector<RationalMatrix> p_products(const PatternMatrix& a, const VertexSet& s);
std::size_t p_span_dim(const PatternMatrix& a, const VertexSet& s);

inline constexpr std::size_t kDefaultLieOrderCap = 12;

struct LieClosure {
    std::size_t dim;
    MatrixSpaceBasis basis;
};

/// Real Lie algebra generated by the given matrices. Stops early once the
/// dimension reaches cap (default n^2). Throws DimensionError on mixed
/// shapes or an empty generator list, InputError when n > order_cap.
LieClosure lie_closure(const std::vector<RationalMatrix>& generators, std::optional<std::size_t> cap = std::nullopt,
                       std::size_t order_cap = kDefaultLieOrderCap);

/// {A} followed by e_j e_j^T for j in S ascending.
std::vector<RationalMatrix> control_generators(const PatternMatrix& a, const VertexSet& s);

struct LieVerdict {
    bool controllable;
    std::size_t dim;
};

/// dim L(A, {e_j : j in S}) and whether it is all of gl(n,R). Over the reals
/// this is equivalent to the complex algebra generated by iA and i e_j e_j^T
/// being u(n), so nothing is computed over C.
LieVerdict lie_controllable(const PatternMatrix& a, const VertexSet& s, std::size_t order_cap = kDefaultLieOrderCap);

enum class CheckStatus { pass, fail, not_applicable };

std::string_view to_string(CheckStatus s);
CheckStatus parse_check_status(std::string_view s);

struct ConsistencyCheck {
    std::string name;
    CheckStatus status;
    std::string detail;

    friend bool operator==(const ConsistencyCheck&, const ConsistencyCheck&) = default;
};

struct Hypotheses {
    bool connected;
    bool same_sign;

    bool hold() const { return connected && same_sign; }
    friend bool operator==(const Hypotheses&, const Hypotheses&) = default;
};

// Names of the consistency checks carried by every report.
inline constexpr std::string_view kCheckKalmanIffLie = "kalman_iff_lie";
inline constexpr std::string_view kCheckZfsImpliesLie = "zfs_implies_lie";
inline constexpr std::string_view kCheckPSpanIsRankSquared = "p_span_is_rank_squared";
inline constexpr std::string_view kCheckSingleControlEquivalence = "single_control_equivalence";

struct ControllabilityReport {
    std::size_t n = 0;
    VertexSet control_set;
    std::size_t walk_rank = 0;
    bool kalman_controllable = false;
    std::size_t p_span_dim = 0;
    std::size_t lie_dim = 0;
    bool lie_controllable = false;
    bool zfs_status = false;
    Hypotheses hypotheses{false, false};
    std::vector<ConsistencyCheck> consistency;

    /// True when any consistency check failed.
    bool theorem_violation() const;
    const ConsistencyCheck* check(std::string_view name) const;

    friend bool operator==(const ControllabilityReport&, const ControllabilityReport&) = default;
};

/// Computes every verdict and cross-checks them:
///  - kalman_iff_lie: rank W = n <=> L = gl(n,R), when G(A) is connected and same-sign;
///  - zfs_implies_lie: S zero forcing => L = gl(n,R), under the same hypotheses;
///  - p_span_is_rank_squared: dim span P(A,Z) = (rank W)^2, always;
///  - single_control_equivalence: for |S| = 1 the equivalence holds for any symmetric A.
ControllabilityReport analyze(const PatternMatrix& a, const VertexSet& s, std::size_t order_cap = kDefaultLieOrderCap);

}  // namespace netctrl
