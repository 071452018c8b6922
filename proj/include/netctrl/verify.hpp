#pragma once

#include "netctrl/control.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace netctrl {

struct SubsetPolicy {
    enum class Type { all, singletons, zfs_only, random };
    Type type = Type::all;
    std::size_t k = 0;        // random: subsets drawn per (graph, kind)
    std::uint64_t seed = 0;   // random: generator seed

    /// "all", "singletons", "zfs" or "random:K:SEED".
    static SubsetPolicy parse(std::string_view spec);
    std::string to_string() const;
};

struct SweepConfig {
    std::size_t max_order = 4;
    std::vector<MatrixKind> matrix_kinds{MatrixKind{}};
    SubsetPolicy subset_policy;
    std::uint64_t seed = 0;
    /// Orders above 5 are sampled with random_connected instead of enumerated.
    std::size_t samples_per_large_order = 10;
    /// Replaces the generated instance graphs when set.
    std::optional<std::vector<Graph>> graphs;
    std::size_t order_cap = kDefaultLieOrderCap;

    /// Throws InputError on max_order < 1, random policy with k < 1, or no kinds.
    void validate() const;
};

/// One failed check, with enough data to rebuild the instance in isolation.
struct Violation {
    std::string graph;    // edge-list text; empty when matrix is given
    std::string matrix;   // matrix text for instances without a generating graph
    std::string kind;     // MatrixKind spec, or "explicit"
    std::vector<Vertex> subset;
    std::string check;
    std::string detail;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct SweepOutcome {
    std::uint64_t instances_checked = 0;
    /// Instances whose theorem hypotheses fail; recorded, never asserted.
    std::uint64_t hypothesis_not_met = 0;
    std::vector<Violation> violations;
    bool passed = true;

    friend bool operator==(const SweepOutcome&, const SweepOutcome&) = default;
};

// Check names used by the sweeps in addition to the report checks.
inline constexpr std::string_view kCheckDistancePowerEntry = "distance_power_entry";
inline constexpr std::string_view kCheckSingleVectorEquivalence = "single_vector_equivalence";

/// Instance graphs for a sweep: every labeled connected graph up to order
/// min(max_order, 5), then random connected samples for larger orders.
std::vector<Graph> sweep_graphs(const SweepConfig& cfg);

/// Control sets selected by the policy for one graph. The random policy draws
/// from `rng`, which the sweep threads through in enumeration order.
std::vector<VertexSet> policy_subsets(const Graph& g, const SubsetPolicy& policy, std::mt19937_64& rng);

/// For connected same-sign A: (A^{d(k,j)})_{kj} != 0 for every k != j.
/// Returns a description of the first offending pair, if any.
std::optional<std::string> distance_power_violation(const PatternMatrix& a);

/// Runs analyze on every (graph, kind, subset) instance and records failed
/// consistency checks plus the distance-power check.
SweepOutcome sweep_equivalence(const SweepConfig& cfg);

/// On every instance whose control set is a zero forcing set, asserts that
/// the Lie algebra is all of gl(n,R). Subsets: all zero forcing sets under
/// the `all` policy, minimal ones under `zfs`, otherwise the policy's
/// subsets that happen to force.
SweepOutcome sweep_zfs_implication(const SweepConfig& cfg);

/// Seeded random symmetric matrices (entries in {-3..3}, orders 1..max_order)
/// with one standard basis control vector: rank W = n <=> dim L = n^2.
SweepOutcome sweep_single_vector(std::size_t count, std::size_t max_order, std::uint64_t seed,
                                 std::size_t order_cap = kDefaultLieOrderCap);

/// Rebuilds the violation's instance and returns the re-run report.
ControllabilityReport reanalyze(const Violation& v, std::size_t order_cap = kDefaultLieOrderCap);

struct ExampleRow {
    std::string id;
    std::string description;
    std::string expected;
    std::string computed;
    bool match;
};

/// Reference examples recomputed exactly:
///  (a) P4 with control {2}: full walk rank and gl(4,R) although {2} does not force;
///  (b) a mixed-sign 4-cycle matrix with {1,3}: walk rank 4 but dim L <= 8;
///  (c) two disconnected K2 blocks with {1,3}: walk rank 4 but L block diagonal.
std::vector<ExampleRow> reference_examples();

/// Fixture matrices shared by the examples, tests and CLI.
RationalMatrix mixed_sign_example_matrix();
RationalMatrix block_diagonal_example_matrix();

}  // namespace netctrl
