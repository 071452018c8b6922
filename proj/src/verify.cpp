#include "netctrl/verify.hpp"

#include "netctrl/zero_forcing.hpp"

#include <charconv>

namespace netctrl {

namespace {

std::uint64_t parse_u64(std::string_view s, std::string_view what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw InputError("malformed " + std::string(what) + " '" + std::string(s) + "'");
    }
    return value;
}

std::uint64_t full_mask(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

void record(SweepOutcome& out, const Graph& g, const MatrixKind& kind, const VertexSet& s, std::string_view check,
            std::string detail) {
    out.violations.push_back({format_graph(g), "", kind.to_string(), s.members(), std::string(check), std::move(detail)});
    out.passed = false;
}

}  // namespace

// ---------------------------------------------------------------------------
// Configuration

SubsetPolicy SubsetPolicy::parse(std::string_view spec) {
    if (spec == "all") return {Type::all, 0, 0};
    if (spec == "singletons") return {Type::singletons, 0, 0};
    if (spec == "zfs") return {Type::zfs_only, 0, 0};
    constexpr std::string_view prefix = "random:";
    if (spec.substr(0, prefix.size()) == prefix) {
        auto rest = spec.substr(prefix.size());
        auto colon = rest.find(':');
        if (colon == std::string_view::npos) throw InputError("subset policy random needs K:SEED");
        const auto k = parse_u64(rest.substr(0, colon), "subset count");
        const auto seed = parse_u64(rest.substr(colon + 1), "subset seed");
        if (k < 1) throw InputError("subset policy random needs K >= 1");
        return {Type::random, static_cast<std::size_t>(k), seed};
    }
    throw InputError("unknown subset policy '" + std::string(spec) + "' (expected all, singletons, zfs or random:K:SEED)");
}

std::string SubsetPolicy::to_string() const {
    switch (type) {
    case Type::all: return "all";
    case Type::singletons: return "singletons";
    case Type::zfs_only: return "zfs";
    case Type::random: return "random:" + std::to_string(k) + ":" + std::to_string(seed);
    }
    return "all";
}

void SweepConfig::validate() const {
    if (max_order < 1) throw InputError("sweep: max_order must be at least 1");
    if (max_order > order_cap) {
        throw InputError("sweep: max_order " + std::to_string(max_order) + " exceeds the order cap " +
                         std::to_string(order_cap));
    }
    if (matrix_kinds.empty()) throw InputError("sweep: no matrix kinds");
    if (subset_policy.type == SubsetPolicy::Type::random && subset_policy.k < 1) {
        throw InputError("sweep: random subset policy needs k >= 1");
    }
    if (graphs) {
        for (const auto& g : *graphs) {
            if (g.order() > 20) throw InputError("sweep: supplied graph order exceeds 20");
        }
    }
}

// ---------------------------------------------------------------------------
// Instance enumeration

std::vector<Graph> sweep_graphs(const SweepConfig& cfg) {
    if (cfg.graphs) return *cfg.graphs;
    std::vector<Graph> out;
    for (std::size_t n = 1; n <= std::min<std::size_t>(cfg.max_order, 5); ++n) {
        auto batch = connected_labeled_graphs(n);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    std::mt19937_64 seeds(cfg.seed);
    for (std::size_t n = 6; n <= cfg.max_order; ++n) {
        for (std::size_t i = 0; i < cfg.samples_per_large_order; ++i) {
            out.push_back(random_connected(n, {1, 2}, seeds()));
        }
    }
    return out;
}

std::vector<VertexSet> policy_subsets(const Graph& g, const SubsetPolicy& policy, std::mt19937_64& rng) {
    const std::size_t n = g.order();
    std::vector<VertexSet> out;
    switch (policy.type) {
    case SubsetPolicy::Type::all:
        for (std::uint64_t mask = 1; mask <= full_mask(n); ++mask) out.push_back(VertexSet::from_mask(n, mask));
        break;
    case SubsetPolicy::Type::singletons:
        for (Vertex v = 1; v <= n; ++v) out.emplace_back(n, std::vector<Vertex>{v});
        break;
    case SubsetPolicy::Type::zfs_only:
        for (std::uint64_t mask = 1; mask <= full_mask(n); ++mask) {
            auto s = VertexSet::from_mask(n, mask);
            if (is_minimal_zfs(g, s)) out.push_back(std::move(s));
        }
        break;
    case SubsetPolicy::Type::random: {
        std::uniform_int_distribution<std::uint64_t> draw(1, full_mask(n));
        for (std::size_t i = 0; i < policy.k; ++i) out.push_back(VertexSet::from_mask(n, draw(rng)));
        break;
    }
    }
    return out;
}

std::optional<std::string> distance_power_violation(const PatternMatrix& a) {
    const std::size_t n = a.order();
    std::vector<RationalMatrix> powers{RationalMatrix::identity(n)};
    for (std::size_t m = 1; m < n; ++m) powers.push_back(powers.back() * a.matrix());
    for (Vertex k = 1; k <= n; ++k) {
        const auto dist = distances_from(a.pattern(), k);
        for (Vertex j = 1; j <= n; ++j) {
            if (j == k) continue;
            const std::size_t d = dist[j - 1];
            if (d == kInfiniteDistance) return "vertices " + std::to_string(k) + " and " + std::to_string(j) + " are disconnected";
            if (sgn(powers[d](k - 1, j - 1)) == 0) {
                return "(A^" + std::to_string(d) + ")_{" + std::to_string(k) + "," + std::to_string(j) + "} = 0";
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Sweeps

SweepOutcome sweep_equivalence(const SweepConfig& cfg) {
    cfg.validate();
    SweepOutcome out;
    std::mt19937_64 rng(cfg.subset_policy.seed);
    for (const Graph& g : sweep_graphs(cfg)) {
        const auto subsets = policy_subsets(g, cfg.subset_policy, rng);
        for (const MatrixKind& kind : cfg.matrix_kinds) {
            const PatternMatrix a = build_matrix(g, kind);
            const bool hypotheses = is_connected(a.pattern()) && a.same_sign();
            if (hypotheses) {
                if (auto bad = distance_power_violation(a)) {
                    record(out, g, kind, VertexSet(g.order(), {}), kCheckDistancePowerEntry, *bad);
                }
            }
            for (const VertexSet& s : subsets) {
                const auto report = analyze(a, s, cfg.order_cap);
                ++out.instances_checked;
                if (!report.hypotheses.hold()) ++out.hypothesis_not_met;
                for (const auto& c : report.consistency) {
                    if (c.status == CheckStatus::fail) record(out, g, kind, s, c.name, c.detail);
                }
            }
        }
    }
    return out;
}

SweepOutcome sweep_zfs_implication(const SweepConfig& cfg) {
    cfg.validate();
    SweepOutcome out;
    std::mt19937_64 rng(cfg.subset_policy.seed);
    for (const Graph& g : sweep_graphs(cfg)) {
        std::vector<VertexSet> forcing;
        for (auto& s : policy_subsets(g, cfg.subset_policy, rng)) {
            if (is_zfs(g, s)) forcing.push_back(std::move(s));
        }
        for (const MatrixKind& kind : cfg.matrix_kinds) {
            const PatternMatrix a = build_matrix(g, kind);
            const bool hypotheses = is_connected(a.pattern()) && a.same_sign();
            for (const VertexSet& s : forcing) {
                ++out.instances_checked;
                if (!hypotheses) {
                    ++out.hypothesis_not_met;
                    continue;
                }
                const auto lie = lie_controllable(a, s, cfg.order_cap);
                if (!lie.controllable) {
                    record(out, g, kind, s, kCheckZfsImpliesLie,
                           "zero forcing set but lie_dim " + std::to_string(lie.dim) + " < " +
                               std::to_string(g.order() * g.order()));
                }
            }
        }
    }
    return out;
}

SweepOutcome sweep_single_vector(std::size_t count, std::size_t max_order, std::uint64_t seed, std::size_t order_cap) {
    if (max_order < 1) throw InputError("sweep: max_order must be at least 1");
    SweepOutcome out;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> order(1, max_order);
    std::uniform_int_distribution<long> entry(-3, 3);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = order(rng);
        RationalMatrix m(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = r; c < n; ++c) m(r, c) = m(c, r) = entry(rng);
        const Vertex j = std::uniform_int_distribution<Vertex>(1, n)(rng);
        const PatternMatrix a(m);
        const VertexSet s(n, {j});

        const auto kalman = kalman_controllable(a, s);
        const auto lie = lie_controllable(a, s, order_cap);
        ++out.instances_checked;
        if (kalman.controllable != lie.controllable) {
            out.violations.push_back({"", format_matrix(m), "explicit", s.members(),
                                      std::string(kCheckSingleVectorEquivalence),
                                      "walk_rank " + std::to_string(kalman.rank) + ", lie_dim " + std::to_string(lie.dim)});
            out.passed = false;
        }
    }
    return out;
}

ControllabilityReport reanalyze(const Violation& v, std::size_t order_cap) {
    if (!v.matrix.empty()) {
        const PatternMatrix a(parse_matrix(v.matrix));
        return analyze(a, VertexSet(a.order(), v.subset), order_cap);
    }
    const Graph g = parse_graph(v.graph);
    const PatternMatrix a = build_matrix(g, MatrixKind::parse(v.kind));
    if (v.subset.empty()) {
        // Whole-matrix checks carry no control set; analyze with every vertex.
        return analyze(a, VertexSet::all(g.order()), order_cap);
    }
    return analyze(a, VertexSet(g.order(), v.subset), order_cap);
}

// ---------------------------------------------------------------------------
// Reference examples

RationalMatrix mixed_sign_example_matrix() {
    return RationalMatrix::from_integers({{0, 1, 0, 1}, {1, 0, -1, 0}, {0, -1, 0, 1}, {1, 0, 1, 0}});
}

RationalMatrix block_diagonal_example_matrix() {
    return RationalMatrix::from_integers({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
}

namespace {

std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

std::vector<ExampleRow> reference_examples() {
    std::vector<ExampleRow> rows;

    {
        const Graph p4 = generate(GraphFamily::path, 4);
        const PatternMatrix a = build_matrix(p4, MatrixKind{});
        const VertexSet s(4, {2});
        const auto expected_walk = RationalMatrix::from_integers({{0, 1, 0, 2}, {1, 0, 2, 0}, {0, 1, 0, 3}, {0, 0, 1, 0}});
        const auto w = walk_matrix(a, s);
        const auto r = rank(w);
        const auto lie = lie_controllable(a, s);
        const bool zfs = is_zfs(p4, s);
        rows.push_back({"a", "P4, control {2}: controllable without being a zero forcing set",
                        "walk matrix [[0,1,0,2],[1,0,2,0],[0,1,0,3],[0,0,1,0]], walk_rank 4, lie_dim 16, zfs false",
                        std::string("walk matrix ") + (w == expected_walk ? "matches" : "differs") + ", walk_rank " +
                            std::to_string(r) + ", lie_dim " + std::to_string(lie.dim) + ", zfs " + yes_no(zfs),
                        w == expected_walk && r == 4 && lie.dim == 16 && !zfs});
    }

    {
        const PatternMatrix a(mixed_sign_example_matrix());
        const VertexSet s(4, {1, 3});
        const auto kalman = kalman_controllable(a, s);
        const auto lie = lie_controllable(a, s);
        rows.push_back({"b", "mixed-sign 4-cycle, controls {1,3}: same-sign hypothesis is needed",
                        "walk_rank 4, kalman true, lie_dim <= 8, lie false",
                        "walk_rank " + std::to_string(kalman.rank) + ", kalman " + yes_no(kalman.controllable) +
                            ", lie_dim " + std::to_string(lie.dim) + ", lie " + yes_no(lie.controllable),
                        kalman.rank == 4 && kalman.controllable && lie.dim <= 8 && !lie.controllable});
    }

    {
        // Each K2 block is controllable from its first vertex on its own.
        const PatternMatrix block(RationalMatrix::from_integers({{0, 1}, {1, 0}}));
        const auto block_rank = kalman_controllable(block, VertexSet(2, {1})).rank;
        const PatternMatrix a(block_diagonal_example_matrix());
        const VertexSet s(4, {1, 3});
        const auto kalman = kalman_controllable(a, s);
        const auto closure = lie_closure(control_generators(a, s));
        bool block_diagonal = true;
        for (const auto& m : closure.basis.basis()) {
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j)
                    if ((i < 2) != (j < 2) && sgn(m(i, j)) != 0) block_diagonal = false;
        }
        rows.push_back({"c", "two disconnected K2 blocks, controls {1,3}: connectivity is needed",
                        "block walk ranks 2 and 2, walk_rank 4, lie_dim <= 8, lie false, closure block diagonal",
                        "block walk ranks " + std::to_string(block_rank) + " and " + std::to_string(block_rank) +
                            ", walk_rank " + std::to_string(kalman.rank) + ", lie_dim " + std::to_string(closure.dim) +
                            ", lie " + yes_no(closure.dim == 16) + ", closure block diagonal " + yes_no(block_diagonal),
                        block_rank == 2 && kalman.rank == 4 && closure.dim <= 8 && closure.dim < 16 && block_diagonal});
    }
    return rows;
}

}  // namespace netctrl
