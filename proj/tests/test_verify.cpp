#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "netctrl/serialize.hpp"
#include "netctrl/verify.hpp"
#include "netctrl/zero_forcing.hpp"

using namespace netctrl;

TEST_CASE("SubsetPolicy and SweepConfig validation") {
    CHECK(SubsetPolicy::parse("all").type == SubsetPolicy::Type::all);
    CHECK(SubsetPolicy::parse("zfs").type == SubsetPolicy::Type::zfs_only);
    const auto r = SubsetPolicy::parse("random:10:7");
    CHECK(r.type == SubsetPolicy::Type::random);
    CHECK(r.k == 10);
    CHECK(r.seed == 7);
    CHECK(r.to_string() == "random:10:7");
    CHECK_THROWS_AS(SubsetPolicy::parse("random:0:7"), InputError);
    CHECK_THROWS_AS(SubsetPolicy::parse("random:3"), InputError);
    CHECK_THROWS_AS(SubsetPolicy::parse("some"), InputError);

    SweepConfig cfg;
    cfg.max_order = 0;
    CHECK_THROWS_AS(cfg.validate(), InputError);
    cfg.max_order = 3;
    cfg.matrix_kinds.clear();
    CHECK_THROWS_AS(sweep_equivalence(cfg), InputError);
    cfg.matrix_kinds = {MatrixKind{}};
    cfg.subset_policy = {SubsetPolicy::Type::random, 0, 1};
    CHECK_THROWS_AS(cfg.validate(), InputError);
    cfg.subset_policy = {};
    cfg.max_order = 13;
    CHECK_THROWS_AS(cfg.validate(), InputError);
}

TEST_CASE("policy_subsets") {
    const Graph p4 = generate(GraphFamily::path, 4);
    std::mt19937_64 rng(1);
    CHECK(policy_subsets(p4, SubsetPolicy::parse("all"), rng).size() == 15);
    CHECK(policy_subsets(p4, SubsetPolicy::parse("singletons"), rng).size() == 4);
    const auto minimal = policy_subsets(p4, SubsetPolicy::parse("zfs"), rng);
    for (const auto& s : minimal) CHECK(is_minimal_zfs(p4, s));
    // Minimal forcing sets of P4: {1}, {4}, and the 2-sets without an endpoint: {2,3}.
    CHECK(minimal.size() == 3);
    const auto random = policy_subsets(p4, SubsetPolicy::parse("random:6:3"), rng);
    CHECK(random.size() == 6);
    for (const auto& s : random) CHECK_FALSE(s.empty());
}

TEST_CASE("sweep_equivalence") {
    SUBCASE("orders up to 4, adjacency, all subsets") {
        SweepConfig cfg;
        cfg.max_order = 4;
        const auto out = sweep_equivalence(cfg);
        CHECK(out.passed);
        CHECK(out.violations.empty());
        // 1*1 + 1*3 + 4*7 + 38*15 instances.
        CHECK(out.instances_checked == 602);
        CHECK(out.hypothesis_not_met == 0);
    }
    SUBCASE("single vertex") {
        SweepConfig cfg;
        cfg.max_order = 1;
        cfg.matrix_kinds = {MatrixKind::parse("laplacian")};
        cfg.subset_policy = SubsetPolicy::parse("singletons");
        const auto out = sweep_equivalence(cfg);
        CHECK(out.passed);
        CHECK(out.instances_checked == 1);
        const auto r = analyze(build_matrix(Graph(1), MatrixKind::parse("laplacian")), VertexSet(1, {1}));
        CHECK(r.lie_dim == 1);
        CHECK(r.kalman_controllable);
    }
    SUBCASE("orders up to 5, seeded same-sign, random subsets") {
        SweepConfig cfg;
        cfg.max_order = 5;
        cfg.matrix_kinds = {MatrixKind::parse("random:7")};
        cfg.subset_policy = SubsetPolicy::parse("random:10:7");
        const auto out = sweep_equivalence(cfg);
        CHECK(out.passed);
        CHECK(out.instances_checked == 772 * 10);
    }
    SUBCASE("sampled orders above 5") {
        SweepConfig cfg;
        cfg.max_order = 6;
        cfg.samples_per_large_order = 2;
        cfg.subset_policy = SubsetPolicy::parse("singletons");
        const auto graphs = sweep_graphs(cfg);
        CHECK(graphs.size() == 772 + 2);
        CHECK(graphs.back().order() == 6);
        CHECK(is_connected(graphs.back()));
        CHECK(sweep_equivalence(cfg).passed);
    }
}

TEST_CASE("sweep_zfs_implication") {
    SUBCASE("P4 from an endpoint") {
        const Graph p4 = generate(GraphFamily::path, 4);
        CHECK(is_zfs(p4, VertexSet(4, {1})));
        CHECK(lie_controllable(build_matrix(p4, MatrixKind{}), VertexSet(4, {1})).controllable);
    }
    SUBCASE("full vertex set on every graph") {
        for (std::size_t n = 1; n <= 4; ++n) {
            for (const auto& g : connected_labeled_graphs(n)) {
                const auto all = VertexSet::all(n);
                CHECK(is_zfs(g, all));
                CHECK(lie_controllable(build_matrix(g, MatrixKind::parse("laplacian")), all).controllable);
            }
        }
    }
    SUBCASE("minimal zero forcing sets up to order 5, all kinds") {
        SweepConfig cfg;
        cfg.max_order = 5;
        cfg.matrix_kinds = {MatrixKind::parse("adjacency"), MatrixKind::parse("laplacian"),
                            MatrixKind::parse("random:3")};
        cfg.subset_policy = SubsetPolicy::parse("zfs");
        const auto out = sweep_zfs_implication(cfg);
        CHECK(out.passed);
        CHECK(out.instances_checked > 0);
    }
    SUBCASE("disconnected supplied graphs are recorded, not asserted") {
        SweepConfig cfg;
        cfg.graphs = std::vector<Graph>{Graph(4, {{1, 2}, {3, 4}})};
        const auto out = sweep_zfs_implication(cfg);
        CHECK(out.passed);
        CHECK(out.instances_checked > 0);
        CHECK(out.hypothesis_not_met == out.instances_checked);
    }
}

TEST_CASE("sweeps are deterministic") {
    SweepConfig cfg;
    cfg.max_order = 6;
    cfg.samples_per_large_order = 2;
    cfg.seed = 99;
    cfg.matrix_kinds = {MatrixKind::parse("random:5")};
    cfg.subset_policy = SubsetPolicy::parse("random:2:11");
    const auto a = outcome_to_json(sweep_equivalence(cfg)).dump();
    const auto b = outcome_to_json(sweep_equivalence(cfg)).dump();
    CHECK(a == b);
    CHECK(outcome_to_json(sweep_single_vector(30, 4, 5)).dump() == outcome_to_json(sweep_single_vector(30, 4, 5)).dump());
}

TEST_CASE("sweep_single_vector") {
    const auto out = sweep_single_vector(50, 4, 123);
    CHECK(out.passed);
    CHECK(out.instances_checked == 50);
    CHECK_THROWS_AS(sweep_single_vector(1, 0, 1), InputError);
}

TEST_CASE("violations carry enough data to re-run the instance") {
    const Graph c5 = generate(GraphFamily::cycle, 5);
    const MatrixKind kind = MatrixKind::parse("random:4");
    const Violation v{format_graph(c5), "", kind.to_string(), {2, 4}, std::string(kCheckKalmanIffLie), "detail"};

    const auto parsed = violation_from_json(Json::parse(violation_to_json(v).dump()));
    CHECK(parsed == v);
    CHECK(reanalyze(parsed) == analyze(build_matrix(c5, kind), VertexSet(5, {2, 4})));

    const auto mixed = mixed_sign_example_matrix();
    const Violation explicit_matrix{"", format_matrix(mixed), "explicit", {1, 3}, "x", ""};
    const auto r = reanalyze(violation_from_json(violation_to_json(explicit_matrix)));
    CHECK(r == analyze(PatternMatrix(mixed), VertexSet(4, {1, 3})));

    SweepOutcome o;
    o.instances_checked = 7;
    o.violations = {v, explicit_matrix};
    o.passed = false;
    CHECK(outcome_from_json(Json::parse(outcome_to_json(o).dump())) == o);
    CHECK_THROWS_AS(outcome_from_json(Json::parse("{}")), InputError);
}

TEST_CASE("distance_power_violation") {
    CHECK_FALSE(distance_power_violation(build_matrix(generate(GraphFamily::cycle, 6), MatrixKind{})).has_value());
    // Mixed signs can cancel along the two paths of length 2 from 1 to 3.
    const auto hit = distance_power_violation(PatternMatrix(mixed_sign_example_matrix()));
    REQUIRE(hit.has_value());
    CHECK(*hit == "(A^2)_{1,3} = 0");
    CHECK(distance_power_violation(PatternMatrix(block_diagonal_example_matrix())).value().find("disconnected") !=
          std::string::npos);
}

TEST_CASE("reference examples") {
    const auto rows = reference_examples();
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].id == "a");
    CHECK(rows[1].id == "b");
    CHECK(rows[2].id == "c");
    for (const auto& row : rows) CHECK_MESSAGE(row.match, row.id << ": " << row.computed);
}
