#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "netctrl/control.hpp"
#include "netctrl/graph.hpp"

#include <random>

using namespace netctrl;

namespace {

using Edges = std::vector<Graph::Edge>;

Graph random_graph(std::size_t n, std::mt19937_64& rng) {
    Edges edges;
    for (Vertex i = 1; i <= n; ++i)
        for (Vertex j = i + 1; j <= n; ++j)
            if (rng() % 2) edges.emplace_back(i, j);
    return Graph(n, edges);
}

}  // namespace

TEST_CASE("parse_graph reads the edge-list format") {
    SUBCASE("path") {
        const Graph g = parse_graph("4\n1 2\n2 3\n3 4");
        CHECK(g.order() == 4);
        CHECK(g.edges() == Edges{{1, 2}, {2, 3}, {3, 4}});
        CHECK(g == generate(GraphFamily::path, 4));
    }
    SUBCASE("single vertex") {
        const Graph g = parse_graph("1");
        CHECK(g.order() == 1);
        CHECK(g.edge_count() == 0);
    }
    SUBCASE("duplicates collapse") {
        CHECK(parse_graph("3\n1 2\n1 2\n2 3").edges() == Edges{{1, 2}, {2, 3}});
        CHECK(parse_graph("3\n2 1\n1 2").edge_count() == 1);
    }
    SUBCASE("comments, blank lines and CRLF") {
        const Graph g = parse_graph("# a triangle\r\n3\r\n\r\n1 2\r\n# middle\r\n2 3\r\n3 1\r\n");
        CHECK(g == generate(GraphFamily::complete, 3));
    }
}

TEST_CASE("parse_graph reports errors with line numbers") {
    auto message = [](const char* text) {
        try {
            parse_graph(text);
        } catch (const InputError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message("3\n1 2\n2 2") == "line 3: loop edge at vertex 2");
    CHECK(message("3\n1 4").find("line 2") == 0);
    CHECK(message("3\n1 x").find("line 2: malformed") == 0);
    CHECK(message("3\n1 2 3").find("line 2") == 0);
    CHECK(message("# only a comment\n").find("missing vertex count") != std::string::npos);
    CHECK(message("0").find("line 1") == 0);
    CHECK(message("").find("missing vertex count") != std::string::npos);
}

TEST_CASE("generate builds canonically labeled families") {
    CHECK(generate(GraphFamily::path, 4).edges() == Edges{{1, 2}, {2, 3}, {3, 4}});
    CHECK(generate(GraphFamily::complete, 3).edges() == Edges{{1, 2}, {1, 3}, {2, 3}});
    CHECK(generate(GraphFamily::cycle, 5).edges() == Edges{{1, 2}, {1, 5}, {2, 3}, {3, 4}, {4, 5}});
    CHECK(generate(GraphFamily::path, 1).edge_count() == 0);
    CHECK_THROWS_AS(generate(GraphFamily::cycle, 2), InputError);
    CHECK_THROWS_AS(generate(GraphFamily::path, 0), InputError);
    CHECK(parse_family("cycle") == GraphFamily::cycle);
    CHECK_THROWS_AS(parse_family("star"), InputError);
}

TEST_CASE("random_connected") {
    CHECK(random_connected(1, {1, 3}, 99) == Graph(1));
    CHECK(random_connected(2, {1, 1}, 5) == generate(GraphFamily::complete, 2));
    CHECK(random_connected(7, {1, 1}, 5) == generate(GraphFamily::complete, 7));

    const Graph g = random_connected(6, {1, 2}, 42);
    CHECK(g.order() == 6);
    CHECK(is_connected(g));
    CHECK(random_connected(6, {1, 2}, 42) == g);

    for (std::uint64_t seed = 0; seed < 50; ++seed) CHECK(is_connected(random_connected(8, {1, 4}, seed)));
    CHECK_THROWS_AS(random_connected(4, {0, 2}, 1), InputError);
    CHECK_THROWS_AS(random_connected(4, {3, 2}, 1), InputError);
    // Disconnected samples are essentially certain at this density.
    CHECK_THROWS_AS(random_connected(40, {1, 1'000'000}, 1), std::runtime_error);
}

TEST_CASE("is_connected, distance and neighborhood") {
    const Graph p4 = generate(GraphFamily::path, 4);
    const Graph c5 = generate(GraphFamily::cycle, 5);
    const Graph k4 = generate(GraphFamily::complete, 4);
    const Graph two_edges(4, {{1, 2}, {3, 4}});

    CHECK(is_connected(p4));
    CHECK_FALSE(is_connected(two_edges));
    CHECK(is_connected(Graph(1)));

    CHECK(distance(p4, 1, 4) == 3);
    CHECK(distance(c5, 1, 4) == 2);
    CHECK(distance(c5, 3, 3) == 0);
    CHECK(distance(two_edges, 1, 3) == kInfiniteDistance);
    CHECK_THROWS_AS(distance(p4, 0, 2), InputError);
    CHECK_THROWS_AS(distance(p4, 1, 5), InputError);

    CHECK(neighborhood(p4, 2).members() == std::vector<Vertex>{1, 3});
    CHECK(neighborhood(Graph(1), 1).empty());
    CHECK(neighborhood(k4, 1).members() == std::vector<Vertex>{2, 3, 4});
    CHECK_THROWS_AS(neighborhood(k4, 5), InputError);
}

TEST_CASE("Graph rejects loops and out-of-range labels") {
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), InputError);
    CHECK_THROWS_AS(Graph(3, {{1, 4}}), InputError);
    CHECK_THROWS_AS(Graph(0), InputError);
}

TEST_CASE("VertexSet") {
    const VertexSet s(5, {3, 1, 3});
    CHECK(s.members() == std::vector<Vertex>{1, 3});
    CHECK(s.to_string() == "{1,3}");
    CHECK(VertexSet(5, {}).to_string() == "{}");
    CHECK(VertexSet::parse(5, "1,3") == s);
    CHECK(VertexSet::parse(5, " 3 , 1 ") == s);
    CHECK(VertexSet::from_mask(5, 0b101) == s);
    CHECK(VertexSet(5, {1}).is_subset_of(s));
    CHECK_THROWS_AS(VertexSet::parse(5, "1,6"), InputError);
    CHECK_THROWS_AS(VertexSet::parse(5, "1,,2"), InputError);
    CHECK_THROWS_AS(VertexSet::parse(5, "1-3"), InputError);
    CHECK_THROWS_AS(VertexSet::parse(5, ""), InputError);
    CHECK_THROWS_AS(VertexSet(5, {0}), InputError);
}

TEST_CASE("format_graph and to_dot") {
    const Graph p3 = generate(GraphFamily::path, 3);
    CHECK(format_graph(p3) == "3\n1 2\n2 3\n");
    CHECK(to_dot(p3) == "graph G {\n  1 -- 2;\n  2 -- 3;\n}\n");
    CHECK(to_dot(Graph(2, {})) == "graph G {\n  1;\n  2;\n}\n");
}

TEST_CASE("connected labeled graph counts") {
    // Known counts of labeled connected graphs: 1, 1, 4, 38, 728.
    const std::size_t expected[] = {1, 1, 4, 38, 728};
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto graphs = connected_labeled_graphs(n);
        CHECK(graphs.size() == expected[n - 1]);
        for (const auto& g : graphs) CHECK(is_connected(g));
    }
}

TEST_CASE("property: parse(format(g)) == g") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = random_graph(1 + rng() % 9, rng);
        CHECK(parse_graph(format_graph(g)) == g);
    }
}

TEST_CASE("property: distance is a symmetric metric on connected graphs") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = random_connected(2 + rng() % 7, {1, 3}, rng());
        const std::size_t n = g.order();
        for (Vertex u = 1; u <= n; ++u) {
            CHECK(distance(g, u, u) == 0);
            for (Vertex v = 1; v <= n; ++v) {
                CHECK(distance(g, u, v) == distance(g, v, u));
                if (g.has_edge(u, v)) CHECK(distance(g, u, v) == 1);
                for (Vertex w = 1; w <= n; ++w) CHECK(distance(g, u, w) <= distance(g, u, v) + distance(g, v, w));
            }
        }
    }
}

TEST_CASE("property: neighborhood size equals the Laplacian diagonal") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = random_graph(1 + rng() % 8, rng);
        const auto laplacian = build_matrix(g, MatrixKind::parse("laplacian"));
        for (Vertex v = 1; v <= g.order(); ++v) {
            CHECK(Rational(static_cast<long>(neighborhood(g, v).size())) == laplacian.matrix()(v - 1, v - 1));
        }
    }
}
