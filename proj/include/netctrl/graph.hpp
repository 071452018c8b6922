#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace netctrl {

/// Vertex labels are 1-based everywhere in the public API.
using Vertex = std::size_t;

/// Raised for malformed user input (graph files, matrix files, set specs).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Sorted, duplicate-free subset of {1,...,n} for an associated graph order n.
class VertexSet {
public:
    VertexSet() = default;
    /// Sorts and deduplicates; throws InputError on labels outside 1..order.
    VertexSet(std::size_t order, std::vector<Vertex> members);

    static VertexSet all(std::size_t order);
    /// Members are the set bits of mask, bit i standing for vertex i+1.
    static VertexSet from_mask(std::size_t order, std::uint64_t mask);
    /// Parses "1,3,5" (1-based, comma separated, no ranges).
    static VertexSet parse(std::size_t order, std::string_view spec);

    std::size_t order() const { return order_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<Vertex>& members() const { return members_; }
    bool contains(Vertex v) const;
    bool is_subset_of(const VertexSet& other) const;

    /// "{1,3}"; the empty set prints as "{}".
    std::string to_string() const;

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::size_t order_ = 0;
    std::vector<Vertex> members_;
};

/// Simple undirected graph on vertices 1..n.
class Graph {
public:
    using Edge = std::pair<Vertex, Vertex>;

    /// Edgeless graph of the given order; order must be positive.
    explicit Graph(std::size_t order);
    /// Edges may come in either orientation and may repeat; loops and
    /// out-of-range labels throw InputError.
    Graph(std::size_t order, const std::vector<Edge>& edges);

    std::size_t order() const { return adjacency_.size(); }
    std::size_t edge_count() const;
    /// Edges as (u,v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    bool has_edge(Vertex u, Vertex v) const;
    std::size_t degree(Vertex v) const;
    std::size_t min_degree() const;
    /// Sorted neighbor labels of v (internal storage, no copy).
    const std::vector<Vertex>& neighbors(Vertex v) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void add_edge(Vertex u, Vertex v);
    void check_vertex(Vertex v) const;

    std::vector<std::vector<Vertex>> adjacency_;
};

enum class GraphFamily { path, cycle, complete };

GraphFamily parse_family(std::string_view name);

/// Reads the edge-list format: first data line n, then "u v" lines.
/// '#' starts a comment line; CRLF is tolerated. Errors carry line numbers.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);

/// Inverse of parse_graph (edges in sorted order).
std::string format_graph(const Graph& g);
/// `graph G { u -- v; ... }` for visualization only.
std::string to_dot(const Graph& g);

Graph generate(GraphFamily family, std::size_t n);

/// Edge probability num/den in (0,1].
struct EdgeProbability {
    std::uint64_t num = 1;
    std::uint64_t den = 2;
};

inline constexpr int kRandomConnectedRetryCap = 10'000;

/// Rejection-samples G(n,p) until connected; reproducible for a fixed seed.
/// Throws std::runtime_error when the retry cap is exhausted.
Graph random_connected(std::size_t n, EdgeProbability p, std::uint64_t seed);

bool is_connected(const Graph& g);

inline constexpr std::size_t kInfiniteDistance = std::numeric_limits<std::size_t>::max();

/// Shortest-path edge count, kInfiniteDistance when unreachable.
std::size_t distance(const Graph& g, Vertex u, Vertex v);
/// All distances from u, indexed by label-1.
std::vector<std::size_t> distances_from(const Graph& g, Vertex u);

VertexSet neighborhood(const Graph& g, Vertex v);

/// All labeled connected graphs of order n (no isomorphism reduction),
/// in increasing order of the edge-subset bitmask over pairs (1,2),(1,3),...
std::vector<Graph> connected_labeled_graphs(std::size_t n);

}  // namespace netctrl
