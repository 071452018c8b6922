#include "netctrl/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <queue>
#include <random>
#include <sstream>

namespace netctrl {

namespace {

std::string_view trim(std::string_view s) {
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

std::optional<std::size_t> parse_size(std::string_view s) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

}  // namespace

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::size_t order, std::vector<Vertex> members)
    : order_(order), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (Vertex v : members_) {
        if (v < 1 || v > order_) {
            throw InputError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(order_));
        }
    }
}

VertexSet VertexSet::all(std::size_t order) {
    std::vector<Vertex> m(order);
    for (std::size_t i = 0; i < order; ++i) m[i] = i + 1;
    return VertexSet(order, std::move(m));
}

VertexSet VertexSet::from_mask(std::size_t order, std::uint64_t mask) {
    std::vector<Vertex> m;
    for (std::size_t i = 0; i < order && i < 64; ++i) {
        if (mask >> i & 1U) m.push_back(i + 1);
    }
    return VertexSet(order, std::move(m));
}

VertexSet VertexSet::parse(std::size_t order, std::string_view spec) {
    std::vector<Vertex> m;
    spec = trim(spec);
    if (spec.empty()) throw InputError("empty vertex set");
    std::size_t start = 0;
    while (start <= spec.size()) {
        std::size_t comma = spec.find(',', start);
        if (comma == std::string_view::npos) comma = spec.size();
        auto token = trim(spec.substr(start, comma - start));
        auto value = parse_size(token);
        if (!value) throw InputError("malformed vertex label '" + std::string(token) + "' in set");
        m.push_back(*value);
        start = comma + 1;
    }
    return VertexSet(order, std::move(m));
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

std::string VertexSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(members_[i]);
    }
    return out + "}";
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(std::size_t order) : adjacency_(order) {
    if (order == 0) throw InputError("graph order must be positive");
}

Graph::Graph(std::size_t order, const std::vector<Edge>& edges) : Graph(order) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(Vertex v) const {
    if (v < 1 || v > order()) {
        throw InputError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(order()));
    }
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    auto insert_sorted = [](std::vector<Vertex>& list, Vertex x) {
        auto it = std::lower_bound(list.begin(), list.end(), x);
        if (it == list.end() || *it != x) list.insert(it, x);
    };
    insert_sorted(adjacency_[u - 1], v);
    insert_sorted(adjacency_[v - 1], u);
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& list : adjacency_) twice += list.size();
    return twice / 2;
}

std::vector<Graph::Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < adjacency_.size(); ++i) {
        for (Vertex w : adjacency_[i]) {
            if (w > i + 1) out.emplace_back(i + 1, w);
        }
    }
    return out;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& list = adjacency_[u - 1];
    return std::binary_search(list.begin(), list.end(), v);
}

std::size_t Graph::degree(Vertex v) const { return neighbors(v).size(); }

std::size_t Graph::min_degree() const {
    std::size_t best = adjacency_.front().size();
    for (const auto& list : adjacency_) best = std::min(best, list.size());
    return best;
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return adjacency_[v - 1];
}

// ---------------------------------------------------------------------------
// I/O

Graph parse_graph(std::string_view text) {
    std::optional<std::size_t> order;
    std::vector<Graph::Edge> edges;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        auto line = trim(text.substr(pos, eol - pos));
        pos = eol + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') continue;

        const auto where = "line " + std::to_string(line_no) + ": ";
        auto fields = split_ws(line);
        if (!order) {
            if (fields.size() != 1) throw InputError(where + "expected the vertex count n");
            order = parse_size(fields[0]);
            if (!order || *order == 0) throw InputError(where + "vertex count must be a positive integer");
            continue;
        }
        if (fields.size() != 2) throw InputError(where + "expected \"u v\"");
        auto u = parse_size(fields[0]);
        auto v = parse_size(fields[1]);
        if (!u || !v) throw InputError(where + "malformed vertex label");
        if (*u < 1 || *u > *order || *v < 1 || *v > *order) {
            throw InputError(where + "vertex out of range 1.." + std::to_string(*order));
        }
        if (*u == *v) throw InputError(where + "loop edge at vertex " + std::to_string(*u));
        edges.emplace_back(*u, *v);
    }
    if (!order) throw InputError("empty graph document: missing vertex count");
    return Graph(*order, edges);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open graph file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

std::string format_graph(const Graph& g) {
    std::string out = std::to_string(g.order()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::string to_dot(const Graph& g) {
    std::string out = "graph G {\n";
    for (std::size_t v = 1; v <= g.order(); ++v) {
        if (g.degree(v) == 0) out += "  " + std::to_string(v) + ";\n";
    }
    for (auto [u, v] : g.edges()) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    return out + "}\n";
}

// ---------------------------------------------------------------------------
// Generators

GraphFamily parse_family(std::string_view name) {
    if (name == "path") return GraphFamily::path;
    if (name == "cycle") return GraphFamily::cycle;
    if (name == "complete") return GraphFamily::complete;
    throw InputError("unknown graph family '" + std::string(name) + "'");
}

Graph generate(GraphFamily family, std::size_t n) {
    if (n == 0) throw InputError("graph order must be positive");
    std::vector<Graph::Edge> edges;
    switch (family) {
    case GraphFamily::path:
        for (Vertex i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
        break;
    case GraphFamily::cycle:
        if (n < 3) throw InputError("cycle requires n >= 3");
        for (Vertex i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(1, n);
        break;
    case GraphFamily::complete:
        for (Vertex i = 1; i <= n; ++i)
            for (Vertex j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
        break;
    }
    return Graph(n, edges);
}

Graph random_connected(std::size_t n, EdgeProbability p, std::uint64_t seed) {
    if (n == 0) throw InputError("graph order must be positive");
    if (p.den == 0 || p.num == 0 || p.num > p.den) throw InputError("edge probability must lie in (0,1]");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> draw(0, p.den - 1);
    for (int attempt = 0; attempt < kRandomConnectedRetryCap; ++attempt) {
        std::vector<Graph::Edge> edges;
        for (Vertex i = 1; i <= n; ++i)
            for (Vertex j = i + 1; j <= n; ++j)
                if (draw(rng) < p.num) edges.emplace_back(i, j);
        Graph g(n, edges);
        if (is_connected(g)) return g;
    }
    throw std::runtime_error("random_connected: no connected sample after " +
                             std::to_string(kRandomConnectedRetryCap) + " attempts");
}

// ---------------------------------------------------------------------------
// Metrics

std::vector<std::size_t> distances_from(const Graph& g, Vertex u) {
    g.neighbors(u);  // validates u
    std::vector<std::size_t> dist(g.order(), kInfiniteDistance);
    dist[u - 1] = 0;
    std::queue<Vertex> frontier;
    frontier.push(u);
    while (!frontier.empty()) {
        Vertex x = frontier.front();
        frontier.pop();
        for (Vertex y : g.neighbors(x)) {
            if (dist[y - 1] == kInfiniteDistance) {
                dist[y - 1] = dist[x - 1] + 1;
                frontier.push(y);
            }
        }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    auto dist = distances_from(g, 1);
    return std::none_of(dist.begin(), dist.end(), [](std::size_t d) { return d == kInfiniteDistance; });
}

std::size_t distance(const Graph& g, Vertex u, Vertex v) {
    g.neighbors(v);  // validates v
    return distances_from(g, u)[v - 1];
}

VertexSet neighborhood(const Graph& g, Vertex v) {
    return VertexSet(g.order(), g.neighbors(v));
}

std::vector<Graph> connected_labeled_graphs(std::size_t n) {
    if (n == 0) throw InputError("graph order must be positive");
    std::vector<Graph::Edge> pairs;
    for (Vertex i = 1; i <= n; ++i)
        for (Vertex j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
    if (pairs.size() > 30) throw InputError("exhaustive enumeration limited to n <= 8");
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<Graph::Edge> edges;
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if (mask >> b & 1U) edges.push_back(pairs[b]);
        Graph g(n, edges);
        if (is_connected(g)) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace netctrl
