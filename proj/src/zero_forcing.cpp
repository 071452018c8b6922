#include "netctrl/zero_forcing.hpp"

#include <algorithm>
#include <numeric>

namespace netctrl {

namespace {

void check_compatible(const Graph& g, const VertexSet& s) {
    if (s.order() != g.order()) {
        throw InputError("vertex set over 1.." + std::to_string(s.order()) + " used with a graph of order " +
                         std::to_string(g.order()));
    }
}

// The unique white neighbor of v, or 0 when v has none or several.
Vertex sole_white_neighbor(const Graph& g, const std::vector<bool>& black, Vertex v) {
    Vertex found = 0;
    for (Vertex w : g.neighbors(v)) {
        if (black[w - 1]) continue;
        if (found) return 0;
        found = w;
    }
    return found;
}

}  // namespace

ForcingResult closure(const Graph& g, const VertexSet& initial) {
    check_compatible(g, initial);
    std::vector<bool> black(g.order(), false);
    for (Vertex v : initial) black[v - 1] = true;

    ForceChronicle chronicle;
    bool progressed = true;
    while (progressed) {
        progressed = false;
        for (Vertex v = 1; v <= g.order(); ++v) {
            if (!black[v - 1]) continue;
            if (Vertex w = sole_white_neighbor(g, black, v)) {
                black[w - 1] = true;
                chronicle.push_back({v, w});
                progressed = true;
                break;  // rescan: the smallest available forcer may have changed
            }
        }
    }

    std::vector<Vertex> members;
    for (Vertex v = 1; v <= g.order(); ++v)
        if (black[v - 1]) members.push_back(v);
    return {VertexSet(g.order(), std::move(members)), std::move(chronicle)};
}

bool is_zfs(const Graph& g, const VertexSet& s) { return closure(g, s).black.size() == g.order(); }

bool replay_chronicle(const Graph& g, const VertexSet& initial, const ForceChronicle& chronicle,
                      const VertexSet& expected_black) {
    check_compatible(g, initial);
    std::vector<bool> black(g.order(), false);
    for (Vertex v : initial) black[v - 1] = true;
    for (const Force& f : chronicle) {
        if (f.forcer < 1 || f.forcer > g.order() || f.forced < 1 || f.forced > g.order()) return false;
        if (!black[f.forcer - 1] || black[f.forced - 1]) return false;
        if (sole_white_neighbor(g, black, f.forcer) != f.forced) return false;
        black[f.forced - 1] = true;
    }
    for (Vertex v = 1; v <= g.order(); ++v)
        if (black[v - 1] != expected_black.contains(v)) return false;
    return true;
}

MinimumZfs min_zfs(const Graph& g, std::size_t order_cap) {
    const std::size_t n = g.order();
    if (n > order_cap) {
        throw InputError("min_zfs: order " + std::to_string(n) + " exceeds the exhaustive-search cap " +
                         std::to_string(order_cap));
    }
    // Combinations of {1..n} of size k in lexicographic order.
    for (std::size_t k = std::max<std::size_t>(1, g.min_degree()); k <= n; ++k) {
        std::vector<Vertex> pick(k);
        std::iota(pick.begin(), pick.end(), Vertex{1});
        while (true) {
            VertexSet candidate(n, pick);
            if (is_zfs(g, candidate)) return {k, std::move(candidate)};
            std::size_t i = k;
            while (i > 0 && pick[i - 1] == n - k + i) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    // Unreachable: the full vertex set always forces.
    return {n, VertexSet::all(n)};
}

bool is_minimal_zfs(const Graph& g, const VertexSet& s) {
    if (!is_zfs(g, s)) return false;
    // Closure is monotone, so it suffices to drop one vertex at a time.
    for (Vertex drop : s) {
        std::vector<Vertex> rest;
        for (Vertex v : s)
            if (v != drop) rest.push_back(v);
        if (is_zfs(g, VertexSet(g.order(), std::move(rest)))) return false;
    }
    return true;
}

}  // namespace netctrl
