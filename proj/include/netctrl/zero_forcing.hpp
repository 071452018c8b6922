#pragma once

#include "netctrl/graph.hpp"

#include <cstddef>
#include <vector>

namespace netctrl {

struct Force {
    Vertex forcer;
    Vertex forced;
    friend bool operator==(const Force&, const Force&) = default;
};

/// Ordered forcing steps; replaying them from the initial set reproduces the
/// closure.
using ForceChronicle = std::vector<Force>;

struct ForcingResult {
    VertexSet black;
    ForceChronicle chronicle;
};

/// Repeatedly applies the color-change rule (a black vertex with exactly one
/// white neighbor forces it) until no force is available. Among available
/// forces the smallest forcer label goes first.
ForcingResult closure(const Graph& g, const VertexSet& initial);

bool is_zfs(const Graph& g, const VertexSet& s);

/// True iff the chronicle is a valid forcing sequence from initial and ends
/// at expected_black.
bool replay_chronicle(const Graph& g, const VertexSet& initial, const ForceChronicle& chronicle,
                      const VertexSet& expected_black);

inline constexpr std::size_t kDefaultZfsOrderCap = 16;

struct MinimumZfs {
    std::size_t number;
    VertexSet witness;  // lexicographically least among minimum zero forcing sets
};

/// Exact zero forcing number by size-ordered exhaustive search starting at
/// max(1, min degree). Throws InputError when g.order() > order_cap.
MinimumZfs min_zfs(const Graph& g, std::size_t order_cap = kDefaultZfsOrderCap);

/// True iff s is a zero forcing set and no proper subset of s is one.
bool is_minimal_zfs(const Graph& g, const VertexSet& s);

}  // namespace netctrl
