#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "treecut/multigraph.hpp"
#include "treecut/witness.hpp"

namespace treecut {

struct Demand {
    VertexId s = 0;
    VertexId t = 0;
};

// "0-2,1-3" -> {(0,2), (1,3)}. Throws validation_error on malformed input.
std::vector<Demand> parse_demands(std::string_view text);

struct EdpStats {
    std::size_t max_states = 0;    // largest table seen during the DP
    std::size_t max_boundary = 0;  // most boundary edges of one region
};

/// Edge-disjoint paths by dynamic programming over the witness forest.
///
/// Regions are forest subtrees, grown from a vertex by merging its children in
/// ascending order. A state labels each g-edge leaving the region as unused,
/// as the exit of the path started at one demand terminal inside, or as
/// linked to another boundary edge by a path fragment passing through. Ghost
/// edges carry no paths.
bool edp_solve_dp(const MultiGraph &g, const SpanningWitness &w, std::span<const Demand> demands,
                  EdpStats *stats = nullptr);

/// Exhaustive search over simple paths, demand by demand. Returns one path
/// system (edge ids per demand) or nullopt. Throws budget_error above
/// `edge_limit` edges.
std::optional<std::vector<std::vector<EdgeId>>> edp_bruteforce(const MultiGraph &g, std::span<const Demand> demands,
                                                                std::size_t edge_limit = 14);

}  // namespace treecut
