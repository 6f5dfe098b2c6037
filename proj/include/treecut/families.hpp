#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "treecut/multigraph.hpp"

namespace treecut {

enum class Family { star, windmill, wall, ladder };

std::optional<Family> parse_family(std::string_view name);
std::string_view family_name(Family f);

struct FamilyInstance {
    MultiGraph graph;
    // Distinguished spanning tree (ladder only): one full rail plus every rung.
    std::vector<EdgeId> spanning_tree;
};

/// Builds one member of an extremal family.
///
///  - star r:     K_{1,r}; vertex 0 is the center, leaves 1..r.
///  - windmill r: r triangles sharing vertex 0; triangle i uses 2i+1, 2i+2.
///  - wall r:     r x r grid, vertex (row, col) = row * r + col. All horizontal
///                edges are kept; the vertical edge between rows i and i+1 at
///                column j is kept iff (i + j) is even (0-based), i.e. the first
///                row of verticals keeps the odd columns when counted from 1.
///  - ladder r:   2 x r grid with r rungs. Bottom rail 0..r-1, top rail r..2r-1;
///                the spanning tree is the top rail plus all rungs.
///
/// Throws precondition_error when r is below the family minimum
/// (1 for star/windmill, 2 for wall/ladder).
FamilyInstance make_family(Family kind, int r);

// Simple graph with n vertices and m distinct edges drawn uniformly from a
// seeded Mersenne twister. Throws precondition_error if m > n(n-1)/2.
MultiGraph random_graph(std::size_t n, std::size_t m, std::uint64_t seed);

// Every simple graph on n labeled vertices (n <= 6), in edge-bitmask order
// over the pairs (0,1), (0,2), ..., (n-2,n-1).
std::vector<MultiGraph> all_graphs(std::size_t n);

// One representative per isomorphism class of simple graphs on n vertices
// (n <= 6), optionally only the connected ones.
std::vector<MultiGraph> graphs_up_to_isomorphism(std::size_t n, bool connected_only);

}  // namespace treecut
