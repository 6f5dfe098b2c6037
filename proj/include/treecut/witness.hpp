#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "treecut/multigraph.hpp"

namespace treecut {

/// A supergraph H of G together with a maximal spanning forest of H.
///
/// Host vertices [0, base_vertices) are the vertices of G; the remaining ones
/// are ghosts. Non-ghost host edges, restricted to the base vertices, form G.
struct SpanningWitness {
    MultiGraph host;
    std::size_t base_vertices = 0;
    std::vector<bool> ghost_edge;  // indexed by host edge id
    std::vector<EdgeId> forest;    // host edge ids, ascending

    bool is_ghost_vertex(VertexId v) const { return v >= base_vertices; }
    std::size_t num_ghost_vertices() const { return host.num_vertices() - base_vertices; }
    std::size_t num_ghost_edges() const;

    // G recovered from the host (non-ghost edges, in host edge order).
    MultiGraph base() const;

    // Witness with H = G.
    static SpanningWitness of_graph(const MultiGraph &g, std::vector<EdgeId> forest);
};

// Lists violated witness invariants; when `g` is given also checks that the
// witness is built over exactly that graph.
std::vector<std::string> validate(const SpanningWitness &w, const MultiGraph *g = nullptr);

// True iff `forest` (edge ids of h) is acyclic, loop-free, and spans every
// component of h.
bool is_maximal_spanning_forest(const MultiGraph &h, std::span<const EdgeId> forest);

// Any maximal spanning forest of h (BFS from ascending roots).
std::vector<EdgeId> bfs_spanning_forest(const MultiGraph &h);

// {"graph_vertices": [...], "ghost_vertices": [...],
//  "edges": [{"u": int, "v": int, "ghost": bool}], "tree_edges": [[u, v], ...]}
// Tree edges are matched to host edges by endpoints, lowest unused id first.
std::string witness_to_json(const SpanningWitness &w);
SpanningWitness witness_from_json(std::string_view text);

}  // namespace treecut
