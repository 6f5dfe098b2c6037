#pragma once

#include <initializer_list>
#include <utility>

#include "treecut/decomposition.hpp"
#include "treecut/families.hpp"
#include "treecut/multigraph.hpp"

namespace treecut::testing {

inline MultiGraph graph_of(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> edges) {
    MultiGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

inline MultiGraph path(std::size_t n) {
    MultiGraph g(n);
    for (VertexId v = 1; v < n; ++v) g.add_edge(v - 1, v);
    return g;
}

inline MultiGraph cycle(std::size_t n) {
    MultiGraph g = path(n);
    g.add_edge(static_cast<VertexId>(n - 1), 0);
    return g;
}

inline MultiGraph complete(std::size_t n) {
    MultiGraph g(n);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline MultiGraph windmill4() { return make_family(Family::windmill, 4).graph; }

// Root bag {center}, one child per triangle bagging its two outer vertices.
inline TreeCutDecomposition windmill4_dstar() {
    TreeCutDecomposition d;
    d.add_node(std::nullopt, {0});
    for (VertexId i = 0; i < 4; ++i) d.add_node(0, {2 * i + 1, 2 * i + 2});
    return d;
}

// One node per vertex, root bag {0}, parent of v is v - 1.
inline TreeCutDecomposition chain_decomposition(std::size_t n) {
    TreeCutDecomposition d;
    for (VertexId v = 0; v < n; ++v) {
        std::optional<NodeId> p;
        if (v > 0) p = v - 1;
        d.add_node(p, {v});
    }
    return d;
}

}  // namespace treecut::testing
