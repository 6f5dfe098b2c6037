#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace treecut {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    bool is_loop() const { return u == v; }
    VertexId other(VertexId x) const { return x == u ? v : u; }
    bool operator==(const Edge &) const = default;
};

/// Undirected multigraph on the dense vertex range [0, n).
///
/// Parallel edges and self-loops are allowed; edge ids are insertion order and
/// stay stable for the lifetime of the value. Every vertex also carries a label
/// (by default its own id) so that compacting operations such as vertex
/// deletion or center computation can report where a vertex came from.
class MultiGraph {
   public:
    MultiGraph() = default;
    explicit MultiGraph(std::size_t n);
    MultiGraph(std::size_t n, std::span<const Edge> edges);

    VertexId add_vertex();
    VertexId add_vertex(VertexId label);
    EdgeId add_edge(VertexId u, VertexId v);

    std::size_t num_vertices() const { return incidence_.size(); }
    std::size_t num_edges() const { return edges_.size(); }
    bool empty() const { return incidence_.empty(); }

    const Edge &edge(EdgeId e) const { return edges_[e]; }
    std::span<const Edge> edges() const { return edges_; }
    // Each self-loop is listed once.
    std::span<const EdgeId> incident(VertexId v) const { return incidence_[v]; }

    // Multiplicity-counted; a self-loop contributes two.
    std::size_t degree(VertexId v) const;
    std::size_t max_degree() const;
    std::size_t multiplicity(VertexId u, VertexId v) const;
    bool has_edge(VertexId u, VertexId v) const { return multiplicity(u, v) > 0; }
    // Distinct neighbors other than v itself, ascending.
    std::vector<VertexId> neighbors(VertexId v) const;

    VertexId label(VertexId v) const { return labels_[v]; }
    std::span<const VertexId> labels() const { return labels_; }
    void set_label(VertexId v, VertexId label) { labels_[v] = label; }

    // Connected component index per vertex, numbered in order of smallest member.
    std::vector<std::uint32_t> component_ids() const;
    std::size_t num_components() const;

    // Subgraph induced on `keep` (ascending ids), compacted; labels are inherited.
    MultiGraph induced(std::span<const VertexId> keep) const;

    // Same vertex count and same edge multiset; labels and edge order ignored.
    bool same_structure(const MultiGraph &other) const;

    // Edge list sorted with u <= v inside each pair; canonical for comparisons.
    std::vector<Edge> sorted_edges() const;

   private:
    void check_vertex(VertexId v) const;

    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incidence_;
    std::vector<VertexId> labels_;
};

// |E| - |V| + #components, counting parallel edges and loops.
std::size_t feedback_edge_number(const MultiGraph &g);

}  // namespace treecut
