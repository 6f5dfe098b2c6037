#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "treecut/decomposition.hpp"
#include "treecut/multigraph.hpp"

namespace treecut {

/// One vertex of a torso: either a bag vertex of the node, or the
/// consolidation of one component of T - t (identified by the neighboring
/// tree node, a child or the parent).
struct TorsoVertex {
    std::optional<VertexId> bag_vertex;
    std::optional<NodeId> component;
    std::vector<VertexId> members;
};

struct Torso {
    // Bag vertices first (ascending), then child components (ascending node
    // id), then the parent-side component. Parallel edges are preserved.
    MultiGraph graph;
    std::vector<TorsoVertex> origin;
    std::size_t bag_size = 0;
};

enum class CenterLevel {
    one = 1,    // delete isolated non-X vertices
    two = 2,    // exhaustively delete non-X vertices of degree <= 1
    three = 3,  // exhaustively suppress non-X vertices of degree <= 2
};

/// Returns the level-`level` center of (h, x). Surviving vertices keep their
/// relative order and inherit h's labels; degree-2 suppression may create
/// parallel edges and self-loops. Vertices are processed in ascending id.
MultiGraph center(const MultiGraph &h, std::span<const VertexId> x, CenterLevel level);

// Number of edges (with multiplicity) between Y_t and the rest; 0 at the root.
std::size_t adhesion(const TreeCutDecomposition &d, const MultiGraph &g, NodeId t);
Torso torso(const TreeCutDecomposition &d, const MultiGraph &g, NodeId t);

struct NodeStats {
    std::size_t adhesion = 0;
    std::size_t bag_size = 0;
    std::size_t tor = 0;   // 3-center size
    std::size_t tor2 = 0;  // 2-center size
    std::size_t tor1 = 0;  // 1-center size
    bool thin = false;     // non-root with adhesion <= 2
    std::vector<NodeId> children_a;
    std::vector<NodeId> children_b;   // thin children with N(Y_b) inside the bag
    std::vector<NodeId> children_b2;  // members of children_b with adhesion exactly 2
};

NodeStats node_stats(const TreeCutDecomposition &d, const MultiGraph &g, NodeId t);

struct WidthReport {
    std::size_t width = 0;       // max over nodes of adhesion and tor
    std::size_t slim_width = 0;  // ... adhesion and tor2
    std::size_t zero_width = 0;  // ... adhesion and tor1
    std::vector<NodeStats> per_node;
};

// Throws validation_error (carrying the violation list) on invalid input.
WidthReport width_report(const TreeCutDecomposition &d, const MultiGraph &g);

// Thin nodes whose neighborhood meets a sibling subtree. Empty means nice.
std::vector<NodeId> nice_violations(const TreeCutDecomposition &d, const MultiGraph &g);
// Nodes in B of their parent with two leaving edges whose inner endpoints lie
// in different components of G[Y_t].
std::vector<NodeId> decomposable_nodes(const TreeCutDecomposition &d, const MultiGraph &g);
// Union of the two lists above, ascending.
std::vector<NodeId> very_nice_violations(const TreeCutDecomposition &d, const MultiGraph &g);

inline bool is_nice(const TreeCutDecomposition &d, const MultiGraph &g) { return nice_violations(d, g).empty(); }
inline bool is_very_nice(const TreeCutDecomposition &d, const MultiGraph &g) {
    return very_nice_violations(d, g).empty();
}

std::string width_report_to_json(const WidthReport &r);

}  // namespace treecut
