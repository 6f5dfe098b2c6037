#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "treecut/multigraph.hpp"

namespace treecut {

using NodeId = std::uint32_t;

/// Rooted tree whose nodes carry bags; the bags form a near-partition of the
/// graph's vertex set (empty bags allowed). Node ids are dense.
struct TreeCutDecomposition {
    NodeId root = 0;
    std::vector<std::optional<NodeId>> parent;
    std::vector<std::vector<VertexId>> bags;

    std::size_t num_nodes() const { return bags.size(); }
    NodeId add_node(std::optional<NodeId> parent_node, std::vector<VertexId> bag);

    // Every vertex of an n-vertex graph in one root bag.
    static TreeCutDecomposition single_node(std::size_t num_vertices);
};

// Lists every violated clause of the definition; empty means valid.
std::vector<std::string> validate(const TreeCutDecomposition &d, const MultiGraph &g);

/// Read-only navigation over a decomposition that has passed validate().
///
/// Subtree membership of vertices (v in Y_t) is answered in O(1) from
/// pre-order intervals of the node that owns v.
class DecompositionIndex {
   public:
    DecompositionIndex(const TreeCutDecomposition &d, std::size_t num_vertices);

    const TreeCutDecomposition &decomposition() const { return *d_; }
    std::span<const NodeId> children(NodeId t) const { return children_[t]; }
    std::span<const NodeId> preorder() const { return preorder_; }
    std::optional<NodeId> parent(NodeId t) const { return d_->parent[t]; }
    NodeId root() const { return d_->root; }
    NodeId owner(VertexId v) const { return owner_[v]; }
    std::size_t depth(NodeId t) const { return depth_[t]; }

    // a == b counts as an ancestor.
    bool is_ancestor(NodeId a, NodeId b) const { return enter_[a] <= enter_[b] && enter_[b] < leave_[a]; }
    bool in_subtree(NodeId t, VertexId v) const { return is_ancestor(t, owner_[v]); }
    bool in_bag(NodeId t, VertexId v) const { return owner_[v] == t; }
    // Y_t in ascending vertex order.
    std::vector<VertexId> subtree_vertices(NodeId t) const;

   private:
    const TreeCutDecomposition *d_;
    std::vector<std::vector<NodeId>> children_;
    std::vector<NodeId> preorder_;
    std::vector<NodeId> owner_;
    std::vector<std::size_t> depth_;
    std::vector<std::size_t> enter_;
    std::vector<std::size_t> leave_;
};

// {"root": int, "nodes": [{"id": int, "parent": int|null, "bag": [int, ...]}]}
// Nodes sorted by id, bags ascending. Parsing remaps ids to the dense range in
// ascending id order and throws validation_error on malformed input.
std::string decomposition_to_json(const TreeCutDecomposition &d);
TreeCutDecomposition decomposition_from_json(std::string_view text);

// Copy with bags sorted, dropping nothing; used before serialization/compare.
TreeCutDecomposition normalized(TreeCutDecomposition d);

}  // namespace treecut
