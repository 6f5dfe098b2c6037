#pragma once

#include "treecut/decomposition.hpp"
#include "treecut/multigraph.hpp"
#include "treecut/witness.hpp"

namespace treecut {

/// Reattaches violating thin nodes until the decomposition is nice.
///
/// Nodes are scanned breadth-first (ascending id within a level). The first
/// thin node t whose neighborhood meets a sibling subtree Y_b is moved below
/// the owner of one of its neighbors in Y_b: the deeper owner if the two lie on
/// one root path, otherwise the owner of the smaller neighbor. Each move pushes
/// t's subtree deeper, so the loop terminates.
///
/// A move can raise tor2 at the new parent. If the result is worse than the
/// input in width or slim width and g has at most 10 vertices, the output is
/// instead the first very nice decomposition within the input's width and
/// slim width (find_very_nice).
TreeCutDecomposition make_nice(const TreeCutDecomposition &d, const MultiGraph &g);

/// Splits decomposable nodes (closest to the root first): the subtree is
/// duplicated, bags are divided along the component of G[Y_t] containing the
/// inner endpoint of the first leaving edge, the copy hangs off the same
/// parent, and empty leaves are pruned. Throws precondition_error if d is not
/// nice.
TreeCutDecomposition split_decomposables(const TreeCutDecomposition &d, const MultiGraph &g);

// make_nice and split_decomposables until the result is very nice, with the
// same small-graph fallback as make_nice.
TreeCutDecomposition make_very_nice(const TreeCutDecomposition &d, const MultiGraph &g);

/// Decomposition over the witness forest: node v has bag {v} for graph
/// vertices and an empty bag for ghosts; node ids equal host vertex ids. The
/// tree is rooted at vertex 0; a forest gets an extra empty root whose children
/// are the smallest vertices of the components.
TreeCutDecomposition witness_to_decomposition(const SpanningWitness &w);

/// Spanning witness built from a decomposition: make it nice, give every empty
/// bag a ghost vertex, span each bag with a star at its smallest vertex, and
/// join every node to its parent by one edge (the node's unique leaving edge
/// when it has adhesion one into the parent bag, otherwise the smallest g-edge
/// between the two bags, otherwise a new ghost edge between their centers).
SpanningWitness decomposition_to_witness(const MultiGraph &g, const TreeCutDecomposition &d);

// Drops empty-bag leaves until none remain (the root is kept) and renumbers
// nodes densely, preserving order.
TreeCutDecomposition prune_empty_leaves(const TreeCutDecomposition &d);

}  // namespace treecut
