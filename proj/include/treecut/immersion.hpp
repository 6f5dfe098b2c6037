#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "treecut/multigraph.hpp"

namespace treecut {

// Removes one copy of the edge uv (the lowest edge id among parallel copies).
struct DeleteEdge {
    VertexId u;
    VertexId v;
};

struct DeleteVertex {
    VertexId v;
};

// Replaces one copy each of xy and yz by the edge xz.
struct Lift {
    VertexId x;
    VertexId y;
    VertexId z;
};

using ImmersionOp = std::variant<DeleteEdge, DeleteVertex, Lift>;

enum class LiftMode {
    simple,    // add xz only if no xz edge remains (weak immersion)
    parallel,  // always add a new xz copy
};

struct ImmersionOptions {
    LiftMode lift = LiftMode::simple;
    // Reject deletion of a vertex that still has incident edges.
    bool strict_vertex_deletion = false;
};

/// Applies a single immersion operation and returns the new graph. Vertex
/// deletion compacts ids (labels follow the surviving vertices); the other
/// operations keep the vertex set. Throws precondition_error when the op
/// references missing vertices or edges.
MultiGraph apply_immersion(const MultiGraph &g, const ImmersionOp &op, ImmersionOptions options = {});

std::string describe(const ImmersionOp &op);

/// The endpoint slots of v used by edge sums: the far endpoint of every
/// non-loop edge incident to v, in incidence order.
std::vector<VertexId> edge_sum_slots(const MultiGraph &g, VertexId v);

/// k-edge sum of g1 and g2 at v1 and v2. `slot_map[i] = j` joins the far end of
/// slot i at v1 to the far end of slot j at v2. Vertices of g1 - v1 come first
/// (in order), followed by those of g2 - v2.
///
/// Throws precondition_error on a degree mismatch, a self-loop at v1 or v2, or
/// a slot_map that is not a permutation.
MultiGraph edge_sum(const MultiGraph &g1, VertexId v1, const MultiGraph &g2, VertexId v2,
                    std::span<const std::size_t> slot_map);

}  // namespace treecut
