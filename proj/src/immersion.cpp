#include "treecut/immersion.hpp"

#include <algorithm>
#include <optional>

#include "treecut/error.hpp"

namespace treecut {

namespace {

std::optional<EdgeId> find_edge(const MultiGraph &g, VertexId u, VertexId v) {
    for (EdgeId e : g.incident(u)) {
        const Edge &ed = g.edge(e);
        if (ed.other(u) == v && (u != v || ed.is_loop())) return e;
    }
    return std::nullopt;
}

void require_vertex(const MultiGraph &g, VertexId v) {
    if (v >= g.num_vertices()) throw precondition_error("vertex " + std::to_string(v) + " does not exist");
}

MultiGraph without_edges(const MultiGraph &g, std::span<const EdgeId> drop) {
    MultiGraph out(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v) out.set_label(v, g.label(v));
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (std::find(drop.begin(), drop.end(), e) == drop.end()) out.add_edge(g.edge(e).u, g.edge(e).v);
    return out;
}

struct Applier {
    const MultiGraph &g;
    ImmersionOptions options;

    MultiGraph operator()(const DeleteEdge &op) const {
        require_vertex(g, op.u);
        require_vertex(g, op.v);
        const auto e = find_edge(g, op.u, op.v);
        if (!e)
            throw precondition_error("no edge " + std::to_string(op.u) + "-" + std::to_string(op.v));
        const EdgeId drop[] = {*e};
        return without_edges(g, drop);
    }

    MultiGraph operator()(const DeleteVertex &op) const {
        require_vertex(g, op.v);
        if (options.strict_vertex_deletion && !g.incident(op.v).empty())
            throw precondition_error("vertex " + std::to_string(op.v) + " is not isolated");
        std::vector<VertexId> keep;
        for (VertexId v = 0; v < g.num_vertices(); ++v)
            if (v != op.v) keep.push_back(v);
        return g.induced(keep);
    }

    MultiGraph operator()(const Lift &op) const {
        require_vertex(g, op.x);
        require_vertex(g, op.y);
        require_vertex(g, op.z);
        if (op.x == op.y || op.y == op.z || op.x == op.z)
            throw precondition_error("lift needs three distinct vertices");
        const auto xy = find_edge(g, op.x, op.y);
        const auto yz = find_edge(g, op.y, op.z);
        if (!xy || !yz) throw precondition_error("lift needs edges " + describe(ImmersionOp{op}));
        const EdgeId drop[] = {*xy, *yz};
        MultiGraph out = without_edges(g, drop);
        if (options.lift == LiftMode::parallel || !out.has_edge(op.x, op.z)) out.add_edge(op.x, op.z);
        return out;
    }
};

}  // namespace

MultiGraph apply_immersion(const MultiGraph &g, const ImmersionOp &op, ImmersionOptions options) {
    return std::visit(Applier{g, options}, op);
}

std::string describe(const ImmersionOp &op) {
    struct Describer {
        std::string operator()(const DeleteEdge &o) const {
            return "delete-edge(" + std::to_string(o.u) + "," + std::to_string(o.v) + ")";
        }
        std::string operator()(const DeleteVertex &o) const { return "delete-vertex(" + std::to_string(o.v) + ")"; }
        std::string operator()(const Lift &o) const {
            return "lift(" + std::to_string(o.x) + "," + std::to_string(o.y) + "," + std::to_string(o.z) + ")";
        }
    };
    return std::visit(Describer{}, op);
}

std::vector<VertexId> edge_sum_slots(const MultiGraph &g, VertexId v) {
    require_vertex(g, v);
    std::vector<VertexId> slots;
    for (EdgeId e : g.incident(v))
        if (!g.edge(e).is_loop()) slots.push_back(g.edge(e).other(v));
    return slots;
}

MultiGraph edge_sum(const MultiGraph &g1, VertexId v1, const MultiGraph &g2, VertexId v2,
                    std::span<const std::size_t> slot_map) {
    const auto slots1 = edge_sum_slots(g1, v1);
    const auto slots2 = edge_sum_slots(g2, v2);
    if (g1.degree(v1) != slots1.size() || g2.degree(v2) != slots2.size())
        throw precondition_error("edge sum vertices must not carry self-loops");
    if (slots1.size() != slots2.size())
        throw precondition_error("edge sum degree mismatch: " + std::to_string(slots1.size()) + " vs " +
                                 std::to_string(slots2.size()));
    if (slot_map.size() != slots1.size()) throw precondition_error("edge sum bijection has wrong size");
    std::vector<bool> hit(slots2.size(), false);
    for (std::size_t j : slot_map) {
        if (j >= slots2.size() || hit[j]) throw precondition_error("edge sum map is not a bijection");
        hit[j] = true;
    }

    const auto n1 = static_cast<VertexId>(g1.num_vertices());
    const auto n2 = static_cast<VertexId>(g2.num_vertices());
    auto map1 = [&](VertexId x) { return x < v1 ? x : x - 1; };
    auto map2 = [&](VertexId x) { return (n1 - 1) + (x < v2 ? x : x - 1); };

    MultiGraph out(n1 + n2 - 2);
    for (const Edge &e : g1.edges())
        if (e.u != v1 && e.v != v1) out.add_edge(map1(e.u), map1(e.v));
    for (const Edge &e : g2.edges())
        if (e.u != v2 && e.v != v2) out.add_edge(map2(e.u), map2(e.v));
    for (std::size_t i = 0; i < slots1.size(); ++i) out.add_edge(map1(slots1[i]), map2(slots2[slot_map[i]]));
    return out;
}

}  // namespace treecut
