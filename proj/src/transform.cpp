#include "treecut/transform.hpp"

#include <algorithm>
#include <map>

#include "treecut/error.hpp"
#include "treecut/oracle.hpp"
#include "treecut/widths.hpp"

namespace treecut {

namespace {

void require_valid(const TreeCutDecomposition &d, const MultiGraph &g) {
    auto violations = validate(d, g);
    if (!violations.empty()) throw validation_error("invalid tree-cut decomposition", std::move(violations));
}

// Edges with exactly one endpoint in Y_t, as (inner, outer) pairs in edge order.
std::vector<std::pair<VertexId, VertexId>> leaving_edges(const DecompositionIndex &idx, const MultiGraph &g,
                                                         NodeId t) {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (const Edge &e : g.edges()) {
        const bool in_u = idx.in_subtree(t, e.u), in_v = idx.in_subtree(t, e.v);
        if (in_u && !in_v) out.emplace_back(e.u, e.v);
        if (in_v && !in_u) out.emplace_back(e.v, e.u);
    }
    return out;
}

std::vector<NodeId> breadth_first(const DecompositionIndex &idx) {
    std::vector<NodeId> order(idx.preorder().begin(), idx.preorder().end());
    std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        return idx.depth(a) != idx.depth(b) ? idx.depth(a) < idx.depth(b) : a < b;
    });
    return order;
}

}  // namespace

TreeCutDecomposition prune_empty_leaves(const TreeCutDecomposition &d) {
    const std::size_t m = d.num_nodes();
    std::vector<bool> removed(m, false);
    std::vector<std::size_t> live_children(m, 0);
    for (NodeId t = 0; t < m; ++t)
        if (d.parent[t]) ++live_children[*d.parent[t]];
    std::vector<NodeId> queue;
    for (NodeId t = 0; t < m; ++t)
        if (t != d.root && d.bags[t].empty() && live_children[t] == 0) queue.push_back(t);
    while (!queue.empty()) {
        const NodeId t = queue.back();
        queue.pop_back();
        removed[t] = true;
        const NodeId p = *d.parent[t];
        if (--live_children[p] == 0 && p != d.root && d.bags[p].empty()) queue.push_back(p);
    }

    std::vector<NodeId> renumber(m, 0);
    NodeId next = 0;
    for (NodeId t = 0; t < m; ++t)
        if (!removed[t]) renumber[t] = next++;
    TreeCutDecomposition out;
    out.root = renumber[d.root];
    for (NodeId t = 0; t < m; ++t) {
        if (removed[t]) continue;
        std::optional<NodeId> p;
        if (d.parent[t]) p = renumber[*d.parent[t]];
        out.add_node(p, d.bags[t]);
    }
    return out;
}

namespace {

TreeCutDecomposition reattach_thin_nodes(const TreeCutDecomposition &input, const MultiGraph &g) {
    TreeCutDecomposition d = normalized(input);
    // Every move deepens a subtree, so the sum of node depths (< m^2) bounds the loop.
    const std::size_t guard = d.num_nodes() * d.num_nodes() + 1;
    for (std::size_t round = 0; round <= guard; ++round) {
        const DecompositionIndex idx(d, g.num_vertices());
        std::optional<std::pair<NodeId, NodeId>> move;  // (node, new parent)
        for (NodeId t : breadth_first(idx)) {
            const auto p = idx.parent(t);
            if (!p) continue;
            const auto leaving = leaving_edges(idx, g, t);
            if (leaving.size() > 2) continue;
            std::vector<VertexId> nbrs;
            for (const auto &[inner, outer] : leaving) nbrs.push_back(outer);
            std::sort(nbrs.begin(), nbrs.end());
            nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
            for (NodeId b : idx.children(*p)) {
                if (b == t) continue;
                std::vector<VertexId> hit;
                for (VertexId v : nbrs)
                    if (idx.in_subtree(b, v)) hit.push_back(v);
                if (hit.empty()) continue;
                NodeId target = idx.owner(hit[0]);
                if (hit.size() == 2) {
                    const NodeId other = idx.owner(hit[1]);
                    if (idx.is_ancestor(target, other)) target = other;
                }
                move = {t, target};
                break;
            }
            if (move) break;
        }
        if (!move) return d;
        d.parent[move->first] = move->second;
    }
    throw std::logic_error("make_nice did not converge");
}

// Graphs this small get an exact very nice search when reattachment made the
// width or the slim width worse (a reattached thin node can subdivide a torso
// edge at its new parent, which the 2-center keeps).
constexpr std::size_t repair_limit = 10;

TreeCutDecomposition repair_if_worse(const TreeCutDecomposition &before, TreeCutDecomposition after,
                                     const MultiGraph &g) {
    const WidthReport old_report = width_report(before, g);
    const WidthReport new_report = width_report(after, g);
    if (new_report.width <= old_report.width && new_report.slim_width <= old_report.slim_width) return after;
    if (g.num_vertices() > repair_limit) return after;
    auto found = find_very_nice(g, old_report.width, old_report.slim_width, repair_limit);
    return found ? std::move(*found) : std::move(after);
}

}  // namespace

TreeCutDecomposition make_nice(const TreeCutDecomposition &d, const MultiGraph &g) {
    require_valid(d, g);
    return repair_if_worse(d, reattach_thin_nodes(d, g), g);
}

TreeCutDecomposition split_decomposables(const TreeCutDecomposition &input, const MultiGraph &g) {
    require_valid(input, g);
    if (!is_nice(input, g)) throw precondition_error("split_decomposables needs a nice decomposition");
    TreeCutDecomposition d = normalized(input);
    const std::size_t guard = 4 * d.num_nodes() * d.num_nodes() + g.num_vertices() + 4;
    for (std::size_t round = 0; round <= guard; ++round) {
        const auto decomposable = decomposable_nodes(d, g);
        if (decomposable.empty()) return d;
        const DecompositionIndex idx(d, g.num_vertices());
        NodeId t = decomposable.front();
        for (NodeId c : decomposable)
            if (idx.depth(c) < idx.depth(t)) t = c;

        // Component of G[Y_t] containing the inner endpoint of the first leaving edge.
        const VertexId start = leaving_edges(idx, g, t).front().first;
        std::vector<bool> in_g1(g.num_vertices(), false);
        std::vector<VertexId> stack{start};
        in_g1[start] = true;
        while (!stack.empty()) {
            const VertexId x = stack.back();
            stack.pop_back();
            for (EdgeId e : g.incident(x)) {
                const VertexId y = g.edge(e).other(x);
                if (!in_g1[y] && idx.in_subtree(t, y)) {
                    in_g1[y] = true;
                    stack.push_back(y);
                }
            }
        }

        // Copy the subtree in pre-order so every copied parent exists first.
        std::map<NodeId, NodeId> copy_of;
        for (NodeId s : idx.preorder()) {
            if (!idx.is_ancestor(t, s)) continue;
            std::vector<VertexId> keep, moved;
            for (VertexId v : d.bags[s]) (in_g1[v] ? keep : moved).push_back(v);
            d.bags[s] = std::move(keep);
            const NodeId parent_copy = s == t ? *idx.parent(t) : copy_of.at(*idx.parent(s));
            copy_of[s] = d.add_node(parent_copy, std::move(moved));
        }
        d = prune_empty_leaves(d);
    }
    throw std::logic_error("split_decomposables did not converge");
}

TreeCutDecomposition make_very_nice(const TreeCutDecomposition &d, const MultiGraph &g) {
    require_valid(d, g);
    TreeCutDecomposition out = reattach_thin_nodes(d, g);
    for (std::size_t round = 0; round <= g.num_vertices() + d.num_nodes() + 4; ++round) {
        if (is_very_nice(out, g)) return repair_if_worse(d, std::move(out), g);
        out = reattach_thin_nodes(split_decomposables(out, g), g);
    }
    throw std::logic_error("make_very_nice did not converge");
}

TreeCutDecomposition witness_to_decomposition(const SpanningWitness &w) {
    auto violations = validate(w);
    if (!violations.empty()) throw validation_error("invalid spanning witness", std::move(violations));
    const MultiGraph &h = w.host;
    const std::size_t n = h.num_vertices();
    if (n == 0) return TreeCutDecomposition::single_node(0);

    std::vector<std::vector<VertexId>> adj(n);
    for (EdgeId e : w.forest) {
        adj[h.edge(e).u].push_back(h.edge(e).v);
        adj[h.edge(e).v].push_back(h.edge(e).u);
    }
    TreeCutDecomposition d;
    d.parent.assign(n, std::nullopt);
    d.bags.assign(n, {});
    for (VertexId v = 0; v < w.base_vertices; ++v) d.bags[v] = {v};

    std::vector<VertexId> roots;
    std::vector<bool> seen(n, false);
    for (VertexId s = 0; s < n; ++s) {
        if (seen[s]) continue;
        roots.push_back(s);
        seen[s] = true;
        std::vector<VertexId> queue{s};
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (VertexId y : adj[queue[i]])
                if (!seen[y]) {
                    seen[y] = true;
                    d.parent[y] = queue[i];
                    queue.push_back(y);
                }
    }
    d.root = 0;
    if (roots.size() > 1) {
        const NodeId top = d.add_node(std::nullopt, {});
        for (VertexId r : roots) d.parent[r] = top;
        d.root = top;
    }
    return d;
}

SpanningWitness decomposition_to_witness(const MultiGraph &g, const TreeCutDecomposition &input) {
    const TreeCutDecomposition d = make_nice(input, g);
    const DecompositionIndex idx(d, g.num_vertices());
    const std::size_t n = g.num_vertices();

    SpanningWitness w;
    w.base_vertices = n;
    w.host = MultiGraph(n, g.edges());
    w.ghost_edge.assign(g.num_edges(), false);

    // Bag representatives, with a ghost vertex standing in for every empty bag.
    std::vector<std::vector<VertexId>> rep(d.num_nodes());
    for (NodeId t = 0; t < d.num_nodes(); ++t) {
        rep[t] = d.bags[t];
        if (rep[t].empty()) rep[t].push_back(w.host.add_vertex());
    }
    auto add_ghost_edge = [&](VertexId a, VertexId b) {
        const EdgeId e = w.host.add_edge(a, b);
        w.ghost_edge.push_back(true);
        return e;
    };
    std::vector<bool> used(g.num_edges(), false);

    for (NodeId t = 0; t < d.num_nodes(); ++t) {
        const VertexId c = rep[t].front();
        for (std::size_t i = 1; i < rep[t].size(); ++i) {
            const VertexId x = rep[t][i];
            std::optional<EdgeId> pick;
            for (EdgeId e : g.incident(c))
                if (!used[e] && g.edge(e).other(c) == x && (!pick || e < *pick)) pick = e;
            if (!pick) pick = add_ghost_edge(c, x);
            else used[*pick] = true;
            w.forest.push_back(*pick);
        }
    }

    for (NodeId t = 0; t < d.num_nodes(); ++t) {
        const auto p = idx.parent(t);
        if (!p) continue;
        std::vector<EdgeId> leaving;
        for (EdgeId e = 0; e < g.num_edges(); ++e)
            if (idx.in_subtree(t, g.edge(e).u) != idx.in_subtree(t, g.edge(e).v)) leaving.push_back(e);
        if (leaving.size() == 1) {
            const Edge &e = g.edge(leaving.front());
            const VertexId outer = idx.in_subtree(t, e.u) ? e.v : e.u;
            if (idx.in_bag(*p, outer)) {
                used[leaving.front()] = true;
                w.forest.push_back(leaving.front());
                continue;
            }
        }
        // Smallest g-edge between the two bags, compared by sorted endpoints.
        std::optional<EdgeId> pick;
        auto key = [&](EdgeId e) {
            const Edge &ed = g.edge(e);
            return std::make_tuple(std::min(ed.u, ed.v), std::max(ed.u, ed.v), e);
        };
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            const Edge &ed = g.edge(e);
            const bool between = (idx.in_bag(t, ed.u) && idx.in_bag(*p, ed.v)) ||
                                 (idx.in_bag(t, ed.v) && idx.in_bag(*p, ed.u));
            if (between && !used[e] && (!pick || key(e) < key(*pick))) pick = e;
        }
        if (!pick) pick = add_ghost_edge(rep[t].front(), rep[*p].front());
        else used[*pick] = true;
        w.forest.push_back(*pick);
    }
    std::sort(w.forest.begin(), w.forest.end());
    return w;
}

}  // namespace treecut
