#include "treecut/widths.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "treecut/error.hpp"

namespace treecut {

MultiGraph center(const MultiGraph &h, std::span<const VertexId> x, CenterLevel level) {
    const std::size_t n = h.num_vertices();
    std::vector<bool> keep_always(n, false);
    for (VertexId v : x) {
        if (v >= n) throw precondition_error("center: X contains unknown vertex " + std::to_string(v));
        keep_always[v] = true;
    }

    std::vector<std::map<VertexId, std::size_t>> adj(n);
    std::vector<std::size_t> loops(n, 0);
    std::vector<std::size_t> deg(n, 0);
    for (const Edge &e : h.edges()) {
        if (e.is_loop()) {
            ++loops[e.u];
            deg[e.u] += 2;
        } else {
            ++adj[e.u][e.v];
            ++adj[e.v][e.u];
            ++deg[e.u];
            ++deg[e.v];
        }
    }

    const std::size_t threshold = level == CenterLevel::one ? 0 : level == CenterLevel::two ? 1 : 2;
    std::vector<bool> alive(n, true);
    std::set<VertexId> work;
    for (VertexId v = 0; v < n; ++v)
        if (!keep_always[v] && deg[v] <= threshold) work.insert(v);

    auto requeue = [&](VertexId v) {
        if (alive[v] && !keep_always[v] && deg[v] <= threshold) work.insert(v);
    };

    while (!work.empty()) {
        const VertexId a = *work.begin();
        work.erase(work.begin());
        if (!alive[a] || deg[a] > threshold) continue;
        alive[a] = false;
        if (deg[a] == 1) {
            const VertexId u = adj[a].begin()->first;
            adj[u].erase(a);
            --deg[u];
            requeue(u);
        } else if (deg[a] == 2 && loops[a] == 0) {
            if (adj[a].size() == 1) {
                const VertexId u = adj[a].begin()->first;
                adj[u].erase(a);
                ++loops[u];
            } else {
                const VertexId u = adj[a].begin()->first;
                const VertexId w = std::next(adj[a].begin())->first;
                adj[u].erase(a);
                adj[w].erase(a);
                ++adj[u][w];
                ++adj[w][u];
            }
        }
        adj[a].clear();
        loops[a] = 0;
        deg[a] = 0;
    }

    std::vector<VertexId> remap(n, 0);
    MultiGraph out;
    for (VertexId v = 0; v < n; ++v)
        if (alive[v]) remap[v] = out.add_vertex(h.label(v));
    for (VertexId v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        for (std::size_t i = 0; i < loops[v]; ++i) out.add_edge(remap[v], remap[v]);
        for (const auto &[w, count] : adj[v])
            if (v < w)
                for (std::size_t i = 0; i < count; ++i) out.add_edge(remap[v], remap[w]);
    }
    return out;
}

namespace {

void require_valid(const TreeCutDecomposition &d, const MultiGraph &g) {
    auto violations = validate(d, g);
    if (!violations.empty()) throw validation_error("invalid tree-cut decomposition", std::move(violations));
}

void require_node(const TreeCutDecomposition &d, NodeId t) {
    if (t >= d.num_nodes()) throw precondition_error("unknown node id " + std::to_string(t));
}

// Adhesion of every node in one pass: an edge crosses exactly the tree edges on
// the path between the owners of its endpoints.
std::vector<std::size_t> all_adhesions(const DecompositionIndex &idx, const MultiGraph &g) {
    std::vector<std::size_t> adh(idx.decomposition().num_nodes(), 0);
    for (const Edge &e : g.edges()) {
        NodeId a = idx.owner(e.u), b = idx.owner(e.v);
        while (a != b) {
            if (idx.depth(a) < idx.depth(b)) std::swap(a, b);
            ++adh[a];
            a = *idx.parent(a);
        }
    }
    return adh;
}

std::vector<VertexId> neighborhood(const DecompositionIndex &idx, const MultiGraph &g, NodeId t) {
    std::vector<VertexId> out;
    for (const Edge &e : g.edges()) {
        const bool in_u = idx.in_subtree(t, e.u), in_v = idx.in_subtree(t, e.v);
        if (in_u && !in_v) out.push_back(e.v);
        if (in_v && !in_u) out.push_back(e.u);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Torso build_torso(const DecompositionIndex &idx, const MultiGraph &g, NodeId t) {
    const auto &d = idx.decomposition();
    Torso out;
    std::vector<VertexId> bag = d.bags[t];
    std::sort(bag.begin(), bag.end());
    out.bag_size = bag.size();

    std::vector<VertexId> where(g.num_vertices(), 0);
    for (VertexId v : bag) {
        where[v] = out.graph.add_vertex(v);
        out.origin.push_back({v, std::nullopt, {v}});
    }
    const auto children = idx.children(t);
    std::vector<VertexId> child_vertex;
    for (NodeId c : children) {
        child_vertex.push_back(out.graph.add_vertex());
        out.origin.push_back({std::nullopt, c, {}});
    }
    std::optional<VertexId> parent_vertex;
    if (idx.parent(t)) {
        parent_vertex = out.graph.add_vertex();
        out.origin.push_back({std::nullopt, *idx.parent(t), {}});
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (idx.in_bag(t, v)) continue;
        VertexId target;
        if (idx.in_subtree(t, v)) {
            std::size_t i = 0;
            while (!idx.is_ancestor(children[i], idx.owner(v))) ++i;
            target = child_vertex[i];
        } else {
            target = *parent_vertex;
        }
        where[v] = target;
        out.origin[target].members.push_back(v);
    }
    for (VertexId v = 0; v < out.graph.num_vertices(); ++v)
        if (!out.origin[v].bag_vertex) out.graph.set_label(v, static_cast<VertexId>(g.num_vertices() + v));

    for (const Edge &e : g.edges()) {
        const VertexId a = where[e.u], b = where[e.v];
        if (a == b && !out.origin[a].bag_vertex) continue;
        out.graph.add_edge(a, b);
    }
    return out;
}

NodeStats stats_at(const DecompositionIndex &idx, const MultiGraph &g, std::span<const std::size_t> adh,
                   NodeId t) {
    NodeStats s;
    s.adhesion = adh[t];
    s.bag_size = idx.decomposition().bags[t].size();
    s.thin = idx.parent(t).has_value() && adh[t] <= 2;

    const Torso h = build_torso(idx, g, t);
    std::vector<VertexId> x(h.bag_size);
    for (VertexId i = 0; i < h.bag_size; ++i) x[i] = i;
    s.tor = center(h.graph, x, CenterLevel::three).num_vertices();
    s.tor2 = center(h.graph, x, CenterLevel::two).num_vertices();
    s.tor1 = center(h.graph, x, CenterLevel::one).num_vertices();

    for (NodeId b : idx.children(t)) {
        bool simple = adh[b] <= 2;
        if (simple)
            for (VertexId v : neighborhood(idx, g, b))
                if (!idx.in_bag(t, v)) simple = false;
        if (simple) {
            s.children_b.push_back(b);
            if (adh[b] == 2) s.children_b2.push_back(b);
        } else {
            s.children_a.push_back(b);
        }
    }
    return s;
}

// Components of G[Y_t] hit by the inner endpoints of the edges leaving Y_t.
bool splits_into_components(const DecompositionIndex &idx, const MultiGraph &g, NodeId t) {
    std::vector<VertexId> inner;
    for (const Edge &e : g.edges()) {
        const bool in_u = idx.in_subtree(t, e.u), in_v = idx.in_subtree(t, e.v);
        if (in_u != in_v) inner.push_back(in_u ? e.u : e.v);
    }
    if (inner.size() != 2) return false;
    // BFS inside Y_t from the first inner endpoint.
    std::vector<bool> seen(g.num_vertices(), false);
    std::vector<VertexId> stack{inner[0]};
    seen[inner[0]] = true;
    while (!stack.empty()) {
        const VertexId x = stack.back();
        stack.pop_back();
        for (EdgeId e : g.incident(x)) {
            const VertexId y = g.edge(e).other(x);
            if (!seen[y] && idx.in_subtree(t, y)) {
                seen[y] = true;
                stack.push_back(y);
            }
        }
    }
    return !seen[inner[1]];
}

}  // namespace

std::size_t adhesion(const TreeCutDecomposition &d, const MultiGraph &g, NodeId t) {
    require_node(d, t);
    require_valid(d, g);
    const DecompositionIndex idx(d, g.num_vertices());
    return all_adhesions(idx, g)[t];
}

Torso torso(const TreeCutDecomposition &d, const MultiGraph &g, NodeId t) {
    require_node(d, t);
    require_valid(d, g);
    const DecompositionIndex idx(d, g.num_vertices());
    return build_torso(idx, g, t);
}

NodeStats node_stats(const TreeCutDecomposition &d, const MultiGraph &g, NodeId t) {
    require_node(d, t);
    require_valid(d, g);
    const DecompositionIndex idx(d, g.num_vertices());
    const auto adh = all_adhesions(idx, g);
    return stats_at(idx, g, adh, t);
}

WidthReport width_report(const TreeCutDecomposition &d, const MultiGraph &g) {
    require_valid(d, g);
    const DecompositionIndex idx(d, g.num_vertices());
    const auto adh = all_adhesions(idx, g);
    WidthReport r;
    for (NodeId t = 0; t < d.num_nodes(); ++t) {
        NodeStats s = stats_at(idx, g, adh, t);
        r.width = std::max({r.width, s.adhesion, s.tor});
        r.slim_width = std::max({r.slim_width, s.adhesion, s.tor2});
        r.zero_width = std::max({r.zero_width, s.adhesion, s.tor1});
        r.per_node.push_back(std::move(s));
    }
    return r;
}

std::vector<NodeId> nice_violations(const TreeCutDecomposition &d, const MultiGraph &g) {
    require_valid(d, g);
    const DecompositionIndex idx(d, g.num_vertices());
    const auto adh = all_adhesions(idx, g);
    std::vector<NodeId> out;
    for (NodeId t = 0; t < d.num_nodes(); ++t) {
        const auto p = idx.parent(t);
        if (!p || adh[t] > 2) continue;
        const auto nbrs = neighborhood(idx, g, t);
        bool bad = false;
        for (NodeId b : idx.children(*p)) {
            if (b == t) continue;
            for (VertexId v : nbrs)
                if (idx.in_subtree(b, v)) bad = true;
        }
        if (bad) out.push_back(t);
    }
    return out;
}

std::vector<NodeId> decomposable_nodes(const TreeCutDecomposition &d, const MultiGraph &g) {
    require_valid(d, g);
    const DecompositionIndex idx(d, g.num_vertices());
    const auto adh = all_adhesions(idx, g);
    std::vector<NodeId> out;
    for (NodeId t = 0; t < d.num_nodes(); ++t) {
        const auto p = idx.parent(t);
        if (!p || adh[t] != 2) continue;
        bool inside_parent_bag = true;
        for (VertexId v : neighborhood(idx, g, t))
            if (!idx.in_bag(*p, v)) inside_parent_bag = false;
        if (inside_parent_bag && splits_into_components(idx, g, t)) out.push_back(t);
    }
    return out;
}

std::vector<NodeId> very_nice_violations(const TreeCutDecomposition &d, const MultiGraph &g) {
    auto out = nice_violations(d, g);
    const auto extra = decomposable_nodes(d, g);
    out.insert(out.end(), extra.begin(), extra.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string width_report_to_json(const WidthReport &r) {
    nlohmann::ordered_json j;
    j["width"] = r.width;
    j["slim_width"] = r.slim_width;
    j["zero_width"] = r.zero_width;
    auto nodes = nlohmann::ordered_json::array();
    for (std::size_t t = 0; t < r.per_node.size(); ++t) {
        const NodeStats &s = r.per_node[t];
        nlohmann::ordered_json n;
        n["id"] = t;
        n["adhesion"] = s.adhesion;
        n["tor"] = s.tor;
        n["tor2"] = s.tor2;
        n["tor1"] = s.tor1;
        n["thin"] = s.thin;
        n["A"] = s.children_a;
        n["B"] = s.children_b;
        n["B2"] = s.children_b2;
        nodes.push_back(std::move(n));
    }
    j["per_node"] = std::move(nodes);
    return j.dump() + "\n";
}

}  // namespace treecut
