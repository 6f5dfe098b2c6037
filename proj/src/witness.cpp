#include "treecut/witness.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "treecut/error.hpp"

namespace treecut {

std::size_t SpanningWitness::num_ghost_edges() const {
    return static_cast<std::size_t>(std::count(ghost_edge.begin(), ghost_edge.end(), true));
}

MultiGraph SpanningWitness::base() const {
    MultiGraph g(base_vertices);
    for (EdgeId e = 0; e < host.num_edges(); ++e)
        if (!ghost_edge[e]) g.add_edge(host.edge(e).u, host.edge(e).v);
    return g;
}

SpanningWitness SpanningWitness::of_graph(const MultiGraph &g, std::vector<EdgeId> forest) {
    SpanningWitness w;
    w.host = MultiGraph(g.num_vertices(), g.edges());
    w.base_vertices = g.num_vertices();
    w.ghost_edge.assign(g.num_edges(), false);
    std::sort(forest.begin(), forest.end());
    w.forest = std::move(forest);
    return w;
}

bool is_maximal_spanning_forest(const MultiGraph &h, std::span<const EdgeId> forest) {
    std::vector<VertexId> up(h.num_vertices());
    std::iota(up.begin(), up.end(), VertexId{0});
    auto find = [&](VertexId x) {
        while (up[x] != x) x = up[x] = up[up[x]];
        return x;
    };
    std::vector<bool> used(h.num_edges(), false);
    for (EdgeId e : forest) {
        if (e >= h.num_edges() || used[e]) return false;
        used[e] = true;
        const VertexId a = find(h.edge(e).u), b = find(h.edge(e).v);
        if (a == b) return false;
        up[a] = b;
    }
    return forest.size() + h.num_components() == h.num_vertices();
}

std::vector<EdgeId> bfs_spanning_forest(const MultiGraph &h) {
    std::vector<EdgeId> out;
    std::vector<bool> seen(h.num_vertices(), false);
    for (VertexId s = 0; s < h.num_vertices(); ++s) {
        if (seen[s]) continue;
        seen[s] = true;
        std::vector<VertexId> queue{s};
        for (std::size_t i = 0; i < queue.size(); ++i) {
            const VertexId x = queue[i];
            for (EdgeId e : h.incident(x)) {
                const VertexId y = h.edge(e).other(x);
                if (!seen[y]) {
                    seen[y] = true;
                    out.push_back(e);
                    queue.push_back(y);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> validate(const SpanningWitness &w, const MultiGraph *g) {
    std::vector<std::string> out;
    if (w.ghost_edge.size() != w.host.num_edges()) {
        out.push_back("ghost marker table does not match host edge count");
        return out;
    }
    if (w.base_vertices > w.host.num_vertices()) {
        out.push_back("more graph vertices than host vertices");
        return out;
    }
    for (EdgeId e = 0; e < w.host.num_edges(); ++e) {
        const Edge &ed = w.host.edge(e);
        if (!w.ghost_edge[e] && (w.is_ghost_vertex(ed.u) || w.is_ghost_vertex(ed.v)))
            out.push_back("edge " + std::to_string(e) + " touches a ghost vertex but is not marked ghost");
    }
    if (!is_maximal_spanning_forest(w.host, w.forest)) out.push_back("tree edges are not a maximal spanning forest");
    if (g && !w.base().same_structure(*g)) out.push_back("witness is not built over the given graph");
    return out;
}

std::string witness_to_json(const SpanningWitness &w) {
    nlohmann::ordered_json j;
    std::vector<VertexId> graph_vertices(w.base_vertices), ghosts;
    std::iota(graph_vertices.begin(), graph_vertices.end(), VertexId{0});
    for (auto v = static_cast<VertexId>(w.base_vertices); v < w.host.num_vertices(); ++v) ghosts.push_back(v);
    j["graph_vertices"] = graph_vertices;
    j["ghost_vertices"] = ghosts;
    auto edges = nlohmann::ordered_json::array();
    for (EdgeId e = 0; e < w.host.num_edges(); ++e) {
        nlohmann::ordered_json ed;
        ed["u"] = w.host.edge(e).u;
        ed["v"] = w.host.edge(e).v;
        ed["ghost"] = static_cast<bool>(w.ghost_edge[e]);
        edges.push_back(std::move(ed));
    }
    j["edges"] = std::move(edges);
    auto tree = nlohmann::ordered_json::array();
    for (EdgeId e : w.forest) tree.push_back({w.host.edge(e).u, w.host.edge(e).v});
    j["tree_edges"] = std::move(tree);
    return j.dump() + "\n";
}

SpanningWitness witness_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw validation_error(std::string("witness JSON: ") + e.what());
    }
    try {
        const auto graph_vertices = j.at("graph_vertices").get<std::vector<long long>>();
        const auto ghost_vertices = j.value("ghost_vertices", std::vector<long long>{});
        const std::size_t n = graph_vertices.size();
        for (std::size_t i = 0; i < n; ++i)
            if (graph_vertices[i] != static_cast<long long>(i))
                throw validation_error("graph_vertices must be 0..n-1 in order");
        for (std::size_t i = 0; i < ghost_vertices.size(); ++i)
            if (ghost_vertices[i] != static_cast<long long>(n + i))
                throw validation_error("ghost_vertices must continue the graph vertex range in order");

        SpanningWitness w;
        w.base_vertices = n;
        w.host = MultiGraph(n + ghost_vertices.size());
        for (const auto &ed : j.at("edges")) {
            const auto u = ed.at("u").get<long long>(), v = ed.at("v").get<long long>();
            const auto limit = static_cast<long long>(w.host.num_vertices());
            if (u < 0 || v < 0 || u >= limit || v >= limit) throw validation_error("edge endpoint out of range");
            w.host.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
            w.ghost_edge.push_back(ed.value("ghost", false));
        }
        std::vector<bool> taken(w.host.num_edges(), false);
        for (const auto &pair : j.at("tree_edges")) {
            const auto u = pair.at(0).get<long long>(), v = pair.at(1).get<long long>();
            std::optional<EdgeId> match;
            for (EdgeId e = 0; e < w.host.num_edges() && !match; ++e) {
                const Edge &ed = w.host.edge(e);
                const bool same = (ed.u == u && ed.v == v) || (ed.u == v && ed.v == u);
                if (same && !taken[e]) match = e;
            }
            if (!match)
                throw validation_error("tree edge " + std::to_string(u) + "-" + std::to_string(v) +
                                       " has no matching host edge");
            taken[*match] = true;
            w.forest.push_back(*match);
        }
        std::sort(w.forest.begin(), w.forest.end());
        return w;
    } catch (const nlohmann::json::exception &e) {
        throw validation_error(std::string("witness JSON: ") + e.what());
    }
}

}  // namespace treecut
