#include "treecut/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "treecut/error.hpp"

namespace treecut {

MultiGraph::MultiGraph(std::size_t n) : incidence_(n), labels_(n) {
    std::iota(labels_.begin(), labels_.end(), VertexId{0});
}

MultiGraph::MultiGraph(std::size_t n, std::span<const Edge> edges) : MultiGraph(n) {
    for (const Edge &e : edges) add_edge(e.u, e.v);
}

VertexId MultiGraph::add_vertex() { return add_vertex(static_cast<VertexId>(incidence_.size())); }

VertexId MultiGraph::add_vertex(VertexId label) {
    incidence_.emplace_back();
    labels_.push_back(label);
    return static_cast<VertexId>(incidence_.size() - 1);
}

EdgeId MultiGraph::add_edge(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    const auto id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({u, v});
    incidence_[u].push_back(id);
    if (u != v) incidence_[v].push_back(id);
    return id;
}

void MultiGraph::check_vertex(VertexId v) const {
    if (v >= incidence_.size())
        throw precondition_error("vertex " + std::to_string(v) + " out of range (n = " +
                                 std::to_string(incidence_.size()) + ")");
}

std::size_t MultiGraph::degree(VertexId v) const {
    std::size_t d = 0;
    for (EdgeId e : incidence_[v]) d += edges_[e].is_loop() ? 2 : 1;
    return d;
}

std::size_t MultiGraph::max_degree() const {
    std::size_t best = 0;
    for (VertexId v = 0; v < num_vertices(); ++v) best = std::max(best, degree(v));
    return best;
}

std::size_t MultiGraph::multiplicity(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    std::size_t count = 0;
    for (EdgeId e : incidence_[u]) {
        const Edge &ed = edges_[e];
        if ((ed.u == u && ed.v == v) || (ed.v == u && ed.u == v)) ++count;
    }
    return count;
}

std::vector<VertexId> MultiGraph::neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for (EdgeId e : incidence_[v]) {
        const VertexId w = edges_[e].other(v);
        if (w != v) out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::uint32_t> MultiGraph::component_ids() const {
    constexpr auto unset = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> comp(num_vertices(), unset);
    std::uint32_t next = 0;
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < num_vertices(); ++s) {
        if (comp[s] != unset) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            const VertexId x = stack.back();
            stack.pop_back();
            for (EdgeId e : incidence_[x]) {
                const VertexId y = edges_[e].other(x);
                if (comp[y] == unset) {
                    comp[y] = next;
                    stack.push_back(y);
                }
            }
        }
        ++next;
    }
    return comp;
}

std::size_t MultiGraph::num_components() const {
    const auto comp = component_ids();
    return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

MultiGraph MultiGraph::induced(std::span<const VertexId> keep) const {
    constexpr auto absent = static_cast<VertexId>(-1);
    std::vector<VertexId> remap(num_vertices(), absent);
    MultiGraph out;
    for (VertexId v : keep) {
        check_vertex(v);
        remap[v] = out.add_vertex(labels_[v]);
    }
    for (const Edge &e : edges_)
        if (remap[e.u] != absent && remap[e.v] != absent) out.add_edge(remap[e.u], remap[e.v]);
    return out;
}

std::vector<Edge> MultiGraph::sorted_edges() const {
    std::vector<Edge> out(edges_.begin(), edges_.end());
    for (Edge &e : out)
        if (e.u > e.v) std::swap(e.u, e.v);
    std::sort(out.begin(), out.end(), [](const Edge &a, const Edge &b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    return out;
}

bool MultiGraph::same_structure(const MultiGraph &other) const {
    return num_vertices() == other.num_vertices() && sorted_edges() == other.sorted_edges();
}

std::size_t feedback_edge_number(const MultiGraph &g) {
    return g.num_edges() + g.num_components() - g.num_vertices();
}

}  // namespace treecut
