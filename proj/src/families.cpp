#include "treecut/families.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "treecut/error.hpp"

namespace treecut {

std::optional<Family> parse_family(std::string_view name) {
    if (name == "star") return Family::star;
    if (name == "windmill") return Family::windmill;
    if (name == "wall") return Family::wall;
    if (name == "ladder") return Family::ladder;
    return std::nullopt;
}

std::string_view family_name(Family f) {
    switch (f) {
        case Family::star: return "star";
        case Family::windmill: return "windmill";
        case Family::wall: return "wall";
        case Family::ladder: return "ladder";
    }
    return "?";
}

FamilyInstance make_family(Family kind, int r) {
    const int minimum = (kind == Family::wall || kind == Family::ladder) ? 2 : 1;
    if (r < minimum)
        throw precondition_error(std::string(family_name(kind)) + " requires r >= " +
                                 std::to_string(minimum) + ", got " + std::to_string(r));
    const auto n = static_cast<VertexId>(r);
    FamilyInstance out;
    MultiGraph &g = out.graph;

    switch (kind) {
        case Family::star:
            g = MultiGraph(n + 1);
            for (VertexId leaf = 1; leaf <= n; ++leaf) g.add_edge(0, leaf);
            break;
        case Family::windmill:
            g = MultiGraph(2 * n + 1);
            for (VertexId i = 0; i < n; ++i) {
                const VertexId a = 2 * i + 1, b = 2 * i + 2;
                g.add_edge(0, a);
                g.add_edge(0, b);
                g.add_edge(a, b);
            }
            break;
        case Family::wall:
            g = MultiGraph(n * n);
            for (VertexId row = 0; row < n; ++row)
                for (VertexId col = 0; col + 1 < n; ++col) g.add_edge(row * n + col, row * n + col + 1);
            for (VertexId row = 0; row + 1 < n; ++row)
                for (VertexId col = 0; col < n; ++col)
                    if ((row + col) % 2 == 0) g.add_edge(row * n + col, (row + 1) * n + col);
            break;
        case Family::ladder:
            g = MultiGraph(2 * n);
            for (VertexId i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
            for (VertexId i = 0; i + 1 < n; ++i) out.spanning_tree.push_back(g.add_edge(n + i, n + i + 1));
            for (VertexId i = 0; i < n; ++i) out.spanning_tree.push_back(g.add_edge(i, n + i));
            break;
    }
    return out;
}

MultiGraph random_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
    std::vector<Edge> pairs;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) pairs.push_back({u, v});
    if (m > pairs.size())
        throw precondition_error("a simple graph on " + std::to_string(n) + " vertices has at most " +
                                 std::to_string(pairs.size()) + " edges");
    std::mt19937_64 rng(seed);
    // Partial Fisher-Yates; spelled out because std::shuffle is not portable across libraries.
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng() % (pairs.size() - i));
        std::swap(pairs[i], pairs[j]);
    }
    pairs.resize(m);
    std::sort(pairs.begin(), pairs.end(), [](const Edge &a, const Edge &b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    return MultiGraph(n, pairs);
}

namespace {

std::vector<Edge> vertex_pairs(std::size_t n) {
    std::vector<Edge> pairs;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) pairs.push_back({u, v});
    return pairs;
}

MultiGraph from_mask(std::size_t n, const std::vector<Edge> &pairs, std::uint32_t mask) {
    MultiGraph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if ((mask >> i) & 1) g.add_edge(pairs[i].u, pairs[i].v);
    return g;
}

}  // namespace

std::vector<MultiGraph> all_graphs(std::size_t n) {
    if (n > 6) throw precondition_error("all_graphs supports n <= 6");
    const auto pairs = vertex_pairs(n);
    std::vector<MultiGraph> out;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) out.push_back(from_mask(n, pairs, mask));
    return out;
}

std::vector<MultiGraph> graphs_up_to_isomorphism(std::size_t n, bool connected_only) {
    if (n > 6) throw precondition_error("graphs_up_to_isomorphism supports n <= 6");
    const auto pairs = vertex_pairs(n);
    std::vector<std::vector<std::size_t>> index(n, std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < pairs.size(); ++i) index[pairs[i].u][pairs[i].v] = index[pairs[i].v][pairs[i].u] = i;
    std::vector<std::vector<VertexId>> perms;
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), VertexId{0});
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    std::set<std::uint32_t> seen;
    std::vector<MultiGraph> out;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::uint32_t canon = mask;
        for (const auto &p : perms) {
            std::uint32_t image = 0;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if ((mask >> i) & 1) image |= 1u << index[p[pairs[i].u]][p[pairs[i].v]];
            canon = std::min(canon, image);
        }
        if (!seen.insert(canon).second) continue;
        MultiGraph g = from_mask(n, pairs, canon);
        if (connected_only && g.num_components() > 1) continue;
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace treecut
