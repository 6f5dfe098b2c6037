#include "treecut/decomposition.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "treecut/error.hpp"

namespace treecut {

NodeId TreeCutDecomposition::add_node(std::optional<NodeId> parent_node, std::vector<VertexId> bag) {
    parent.push_back(parent_node);
    bags.push_back(std::move(bag));
    return static_cast<NodeId>(bags.size() - 1);
}

TreeCutDecomposition TreeCutDecomposition::single_node(std::size_t num_vertices) {
    TreeCutDecomposition d;
    std::vector<VertexId> all(num_vertices);
    for (std::size_t v = 0; v < num_vertices; ++v) all[v] = static_cast<VertexId>(v);
    d.add_node(std::nullopt, std::move(all));
    return d;
}

std::vector<std::string> validate(const TreeCutDecomposition &d, const MultiGraph &g) {
    std::vector<std::string> out;
    const std::size_t m = d.num_nodes();
    if (m == 0) {
        out.push_back("decomposition has no nodes");
        return out;
    }
    if (d.parent.size() != m) {
        out.push_back("parent and bag tables differ in size");
        return out;
    }
    if (d.root >= m) {
        out.push_back("root " + std::to_string(d.root) + " is not a node");
        return out;
    }
    if (d.parent[d.root]) out.push_back("root has a parent");
    bool parents_ok = true;
    for (NodeId t = 0; t < m; ++t) {
        if (t == d.root) continue;
        if (!d.parent[t]) {
            out.push_back("node " + std::to_string(t) + " has no parent but is not the root");
            parents_ok = false;
        } else if (*d.parent[t] >= m) {
            out.push_back("node " + std::to_string(t) + " has unknown parent " + std::to_string(*d.parent[t]));
            parents_ok = false;
        }
    }
    if (parents_ok) {
        // Every node must reach the root; anything else sits on a cycle.
        std::vector<int> state(m, 0);  // 0 unknown, 1 in progress, 2 reaches root
        state[d.root] = 2;
        for (NodeId s = 0; s < m; ++s) {
            std::vector<NodeId> path;
            NodeId t = s;
            while (state[t] == 0) {
                state[t] = 1;
                path.push_back(t);
                t = *d.parent[t];
            }
            const bool ok = state[t] == 2;
            for (NodeId p : path) state[p] = ok ? 2 : 3;
            if (!ok && !path.empty()) out.push_back("parent relation has a cycle through node " + std::to_string(s));
        }
    }

    const std::size_t n = g.num_vertices();
    constexpr auto unowned = static_cast<NodeId>(-1);
    std::vector<NodeId> owner(n, unowned);
    for (NodeId t = 0; t < m; ++t) {
        for (VertexId v : d.bags[t]) {
            if (v >= n) {
                out.push_back("bag of node " + std::to_string(t) + " holds unknown vertex " + std::to_string(v));
                continue;
            }
            if (owner[v] != unowned) {
                out.push_back("bags not disjoint: vertex " + std::to_string(v) + " in nodes " +
                              std::to_string(owner[v]) + " and " + std::to_string(t));
                continue;
            }
            owner[v] = t;
        }
    }
    for (VertexId v = 0; v < n; ++v)
        if (owner[v] == unowned) out.push_back("union != V(G): vertex " + std::to_string(v) + " in no bag");
    return out;
}

DecompositionIndex::DecompositionIndex(const TreeCutDecomposition &d, std::size_t num_vertices)
    : d_(&d),
      children_(d.num_nodes()),
      owner_(num_vertices, 0),
      depth_(d.num_nodes(), 0),
      enter_(d.num_nodes(), 0),
      leave_(d.num_nodes(), 0) {
    for (NodeId t = 0; t < d.num_nodes(); ++t)
        if (d.parent[t]) children_[*d.parent[t]].push_back(t);
    for (NodeId t = 0; t < d.num_nodes(); ++t)
        for (VertexId v : d.bags[t]) owner_[v] = t;

    // Iterative pre-order; children visited in ascending id.
    std::vector<std::pair<NodeId, std::size_t>> stack{{d.root, 0}};
    std::size_t clock = 0;
    enter_[d.root] = clock++;
    preorder_.push_back(d.root);
    while (!stack.empty()) {
        auto &[t, next] = stack.back();
        if (next < children_[t].size()) {
            const NodeId c = children_[t][next++];
            depth_[c] = depth_[t] + 1;
            enter_[c] = clock++;
            preorder_.push_back(c);
            stack.push_back({c, 0});
        } else {
            leave_[t] = clock;
            stack.pop_back();
        }
    }
}

std::vector<VertexId> DecompositionIndex::subtree_vertices(NodeId t) const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < owner_.size(); ++v)
        if (in_subtree(t, v)) out.push_back(v);
    return out;
}

TreeCutDecomposition normalized(TreeCutDecomposition d) {
    for (auto &bag : d.bags) std::sort(bag.begin(), bag.end());
    return d;
}

std::string decomposition_to_json(const TreeCutDecomposition &d) {
    nlohmann::ordered_json j;
    j["root"] = d.root;
    auto nodes = nlohmann::ordered_json::array();
    for (NodeId t = 0; t < d.num_nodes(); ++t) {
        nlohmann::ordered_json node;
        node["id"] = t;
        node["parent"] = d.parent[t] ? nlohmann::ordered_json(*d.parent[t]) : nlohmann::ordered_json(nullptr);
        auto bag = d.bags[t];
        std::sort(bag.begin(), bag.end());
        node["bag"] = bag;
        nodes.push_back(std::move(node));
    }
    j["nodes"] = std::move(nodes);
    return j.dump() + "\n";
}

TreeCutDecomposition decomposition_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw validation_error(std::string("decomposition JSON: ") + e.what());
    }
    try {
        if (!j.is_object() || !j.contains("root") || !j.contains("nodes") || !j["nodes"].is_array())
            throw validation_error("decomposition JSON needs \"root\" and a \"nodes\" array");
        std::map<long long, NodeId> remap;
        for (const auto &node : j["nodes"]) {
            const auto id = node.at("id").get<long long>();
            if (!remap.emplace(id, 0).second) throw validation_error("duplicate node id " + std::to_string(id));
        }
        NodeId next = 0;
        for (auto &[id, dense] : remap) dense = next++;

        auto lookup = [&](long long id) {
            const auto it = remap.find(id);
            if (it == remap.end()) throw validation_error("reference to unknown node id " + std::to_string(id));
            return it->second;
        };

        TreeCutDecomposition d;
        d.parent.resize(remap.size());
        d.bags.resize(remap.size());
        d.root = lookup(j["root"].get<long long>());
        for (const auto &node : j["nodes"]) {
            const NodeId t = lookup(node.at("id").get<long long>());
            if (node.contains("parent") && !node["parent"].is_null())
                d.parent[t] = lookup(node["parent"].get<long long>());
            for (const auto &v : node.at("bag")) {
                const auto x = v.get<long long>();
                if (x < 0) throw validation_error("negative vertex id in bag");
                d.bags[t].push_back(static_cast<VertexId>(x));
            }
            std::sort(d.bags[t].begin(), d.bags[t].end());
        }
        return d;
    } catch (const nlohmann::json::exception &e) {
        throw validation_error(std::string("decomposition JSON: ") + e.what());
    }
}

}  // namespace treecut
