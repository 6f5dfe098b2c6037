#include "treecut/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "treecut/error.hpp"

namespace treecut {

namespace {

VertexId checked_vertex(long long x, std::size_t n, std::size_t line) {
    if (x < 0 || static_cast<std::size_t>(x) >= n)
        throw validation_error("line " + std::to_string(line) + ": vertex " + std::to_string(x) + " out of range [0, " +
                               std::to_string(n) + ")");
    return static_cast<VertexId>(x);
}

}  // namespace

MultiGraph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    std::optional<std::pair<long long, long long>> header;
    MultiGraph g;
    std::size_t seen_edges = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream fields(raw);
        long long a = 0, b = 0;
        if (!(fields >> a)) {
            if (raw.find_first_not_of(" \t\r") != std::string::npos)
                throw validation_error("line " + std::to_string(line_no) + ": expected two integers");
            continue;
        }
        std::string extra;
        if (!(fields >> b) || (fields >> extra))
            throw validation_error("line " + std::to_string(line_no) + ": expected two integers");
        if (!header) {
            if (a < 0 || b < 0) throw validation_error("header counts must be non-negative");
            header = {a, b};
            g = MultiGraph(static_cast<std::size_t>(a));
            continue;
        }
        if (seen_edges == static_cast<std::size_t>(header->second))
            throw validation_error("line " + std::to_string(line_no) + ": more edges than announced");
        g.add_edge(checked_vertex(a, g.num_vertices(), line_no), checked_vertex(b, g.num_vertices(), line_no));
        ++seen_edges;
    }
    if (!header) throw validation_error("edge list has no \"n m\" header");
    if (seen_edges != static_cast<std::size_t>(header->second))
        throw validation_error("expected " + std::to_string(header->second) + " edges, found " +
                               std::to_string(seen_edges));
    return g;
}

std::string write_edge_list(const MultiGraph &g) {
    std::ostringstream out;
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const Edge &e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

MultiGraph parse_graph_json(std::string_view text) {
    try {
        const auto j = nlohmann::json::parse(text);
        const auto n = j.at("n").get<long long>();
        if (n < 0) throw validation_error("graph JSON: negative vertex count");
        MultiGraph g(static_cast<std::size_t>(n));
        for (const auto &pair : j.at("edges")) {
            if (!pair.is_array() || pair.size() != 2) throw validation_error("graph JSON: edges must be [u, v] pairs");
            g.add_edge(checked_vertex(pair[0].get<long long>(), g.num_vertices(), 0),
                       checked_vertex(pair[1].get<long long>(), g.num_vertices(), 0));
        }
        return g;
    } catch (const nlohmann::json::exception &e) {
        throw validation_error(std::string("graph JSON: ") + e.what());
    }
}

std::string write_graph_json(const MultiGraph &g) {
    nlohmann::ordered_json j;
    j["n"] = g.num_vertices();
    auto edges = nlohmann::ordered_json::array();
    for (const Edge &e : g.edges()) edges.push_back({e.u, e.v});
    j["edges"] = std::move(edges);
    return j.dump() + "\n";
}

MultiGraph parse_graph(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return parse_graph_json(text);
    return parse_edge_list(text);
}

std::string to_dot(const MultiGraph &g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (VertexId v = 0; v < g.num_vertices(); ++v) out << "  " << v << ";\n";
    for (const Edge &e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_dot(const SpanningWitness &w) {
    std::vector<bool> tree(w.host.num_edges(), false);
    for (EdgeId e : w.forest) tree[e] = true;
    std::ostringstream out;
    out << "graph G {\n";
    for (VertexId v = 0; v < w.host.num_vertices(); ++v) {
        out << "  " << v;
        if (w.is_ghost_vertex(v)) out << " [style=dashed]";
        out << ";\n";
    }
    for (EdgeId e = 0; e < w.host.num_edges(); ++e) {
        const Edge &ed = w.host.edge(e);
        out << "  " << ed.u << " -- " << ed.v;
        std::vector<std::string> attrs;
        if (tree[e]) attrs.push_back("penwidth=3, color=red");
        if (w.ghost_edge[e]) attrs.push_back("style=dashed");
        if (!attrs.empty()) {
            out << " [";
            for (std::size_t i = 0; i < attrs.size(); ++i) out << (i ? ", " : "") << attrs[i];
            out << "]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw validation_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace treecut
