#pragma once

#include <string>
#include <string_view>

#include "treecut/multigraph.hpp"
#include "treecut/witness.hpp"

namespace treecut {

/// Edge-list text: first non-comment line "n m", then m lines "u v" with
/// 0-based ids. Repeated lines are parallel edges; '#' starts a comment.
MultiGraph parse_edge_list(std::string_view text);
std::string write_edge_list(const MultiGraph &g);

// {"n": int, "edges": [[u, v], ...]}
MultiGraph parse_graph_json(std::string_view text);
std::string write_graph_json(const MultiGraph &g);

// JSON when the first non-blank byte is '{', edge list otherwise.
MultiGraph parse_graph(std::string_view text);

// Undirected DOT. Graph vertices are named by id.
std::string to_dot(const MultiGraph &g);
// Witness host: forest edges bold, ghost vertices and edges dashed.
std::string to_dot(const SpanningWitness &w);

std::string read_file(const std::string &path);

}  // namespace treecut
