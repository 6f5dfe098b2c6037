#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "treecut/decomposition.hpp"
#include "treecut/multigraph.hpp"
#include "treecut/witness.hpp"

namespace treecut {

/// Non-forest edges of h whose forest path passes through v (endpoints count).
/// A self-loop at v is its own path. Throws validation_error if `forest` is not
/// a maximal spanning forest of h.
std::vector<EdgeId> local_feedback_set(const MultiGraph &h, std::span<const EdgeId> forest, VertexId v);

// |E_loc(v)| for every vertex at once.
std::vector<std::size_t> local_feedback_sizes(const MultiGraph &h, std::span<const EdgeId> forest);

// 1 + max_v |E_loc(v)|.
std::size_t ecw_value(const MultiGraph &h, std::span<const EdgeId> forest);
inline std::size_t ecw_value(const SpanningWitness &w) { return ecw_value(w.host, w.forest); }

// Number of maximal spanning forests (product of per-component Kirchhoff
// determinants). Floating point; exact for the counts this toolkit enumerates.
long double count_spanning_forests(const MultiGraph &g);

struct EcwOptions {
    std::uint64_t budget = 1'000'000;  // max forests to enumerate
    unsigned jobs = 1;
};

struct EcwResult {
    std::size_t value = 0;
    std::vector<EdgeId> forest;  // lexicographically first optimum
    std::uint64_t forests_enumerated = 0;
};

/// Exact edge-cut width by enumerating every maximal spanning forest. Throws
/// budget_error up front when the forest count exceeds the budget.
EcwResult exact_ecw(const MultiGraph &g, const EcwOptions &options = {});

struct SecOptions {
    EcwOptions ecw;
    std::size_t oracle_limit = 6;  // largest graph handed to the width oracle
};

struct SecResult {
    std::size_t value = 0;  // upper bound on sec(g)
    SpanningWitness witness;
    std::string source;  // "exact-ecw", "decomposition" or "bfs-forest"
};

/// Best witness among exact_ecw (when within budget), decomposition_to_witness
/// on the supplied decomposition or else an oracle-optimal slim one (when the
/// graph is small enough), and a plain BFS forest of g.
SecResult sec_upper(const MultiGraph &g, const std::optional<TreeCutDecomposition> &d = std::nullopt,
                    const SecOptions &options = {});

}  // namespace treecut
