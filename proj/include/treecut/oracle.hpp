#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "treecut/decomposition.hpp"
#include "treecut/multigraph.hpp"

namespace treecut {

enum class WidthVariant { tcw, stcw, tcw0 };

std::optional<WidthVariant> parse_width_variant(std::string_view name);
std::string_view variant_name(WidthVariant v);

struct OracleOptions {
    std::size_t size_limit = 6;
    // Maximum number of empty-bag nodes; nullopt means n - 1, which is enough
    // for every decomposition once empty leaves and empty single-child nodes
    // are contracted away.
    std::optional<std::size_t> empty_budget = 2;
};

struct OracleResult {
    std::size_t value = 0;
    TreeCutDecomposition decomposition;
    std::size_t empty_budget = 0;
    // True when the budget covers every decomposition (budget >= n - 1), i.e.
    // the value is the exact width and not just the best within the budget.
    bool exact = false;
};

/// Minimum width of the requested variant over all tree-cut decompositions
/// with at most `empty_budget` empty bags and no empty leaves. Ties are broken
/// by the first optimum in a fixed enumeration order, so results are
/// reproducible. Throws budget_error when g exceeds the size limit.
OracleResult exact_width(const MultiGraph &g, WidthVariant variant, const OracleOptions &options = {});

// Very nice decomposition with width <= max_width and slim width <= max_slim,
// the first one in the oracle's enumeration order; nullopt if none exists.
// Throws budget_error above size_limit (or 14) vertices.
std::optional<TreeCutDecomposition> find_very_nice(const MultiGraph &g, std::size_t max_width, std::size_t max_slim,
                                                   std::size_t size_limit = 10);

// Exact treewidth by dynamic programming over vertex subsets; 0 for graphs
// without edges.
std::size_t exact_treewidth(const MultiGraph &g, std::size_t size_limit = 16);

}  // namespace treecut
