#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "treecut/decomposition.hpp"
#include "treecut/multigraph.hpp"
#include "treecut/oracle.hpp"

namespace treecut {

// The provider broke its contract or could not be run. Not a "no" answer.
class provider_error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Tree-cut width provider: returns a decomposition of width at most 2*omega,
/// or nullopt to assert that the tree-cut width exceeds omega.
using TcwProvider = std::function<std::optional<TreeCutDecomposition>(const MultiGraph &, std::size_t omega)>;

// Exact oracle with the full empty-bag budget.
TcwProvider oracle_provider(std::size_t size_limit = 6);

/// Runs `path` with the edge-list graph on stdin and the omega value as its
/// only argument. It must print "NO", or "DECOMP" followed by decomposition
/// JSON.
TcwProvider exec_provider(std::string path);

// "oracle" or "exec:<path>"; nullopt for anything else.
std::optional<TcwProvider> make_provider(const std::string &spec, std::size_t oracle_limit = 6);

struct ApproxResult {
    bool exceeds_omega = false;  // certified: stcw(g) > omega
    std::string reason;
    std::size_t omega = 0;
    std::size_t b2_threshold = 0;  // 6 omega (omega + 1)^2
    std::size_t slim_bound = 0;    // 6 (omega + 1)^3
    // Very nice decomposition (absent when the provider already said no).
    std::optional<TreeCutDecomposition> decomposition;
    std::vector<std::size_t> b2_sizes;  // per node of the decomposition
    std::size_t width = 0;
    std::size_t slim_width = 0;
};

/// Slim-width approximation: provider, very nice normal form, then the B2 size
/// test. On success the decomposition has slim width at most 6(omega+1)^3.
/// Throws provider_error if the provider fails or returns an invalid or too
/// wide decomposition.
ApproxResult approximate_stcw(const MultiGraph &g, std::size_t omega, const TcwProvider &provider);

std::string approx_result_to_json(const ApproxResult &r);

}  // namespace treecut
