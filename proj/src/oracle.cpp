#include "treecut/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>

#include "treecut/error.hpp"

namespace treecut {

std::optional<WidthVariant> parse_width_variant(std::string_view name) {
    if (name == "tcw") return WidthVariant::tcw;
    if (name == "stcw") return WidthVariant::stcw;
    if (name == "tcw0") return WidthVariant::tcw0;
    return std::nullopt;
}

std::string_view variant_name(WidthVariant v) {
    switch (v) {
        case WidthVariant::tcw: return "tcw";
        case WidthVariant::stcw: return "stcw";
        case WidthVariant::tcw0: return "tcw0";
    }
    return "?";
}

namespace {

using Mask = std::uint32_t;
constexpr std::size_t max_vertices = 14;
constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();

// Level index 0/1/2 = 3-center / 2-center / 1-center.
std::size_t level_of(WidthVariant v) {
    switch (v) {
        case WidthVariant::tcw: return 0;
        case WidthVariant::stcw: return 1;
        case WidthVariant::tcw0: return 2;
    }
    return 0;
}

// Dense little torso: the first `fixed` vertices are bag vertices.
struct SmallTorso {
    std::size_t size = 0;
    std::size_t fixed = 0;
    std::array<std::array<int, max_vertices + 2>, max_vertices + 2> mult{};
    std::array<int, max_vertices + 2> loops{};
};

std::size_t center_size(SmallTorso t, int threshold) {
    std::array<int, max_vertices + 2> deg{};
    std::array<bool, max_vertices + 2> alive{};
    for (std::size_t a = 0; a < t.size; ++a) {
        alive[a] = true;
        deg[a] = 2 * t.loops[a];
        for (std::size_t b = 0; b < t.size; ++b) deg[a] += t.mult[a][b];
    }
    std::size_t remaining = t.size;
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t a = t.fixed; a < t.size; ++a) {
            if (!alive[a] || deg[a] > threshold) continue;
            alive[a] = false;
            --remaining;
            changed = true;
            if (deg[a] == 1 || (deg[a] == 2 && t.loops[a] == 0)) {
                std::size_t first = t.size, second = t.size;
                for (std::size_t b = 0; b < t.size; ++b)
                    for (int k = 0; k < t.mult[a][b]; ++k) (first == t.size ? first : second) = b;
                for (std::size_t b = 0; b < t.size; ++b) t.mult[b][a] = 0;
                t.mult[a].fill(0);
                if (deg[a] == 1) {
                    --deg[first];
                } else if (first == second) {
                    ++t.loops[first];
                } else {
                    ++t.mult[first][second];
                    ++t.mult[second][first];
                }
            }
            deg[a] = 0;
            t.loops[a] = 0;
            break;  // restart from the smallest id
        }
    }
    return remaining;
}

// Torso of the node with subtree s, bag x and child subtrees `blocks`; the
// rest of the graph (if any) is the last vertex.
SmallTorso small_torso(const MultiGraph &g, Mask full, Mask s, Mask x, const std::vector<Mask> &blocks) {
    const std::size_t n = g.num_vertices();
    SmallTorso t;
    std::array<int, 32> group{};
    std::size_t next = 0;
    for (std::size_t v = 0; v < n; ++v)
        if ((x >> v) & 1) group[v] = static_cast<int>(next++);
    t.fixed = next;
    for (Mask b : blocks) {
        for (std::size_t v = 0; v < n; ++v)
            if ((b >> v) & 1) group[v] = static_cast<int>(next);
        ++next;
    }
    const Mask outside = full & ~s;
    if (outside) {
        for (std::size_t v = 0; v < n; ++v)
            if ((outside >> v) & 1) group[v] = static_cast<int>(next);
        ++next;
    }
    t.size = next;
    for (const Edge &e : g.edges()) {
        const int a = group[e.u], b = group[e.v];
        if (a == b) {
            if (static_cast<std::size_t>(a) < t.fixed) ++t.loops[a];
            continue;
        }
        ++t.mult[a][b];
        ++t.mult[b][a];
    }
    return t;
}

std::vector<std::size_t> all_adhesions(const MultiGraph &g, Mask full) {
    std::vector<std::size_t> adh(std::size_t{full} + 1, 0);
    for (Mask s = 0;; ++s) {
        for (const Edge &e : g.edges())
            if (((s >> e.u) & 1) != ((s >> e.v) & 1)) ++adh[s];
        if (s == full) break;
    }
    return adh;
}

class WidthSearch {
   public:
    WidthSearch(const MultiGraph &g, std::size_t budget) : g_(g), n_(g.num_vertices()), budget_(budget) {
        full_ = n_ == 32 ? ~Mask{0} : (Mask{1} << n_) - 1;
        adh_ = all_adhesions(g, full_);
        best_.assign(std::size_t{1} << n_, Table{});
        choice_.assign(std::size_t{1} << n_, Choices{});
    }

    void run() {
        for (Mask s = 1; s <= full_; ++s) {
            solve(s);
            if (s == full_) break;
        }
    }

    std::size_t value(std::size_t level) const { return best_[full_][budget_][level]; }

    TreeCutDecomposition rebuild(std::size_t level) const {
        TreeCutDecomposition d;
        build(d, full_, budget_, level, std::nullopt);
        return d;
    }

   private:
    using Table = std::vector<std::array<std::size_t, 3>>;
    struct Choice {
        Mask bag = 0;
        std::vector<Mask> blocks;
    };
    using Choices = std::vector<std::array<Choice, 3>>;

    void solve(Mask s) {
        best_[s].assign(budget_ + 1, {unreachable, unreachable, unreachable});
        choice_[s].assign(budget_ + 1, {});
        std::vector<Mask> blocks;
        // Bags in ascending submask order, partitions of the remainder by the
        // block of the lowest remaining vertex.
        for (Mask x = 0;; x = (x - s) & s) {
            partitions(s, x, s & ~x, blocks);
            if (x == s) break;
        }
    }

    void partitions(Mask s, Mask x, Mask rest, std::vector<Mask> &blocks) {
        if (rest == 0) {
            consider(s, x, blocks);
            return;
        }
        const Mask low = rest & (~rest + 1);
        const Mask others = rest & ~low;
        for (Mask sub = 0;; sub = (sub - others) & others) {
            blocks.push_back(low | sub);
            partitions(s, x, others & ~sub, blocks);
            blocks.pop_back();
            if (sub == others) break;
        }
    }

    // cost[b]: best max over the children's costs using at most b empty nodes
    // in total; fills `split` with the per-child budgets for b = budget.
    std::vector<std::size_t> children_cost(const std::vector<Mask> &blocks, std::size_t budget, std::size_t level,
                                           std::vector<std::size_t> *split) const {
        const std::size_t k = blocks.size();
        std::vector<std::vector<std::size_t>> cost(k + 1, std::vector<std::size_t>(budget + 1, 0));
        std::vector<std::vector<std::size_t>> take(k + 1, std::vector<std::size_t>(budget + 1, 0));
        for (std::size_t j = 1; j <= k; ++j)
            for (std::size_t b = 0; b <= budget; ++b) {
                std::size_t bestv = unreachable;
                for (std::size_t e = 0; e <= b; ++e) {
                    const std::size_t v = std::max(best_[blocks[j - 1]][e][level], cost[j - 1][b - e]);
                    if (v < bestv) {
                        bestv = v;
                        take[j][b] = e;
                    }
                }
                cost[j][b] = bestv;
            }
        if (split) {
            split->assign(k, 0);
            std::size_t b = budget;
            for (std::size_t j = k; j >= 1; --j) {
                (*split)[j - 1] = take[j][b];
                b -= take[j][b];
            }
        }
        return std::move(cost[k]);
    }

    SmallTorso torso_of(Mask s, Mask x, const std::vector<Mask> &blocks) const {
        return small_torso(g_, full_, s, x, blocks);
    }

    void consider(Mask s, Mask x, const std::vector<Mask> &blocks) {
        if (x == 0 && blocks.size() < 2) return;
        const std::size_t own = x == 0 ? 1 : 0;
        if (own > budget_) return;
        const SmallTorso t = torso_of(s, x, blocks);
        const std::size_t adh = s == full_ ? 0 : adh_[s];
        const std::array<std::size_t, 3> local = {std::max(adh, center_size(t, 2)),
                                                  std::max(adh, center_size(t, 1)),
                                                  std::max(adh, center_size(t, 0))};
        for (std::size_t level = 0; level < 3; ++level) {
            const auto below = children_cost(blocks, budget_ - own, level, nullptr);
            for (std::size_t e = own; e <= budget_; ++e) {
                const std::size_t v = std::max(local[level], below[e - own]);
                if (v < best_[s][e][level]) {
                    best_[s][e][level] = v;
                    choice_[s][e][level] = {x, blocks};
                }
            }
        }
    }

    void build(TreeCutDecomposition &d, Mask s, std::size_t e, std::size_t level, std::optional<NodeId> parent) const {
        const Choice &c = choice_[s][e][level];
        std::vector<VertexId> bag;
        for (std::size_t v = 0; v < n_; ++v)
            if ((c.bag >> v) & 1) bag.push_back(static_cast<VertexId>(v));
        const NodeId t = d.add_node(parent, std::move(bag));
        std::vector<std::size_t> split;
        children_cost(c.blocks, e - (c.bag == 0 ? 1 : 0), level, &split);
        for (std::size_t i = 0; i < c.blocks.size(); ++i) build(d, c.blocks[i], split[i], level, t);
    }

    const MultiGraph &g_;
    std::size_t n_;
    std::size_t budget_;
    Mask full_ = 0;
    std::vector<std::size_t> adh_;
    std::vector<Table> best_;
    std::vector<Choices> choice_;
};

// Boolean version of WidthSearch restricted to very nice shapes: a subtree S
// is feasible when some bag and partition of the remainder keeps every node
// within both caps, keeps thin children away from their siblings, and never
// produces a decomposable child.
class VeryNiceSearch {
   public:
    VeryNiceSearch(const MultiGraph &g, std::size_t max_width, std::size_t max_slim)
        : g_(g), n_(g.num_vertices()), max_width_(max_width), max_slim_(max_slim) {
        full_ = (Mask{1} << n_) - 1;
        adh_ = all_adhesions(g, full_);
        nbr_.assign(n_, 0);
        for (const Edge &e : g.edges())
            if (!e.is_loop()) {
                nbr_[e.u] |= Mask{1} << e.v;
                nbr_[e.v] |= Mask{1} << e.u;
            }
        feasible_.assign(std::size_t{full_} + 1, false);
        choice_.assign(std::size_t{full_} + 1, {});
    }

    std::optional<TreeCutDecomposition> run() {
        for (Mask s = 1; s <= full_; ++s) solve(s);
        if (!feasible_[full_]) return std::nullopt;
        TreeCutDecomposition d;
        build(d, full_, std::nullopt);
        return d;
    }

   private:
    struct Choice {
        Mask bag = 0;
        std::vector<Mask> blocks;
    };

    Mask neighborhood(Mask b) const {
        Mask out = 0;
        for (Mask f = b; f; f &= f - 1) out |= nbr_[std::countr_zero(f)];
        return out & ~b;
    }

    // The two edges leaving b start in different components of G[b].
    bool splits(Mask b) const {
        std::vector<std::size_t> inner;
        for (const Edge &e : g_.edges()) {
            const bool in_u = (b >> e.u) & 1, in_v = (b >> e.v) & 1;
            if (in_u != in_v) inner.push_back(in_u ? e.u : e.v);
        }
        if (inner.size() != 2) return false;
        Mask seen = Mask{1} << inner[0], frontier = seen;
        while (frontier) {
            Mask next = 0;
            for (Mask f = frontier; f; f &= f - 1) next |= nbr_[std::countr_zero(f)];
            next &= b & ~seen;
            seen |= next;
            frontier = next;
        }
        return !((seen >> inner[1]) & 1);
    }

    bool child_ok(Mask s, Mask x, Mask b) const {
        if (!feasible_[b]) return false;
        if (adh_[b] > 2) return true;
        const Mask nb = neighborhood(b);
        if (nb & s & ~x & ~b) return false;
        return !(adh_[b] == 2 && (nb & ~x) == 0 && splits(b));
    }

    void solve(Mask s) {
        std::vector<Mask> blocks;
        for (Mask x = 0;; x = (x - s) & s) {
            if (partitions(s, x, s & ~x, blocks)) return;
            if (x == s) break;
        }
    }

    bool partitions(Mask s, Mask x, Mask rest, std::vector<Mask> &blocks) {
        if (rest == 0) return consider(s, x, blocks);
        const Mask low = rest & (~rest + 1);
        const Mask others = rest & ~low;
        for (Mask sub = 0;; sub = (sub - others) & others) {
            const Mask b = low | sub;
            if (b != s && child_ok(s, x, b)) {
                blocks.push_back(b);
                const bool done = partitions(s, x, others & ~sub, blocks);
                blocks.pop_back();
                if (done) return true;
            }
            if (sub == others) break;
        }
        return false;
    }

    bool consider(Mask s, Mask x, const std::vector<Mask> &blocks) {
        if (x == 0 && blocks.size() < 2) return false;
        const std::size_t adh = s == full_ ? 0 : adh_[s];
        if (adh > std::min(max_width_, max_slim_)) return false;
        const SmallTorso t = small_torso(g_, full_, s, x, blocks);
        if (center_size(t, 2) > max_width_ || center_size(t, 1) > max_slim_) return false;
        feasible_[s] = true;
        choice_[s] = {x, blocks};
        return true;
    }

    void build(TreeCutDecomposition &d, Mask s, std::optional<NodeId> parent) const {
        const Choice &c = choice_[s];
        std::vector<VertexId> bag;
        for (std::size_t v = 0; v < n_; ++v)
            if ((c.bag >> v) & 1) bag.push_back(static_cast<VertexId>(v));
        const NodeId t = d.add_node(parent, std::move(bag));
        for (Mask b : c.blocks) build(d, b, t);
    }

    const MultiGraph &g_;
    std::size_t n_;
    std::size_t max_width_;
    std::size_t max_slim_;
    Mask full_ = 0;
    std::vector<std::size_t> adh_;
    std::vector<Mask> nbr_;
    std::vector<bool> feasible_;
    std::vector<Choice> choice_;
};

}  // namespace

OracleResult exact_width(const MultiGraph &g, WidthVariant variant, const OracleOptions &options) {
    const std::size_t n = g.num_vertices();
    if (n > options.size_limit || n > max_vertices)
        throw budget_error("width oracle limited to " + std::to_string(std::min(options.size_limit, max_vertices)) +
                           " vertices, graph has " + std::to_string(n));
    OracleResult r;
    const std::size_t complete = n == 0 ? 0 : n - 1;
    r.empty_budget = std::min(options.empty_budget.value_or(complete), complete);
    r.exact = r.empty_budget >= complete;
    if (n == 0) {
        r.decomposition = TreeCutDecomposition::single_node(0);
        return r;
    }
    WidthSearch search(g, r.empty_budget);
    search.run();
    const std::size_t level = level_of(variant);
    r.value = search.value(level);
    r.decomposition = search.rebuild(level);
    return r;
}

std::optional<TreeCutDecomposition> find_very_nice(const MultiGraph &g, std::size_t max_width, std::size_t max_slim,
                                                   std::size_t size_limit) {
    const std::size_t n = g.num_vertices();
    if (n > size_limit || n > max_vertices)
        throw budget_error("very nice search limited to " + std::to_string(std::min(size_limit, max_vertices)) +
                           " vertices, graph has " + std::to_string(n));
    if (n == 0) return TreeCutDecomposition::single_node(0);
    return VeryNiceSearch(g, max_width, max_slim).run();
}

std::size_t exact_treewidth(const MultiGraph &g, std::size_t size_limit) {
    const std::size_t n = g.num_vertices();
    if (n > size_limit || n > 20)
        throw budget_error("treewidth oracle limited to " + std::to_string(std::min<std::size_t>(size_limit, 20)) +
                           " vertices, graph has " + std::to_string(n));
    if (n == 0) return 0;
    std::vector<Mask> adj(n, 0);
    for (const Edge &e : g.edges())
        if (!e.is_loop()) {
            adj[e.u] |= Mask{1} << e.v;
            adj[e.v] |= Mask{1} << e.u;
        }
    const Mask full = (Mask{1} << n) - 1;
    // |Q(s, v)|: vertices outside s + v reachable from v through s.
    auto q = [&](Mask s, std::size_t v) {
        Mask seen = Mask{1} << v, frontier = seen, reach = 0;
        while (frontier) {
            Mask next = 0;
            for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
            next &= ~seen;
            seen |= next;
            reach |= next & ~s;
            frontier = next & s;
        }
        return static_cast<std::size_t>(std::popcount(reach));
    };
    std::vector<std::size_t> tw(std::size_t{1} << n, unreachable);
    tw[0] = 0;
    for (Mask s = 1; s <= full; ++s) {
        for (Mask f = s; f; f &= f - 1) {
            const auto v = static_cast<std::size_t>(std::countr_zero(f));
            const Mask rest = s & ~(Mask{1} << v);
            tw[s] = std::min(tw[s], std::max(tw[rest], q(rest, v)));
        }
    }
    return tw[full];
}

}  // namespace treecut
