#include "treecut/edp.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "treecut/error.hpp"

namespace treecut {

std::vector<Demand> parse_demands(std::string_view text) {
    std::vector<Demand> out;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
                   item.end());
        if (item.empty()) continue;
        const auto dash = item.find('-');
        try {
            if (dash == std::string::npos || dash == 0) throw std::invalid_argument(item);
            std::size_t used_s = 0, used_t = 0;
            const long long s = std::stoll(item.substr(0, dash), &used_s);
            const long long t = std::stoll(item.substr(dash + 1), &used_t);
            if (used_s != dash || used_t != item.size() - dash - 1 || s < 0 || t < 0)
                throw std::invalid_argument(item);
            out.push_back({static_cast<VertexId>(s), static_cast<VertexId>(t)});
        } catch (const std::logic_error &) {
            throw validation_error("malformed demand \"" + item + "\"; expected u-v");
        }
    }
    return out;
}

namespace {

// Label of one boundary edge in a state.
//   0          unused
//   1 + 2d + s the path of demand d starting at its side-s terminal exits here
//   -(j + 1)   a fragment passing through the region continues at boundary j
using Label = int;
using State = std::vector<Label>;

Label end_label(std::size_t demand, int side) { return static_cast<Label>(1 + 2 * demand + side); }

struct Table {
    std::vector<EdgeId> boundary;  // ascending host edge ids
    std::set<State> states;
};

class EdpSolver {
   public:
    EdpSolver(const SpanningWitness &w, std::span<const Demand> demands, EdpStats *stats)
        : w_(w), terminals_(w.host.num_vertices()), stats_(stats) {
        for (std::size_t d = 0; d < demands.size(); ++d) {
            if (demands[d].s == demands[d].t) continue;
            terminals_[demands[d].s].push_back(end_label(d, 0));
            terminals_[demands[d].t].push_back(end_label(d, 1));
        }
        usable_.assign(w.host.num_edges(), false);
        for (EdgeId e = 0; e < w.host.num_edges(); ++e) usable_[e] = !w.ghost_edge[e] && !w.host.edge(e).is_loop();
        children_.resize(w.host.num_vertices());
        std::vector<std::vector<VertexId>> adj(w.host.num_vertices());
        for (EdgeId e : w.forest) {
            adj[w.host.edge(e).u].push_back(w.host.edge(e).v);
            adj[w.host.edge(e).v].push_back(w.host.edge(e).u);
        }
        std::vector<bool> seen(w.host.num_vertices(), false);
        for (VertexId s = 0; s < w.host.num_vertices(); ++s) {
            if (seen[s]) continue;
            roots_.push_back(s);
            seen[s] = true;
            std::vector<VertexId> queue{s};
            for (std::size_t i = 0; i < queue.size(); ++i)
                for (VertexId y : adj[queue[i]])
                    if (!seen[y]) {
                        seen[y] = true;
                        children_[queue[i]].push_back(y);
                        queue.push_back(y);
                    }
        }
        for (auto &c : children_) std::sort(c.begin(), c.end());
    }

    bool solve() {
        for (VertexId r : roots_) {
            const Table t = region(r);
            if (t.states.empty()) return false;
        }
        return true;
    }

   private:
    Table region(VertexId v) {
        Table t = local(v);
        for (VertexId c : children_[v]) t = merge(t, region(c));
        return t;
    }

    void record(const Table &t) {
        if (!stats_) return;
        stats_->max_states = std::max(stats_->max_states, t.states.size());
        stats_->max_boundary = std::max(stats_->max_boundary, t.boundary.size());
    }

    // Every way for v alone to start its terminals' paths and route fragments through.
    Table local(VertexId v) {
        Table t;
        for (EdgeId e : w_.host.incident(v))
            if (usable_[e]) t.boundary.push_back(e);
        std::sort(t.boundary.begin(), t.boundary.end());
        current_terms_ = terminals_[v];
        State state(t.boundary.size(), 0);
        std::vector<bool> placed(current_terms_.size(), false);
        fill_local(t, state, placed, 0);
        record(t);
        return t;
    }

    void fill_local(Table &t, State &state, std::vector<bool> &placed, std::size_t i) {
        if (i == state.size()) {
            if (std::all_of(placed.begin(), placed.end(), [](bool b) { return b; })) t.states.insert(state);
            return;
        }
        if (state[i] != 0) {
            fill_local(t, state, placed, i + 1);
            return;
        }
        fill_local(t, state, placed, i + 1);
        for (std::size_t k = 0; k < placed.size(); ++k) {
            if (placed[k]) continue;
            placed[k] = true;
            state[i] = current_terms_[k];
            fill_local(t, state, placed, i + 1);
            state[i] = 0;
            placed[k] = false;
        }
        for (std::size_t j = i + 1; j < state.size(); ++j) {
            if (state[j] != 0) continue;
            state[i] = -static_cast<Label>(j + 1);
            state[j] = -static_cast<Label>(i + 1);
            fill_local(t, state, placed, i + 1);
            state[i] = 0;
            state[j] = 0;
        }
    }

    Table merge(const Table &a, const Table &b) {
        Table out;
        std::map<EdgeId, std::size_t> in_a, in_b;
        for (std::size_t i = 0; i < a.boundary.size(); ++i) in_a[a.boundary[i]] = i;
        for (std::size_t i = 0; i < b.boundary.size(); ++i) in_b[b.boundary[i]] = i;
        std::vector<std::pair<std::size_t, std::size_t>> shared;  // (index in a, index in b)
        for (std::size_t i = 0; i < a.boundary.size(); ++i)
            if (auto it = in_b.find(a.boundary[i]); it != in_b.end()) shared.emplace_back(i, it->second);
            else out.boundary.push_back(a.boundary[i]);
        for (std::size_t i = 0; i < b.boundary.size(); ++i)
            if (!in_a.count(b.boundary[i])) out.boundary.push_back(b.boundary[i]);
        std::sort(out.boundary.begin(), out.boundary.end());

        // For each side and local index: position in the merged boundary, or -1 if shared.
        std::array<std::vector<int>, 2> outer;
        std::array<std::vector<int>, 2> across;  // index of the same edge on the other side
        const std::array<const Table *, 2> side = {&a, &b};
        for (int s = 0; s < 2; ++s) {
            outer[s].assign(side[s]->boundary.size(), -1);
            across[s].assign(side[s]->boundary.size(), -1);
            for (std::size_t i = 0; i < side[s]->boundary.size(); ++i) {
                const auto pos = std::lower_bound(out.boundary.begin(), out.boundary.end(), side[s]->boundary[i]);
                if (pos != out.boundary.end() && *pos == side[s]->boundary[i])
                    outer[s][i] = static_cast<int>(pos - out.boundary.begin());
            }
        }
        for (const auto &[ia, ib] : shared) {
            across[0][ia] = static_cast<int>(ib);
            across[1][ib] = static_cast<int>(ia);
        }

        for (const State &sa : a.states)
            for (const State &sb : b.states) {
                State merged;
                if (combine(sa, sb, shared, outer, across, out.boundary.size(), merged)) out.states.insert(merged);
            }
        record(out);
        return out;
    }

    static bool combine(const State &sa, const State &sb, const std::vector<std::pair<std::size_t, std::size_t>> &shared,
                        const std::array<std::vector<int>, 2> &outer, const std::array<std::vector<int>, 2> &across,
                        std::size_t size, State &merged) {
        for (const auto &[ia, ib] : shared)
            if ((sa[ia] != 0) != (sb[ib] != 0)) return false;
        const std::array<const State *, 2> st = {&sa, &sb};

        // Walks a path that enters side s through its boundary edge i. Returns
        // the terminal label it ends at (> 0) or -(merged position + 1).
        auto follow = [&](int s, std::size_t i) -> Label {
            for (;;) {
                const Label l = (*st[s])[i];
                if (l > 0) return l;
                const auto j = static_cast<std::size_t>(-l - 1);
                if (outer[s][j] >= 0) return -(outer[s][j] + 1);
                i = static_cast<std::size_t>(across[s][j]);
                s = 1 - s;
            }
        };

        merged.assign(size, 0);
        for (int s = 0; s < 2; ++s)
            for (std::size_t i = 0; i < st[s]->size(); ++i) {
                const Label l = (*st[s])[i];
                if (l == 0) continue;
                if (outer[s][i] >= 0) {
                    const auto k = static_cast<std::size_t>(outer[s][i]);
                    merged[k] = follow(s, i);
                } else if (l > 0) {
                    // Terminal path leaving through a shared edge.
                    const Label other = follow(1 - s, static_cast<std::size_t>(across[s][i]));
                    if (other < 0) continue;  // reaches the merged boundary; recorded from that end
                    const Label da = (l - 1) / 2, db = (other - 1) / 2;
                    if (da != db || l == other) return false;
                }
            }
        return true;
    }

    const SpanningWitness &w_;
    std::vector<std::vector<Label>> terminals_;
    std::vector<bool> usable_;
    std::vector<std::vector<VertexId>> children_;
    std::vector<VertexId> roots_;
    std::vector<Label> current_terms_;
    EdpStats *stats_;
};

}  // namespace

bool edp_solve_dp(const MultiGraph &g, const SpanningWitness &w, std::span<const Demand> demands, EdpStats *stats) {
    auto violations = validate(w, &g);
    if (!violations.empty()) throw validation_error("invalid spanning witness", std::move(violations));
    for (const Demand &d : demands)
        if (d.s >= g.num_vertices() || d.t >= g.num_vertices())
            throw precondition_error("demand terminal outside the graph");
    EdpSolver solver(w, demands, stats);
    return solver.solve();
}

std::optional<std::vector<std::vector<EdgeId>>> edp_bruteforce(const MultiGraph &g, std::span<const Demand> demands,
                                                                std::size_t edge_limit) {
    if (g.num_edges() > edge_limit)
        throw budget_error("brute-force EDP limited to " + std::to_string(edge_limit) + " edges, graph has " +
                           std::to_string(g.num_edges()));
    for (const Demand &d : demands)
        if (d.s >= g.num_vertices() || d.t >= g.num_vertices())
            throw precondition_error("demand terminal outside the graph");

    std::vector<std::vector<EdgeId>> paths(demands.size());
    std::vector<bool> used(g.num_edges(), false);
    std::vector<bool> on_path(g.num_vertices(), false);

    std::function<bool(std::size_t)> route;
    std::function<bool(std::size_t, VertexId)> extend = [&](std::size_t d, VertexId x) {
        if (x == demands[d].t) {
            // Later paths may reuse this path's vertices, just not its edges.
            std::vector<VertexId> marked;
            for (VertexId v = 0; v < g.num_vertices(); ++v)
                if (on_path[v]) marked.push_back(v);
            for (VertexId v : marked) on_path[v] = false;
            const bool ok = route(d + 1);
            for (VertexId v : marked) on_path[v] = true;
            return ok;
        }
        for (EdgeId e : g.incident(x)) {
            const VertexId y = g.edge(e).other(x);
            if (used[e] || on_path[y]) continue;
            used[e] = on_path[y] = true;
            paths[d].push_back(e);
            if (extend(d, y)) return true;
            paths[d].pop_back();
            used[e] = on_path[y] = false;
        }
        return false;
    };
    route = [&](std::size_t d) {
        if (d == demands.size()) return true;
        on_path[demands[d].s] = true;
        const bool ok = extend(d, demands[d].s);
        on_path[demands[d].s] = false;
        return ok;
    };
    if (!route(0)) return std::nullopt;
    return paths;
}

}  // namespace treecut
