#include "treecut/ecw.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numeric>
#include <thread>

#include "treecut/error.hpp"
#include "treecut/oracle.hpp"
#include "treecut/transform.hpp"

namespace treecut {

namespace {

// Forest rooted at the smallest vertex of every component.
struct RootedForest {
    std::vector<VertexId> up;  // parent vertex; a root points to itself
    std::vector<std::size_t> depth;
};

RootedForest root_forest(const MultiGraph &h, std::span<const EdgeId> forest) {
    const std::size_t n = h.num_vertices();
    std::vector<std::vector<VertexId>> adj(n);
    for (EdgeId e : forest) {
        adj[h.edge(e).u].push_back(h.edge(e).v);
        adj[h.edge(e).v].push_back(h.edge(e).u);
    }
    RootedForest rf{std::vector<VertexId>(n), std::vector<std::size_t>(n, 0)};
    std::vector<bool> seen(n, false);
    for (VertexId s = 0; s < n; ++s) {
        if (seen[s]) continue;
        seen[s] = true;
        rf.up[s] = s;
        std::vector<VertexId> queue{s};
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (VertexId y : adj[queue[i]])
                if (!seen[y]) {
                    seen[y] = true;
                    rf.up[y] = queue[i];
                    rf.depth[y] = rf.depth[queue[i]] + 1;
                    queue.push_back(y);
                }
    }
    return rf;
}

template <class Visit>
void walk_path(const RootedForest &rf, VertexId a, VertexId b, Visit &&visit) {
    while (a != b) {
        if (rf.depth[a] < rf.depth[b]) std::swap(a, b);
        visit(a);
        a = rf.up[a];
    }
    visit(a);
}

std::vector<bool> forest_mask(const MultiGraph &h, std::span<const EdgeId> forest) {
    if (!is_maximal_spanning_forest(h, forest)) throw validation_error("edge set is not a maximal spanning forest");
    std::vector<bool> in(h.num_edges(), false);
    for (EdgeId e : forest) in[e] = true;
    return in;
}

std::size_t ecw_unchecked(const MultiGraph &h, const std::vector<bool> &in_forest, std::span<const EdgeId> forest,
                          std::vector<std::size_t> &count) {
    const RootedForest rf = root_forest(h, forest);
    std::fill(count.begin(), count.end(), 0);
    std::size_t best = 0;
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
        if (in_forest[e]) continue;
        walk_path(rf, h.edge(e).u, h.edge(e).v, [&](VertexId x) { best = std::max(best, ++count[x]); });
    }
    return best + 1;
}

// Union-find with undo; no path compression so unions can be rolled back.
class RollbackUnionFind {
   public:
    explicit RollbackUnionFind(std::size_t n) : up_(n), size_(n, 1) { std::iota(up_.begin(), up_.end(), VertexId{0}); }

    VertexId find(VertexId x) const {
        while (up_[x] != x) x = up_[x];
        return x;
    }
    bool unite(VertexId a, VertexId b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        up_[b] = a;
        size_[a] += size_[b];
        history_.push_back(b);
        return true;
    }
    void undo() {
        const VertexId b = history_.back();
        history_.pop_back();
        size_[up_[b]] -= size_[b];
        up_[b] = b;
    }
    const std::vector<VertexId> &parents() const { return up_; }

   private:
    std::vector<VertexId> up_;
    std::vector<std::size_t> size_;
    std::vector<VertexId> history_;
};

struct Best {
    std::size_t value = static_cast<std::size_t>(-1);
    std::vector<EdgeId> forest;

    void offer(std::size_t v, const std::vector<EdgeId> &f) {
        // Forests arrive in lexicographic order, so strict improvement keeps the first optimum.
        if (v < value) {
            value = v;
            forest = f;
        }
    }
};

struct Task {
    std::size_t next = 0;
    std::vector<EdgeId> chosen;
};

// Include-first recursion over the non-loop edges in id order. The include
// branch is taken whenever it keeps the edge set acyclic; the exclude branch
// only when the endpoints can still be joined by later edges, so every leaf is
// a maximal spanning forest and each appears exactly once.
class ForestEnumerator {
   public:
    ForestEnumerator(const MultiGraph &g, std::vector<EdgeId> order, std::atomic<std::uint64_t> &counter,
                     std::uint64_t budget)
        : g_(g),
          order_(std::move(order)),
          uf_(g.num_vertices()),
          counter_(counter),
          budget_(budget),
          in_forest_(g.num_edges(), false),
          scratch_(g.num_vertices(), 0) {}

    void run(const Task &task, Best &best) {
        for (EdgeId e : task.chosen) include(e);
        descend(task.next, best, nullptr, 0);
        for (std::size_t i = 0; i < task.chosen.size(); ++i) exclude_last();
    }

    // Collects the subproblems found after `depth` free decisions, in DFS order.
    void split(std::size_t depth, std::vector<Task> &tasks) {
        Best unused;
        descend(0, unused, &tasks, depth);
    }

   private:
    void include(EdgeId e) {
        uf_.unite(g_.edge(e).u, g_.edge(e).v);
        chosen_.push_back(e);
        in_forest_[e] = true;
    }
    void exclude_last() {
        in_forest_[chosen_.back()] = false;
        chosen_.pop_back();
        uf_.undo();
    }

    bool joinable_later(std::size_t i) const {
        std::vector<VertexId> up = uf_.parents();
        auto find = [&](VertexId x) {
            while (up[x] != x) x = up[x] = up[up[x]];
            return x;
        };
        for (std::size_t j = i + 1; j < order_.size(); ++j) {
            const VertexId a = find(g_.edge(order_[j]).u), b = find(g_.edge(order_[j]).v);
            if (a != b) up[a] = b;
        }
        return find(g_.edge(order_[i]).u) == find(g_.edge(order_[i]).v);
    }

    void descend(std::size_t i, Best &best, std::vector<Task> *tasks, std::size_t depth) {
        if (tasks && depth == 0) {
            tasks->push_back({i, chosen_});
            return;
        }
        if (i == order_.size()) {
            if (tasks) {
                tasks->push_back({i, chosen_});
                return;
            }
            if (counter_.fetch_add(1, std::memory_order_relaxed) >= budget_)
                throw budget_error("spanning forest enumeration exceeded budget of " + std::to_string(budget_));
            std::vector<EdgeId> sorted = chosen_;
            std::sort(sorted.begin(), sorted.end());
            best.offer(ecw_unchecked(g_, in_forest_, sorted, scratch_), sorted);
            return;
        }
        const Edge &e = g_.edge(order_[i]);
        if (uf_.find(e.u) == uf_.find(e.v)) {
            descend(i + 1, best, tasks, depth);
            return;
        }
        include(order_[i]);
        descend(i + 1, best, tasks, depth ? depth - 1 : 0);
        exclude_last();
        if (joinable_later(i)) descend(i + 1, best, tasks, depth ? depth - 1 : 0);
    }

    const MultiGraph &g_;
    std::vector<EdgeId> order_;
    RollbackUnionFind uf_;
    std::atomic<std::uint64_t> &counter_;
    std::uint64_t budget_;
    std::vector<EdgeId> chosen_;
    std::vector<bool> in_forest_;
    std::vector<std::size_t> scratch_;
};

long double determinant(std::vector<std::vector<long double>> a) {
    const std::size_t n = a.size();
    long double det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::fabs(a[r][c]) > std::fabs(a[pivot][c])) pivot = r;
        if (a[pivot][c] == 0) return 0;
        if (pivot != c) {
            std::swap(a[pivot], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const long double f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

}  // namespace

std::vector<EdgeId> local_feedback_set(const MultiGraph &h, std::span<const EdgeId> forest, VertexId v) {
    if (v >= h.num_vertices()) throw precondition_error("unknown vertex " + std::to_string(v));
    const auto in_forest = forest_mask(h, forest);
    const RootedForest rf = root_forest(h, forest);
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
        if (in_forest[e]) continue;
        bool hit = false;
        walk_path(rf, h.edge(e).u, h.edge(e).v, [&](VertexId x) { hit = hit || x == v; });
        if (hit) out.push_back(e);
    }
    return out;
}

std::vector<std::size_t> local_feedback_sizes(const MultiGraph &h, std::span<const EdgeId> forest) {
    const auto in_forest = forest_mask(h, forest);
    std::vector<std::size_t> count(h.num_vertices(), 0);
    ecw_unchecked(h, in_forest, forest, count);
    return count;
}

std::size_t ecw_value(const MultiGraph &h, std::span<const EdgeId> forest) {
    const auto in_forest = forest_mask(h, forest);
    std::vector<std::size_t> count(h.num_vertices(), 0);
    return ecw_unchecked(h, in_forest, forest, count);
}

long double count_spanning_forests(const MultiGraph &g) {
    const auto comp = g.component_ids();
    const std::size_t k = g.num_components();
    std::vector<std::vector<VertexId>> members(k);
    std::vector<std::size_t> local(g.num_vertices(), 0);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        local[v] = members[comp[v]].size();
        members[comp[v]].push_back(v);
    }
    long double total = 1;
    for (std::size_t c = 0; c < k; ++c) {
        const std::size_t s = members[c].size();
        if (s == 1) continue;
        // Laplacian with the first member's row and column removed.
        std::vector<std::vector<long double>> lap(s - 1, std::vector<long double>(s - 1, 0));
        for (VertexId v : members[c])
            for (EdgeId e : g.incident(v)) {
                const Edge &ed = g.edge(e);
                if (ed.is_loop() || ed.u != v) continue;
                const std::size_t a = local[ed.u], b = local[ed.v];
                if (a) lap[a - 1][a - 1] += 1;
                if (b) lap[b - 1][b - 1] += 1;
                if (a && b) {
                    lap[a - 1][b - 1] -= 1;
                    lap[b - 1][a - 1] -= 1;
                }
            }
        total *= std::round(determinant(std::move(lap)));
    }
    return total;
}

EcwResult exact_ecw(const MultiGraph &g, const EcwOptions &options) {
    const long double count = count_spanning_forests(g);
    if (count > static_cast<long double>(options.budget))
        throw budget_error("graph has about " + std::to_string(static_cast<double>(count)) +
                           " spanning forests, above the budget of " + std::to_string(options.budget));

    std::vector<EdgeId> order;
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (!g.edge(e).is_loop()) order.push_back(e);

    std::atomic<std::uint64_t> counter{0};
    const unsigned jobs = std::max(1u, options.jobs);
    std::vector<Task> tasks;
    if (jobs == 1) {
        tasks.push_back({});
    } else {
        std::atomic<std::uint64_t> unused{0};
        ForestEnumerator splitter(g, order, unused, options.budget);
        std::size_t depth = 1;
        while ((1ull << depth) < 8ull * jobs && depth < 20) ++depth;
        splitter.split(depth, tasks);
    }

    std::vector<Best> results(tasks.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                ForestEnumerator en(g, order, counter, options.budget);
                en.run(tasks[i], results[i]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = tasks.size();
            }
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < std::min<std::size_t>(jobs, tasks.size()); ++j) pool.emplace_back(worker);
        for (auto &t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    // Tasks are in DFS order, so the first strict minimum is the lexicographic first.
    Best best;
    for (const Best &r : results)
        if (r.value != static_cast<std::size_t>(-1)) best.offer(r.value, r.forest);
    return {best.value, best.forest, counter.load()};
}

SecResult sec_upper(const MultiGraph &g, const std::optional<TreeCutDecomposition> &d, const SecOptions &options) {
    SecResult best;
    best.witness = SpanningWitness::of_graph(g, bfs_spanning_forest(g));
    best.value = ecw_value(best.witness);
    best.source = "bfs-forest";

    try {
        EcwResult r = exact_ecw(g, options.ecw);
        if (r.value <= best.value) {
            best.value = r.value;
            best.witness = SpanningWitness::of_graph(g, std::move(r.forest));
            best.source = "exact-ecw";
        }
    } catch (const budget_error &) {
    }

    std::optional<TreeCutDecomposition> slim = d;
    if (!slim && g.num_vertices() <= options.oracle_limit) {
        OracleOptions oo;
        oo.size_limit = options.oracle_limit;
        slim = exact_width(g, WidthVariant::stcw, oo).decomposition;
    }
    if (slim) {
        SpanningWitness w = decomposition_to_witness(g, *slim);
        const std::size_t v = ecw_value(w);
        if (v < best.value) {
            best.value = v;
            best.witness = std::move(w);
            best.source = "decomposition";
        }
    }
    return best;
}

}  // namespace treecut
