#include <doctest.h>

#include <random>
#include <set>

#include "graphs.hpp"
#include "treecut/ecw.hpp"
#include "treecut/edp.hpp"
#include "treecut/error.hpp"
#include "treecut/witness.hpp"

using namespace treecut;
using testing::graph_of;

namespace {

bool solve(const MultiGraph &g, std::vector<Demand> demands) {
    return edp_solve_dp(g, SpanningWitness::of_graph(g, bfs_spanning_forest(g)), demands);
}

// Each path is a walk from s to t and no edge is used twice overall.
bool valid_system(const MultiGraph &g, const std::vector<Demand> &demands,
                  const std::vector<std::vector<EdgeId>> &paths) {
    if (paths.size() != demands.size()) return false;
    std::set<EdgeId> used;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        VertexId at = demands[i].s;
        for (EdgeId e : paths[i]) {
            if (!used.insert(e).second) return false;
            if (g.edge(e).u != at && g.edge(e).v != at) return false;
            at = g.edge(e).other(at);
        }
        if (at != demands[i].t) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("demand parsing") {
    const auto d = parse_demands("0-2, 1-3");
    REQUIRE(d.size() == 2);
    CHECK(d[0].s == 0);
    CHECK(d[1].t == 3);
    CHECK_THROWS_AS(parse_demands("0-"), validation_error);
    CHECK_THROWS_AS(parse_demands("a-b"), validation_error);
}

TEST_CASE("C4 examples") {
    const MultiGraph c4 = testing::cycle(4);
    CHECK(solve(c4, {{0, 2}, {0, 2}}));
    CHECK_FALSE(solve(c4, {{0, 2}, {1, 3}}));
    CHECK(solve(c4, {{0, 1}}));
    CHECK_FALSE(solve(c4, {{0, 2}, {0, 2}, {0, 2}}));

    const auto paths = edp_bruteforce(c4, std::vector<Demand>{{0, 2}, {0, 2}});
    REQUIRE(paths.has_value());
    CHECK(valid_system(c4, {{0, 2}, {0, 2}}, *paths));
    CHECK_FALSE(edp_bruteforce(c4, std::vector<Demand>{{0, 2}, {1, 3}}).has_value());
}

TEST_CASE("trivial and disconnected demands") {
    const MultiGraph g = graph_of(4, {{0, 1}, {2, 3}});
    CHECK(solve(g, {{1, 1}}));
    CHECK(solve(g, {{0, 1}, {3, 2}}));
    CHECK_FALSE(solve(g, {{0, 2}}));
    CHECK(solve(g, {}));
}

TEST_CASE("ghost edges carry no paths") {
    const MultiGraph p = testing::path(3);
    SpanningWitness w = SpanningWitness::of_graph(p, {0, 1});
    const VertexId x = w.host.add_vertex();
    w.host.add_edge(0, x);
    w.host.add_edge(x, 2);
    w.ghost_edge.push_back(true);
    w.ghost_edge.push_back(true);
    w.forest = {0, 1, 2};
    REQUIRE(validate(w, &p).empty());
    CHECK_FALSE(edp_solve_dp(p, w, std::vector<Demand>{{0, 2}, {0, 2}}));
    CHECK(edp_solve_dp(p, w, std::vector<Demand>{{0, 2}}));
}

TEST_CASE("brute force limit") {
    CHECK_THROWS_AS(edp_bruteforce(testing::cycle(15), std::vector<Demand>{{0, 1}}), budget_error);
}

TEST_CASE("dynamic program matches brute force on random instances") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 150; ++i) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 7)(rng);
        const std::size_t m =
            std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(12, n * (n - 1) / 2))(rng);
        const MultiGraph g = random_graph(n, m, rng());
        std::vector<Demand> demands;
        const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
        std::uniform_int_distribution<VertexId> vertex(0, static_cast<VertexId>(n - 1));
        for (std::size_t j = 0; j < k; ++j) demands.push_back({vertex(rng), vertex(rng)});
        const SpanningWitness w = SpanningWitness::of_graph(g, exact_ecw(g).forest);
        const auto brute = edp_bruteforce(g, demands);
        CHECK(edp_solve_dp(g, w, demands) == brute.has_value());
        if (brute) CHECK(valid_system(g, demands, *brute));
    }
}

TEST_CASE("state statistics") {
    EdpStats stats;
    const MultiGraph k4 = testing::complete(4);
    CHECK(edp_solve_dp(k4, SpanningWitness::of_graph(k4, bfs_spanning_forest(k4)), std::vector<Demand>{{0, 1}, {2, 3}},
                       &stats));
    CHECK(stats.max_states > 0);
    CHECK(stats.max_boundary >= 3);
}
