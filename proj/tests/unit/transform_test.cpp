#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "graphs.hpp"
#include "treecut/ecw.hpp"
#include "treecut/error.hpp"
#include "treecut/oracle.hpp"
#include "treecut/transform.hpp"
#include "treecut/widths.hpp"

using namespace treecut;
using testing::graph_of;

TEST_CASE("make_nice leaves a nice decomposition alone") {
    const MultiGraph w4 = testing::windmill4();
    const TreeCutDecomposition dstar = testing::windmill4_dstar();
    const TreeCutDecomposition out = make_nice(dstar, w4);
    CHECK(out.parent == dstar.parent);
    CHECK(out.bags == dstar.bags);
    CHECK(width_report(out, w4).width == 2);
}

TEST_CASE("make_nice moves a thin node next to its sibling's subtree") {
    const MultiGraph p = testing::path(3);
    TreeCutDecomposition d;
    d.add_node(std::nullopt, {0});
    d.add_node(0, {1});
    d.add_node(0, {2});
    const WidthReport before = width_report(d, p);
    const TreeCutDecomposition out = make_nice(d, p);
    CHECK(is_nice(out, p));
    const WidthReport after = width_report(out, p);
    CHECK(after.width <= before.width);
    CHECK(after.slim_width <= before.slim_width);
}

TEST_CASE("make_nice keeps the slim width when a move would subdivide a torso edge") {
    // C4 on 0-2-1-3 plus the pendant 0-4; the optimal slim decomposition is not nice.
    const MultiGraph g = graph_of(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}});
    TreeCutDecomposition d;
    d.add_node(std::nullopt, {});
    d.add_node(0, {0});
    d.add_node(0, {1});
    d.add_node(2, {2});
    d.add_node(0, {3});
    d.add_node(0, {4});
    const WidthReport before = width_report(d, g);
    CHECK(before.slim_width == 3);
    CHECK_FALSE(is_nice(d, g));
    for (const TreeCutDecomposition &out : {make_nice(d, g), make_very_nice(d, g)}) {
        CHECK(is_very_nice(out, g));
        const WidthReport after = width_report(out, g);
        CHECK(after.width <= before.width);
        CHECK(after.slim_width <= 3);
    }
}

TEST_CASE("split_decomposables") {
    const MultiGraph g = graph_of(5, {{0, 1}, {0, 3}, {1, 2}, {3, 4}});
    TreeCutDecomposition d;
    d.add_node(std::nullopt, {0});
    d.add_node(0, {1, 2, 3, 4});
    const TreeCutDecomposition out = split_decomposables(d, g);
    CHECK(is_very_nice(out, g));
    REQUIRE(out.num_nodes() == 3);
    CHECK(adhesion(out, g, 1) == 1);
    CHECK(adhesion(out, g, 2) == 1);
    CHECK(width_report(out, g).width <= width_report(d, g).width);

    const TreeCutDecomposition dstar = testing::windmill4_dstar();
    const TreeCutDecomposition same = split_decomposables(dstar, testing::windmill4());
    CHECK(same.bags == dstar.bags);

    TreeCutDecomposition bad;
    bad.add_node(std::nullopt, {0});
    bad.add_node(0, {1});
    bad.add_node(0, {2});
    CHECK_THROWS_AS(split_decomposables(bad, testing::path(3)), precondition_error);
}

TEST_CASE("make_very_nice on random decompositions") {
    std::mt19937_64 rng(11);
    for (const MultiGraph &g : testing::width_corpus(11, 40)) {
        for (int i = 0; i < 4; ++i) {
            const std::size_t nodes = std::uniform_int_distribution<std::size_t>(1, g.num_vertices() + 3)(rng);
            const TreeCutDecomposition d = testing::random_decomposition(g.num_vertices(), nodes, rng);
            const WidthReport before = width_report(d, g);
            const TreeCutDecomposition out = make_very_nice(d, g);
            CHECK(is_very_nice(out, g));
            const WidthReport after = width_report(out, g);
            CHECK(after.width <= before.width);
            CHECK(after.slim_width <= before.slim_width);
        }
    }
}

TEST_CASE("prune_empty_leaves") {
    TreeCutDecomposition d;
    d.add_node(std::nullopt, {});
    d.add_node(0, {0});
    d.add_node(0, {});
    d.add_node(2, {});
    const TreeCutDecomposition out = prune_empty_leaves(d);
    CHECK(out.num_nodes() == 2);
    CHECK(out.bags[1] == std::vector<VertexId>{0});
}

TEST_CASE("witness to decomposition") {
    const MultiGraph t = graph_of(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
    const TreeCutDecomposition d = witness_to_decomposition(SpanningWitness::of_graph(t, bfs_spanning_forest(t)));
    CHECK(d.num_nodes() == 5);
    CHECK(width_report(d, t).width == 1);

    const FamilyInstance ladder = make_family(Family::ladder, 9);
    const TreeCutDecomposition ld = witness_to_decomposition(SpanningWitness::of_graph(ladder.graph, ladder.spanning_tree));
    CHECK(width_report(ld, ladder.graph).width <= 3);

    const MultiGraph c4 = testing::cycle(4);
    const TreeCutDecomposition cd = witness_to_decomposition(SpanningWitness::of_graph(c4, {0, 1, 2}));
    CHECK(width_report(cd, c4).width <= 2);

    const MultiGraph forest = graph_of(4, {{0, 1}, {2, 3}});
    const TreeCutDecomposition fd = witness_to_decomposition(SpanningWitness::of_graph(forest, {0, 1}));
    CHECK(fd.num_nodes() == 5);
    CHECK(fd.bags[fd.root].empty());
    CHECK(validate(fd, forest).empty());
}

TEST_CASE("decomposition to witness") {
    const MultiGraph t = graph_of(4, {{0, 1}, {1, 2}, {1, 3}});
    TreeCutDecomposition d;
    d.add_node(std::nullopt, {0});
    d.add_node(0, {1});
    d.add_node(1, {2});
    d.add_node(1, {3});
    const SpanningWitness tw = decomposition_to_witness(t, d);
    CHECK(tw.num_ghost_vertices() == 0);
    CHECK(tw.num_ghost_edges() == 0);
    CHECK(ecw_value(tw) == 1);

    const MultiGraph w4 = testing::windmill4();
    const SpanningWitness ww = decomposition_to_witness(w4, testing::windmill4_dstar());
    CHECK(validate(ww, &w4).empty());
    CHECK(ecw_value(ww) == 5);
    CHECK(ecw_value(ww) <= 108);

    // Empty bags become ghost vertices; disconnected bags get ghost edges.
    const MultiGraph two = graph_of(2, {});
    TreeCutDecomposition e;
    e.add_node(std::nullopt, {});
    e.add_node(0, {0});
    e.add_node(0, {1});
    const SpanningWitness ew = decomposition_to_witness(two, e);
    CHECK(validate(ew, &two).empty());
    CHECK(ew.num_ghost_vertices() == 1);
    CHECK(ew.num_ghost_edges() == 2);
}

TEST_CASE("witness bound on optimal slim decompositions") {
    OracleOptions options;
    options.empty_budget = std::nullopt;
    for (const MultiGraph &g : testing::width_corpus(13, 40)) {
        const OracleResult r = exact_width(g, WidthVariant::stcw, options);
        const SpanningWitness w = decomposition_to_witness(g, r.decomposition);
        CHECK(validate(w, &g).empty());
        CHECK(ecw_value(w) <= 3 * (r.value + 1) * (r.value + 1));
    }
}
