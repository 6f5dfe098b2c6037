#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "graphs.hpp"
#include "treecut/error.hpp"
#include "treecut/graph_io.hpp"
#include "treecut/oracle.hpp"
#include "treecut/widths.hpp"

using namespace treecut;

namespace {

OracleOptions exact(std::size_t limit = 6) {
    OracleOptions o;
    o.size_limit = limit;
    o.empty_budget = std::nullopt;
    return o;
}

struct Best {
    std::size_t width = 99, slim = 99, zero = 99;
};

// Every rooted tree on up to n + 2 nodes (parent below child) with every bag
// assignment; independent of the subset recursion.
Best brute_force(const MultiGraph &g) {
    const std::size_t n = g.num_vertices();
    Best best;
    for (std::size_t nodes = 1; nodes <= n + 2; ++nodes) {
        std::size_t trees = 1, bags = 1;
        for (std::size_t i = 2; i < nodes; ++i) trees *= i;
        for (std::size_t i = 0; i < n; ++i) bags *= nodes;
        for (std::size_t code = 0; code < trees; ++code) {
            TreeCutDecomposition shape;
            shape.add_node(std::nullopt, {});
            for (std::size_t i = 1, rest = code; i < nodes; rest /= i, ++i) shape.add_node(NodeId(rest % i), {});
            for (std::size_t assign = 0; assign < bags; ++assign) {
                TreeCutDecomposition d = shape;
                for (std::size_t v = 0, rest = assign; v < n; ++v, rest /= nodes)
                    d.bags[rest % nodes].push_back(static_cast<VertexId>(v));
                const WidthReport r = width_report(d, g);
                best.width = std::min(best.width, r.width);
                best.slim = std::min(best.slim, r.slim_width);
                best.zero = std::min(best.zero, r.zero_width);
            }
        }
    }
    return best;
}

}  // namespace

TEST_CASE("variant names") {
    CHECK(parse_width_variant("stcw") == WidthVariant::stcw);
    CHECK_FALSE(parse_width_variant("ecw").has_value());
    CHECK(variant_name(WidthVariant::tcw0) == "tcw0");
}

TEST_CASE("K2") {
    const MultiGraph k2 = testing::path(2);
    CHECK(exact_width(k2, WidthVariant::tcw).value == 1);
    CHECK(exact_width(k2, WidthVariant::stcw).value == 1);
    // The 1-center keeps the far endpoint (degree 1) in every torso.
    CHECK(exact_width(k2, WidthVariant::tcw0).value == 2);
}

TEST_CASE("star S4") {
    const MultiGraph s4 = make_family(Family::star, 4).graph;
    const OracleResult slim = exact_width(s4, WidthVariant::stcw);
    CHECK(slim.value == 1);
    CHECK(width_report(slim.decomposition, s4).slim_width == 1);
    const OracleResult zero = exact_width(s4, WidthVariant::tcw0, exact());
    CHECK(zero.value == 3);
    CHECK(zero.exact);
}

TEST_CASE("windmill W4") {
    const MultiGraph w4 = testing::windmill4();
    OracleOptions options;
    options.size_limit = 9;
    const OracleResult tcw = exact_width(w4, WidthVariant::tcw, options);
    CHECK(tcw.value == 2);
    CHECK_FALSE(tcw.exact);
    CHECK(tcw.empty_budget == 2);
    const OracleResult stcw = exact_width(w4, WidthVariant::stcw, options);
    CHECK(stcw.value == 4);
    CHECK(width_report(stcw.decomposition, w4).slim_width == 4);
}

TEST_CASE("size limit") {
    CHECK_THROWS_AS(exact_width(testing::path(7), WidthVariant::tcw), budget_error);
    CHECK_THROWS_AS(exact_width(testing::path(15), WidthVariant::tcw, exact(20)), budget_error);
    CHECK_THROWS_AS(exact_treewidth(testing::path(17)), budget_error);
}

TEST_CASE("oracle decompositions attain the reported value") {
    for (const MultiGraph &g : testing::width_corpus(3, 30)) {
        const OracleResult tcw = exact_width(g, WidthVariant::tcw, exact());
        const OracleResult stcw = exact_width(g, WidthVariant::stcw, exact());
        const OracleResult zero = exact_width(g, WidthVariant::tcw0, exact());
        CHECK(width_report(tcw.decomposition, g).width == tcw.value);
        CHECK(width_report(stcw.decomposition, g).slim_width == stcw.value);
        CHECK(width_report(zero.decomposition, g).zero_width == zero.value);
        CHECK(tcw.value <= stcw.value);
        CHECK(stcw.value <= zero.value);
    }
}

TEST_CASE("oracle agrees with brute force over small decompositions") {
    for (std::size_t n = 1; n <= 4; ++n)
        for (const MultiGraph &g : graphs_up_to_isomorphism(n, true)) {
            const Best b = brute_force(g);
            CAPTURE(write_edge_list(g));
            CHECK(exact_width(g, WidthVariant::tcw, exact()).value == b.width);
            CHECK(exact_width(g, WidthVariant::stcw, exact()).value == b.slim);
            CHECK(exact_width(g, WidthVariant::tcw0, exact()).value == b.zero);
        }
}

TEST_CASE("treewidth") {
    CHECK(exact_treewidth(MultiGraph(3)) == 0);
    CHECK(exact_treewidth(testing::path(6)) == 1);
    CHECK(exact_treewidth(testing::cycle(4)) == 2);
    CHECK(exact_treewidth(testing::complete(4)) == 3);
    CHECK(exact_treewidth(testing::complete(6)) == 5);
    CHECK(exact_treewidth(testing::windmill4()) == 2);
    CHECK(exact_treewidth(make_family(Family::wall, 3).graph) == 2);
}

TEST_CASE("very nice search") {
    for (const MultiGraph &g : testing::width_corpus(5, 30)) {
        const std::size_t tcw = exact_width(g, WidthVariant::tcw, exact()).value;
        const std::size_t stcw = exact_width(g, WidthVariant::stcw, exact()).value;
        const auto found = find_very_nice(g, 99, stcw);
        REQUIRE(found.has_value());
        CHECK(is_very_nice(*found, g));
        CHECK(width_report(*found, g).slim_width <= stcw);
        CHECK_FALSE(find_very_nice(g, 99, stcw - 1).has_value());
        CHECK_FALSE(find_very_nice(g, tcw - 1, 99).has_value());
    }
    CHECK_THROWS_AS(find_very_nice(testing::path(11), 1, 1), budget_error);
}
