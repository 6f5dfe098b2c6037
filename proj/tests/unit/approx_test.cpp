#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "graphs.hpp"
#include "treecut/approx.hpp"
#include "treecut/error.hpp"
#include "treecut/oracle.hpp"
#include "treecut/widths.hpp"

using namespace treecut;

namespace {

// Executable shell script printing `body`; removed with the object.
class Script {
   public:
    explicit Script(const std::string &body) {
        path_ = std::filesystem::temp_directory_path() / ("treecut-provider-" + std::to_string(counter_++) + ".sh");
        std::ofstream(path_) << "#!/bin/sh\ncat > /dev/null\n" << body;
        std::filesystem::permissions(path_, std::filesystem::perms::owner_all);
    }
    ~Script() { std::filesystem::remove(path_); }
    std::string path() const { return path_.string(); }

   private:
    static inline int counter_ = 0;
    std::filesystem::path path_;
};

}  // namespace

TEST_CASE("a tree at omega 1") {
    const MultiGraph t = testing::path(5);
    const ApproxResult r = approximate_stcw(t, 1, oracle_provider());
    CHECK_FALSE(r.exceeds_omega);
    REQUIRE(r.decomposition.has_value());
    CHECK(is_very_nice(*r.decomposition, t));
    CHECK(width_report(*r.decomposition, t).slim_width == 1);
    CHECK(r.slim_width == 1);
    CHECK(r.slim_bound == 48);
    CHECK(r.b2_threshold == 24);
}

TEST_CASE("the windmill at omega 1") {
    const MultiGraph w4 = testing::windmill4();
    const ApproxResult r = approximate_stcw(w4, 1, oracle_provider(9));
    if (r.exceeds_omega) {
        OracleOptions options;
        options.size_limit = 9;
        CHECK(exact_width(w4, WidthVariant::stcw, options).value >= 2);
    } else {
        CHECK(width_report(*r.decomposition, w4).slim_width <= r.slim_bound);
    }
}

TEST_CASE("a no from the provider is reported as stcw > omega") {
    const ApproxResult r = approximate_stcw(testing::complete(5), 1, oracle_provider());
    CHECK(r.exceeds_omega);
    CHECK_FALSE(r.decomposition.has_value());
    CHECK(approx_result_to_json(r).find("\"decision\":\"no\"") != std::string::npos);
}

TEST_CASE("exec provider") {
    const MultiGraph p = testing::path(3);
    const Script no("echo NO\n");
    CHECK(approximate_stcw(p, 1, exec_provider(no.path())).exceeds_omega);

    const Script yes(
        "echo 'DECOMP {\"root\":0,\"nodes\":[{\"id\":0,\"parent\":null,\"bag\":[1]},"
        "{\"id\":1,\"parent\":0,\"bag\":[0]},{\"id\":2,\"parent\":0,\"bag\":[2]}]}'\n");
    const ApproxResult r = approximate_stcw(p, 1, exec_provider(yes.path()));
    CHECK_FALSE(r.exceeds_omega);
    CHECK(r.slim_width == 1);

    const Script garbage("echo maybe\n");
    CHECK_THROWS_AS(approximate_stcw(p, 1, exec_provider(garbage.path())), provider_error);
    const Script crash("exit 3\n");
    CHECK_THROWS_AS(approximate_stcw(p, 1, exec_provider(crash.path())), provider_error);
    const Script wrong("echo 'DECOMP {\"root\":0,\"nodes\":[{\"id\":0,\"parent\":null,\"bag\":[0]}]}'\n");
    CHECK_THROWS_AS(approximate_stcw(p, 1, exec_provider(wrong.path())), provider_error);
    CHECK_THROWS_AS(approximate_stcw(p, 1, exec_provider("/nonexistent/provider")), provider_error);
}

TEST_CASE("a provider decomposition wider than 2 omega is rejected") {
    const TcwProvider lazy = [](const MultiGraph &g, std::size_t) {
        return std::optional(TreeCutDecomposition::single_node(g.num_vertices()));
    };
    CHECK_THROWS_AS(approximate_stcw(testing::complete(5), 1, lazy), provider_error);
}

TEST_CASE("provider specs") {
    CHECK(make_provider("oracle").has_value());
    CHECK(make_provider("exec:/bin/true").has_value());
    CHECK_FALSE(make_provider("exec:").has_value());
    CHECK_FALSE(make_provider("kim").has_value());
    CHECK_THROWS_AS(approximate_stcw(testing::path(2), 0, oracle_provider()), precondition_error);
}
