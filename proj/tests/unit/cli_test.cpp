#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "graphs.hpp"
#include "treecut/cli.hpp"
#include "treecut/decomposition.hpp"
#include "treecut/graph_io.hpp"

using namespace treecut;
using nlohmann::json;

namespace {

struct Run {
    int code = 0;
    std::string out, err;
};

Run run(std::vector<std::string> args, const std::string &input = "") {
    args.insert(args.begin(), "treecut");
    std::istringstream in(input);
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(args, in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

class TempDir {
   public:
    TempDir() {
        path_ = std::filesystem::temp_directory_path() / ("treecut-cli-" + std::to_string(::getpid()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    std::string write(const std::string &name, const std::string &text) const {
        const auto p = path_ / name;
        std::ofstream(p) << text;
        return p.string();
    }

   private:
    std::filesystem::path path_;
};

}  // namespace

TEST_CASE("gen") {
    const Run r = run({"gen", "--family", "windmill", "--r", "4"});
    CHECK(r.code == exit_ok);
    const MultiGraph g = parse_edge_list(r.out);
    CHECK(g.same_structure(testing::windmill4()));

    const Run j = run({"gen", "--family", "random", "--n", "6", "--m", "7", "--seed", "3", "--format", "json"});
    CHECK(j.code == exit_ok);
    CHECK(parse_graph_json(j.out).num_edges() == 7);

    CHECK(run({"gen", "--family", "hypercube", "--r", "3"}).code == exit_input);
    CHECK(run({"gen"}).code == exit_input);
}

TEST_CASE("widths and verify-decomp") {
    TempDir dir;
    const std::string g = dir.write("w4.txt", write_edge_list(testing::windmill4()));
    const std::string d = dir.write("d.json", decomposition_to_json(testing::windmill4_dstar()));
    const Run r = run({"widths", "--decomp", d, g});
    CHECK(r.code == exit_ok);
    const json report = json::parse(r.out);
    CHECK(report["width"] == 2);
    CHECK(report["slim_width"] == 5);

    const Run v = run({"verify-decomp", "--decomp", d, g});
    CHECK(v.code == exit_ok);
    CHECK(json::parse(v.out)["very_nice"] == true);

    const std::string bad = dir.write("bad.json", "{\"root\":0,\"nodes\":[{\"id\":0,\"parent\":null,\"bag\":[0]}]}");
    const Run b = run({"verify-decomp", "--decomp", bad, g});
    CHECK(b.code == exit_input);
    CHECK(b.err.find("invalid") != std::string::npos);
}

TEST_CASE("graph from stdin") {
    const Run r = run({"ecw-exact", "-"}, write_edge_list(testing::cycle(4)));
    CHECK(r.code == exit_ok);
    CHECK(json::parse(r.out)["ecw"] == 2);
    CHECK(json::parse(r.out)["forests"] == 4);
}

TEST_CASE("budget exit code") {
    TempDir dir;
    const std::string g = dir.write("ladder.txt", write_edge_list(make_family(Family::ladder, 9).graph));
    CHECK(run({"ecw-exact", "--budget", "100", g}).code == exit_budget);
    CHECK(run({"oracle", g}).code == exit_budget);
}

TEST_CASE("oracle") {
    TempDir dir;
    const std::string g = dir.write("s4.txt", write_edge_list(make_family(Family::star, 4).graph));
    const Run r = run({"oracle", "--variant", "stcw", g});
    CHECK(r.code == exit_ok);
    const json j = json::parse(r.out);
    CHECK(j["value"] == 1);
    CHECK(j["exact"] == false);
    const Run e = run({"oracle", "--variant", "tcw0", "--exact", g});
    CHECK(json::parse(e.out)["value"] == 3);
    CHECK(json::parse(e.out)["exact"] == true);
    CHECK(run({"oracle", "--variant", "ecw", g}).code == exit_input);
}

TEST_CASE("witness round trip through the cli") {
    TempDir dir;
    const std::string g = dir.write("w4.txt", write_edge_list(testing::windmill4()));
    const std::string d = dir.write("d.json", decomposition_to_json(testing::windmill4_dstar()));
    const Run w = run({"to-witness", "--decomp", d, g});
    REQUIRE(w.code == exit_ok);
    const std::string wpath = dir.write("w.json", w.out);
    const Run v = run({"verify-witness", "--witness", wpath, g});
    CHECK(v.code == exit_ok);
    CHECK(json::parse(v.out)["ecw"] == 5);
    const Run back = run({"to-decomp", wpath});
    CHECK(back.code == exit_ok);
    CHECK(validate(decomposition_from_json(back.out), testing::windmill4()).empty());

    const std::string c4 = dir.write("c4.txt", write_edge_list(testing::cycle(4)));
    CHECK(run({"verify-witness", "--witness", wpath, c4}).code == exit_input);
}

TEST_CASE("approx") {
    TempDir dir;
    const std::string tree = dir.write("tree.txt", write_edge_list(testing::path(5)));
    const Run r = run({"approx", "--omega", "1", tree});
    CHECK(r.code == exit_ok);
    const json j = json::parse(r.out);
    CHECK(j["decision"] == "yes");
    CHECK(j["slim_width"] == 1);

    const std::string k5 = dir.write("k5.txt", write_edge_list(testing::complete(5)));
    CHECK(run({"approx", "--omega", "1", k5}).code == exit_negative);
    CHECK(run({"approx", "--omega", "1", "--provider", "exec:/nonexistent", tree}).code == exit_input);
    CHECK(run({"approx", "--omega", "1", "--provider", "magic", tree}).code == exit_input);
}

TEST_CASE("edp") {
    TempDir dir;
    const std::string c4 = dir.write("c4.txt", write_edge_list(testing::cycle(4)));
    const Run yes = run({"edp", "--pairs", "0-2,0-2", c4});
    CHECK(yes.code == exit_ok);
    const json j = json::parse(yes.out);
    CHECK(j["answer"] == "yes");
    CHECK(j["paths"].size() == 2);
    const Run no = run({"edp", "--pairs", "0-2,1-3", c4});
    CHECK(no.code == exit_negative);
    CHECK(json::parse(no.out)["answer"] == "no");
    CHECK(run({"edp", "--pairs", "0-9", c4}).code == exit_input);
}

TEST_CASE("export-dot") {
    TempDir dir;
    const std::string c4 = dir.write("c4.txt", write_edge_list(testing::cycle(4)));
    const Run r = run({"export-dot", c4});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("graph") != std::string::npos);
}

TEST_CASE("usage errors and help") {
    CHECK(run({}).code == exit_input);
    CHECK(run({"--help"}).code == exit_ok);
    CHECK(run({"widths", "missing.txt"}).code == exit_input);
    CHECK(run({"ecw-exact", "/nonexistent/graph.txt"}).code == exit_input);
}

TEST_CASE("the installed binary reports exit codes") {
    TempDir dir;
    const std::string k5 = dir.write("k5.txt", write_edge_list(testing::complete(5)));
    const std::string command = std::string(TREECUT_CLI_PATH) + " approx --omega 1 " + k5 + " > /dev/null";
    const int status = std::system(command.c_str());
    REQUIRE(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == exit_negative);
}
