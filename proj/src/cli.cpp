#include "treecut/cli.hpp"

#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "treecut/approx.hpp"
#include "treecut/ecw.hpp"
#include "treecut/edp.hpp"
#include "treecut/error.hpp"
#include "treecut/families.hpp"
#include "treecut/graph_io.hpp"
#include "treecut/oracle.hpp"
#include "treecut/transform.hpp"
#include "treecut/widths.hpp"

namespace treecut {

namespace {

struct Io {
    std::istream &in;
    std::ostream &out;
    std::ostream &err;

    std::string slurp(const std::string &path) const {
        if (path != "-") return read_file(path);
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }
    MultiGraph graph(const std::string &path) const { return parse_graph(slurp(path)); }
};

nlohmann::ordered_json as_json(const std::string &dumped) { return nlohmann::ordered_json::parse(dumped); }

int cmd_gen(const Io &io, const std::string &family, int r, std::size_t n, std::size_t m, std::uint64_t seed,
            const std::string &format) {
    MultiGraph g;
    if (family == "random") {
        g = random_graph(n, m, seed);
    } else {
        const auto kind = parse_family(family);
        if (!kind) throw validation_error("unknown family \"" + family + "\"");
        g = make_family(*kind, r).graph;
    }
    io.out << (format == "json" ? write_graph_json(g) : write_edge_list(g));
    return exit_ok;
}

int cmd_widths(const Io &io, const std::string &graph_path, const std::string &decomp_path) {
    const MultiGraph g = io.graph(graph_path);
    const auto d = decomposition_from_json(io.slurp(decomp_path));
    io.out << width_report_to_json(width_report(d, g));
    return exit_ok;
}

SpanningWitness read_witness(const Io &io, const std::string &path, const MultiGraph *g) {
    SpanningWitness w = witness_from_json(io.slurp(path));
    auto violations = validate(w, g);
    if (!violations.empty()) throw validation_error("invalid spanning witness", std::move(violations));
    return w;
}

int cmd_ecw_exact(const Io &io, const std::string &graph_path, std::uint64_t budget, unsigned jobs) {
    const MultiGraph g = io.graph(graph_path);
    const EcwResult r = exact_ecw(g, {budget, jobs});
    nlohmann::ordered_json j;
    j["ecw"] = r.value;
    j["forests"] = r.forests_enumerated;
    j["witness"] = as_json(witness_to_json(SpanningWitness::of_graph(g, r.forest)));
    io.out << j.dump() << "\n";
    return exit_ok;
}

int cmd_oracle(const Io &io, const std::string &graph_path, const std::string &variant_text, std::size_t limit,
               const std::optional<std::size_t> &empty_budget) {
    const auto variant = parse_width_variant(variant_text);
    if (!variant) throw validation_error("unknown variant \"" + variant_text + "\" (tcw, stcw, tcw0)");
    const MultiGraph g = io.graph(graph_path);
    OracleOptions options;
    options.size_limit = limit;
    options.empty_budget = empty_budget;
    const OracleResult r = exact_width(g, *variant, options);
    nlohmann::ordered_json j;
    j["variant"] = variant_name(*variant);
    j["value"] = r.value;
    j["empty_budget"] = r.empty_budget;
    j["exact"] = r.exact;
    j["decomposition"] = as_json(decomposition_to_json(r.decomposition));
    io.out << j.dump() << "\n";
    return exit_ok;
}

int cmd_to_witness(const Io &io, const std::string &graph_path, const std::string &decomp_path) {
    const MultiGraph g = io.graph(graph_path);
    const auto d = decomposition_from_json(io.slurp(decomp_path));
    io.out << witness_to_json(decomposition_to_witness(g, d));
    return exit_ok;
}

int cmd_to_decomp(const Io &io, const std::string &witness_path) {
    const SpanningWitness w = read_witness(io, witness_path, nullptr);
    io.out << decomposition_to_json(witness_to_decomposition(w));
    return exit_ok;
}

int cmd_verify_decomp(const Io &io, const std::string &graph_path, const std::string &decomp_path) {
    const MultiGraph g = io.graph(graph_path);
    const auto d = decomposition_from_json(io.slurp(decomp_path));
    auto violations = validate(d, g);
    if (!violations.empty()) throw validation_error("invalid tree-cut decomposition", std::move(violations));
    const WidthReport r = width_report(d, g);
    nlohmann::ordered_json j;
    j["valid"] = true;
    j["width"] = r.width;
    j["slim_width"] = r.slim_width;
    j["zero_width"] = r.zero_width;
    j["nice"] = is_nice(d, g);
    j["very_nice"] = is_very_nice(d, g);
    io.out << j.dump() << "\n";
    return exit_ok;
}

int cmd_verify_witness(const Io &io, const std::string &graph_path, const std::string &witness_path) {
    const MultiGraph g = io.graph(graph_path);
    const SpanningWitness w = read_witness(io, witness_path, &g);
    nlohmann::ordered_json j;
    j["valid"] = true;
    j["ecw"] = ecw_value(w);
    j["ghost_vertices"] = w.num_ghost_vertices();
    j["ghost_edges"] = w.num_ghost_edges();
    io.out << j.dump() << "\n";
    return exit_ok;
}

int cmd_approx(const Io &io, const std::string &graph_path, std::size_t omega, const std::string &provider_spec,
               std::size_t limit) {
    const auto provider = make_provider(provider_spec, limit);
    if (!provider) throw validation_error("unknown provider \"" + provider_spec + "\" (oracle or exec:<path>)");
    const MultiGraph g = io.graph(graph_path);
    const ApproxResult r = approximate_stcw(g, omega, *provider);
    io.out << approx_result_to_json(r);
    return r.exceeds_omega ? exit_negative : exit_ok;
}

int cmd_edp(const Io &io, const std::string &graph_path, const std::string &pairs, const std::string &witness_path,
            std::uint64_t budget) {
    const MultiGraph g = io.graph(graph_path);
    const auto demands = parse_demands(pairs);
    SpanningWitness w;
    if (!witness_path.empty()) {
        w = read_witness(io, witness_path, &g);
    } else {
        try {
            w = SpanningWitness::of_graph(g, exact_ecw(g, {budget, 1}).forest);
        } catch (const budget_error &) {
            w = SpanningWitness::of_graph(g, bfs_spanning_forest(g));
        }
    }
    const bool yes = edp_solve_dp(g, w, demands);
    nlohmann::ordered_json j;
    j["answer"] = yes ? "yes" : "no";
    j["witness_ecw"] = ecw_value(w);
    if (yes && g.num_edges() <= 14) {
        const auto paths = edp_bruteforce(g, demands);
        if (!paths) throw std::logic_error("dynamic program and brute force disagree");
        auto list = nlohmann::ordered_json::array();
        for (const auto &path : *paths) {
            auto edges = nlohmann::ordered_json::array();
            for (EdgeId e : path) edges.push_back({g.edge(e).u, g.edge(e).v});
            list.push_back(std::move(edges));
        }
        j["paths"] = std::move(list);
    }
    io.out << j.dump() << "\n";
    return yes ? exit_ok : exit_negative;
}

int cmd_export_dot(const Io &io, const std::string &graph_path, const std::string &witness_path) {
    const MultiGraph g = io.graph(graph_path);
    if (witness_path.empty()) {
        io.out << to_dot(g);
    } else {
        io.out << to_dot(read_witness(io, witness_path, &g));
    }
    return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
    const Io io{in, out, err};
    CLI::App app{"Tree-cut width toolkit", args.empty() ? "treecut" : args.front()};
    app.require_subcommand(1);
    app.fallthrough();

    std::string graph_path, decomp_path, witness_path;
    std::uint64_t budget = 1'000'000;
    unsigned jobs = 1;
    std::size_t limit = 6;

    auto *gen = app.add_subcommand("gen", "Generate a family member or a random graph");
    std::string family, format = "edgelist";
    int r = 0;
    std::size_t gen_n = 0, gen_m = 0;
    std::uint64_t seed = 1;
    gen->add_option("--family", family, "star, windmill, wall, ladder or random")->required();
    gen->add_option("--r", r, "Family parameter");
    gen->add_option("--n", gen_n, "Vertices (random)");
    gen->add_option("--m", gen_m, "Edges (random)");
    gen->add_option("--seed", seed, "Seed (random)");
    gen->add_option("--format", format, "edgelist or json")->check(CLI::IsMember({"edgelist", "json"}));

    auto add_graph = [&](CLI::App *sub) { sub->add_option("graph", graph_path, "Graph file, - for stdin")->required(); };

    auto *widths = app.add_subcommand("widths", "Width report of a decomposition");
    add_graph(widths);
    widths->add_option("--decomp", decomp_path, "Decomposition JSON")->required();

    auto *ecw = app.add_subcommand("ecw-exact", "Exact edge-cut width by forest enumeration");
    add_graph(ecw);
    ecw->add_option("--budget", budget, "Maximum number of forests");
    ecw->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto *oracle = app.add_subcommand("oracle", "Exact tcw / stcw / tcw0 on small graphs");
    add_graph(oracle);
    std::string variant = "tcw";
    std::optional<std::size_t> empty_budget = 2;
    bool full_budget = false;
    oracle->add_option("--variant", variant, "tcw, stcw or tcw0");
    oracle->add_option("--limit", limit, "Largest accepted vertex count");
    oracle->add_option("--empty-budget", empty_budget, "Maximum number of empty bags");
    oracle->add_flag("--exact", full_budget, "Use an empty-bag budget that covers every decomposition");

    auto *to_witness = app.add_subcommand("to-witness", "Spanning witness from a decomposition");
    add_graph(to_witness);
    to_witness->add_option("--decomp", decomp_path, "Decomposition JSON")->required();

    auto *to_decomp = app.add_subcommand("to-decomp", "Decomposition from a spanning witness");
    to_decomp->add_option("witness", witness_path, "Witness JSON")->required();

    auto *verify_decomp = app.add_subcommand("verify-decomp", "Validate a decomposition and report its widths");
    add_graph(verify_decomp);
    verify_decomp->add_option("--decomp", decomp_path, "Decomposition JSON")->required();

    auto *verify_witness = app.add_subcommand("verify-witness", "Validate a spanning witness and report its ecw");
    add_graph(verify_witness);
    verify_witness->add_option("--witness", witness_path, "Witness JSON")->required();

    auto *approx = app.add_subcommand("approx", "Slim tree-cut width approximation");
    add_graph(approx);
    std::size_t omega = 1;
    std::string provider = "oracle";
    approx->add_option("--omega", omega, "Target width")->required()->check(CLI::PositiveNumber);
    approx->add_option("--provider", provider, "oracle or exec:<path>");
    approx->add_option("--limit", limit, "Largest graph handed to the oracle provider");

    auto *edp = app.add_subcommand("edp", "Edge-disjoint paths along a spanning witness");
    add_graph(edp);
    std::string pairs;
    edp->add_option("--pairs", pairs, "Demands such as 0-2,1-3")->required();
    edp->add_option("--witness", witness_path, "Witness JSON (default: an optimal spanning forest)");
    edp->add_option("--budget", budget, "Forest budget when no witness is given");

    auto *dot = app.add_subcommand("export-dot", "Graphviz output");
    add_graph(dot);
    dot->add_option("--witness", witness_path, "Witness JSON to draw instead of the plain graph");

    std::vector<const char *> argv;
    for (const auto &a : args) argv.push_back(a.c_str());
    if (argv.empty()) argv.push_back("treecut");
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return exit_input;
    }

    try {
        if (gen->parsed()) return cmd_gen(io, family, r, gen_n, gen_m, seed, format);
        if (widths->parsed()) return cmd_widths(io, graph_path, decomp_path);
        if (ecw->parsed()) return cmd_ecw_exact(io, graph_path, budget, jobs);
        if (oracle->parsed()) return cmd_oracle(io, graph_path, variant, limit, full_budget ? std::nullopt : empty_budget);
        if (to_witness->parsed()) return cmd_to_witness(io, graph_path, decomp_path);
        if (to_decomp->parsed()) return cmd_to_decomp(io, witness_path);
        if (verify_decomp->parsed()) return cmd_verify_decomp(io, graph_path, decomp_path);
        if (verify_witness->parsed()) return cmd_verify_witness(io, graph_path, witness_path);
        if (approx->parsed()) return cmd_approx(io, graph_path, omega, provider, limit);
        if (edp->parsed()) return cmd_edp(io, graph_path, pairs, witness_path, budget);
        if (dot->parsed()) return cmd_export_dot(io, graph_path, witness_path);
    } catch (const budget_error &e) {
        err << "budget: " << e.what() << "\n";
        return exit_budget;
    } catch (const validation_error &e) {
        err << "invalid input: " << e.what() << "\n";
        for (const auto &v : e.violations()) err << "  " << v << "\n";
        return exit_input;
    } catch (const precondition_error &e) {
        err << "invalid input: " << e.what() << "\n";
        return exit_input;
    } catch (const provider_error &e) {
        err << "provider failure: " << e.what() << "\n";
        return exit_input;
    }
    err << app.help();
    return exit_input;
}

}  // namespace treecut
