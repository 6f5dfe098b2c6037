#include "treecut/approx.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "treecut/error.hpp"
#include "treecut/graph_io.hpp"
#include "treecut/transform.hpp"
#include "treecut/widths.hpp"

namespace treecut {

TcwProvider oracle_provider(std::size_t size_limit) {
    return [size_limit](const MultiGraph &g, std::size_t omega) -> std::optional<TreeCutDecomposition> {
        OracleOptions options;
        options.size_limit = size_limit;
        options.empty_budget = std::nullopt;
        OracleResult r = exact_width(g, WidthVariant::tcw, options);
        if (r.value > omega) return std::nullopt;
        return std::move(r.decomposition);
    };
}

namespace {

std::string shell_quote(const std::string &s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'') out += "'\\''";
        else out += c;
    }
    return out + "'";
}

}  // namespace

TcwProvider exec_provider(std::string path) {
    return [path](const MultiGraph &g, std::size_t omega) -> std::optional<TreeCutDecomposition> {
        char name[] = "/tmp/treecut-graph-XXXXXX";
        const int fd = mkstemp(name);
        if (fd < 0) throw provider_error("cannot create a temporary file for the provider");
        close(fd);
        {
            std::ofstream out(name);
            out << write_edge_list(g);
        }
        const std::string command = shell_quote(path) + " " + std::to_string(omega) + " < " + shell_quote(name);
        FILE *pipe = popen(command.c_str(), "r");
        if (!pipe) {
            std::filesystem::remove(name);
            throw provider_error("cannot start provider " + path);
        }
        std::string output;
        char buffer[4096];
        while (const std::size_t got = fread(buffer, 1, sizeof buffer, pipe)) output.append(buffer, got);
        const int status = pclose(pipe);
        std::filesystem::remove(name);
        if (status == -1 || !WIFEXITED(status) || WEXITSTATUS(status) != 0)
            throw provider_error("provider " + path + " exited abnormally");

        const auto start = output.find_first_not_of(" \t\r\n");
        if (start == std::string::npos) throw provider_error("provider printed nothing");
        if (output.compare(start, 2, "NO") == 0) return std::nullopt;
        if (output.compare(start, 6, "DECOMP") != 0) throw provider_error("provider output must start with DECOMP or NO");
        try {
            return decomposition_from_json(std::string_view(output).substr(start + 6));
        } catch (const validation_error &e) {
            throw provider_error(std::string("provider decomposition: ") + e.what());
        }
    };
}

std::optional<TcwProvider> make_provider(const std::string &spec, std::size_t oracle_limit) {
    if (spec == "oracle") return oracle_provider(oracle_limit);
    if (spec.rfind("exec:", 0) == 0 && spec.size() > 5) return exec_provider(spec.substr(5));
    return std::nullopt;
}

ApproxResult approximate_stcw(const MultiGraph &g, std::size_t omega, const TcwProvider &provider) {
    if (omega == 0) throw precondition_error("omega must be positive");
    ApproxResult r;
    r.omega = omega;
    r.b2_threshold = 6 * omega * (omega + 1) * (omega + 1);
    r.slim_bound = 6 * (omega + 1) * (omega + 1) * (omega + 1);

    std::optional<TreeCutDecomposition> given;
    try {
        given = provider(g, omega);
    } catch (const provider_error &) {
        throw;
    } catch (const std::exception &e) {
        throw provider_error(std::string("provider failed: ") + e.what());
    }
    if (!given) {
        r.exceeds_omega = true;
        r.reason = "tree-cut width exceeds omega";
        return r;
    }
    if (auto violations = validate(*given, g); !violations.empty())
        throw provider_error("provider returned an invalid decomposition: " + violations.front());
    if (width_report(*given, g).width > 2 * omega)
        throw provider_error("provider returned a decomposition wider than 2 * omega");

    r.decomposition = make_very_nice(*given, g);
    const WidthReport report = width_report(*r.decomposition, g);
    r.width = report.width;
    r.slim_width = report.slim_width;
    for (const NodeStats &s : report.per_node) r.b2_sizes.push_back(s.children_b2.size());
    for (std::size_t t = 0; t < r.b2_sizes.size(); ++t)
        if (r.b2_sizes[t] > r.b2_threshold) {
            r.exceeds_omega = true;
            r.reason = "node " + std::to_string(t) + " has " + std::to_string(r.b2_sizes[t]) +
                       " thin adhesion-2 children, above the threshold";
            return r;
        }
    r.reason = "slim width certified";
    return r;
}

std::string approx_result_to_json(const ApproxResult &r) {
    nlohmann::ordered_json j;
    j["decision"] = r.exceeds_omega ? "no" : "yes";
    j["reason"] = r.reason;
    j["omega"] = r.omega;
    j["b2_threshold"] = r.b2_threshold;
    j["slim_bound"] = r.slim_bound;
    if (r.decomposition) {
        j["width"] = r.width;
        j["slim_width"] = r.slim_width;
        j["b2_sizes"] = r.b2_sizes;
        j["decomposition"] = nlohmann::ordered_json::parse(decomposition_to_json(*r.decomposition));
    }
    return j.dump() + "\n";
}

}  // namespace treecut
