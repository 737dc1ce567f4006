#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "twoclub/analysis.hpp"
#include "twoclub/graph.hpp"
#include "twoclub/io.hpp"
#include "twoclub/oracle.hpp"
#include "twoclub/report.hpp"
#include "twoclub/solver.hpp"

namespace {

using namespace twoclub;
using nlohmann::json;

struct OutputOptions {
    bool as_json = false;
    bool no_timings = false;
};

class Timer {
  public:
    double elapsed_ms() const {
        auto now = std::chrono::steady_clock::now();
        return std::chrono::duration<double, std::milli>(now - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fixed6(double x) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(6) << x;
    return out.str();
}

void emit_json(const std::string& command, json payload, const OutputOptions& out,
               const Timer& timer) {
    std::optional<double> ms;
    if (!out.no_timings) ms = timer.elapsed_ms();
    std::cout << make_report(command, std::move(payload), ms).dump(2) << '\n';
}

void print_deletions(const Graph& g, const std::vector<Edge>& deleted) {
    std::cout << "deletions " << deleted.size() << '\n';
    for (const Edge& e : deleted) {
        std::cout << "delete " << e.u + 1 << ' ' << e.v + 1;
        if (g.has_labels()) std::cout << ' ' << g.label(e.u) << ' ' << g.label(e.v);
        std::cout << '\n';
    }
}

void print_stats(const SearchStats& stats) {
    std::cout << "nodes " << stats.nodes_expanded << '\n'
              << "max-depth " << stats.max_depth << '\n'
              << "fallbacks " << stats.fallback_count << '\n';
}

json solve_payload(const Graph& g, const std::optional<Solution>& sol, const SearchStats& stats) {
    json payload = {{"instance", graph_summary_json(g)}, {"stats", stats_json(stats)}};
    if (sol) {
        payload["deleted_edges"] = edges_json(sol->deleted);
        if (g.has_labels()) payload["deleted_edge_labels"] = edge_labels_json(g, sol->deleted);
    }
    return payload;
}

void run_solve(const std::string& path, std::optional<int> budget, const OutputOptions& out) {
    Graph g = read_graph_file(path);
    Timer timer;
    if (budget) {
        DecisionResult result = solve_decision({g, *budget});
        if (out.as_json) {
            json payload = solve_payload(g, result.solution, result.stats);
            payload["budget"] = *budget;
            payload["answer"] = result.answer ? "yes" : "no";
            emit_json("solve", std::move(payload), out, timer);
            return;
        }
        std::cout << "answer " << (result.answer ? "yes" : "no") << '\n';
        if (result.solution) print_deletions(g, result.solution->deleted);
        print_stats(result.stats);
        return;
    }
    MinimizeResult result = solve_minimize(g);
    if (out.as_json) {
        json payload = solve_payload(g, result.solution, result.stats);
        payload["opt"] = result.opt;
        emit_json("solve", std::move(payload), out, timer);
        return;
    }
    std::cout << "opt " << result.opt << '\n';
    print_deletions(g, result.solution.deleted);
    print_stats(result.stats);
}

void run_oracle(const std::string& path, const std::string& method, std::optional<int> cap,
                std::optional<int> budget, const OutputOptions& out) {
    Graph g = read_graph_file(path);
    Timer timer;
    json payload = {{"instance", graph_summary_json(g)}, {"method", method}};
    if (method == "brute") {
        int limit = cap.value_or(g.edge_count());
        OracleResult result = opt_bruteforce(g, limit);
        if (out.as_json) {
            payload["cap"] = limit;
            payload["opt"] = result.opt ? json(*result.opt) : json(nullptr);
            if (result.witness) payload["deleted_edges"] = edges_json(*result.witness);
            payload["subsets_examined"] = result.subsets_examined;
            emit_json("oracle", std::move(payload), out, timer);
            return;
        }
        if (result.opt)
            std::cout << "opt " << *result.opt << '\n';
        else
            std::cout << "opt none (cap " << limit << ")\n";
        std::cout << "subsets " << result.subsets_examined << '\n';
        return;
    }
    if (budget) {
        ThreeWayResult result = solve_3k({g, *budget});
        if (out.as_json) {
            payload["budget"] = *budget;
            payload["answer"] = result.answer ? "yes" : "no";
            if (result.witness) payload["deleted_edges"] = edges_json(*result.witness);
            payload["nodes"] = result.nodes;
            emit_json("oracle", std::move(payload), out, timer);
            return;
        }
        std::cout << "answer " << (result.answer ? "yes" : "no") << '\n'
                  << "nodes " << result.nodes << '\n';
        return;
    }
    int opt = opt_via_3k(g);
    if (out.as_json) {
        payload["opt"] = opt;
        emit_json("oracle", std::move(payload), out, timer);
        return;
    }
    std::cout << "opt " << opt << '\n';
}

std::vector<Edge> read_solution_file(const std::string& path, const Graph& g) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::vector<Edge> edges;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::istringstream ss(raw);
        std::vector<std::string> tok;
        std::string t;
        while (ss >> t) tok.push_back(t);
        if (tok.empty() || tok[0] == "c") continue;
        size_t at = tok[0] == "e" || tok[0] == "delete" ? 1 : 0;
        if (tok.size() != at + 2) throw ParseError(line, "expected two endpoints");
        int u, v;
        try {
            u = std::stoi(tok[at]);
            v = std::stoi(tok[at + 1]);
        } catch (const std::exception&) {
            throw ParseError(line, "expected integer endpoints");
        }
        if (u < 1 || u > g.vertex_count() || v < 1 || v > g.vertex_count())
            throw ParseError(line, "endpoint out of range");
        edges.emplace_back(u - 1, v - 1);
    }
    return edges;
}

void run_verify(const std::string& path, const std::string& solution_path,
                const OutputOptions& out) {
    Graph g = read_graph_file(path);
    std::vector<Edge> deleted = read_solution_file(solution_path, g);
    Timer timer;
    bool ok;
    try {
        ok = verify_solution(g, {deleted});
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(e.what());  // bad input, not an internal fault
    }
    if (out.as_json) {
        json payload = {{"instance", graph_summary_json(g)},
                        {"deleted_edges", edges_json(deleted)},
                        {"valid", ok}};
        emit_json("verify", std::move(payload), out, timer);
        return;
    }
    std::cout << "valid " << (ok ? "yes" : "no") << '\n';
}

const std::map<std::string, CaseId>& case_ids() {
    static const std::map<std::string, CaseId> ids = {
        {"case1", CaseId::Case1},       {"case2", CaseId::Case2},
        {"case3", CaseId::Case3},       {"case4.1", CaseId::Case41},
        {"case4.2.1", CaseId::Case421}, {"case4.2.2", CaseId::Case422},
        {"fallback", CaseId::FallbackGeneric}};
    return ids;
}

void run_gen(const std::string& model, int n, double p, int clubs, int club_size, int noise,
             const std::string& case_id, unsigned long long seed, const std::string& out_path,
             const OutputOptions& out) {
    Graph g;
    if (model == "random") {
        g = gen_random(n, p, seed);
    } else if (model == "planted") {
        g = gen_planted(clubs, club_size, noise, seed);
    } else {
        auto it = case_ids().find(case_id);
        if (it == case_ids().end())
            throw std::runtime_error("unknown case '" + case_id + "'");
        g = gen_case_fixture(it->second, seed);
    }
    Timer timer;
    std::string text = write_graph(g);
    if (!out_path.empty()) write_graph_file(out_path, g);
    if (out.as_json) {
        json payload = {{"instance", graph_summary_json(g)},
                        {"model", model},
                        {"seed", seed},
                        {"graph", text}};
        emit_json("gen", std::move(payload), out, timer);
        return;
    }
    if (out_path.empty()) std::cout << text;
}

void run_stats(const std::string& path, const OutputOptions& out) {
    Graph g = read_graph_file(path);
    Timer timer;
    std::vector<Component> comps = component_diameters(g);
    int max_diameter = 0;
    for (const Component& c : comps) max_diameter = std::max(max_diameter, c.diameter);
    bool clubs = is_two_clubs_graph(g);
    std::optional<ConflictQuadruple> conflict = find_conflict_quadruple(g);
    if (out.as_json) {
        json payload = {{"instance", graph_summary_json(g)},
                        {"components", comps.size()},
                        {"max_diameter", max_diameter},
                        {"two_club", clubs}};
        if (conflict)
            payload["conflict"] = {conflict->a + 1, conflict->b + 1, conflict->c + 1,
                                   conflict->d + 1};
        emit_json("stats", std::move(payload), out, timer);
        return;
    }
    std::cout << "vertices " << g.vertex_count() << '\n'
              << "edges " << g.edge_count() << '\n'
              << "components " << comps.size() << '\n'
              << "max-diameter " << max_diameter << '\n'
              << "two-club " << (clubs ? "yes" : "no") << '\n';
    if (conflict)
        std::cout << "conflict " << conflict->a + 1 << ' ' << conflict->b + 1 << ' '
                  << conflict->c + 1 << ' ' << conflict->d + 1 << '\n';
}

std::vector<int> branch_sizes(const BranchRuleTable& table) {
    std::vector<int> sizes;
    for (const auto& b : table.branches) sizes.push_back(static_cast<int>(b.size()));
    return sizes;
}

void run_check_liu(int attempts, unsigned long long seed, const OutputOptions& out) {
    Timer timer;
    BranchRuleTable table = liu_case_224();
    bool gap = liu_gap_check(table);
    std::vector<int> original = branch_sizes(table);
    std::vector<int> repaired = original;
    repaired.push_back(2);
    double number_original = branching_number(original);
    double number_repaired = branching_number(repaired);

    std::optional<WitnessSearchResult> witness;
    if (attempts > 0) witness = liu_witness_search(seed, attempts);

    if (out.as_json) {
        json payload = {{"branches", table.branches.size()},
                        {"uncovered_split", gap},
                        {"number_original", number_original},
                        {"number_repaired", number_repaired}};
        if (witness) {
            payload["witness"] = {{"found", witness->found},
                                  {"attempts", attempts},
                                  {"opt", witness->opt},
                                  {"best_branch", witness->best_uncovered}};
            if (witness->found) payload["witness"]["graph"] = write_graph(witness->graph);
        }
        emit_json("check-liu", std::move(payload), out, timer);
        return;
    }
    std::cout << "branches " << table.branches.size() << '\n'
              << "uncovered-split " << (gap ? "yes" : "no") << '\n'
              << "number-original " << fixed6(number_original) << '\n'
              << "number-repaired " << fixed6(number_repaired) << '\n';
    if (witness) {
        std::cout << "witness-found " << (witness->found ? "yes" : "no") << '\n';
        if (witness->found)
            std::cout << "witness-opt " << witness->opt << '\n'
                      << "witness-best-branch " << witness->best_uncovered << '\n'
                      << write_graph(witness->graph);
    }
}

void run_recurrences(const OutputOptions& out) {
    Timer timer;
    if (out.as_json) {
        json rows = json::array();
        for (const NamedBranchingVector& row : known_branching_vectors())
            rows.push_back({{"name", row.name},
                            {"depths", row.depths},
                            {"number", branching_number(row.depths)}});
        emit_json("recurrences", {{"rows", rows}}, out, timer);
        return;
    }
    for (const NamedBranchingVector& row : known_branching_vectors()) {
        std::cout << row.name << ' ';
        for (size_t i = 0; i < row.depths.size(); ++i)
            std::cout << (i ? "," : "") << row.depths[i];
        std::cout << ' ' << fixed6(branching_number(row.depths)) << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact edge-deletion solver for 2-club clustering"};
    app.require_subcommand(1);

    OutputOptions out;
    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", out.as_json, "emit a JSON report");
        sub->add_flag("--no-timings", out.no_timings, "omit wall-clock timings from JSON output");
    };

    std::string path, solution_path, out_path;
    std::optional<int> budget, cap;
    std::string method = "brute", model = "random", case_id = "case1";
    int n = 10, clubs = 2, club_size = 4, noise = 2, attempts = 0;
    double p = 0.3;
    unsigned long long seed = 1;

    CLI::App* solve = app.add_subcommand("solve", "exact solve: decision with -k, minimization without");
    solve->add_option("input", path, "graph file")->required();
    solve->add_option("-k,--budget", budget, "deletion budget for the decision problem");
    add_common(solve);

    CLI::App* oracle = app.add_subcommand("oracle", "reference answers from slow independent searches");
    oracle->add_option("input", path, "graph file")->required();
    oracle->add_option("--method", method, "brute | 3k")->check(CLI::IsMember({"brute", "3k"}));
    oracle->add_option("--cap", cap, "largest deletion-set size the brute-force search tries");
    oracle->add_option("-k,--budget", budget, "decision budget for the 3k method");
    add_common(oracle);

    CLI::App* verify = app.add_subcommand("verify", "check a deletion set against a graph");
    verify->add_option("input", path, "graph file")->required();
    verify->add_option("solution", solution_path, "deletion set file, one edge per line")->required();
    add_common(verify);

    CLI::App* gen = app.add_subcommand("gen", "write a generated instance in canonical form");
    gen->add_option("--model", model, "random | planted | fixture")
        ->check(CLI::IsMember({"random", "planted", "fixture"}));
    gen->add_option("--n", n, "vertex count (random)");
    gen->add_option("--p", p, "edge probability (random)");
    gen->add_option("--clubs", clubs, "number of planted clubs");
    gen->add_option("--club-size", club_size, "vertices per club");
    gen->add_option("--noise", noise, "edges planted between clubs");
    gen->add_option("--case", case_id, "fixture case: case1 case2 case3 case4.1 case4.2.1 case4.2.2 fallback");
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("-o,--out", out_path, "output file (default stdout)");
    add_common(gen);

    CLI::App* stats = app.add_subcommand("stats", "structural summary of a graph file");
    stats->add_option("input", path, "graph file")->required();
    add_common(stats);

    CLI::App* check_liu = app.add_subcommand("check-liu", "audit the 13-branch table for the eight-edge obstruction");
    check_liu->add_option("--witness-attempts", attempts, "decorated-gadget search attempts (0 skips)");
    check_liu->add_option("--seed", seed, "witness search seed");
    add_common(check_liu);

    CLI::App* recurrences = app.add_subcommand("recurrences", "branching vectors and their numbers");
    add_common(recurrences);

    try {
        app.parse(argc, argv);
        if (*solve) run_solve(path, budget, out);
        if (*oracle) run_oracle(path, method, cap, budget, out);
        if (*verify) run_verify(path, solution_path, out);
        if (*gen) run_gen(model, n, p, clubs, club_size, noise, case_id, seed, out_path, out);
        if (*stats) run_stats(path, out);
        if (*check_liu) run_check_liu(attempts, seed, out);
        if (*recurrences) run_recurrences(out);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const twoclub::ParseError& e) {
        std::cerr << "error: " << path << ": " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
