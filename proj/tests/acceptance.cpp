// Acceptance gate: each criterion prints one [PASS]/[FAIL] line with a short
// factual detail. Run with a criterion number (1..9) or "all" (the default).
// Exit code 0 iff every selected criterion passed.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "twoclub/analysis.hpp"
#include "twoclub/graph.hpp"
#include "twoclub/io.hpp"
#include "twoclub/oracle.hpp"
#include "twoclub/reduction.hpp"
#include "twoclub/solver.hpp"

namespace {

using namespace twoclub;

struct Verdict {
    bool ok = true;
    std::string detail;
};

std::string fixed6(double x) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(6) << x;
    return out.str();
}

Graph path_graph(int s) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < s; ++i) edges.emplace_back(i, i + 1);
    return make_graph(s, edges);
}

Graph cycle_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return make_graph(n, edges);
}

Graph disjoint_union(const std::vector<Graph>& parts) {
    int n = 0;
    std::vector<Edge> edges;
    for (const Graph& part : parts) {
        for (const Edge& e : part.edges()) edges.emplace_back(e.u + n, e.v + n);
        n += part.vertex_count();
    }
    return make_graph(n, edges);
}

int path_cuts(int s) { return (s + 2) / 3 - 1; }
int cycle_cuts(int n) { return (n + 2) / 3; }

// Solver against a known optimum: exact minimum, a yes at the optimum and a
// no one below it, certificate verified.
bool solver_agrees(const Graph& g, int opt, std::string& complaint) {
    MinimizeResult res = solve_minimize(g);
    if (res.opt != opt) {
        complaint = "minimize found " + std::to_string(res.opt) + ", oracle says " + std::to_string(opt);
        return false;
    }
    if (!verify_solution(g, res.solution)) {
        complaint = "certificate of size " + std::to_string(res.opt) + " does not verify";
        return false;
    }
    if (!solve_decision({g, opt}).answer) {
        complaint = "decision is no at the optimum " + std::to_string(opt);
        return false;
    }
    if (opt > 0 && solve_decision({g, opt - 1}).answer) {
        complaint = "decision is yes below the optimum " + std::to_string(opt);
        return false;
    }
    return true;
}

// ---------------------------------------------------------------- criterion 1

Verdict criterion1() {
    Verdict v;
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < 5; ++u)
        for (int w = u + 1; w < 5; ++w) pairs.emplace_back(u, w);
    int max_opt = 0;
    for (int mask = 0; mask < (1 << 10); ++mask) {
        std::vector<Edge> edges;
        for (int bit = 0; bit < 10; ++bit)
            if (mask & (1 << bit)) edges.emplace_back(pairs[bit].first, pairs[bit].second);
        Graph g = make_graph(5, edges);
        int opt = opt_exact_bruteforce(g);
        max_opt = std::max(max_opt, opt);
        std::string complaint;
        if (!solver_agrees(g, opt, complaint)) {
            v.ok = false;
            v.detail = "graph mask " + std::to_string(mask) + ": " + complaint;
            return v;
        }
    }
    v.detail = "all 1024 five-vertex graphs solved exactly, optima up to " + std::to_string(max_opt);
    return v;
}

// ---------------------------------------------------------------- criterion 2

Graph random_suite_instance(int i) {
    const double probs[3] = {0.2, 0.35, 0.5};
    int n = 6 + (i % 7);
    double p = probs[(i / 7) % 3];
    return gen_random(n, p, 1000ULL + static_cast<unsigned long long>(i));
}

Verdict criterion2() {
    Verdict v;
    int brute_checked = 0;
    for (int i = 0; i < 500; ++i) {
        Graph g = random_suite_instance(i);
        int opt = opt_via_3k(g);
        std::string complaint;
        if (!solver_agrees(g, opt, complaint)) {
            v.ok = false;
            v.detail = "instance " + std::to_string(i) + ": " + complaint;
            return v;
        }
        if (g.edge_count() <= 16) {
            OracleResult brute = opt_bruteforce(g, opt);
            if (!brute.opt || *brute.opt != opt) {
                v.ok = false;
                v.detail = "instance " + std::to_string(i) + ": the two oracles disagree";
                return v;
            }
            ++brute_checked;
        }
    }
    v.detail = "500 random instances match the bounded 3-way oracle, " +
               std::to_string(brute_checked) + " of them cross-checked by brute force";
    return v;
}

// ---------------------------------------------------------------- criterion 3

Verdict criterion3() {
    Verdict v;
    const int per_rule = 200;

    for (int i = 0; i < per_rule; ++i) {  // rule 3: a complete triangle glued on
        Graph base = gen_random(4 + i % 4, 0.5, 9000ULL + i);
        int nb = base.vertex_count();
        std::vector<Edge> edges = base.edges();
        edges.emplace_back(nb, nb + 1);
        edges.emplace_back(nb, nb + 2);
        edges.emplace_back(nb + 1, nb + 2);
        Graph g = make_graph(nb + 3, edges);
        if (!rule3_strip_two_club_components({g, 0}).changed) {
            v.ok = false;
            v.detail = "rule 3 silent on instance " + std::to_string(i);
            return v;
        }
        std::string complaint;
        if (!solver_agrees(g, opt_via_3k(g), complaint)) {
            v.ok = false;
            v.detail = "rule 3 instance " + std::to_string(i) + ": " + complaint;
            return v;
        }
    }

    for (int i = 0; i < per_rule; ++i) {  // rule 4: heavy non-adjacent pair with far tails
        int commons = 3 + i % 3;
        int tails = 1 + i % 2;
        bool both_sides = (i / 6) % 2 == 1;
        std::vector<Edge> edges;
        int next = 2;
        for (int c = 0; c < commons; ++c, ++next) {
            edges.emplace_back(0, next);
            edges.emplace_back(1, next);
        }
        for (int t = 0; t < tails; ++t, ++next) edges.emplace_back(0, next);
        if (both_sides)
            for (int t = 0; t < tails; ++t, ++next) edges.emplace_back(1, next);
        Graph core = make_graph(next, edges);
        Graph g = disjoint_union({core, gen_random(4, 0.4, 9300ULL + i)});
        if (!rule4_heavy_common_neighbors({g, commons - 1}).changed) {
            v.ok = false;
            v.detail = "rule 4 silent on instance " + std::to_string(i);
            return v;
        }
        std::string complaint;
        if (!solver_agrees(g, opt_via_3k(g), complaint)) {
            v.ok = false;
            v.detail = "rule 4 instance " + std::to_string(i) + ": " + complaint;
            return v;
        }
    }

    for (int i = 0; i < per_rule; ++i) {  // rule 5: paths and cycles only
        int s = 4 + i % 12;
        int c = 6 + i % 7;
        int s2 = 2 + (i / 12) % 9;
        Graph g = disjoint_union({path_graph(s), cycle_graph(c), path_graph(s2)});
        int expected = path_cuts(s) + cycle_cuts(c) + path_cuts(s2);
        RuleApplication app = rule5_resolve_degree_two_components({g, g.edge_count()});
        if (!app.changed || static_cast<int>(app.deleted.size()) != expected ||
            !is_two_clubs_graph(delete_edges(g, app.deleted))) {
            v.ok = false;
            v.detail = "rule 5 got " + std::to_string(app.deleted.size()) + " cuts, wanted " +
                       std::to_string(expected) + " (s=" + std::to_string(s) +
                       ", c=" + std::to_string(c) + ", s2=" + std::to_string(s2) + ")";
            return v;
        }
        std::string complaint;
        if (!solver_agrees(g, expected, complaint)) {
            v.ok = false;
            v.detail = "rule 5 instance " + std::to_string(i) + ": " + complaint;
            return v;
        }
    }

    for (int i = 0; i < per_rule; ++i) {  // rule 6: a three-edge tail grafted on
        Graph base = gen_random(5, 0.6, 9600ULL + i);
        std::vector<Edge> edges = base.edges();
        if (!base.has_edge(0, 1)) edges.emplace_back(0, 1);
        edges.emplace_back(0, 5);
        edges.emplace_back(5, 6);
        edges.emplace_back(6, 7);
        Graph g = make_graph(8, edges);
        if (!rule6_three_tail({g, 3}).changed) {
            v.ok = false;
            v.detail = "rule 6 silent on instance " + std::to_string(i);
            return v;
        }
        std::string complaint;
        if (!solver_agrees(g, opt_via_3k(g), complaint)) {
            v.ok = false;
            v.detail = "rule 6 instance " + std::to_string(i) + ": " + complaint;
            return v;
        }
    }

    v.detail = "rules 3, 4, 5, 6 each fired on 200 dedicated instances, optimum preserved on every one";
    return v;
}

// ---------------------------------------------------------------- criterion 4

Verdict criterion4() {
    Verdict v;
    const CaseId ids[] = {CaseId::Case1,   CaseId::Case2,   CaseId::Case3,          CaseId::Case41,
                          CaseId::Case421, CaseId::Case422, CaseId::FallbackGeneric};
    int fixtures = 0;
    for (CaseId id : ids)
        for (unsigned long long seed = 0; seed < 100; ++seed) {
            Graph g = gen_case_fixture(id, seed);
            CaseDescriptor cd = detect_case(g);
            if (cd.id != id) {
                v.ok = false;
                v.detail = std::string("fixture for ") + case_name(id) + " seed " +
                           std::to_string(seed) + " landed in " + case_name(cd.id);
                return v;
            }
            CompletenessReport report = check_branch_completeness(g, cd, 8);
            if (report.verdict != Completeness::Complete) {
                v.ok = false;
                v.detail = std::string(case_name(id)) + " seed " + std::to_string(seed) + ": " +
                           report.detail;
                return v;
            }
            ++fixtures;
        }
    v.detail = std::to_string(fixtures) +
               " fixtures (100 per case) detected correctly; in each, some branch set extends "
               "to an optimal solution";
    return v;
}

// ---------------------------------------------------------------- criterion 5

Verdict criterion5() {
    Verdict v;
    const std::pair<const char*, double> pins[] = {
        {"case1", 2.415},     {"case2", 2.0},        {"case3", 2.562},
        {"case4.1", 2.562},   {"case4.2.1", 2.695},  {"case4.2.2", 2.669},
        {"liu-original", 2.62}, {"liu-repaired", 2.761}};
    const double tolerance = 0.005;
    std::vector<NamedBranchingVector> rows = known_branching_vectors();
    std::string report;
    bool original_missed = false;
    for (const auto& [name, pinned] : pins) {
        auto it = std::find_if(rows.begin(), rows.end(),
                               [&](const NamedBranchingVector& r) { return r.name == name; });
        if (it == rows.end()) {
            v.ok = false;
            report += std::string(name) + " missing from the catalogue; ";
            continue;
        }
        double value = branching_number(it->depths);
        if (std::abs(value - pinned) > tolerance) {
            v.ok = false;
            if (std::string(name) == "liu-original") original_missed = true;
            report += std::string(name) + " recomputes to " + fixed6(value) + " against the pin " +
                      fixed6(pinned) + " (off by " + fixed6(std::abs(value - pinned)) + "); ";
        }
    }
    if (v.ok) {
        v.detail = "all eight branching numbers sit within 0.005 of their pins";
    } else {
        v.detail = report;
        if (original_missed)
            v.detail +=
                "digit-for-digit recomputation of the thirteen-branch vector {3,3,3,3,2,3,3,3,3,"
                "2,2,3,3} yields 2.612888, so the pinned 2.62 overstates it";
    }
    return v;
}

// ---------------------------------------------------------------- criterion 6

struct PlantedPick {
    Graph graph;
    int k = 0;
};

std::vector<PlantedPick> planted_suite(bool pin_opt) {
    const std::pair<int, int> quota[] = {{4, 5}, {5, 5}, {6, 5}, {7, 4}, {8, 4}, {9, 4}, {10, 3}};
    std::vector<PlantedPick> picks;
    for (const auto& [k, want] : quota) {
        int found = 0;
        for (int attempt = 0; attempt < 300 && found < want; ++attempt) {
            Graph g = gen_planted(3, 5, k, static_cast<unsigned long long>(k) * 1000 + attempt);
            if (pin_opt) {
                if (!solve_3k({g, k}).answer) continue;     // cheaper than it looks: yes exits early
                if (solve_3k({g, k - 1}).answer) continue;  // optimum below the planted noise
            }
            picks.push_back({g, k});
            ++found;
        }
    }
    return picks;
}

Verdict criterion6() {
    Verdict v;
    std::vector<PlantedPick> picks = planted_suite(true);
    if (picks.size() != 30) {
        v.ok = false;
        v.detail = "only " + std::to_string(picks.size()) +
                   " of 30 planted instances reached their noise level exactly";
        return v;
    }
    double worst = 0.0;
    int worst_k = 0;
    long long worst_nodes = 0;
    for (const PlantedPick& pick : picks) {
        DecisionResult res = solve_decision({pick.graph, pick.k});
        if (!res.answer) {
            v.ok = false;
            v.detail = "decision no at the established optimum k=" + std::to_string(pick.k);
            return v;
        }
        double growth = empirical_branching(res.stats.nodes_expanded, pick.k);
        if (growth > worst) {
            worst = growth;
            worst_k = pick.k;
            worst_nodes = res.stats.nodes_expanded;
        }
    }
    if (worst > 2.75) {
        v.ok = false;
        v.detail = "nodes^(1/k) reached " + fixed6(worst) + " at k=" + std::to_string(worst_k);
        return v;
    }
    v.detail = "30 planted instances (k=4..10); worst nodes^(1/k) = " + fixed6(worst) + " (" +
               std::to_string(worst_nodes) + " nodes at k=" + std::to_string(worst_k) +
               "), bound 2.75";
    return v;
}

// ---------------------------------------------------------------- criterion 7

Verdict criterion7() {
    Verdict v;
    auto start = std::chrono::steady_clock::now();
    BranchRuleTable table = liu_case_224();
    std::string report;
    if (table.branches.size() != 13) {
        v.ok = false;
        report += "table lists " + std::to_string(table.branches.size()) + " branches; ";
    }
    if (!liu_gap_check(table)) {
        v.ok = false;
        report += "the deletion pair {1,4} looks covered, it must not be; ";
    }
    BranchRuleTable patched = table;
    patched.branches.push_back({1, 4});
    if (liu_gap_check(patched)) {
        v.ok = false;
        report += "adding the {1,4} branch does not close the gap; ";
    }
    std::vector<int> depths;
    for (const auto& b : table.branches) depths.push_back(static_cast<int>(b.size()));
    depths.push_back(2);
    double repaired = branching_number(depths);
    if (std::abs(repaired - 2.761) > 0.005) {
        v.ok = false;
        report += "repaired number " + fixed6(repaired) + " is off the 2.761 pin; ";
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                    .count();
    if (ms >= 1000.0) {
        v.ok = false;
        report += "audit took " + fixed6(ms) + " ms, budget is 1000; ";
    }
    v.detail = v.ok ? "13 branches, none covering the {1,4} split; repaired number " +
                          fixed6(repaired) + "; audit finished in " + fixed6(ms) + " ms"
                    : report;
    return v;
}

// ---------------------------------------------------------------- criterion 8

Verdict criterion8() {
    Verdict v;
    for (int s = 2; s <= 15; ++s) {
        Graph g = path_graph(s);
        int expected = path_cuts(s);
        RuleApplication app = rule5_resolve_degree_two_components({g, g.edge_count()});
        int rule_cuts = static_cast<int>(app.deleted.size());
        if (s >= 4 && (!app.changed || rule_cuts != expected)) {
            v.ok = false;
            v.detail = "path on " + std::to_string(s) + " vertices: rule 5 made " +
                       std::to_string(rule_cuts) + " cuts, closed form says " +
                       std::to_string(expected);
            return v;
        }
        std::string complaint;
        if (opt_via_3k(g) != expected || !solver_agrees(g, expected, complaint)) {
            v.ok = false;
            v.detail = "path on " + std::to_string(s) + " vertices misses the closed form " +
                       std::to_string(expected) + (complaint.empty() ? "" : ": " + complaint);
            return v;
        }
    }
    for (int n = 6; n <= 12; ++n) {
        Graph g = cycle_graph(n);
        int expected = cycle_cuts(n);
        RuleApplication app = rule5_resolve_degree_two_components({g, g.edge_count()});
        if (!app.changed || static_cast<int>(app.deleted.size()) != expected ||
            !is_two_clubs_graph(delete_edges(g, app.deleted))) {
            v.ok = false;
            v.detail = "cycle on " + std::to_string(n) + " vertices: rule 5 made " +
                       std::to_string(app.deleted.size()) + " cuts, closed form says " +
                       std::to_string(expected);
            return v;
        }
        std::string complaint;
        if (opt_via_3k(g) != expected || !solver_agrees(g, expected, complaint)) {
            v.ok = false;
            v.detail = "cycle on " + std::to_string(n) + " vertices misses the closed form " +
                       std::to_string(expected) + (complaint.empty() ? "" : ": " + complaint);
            return v;
        }
    }
    v.detail = "paths on 2..15 vertices need ceil(s/3)-1 cuts, cycles on 6..12 need ceil(n/3); "
               "rule 5, both oracles and the solver all agree";
    return v;
}

// ---------------------------------------------------------------- criterion 9

Verdict criterion9() {
    Verdict v;
    long long total_nodes = 0, total_fallbacks = 0;
    int instances = 0, fallback_instances = 0;

    auto check = [&](const Graph& g) -> bool {
        MinimizeResult res = solve_minimize(g);
        ++instances;
        total_nodes += res.stats.nodes_expanded;
        total_fallbacks += res.stats.fallback_count;
        if (res.stats.fallback_count == 0) return true;
        ++fallback_instances;
        return res.opt == opt_via_3k(g) && verify_solution(g, res.solution);
    };

    for (int i = 0; i < 500; ++i)
        if (!check(random_suite_instance(i))) {
            v.ok = false;
            v.detail = "random instance " + std::to_string(i) + " went wrong under fallback branching";
            return v;
        }
    for (const PlantedPick& pick : planted_suite(false))
        if (!check(pick.graph)) {
            v.ok = false;
            v.detail = "a planted instance (k=" + std::to_string(pick.k) +
                       ") went wrong under fallback branching";
            return v;
        }

    MinimizeResult handcrafted = solve_minimize(case_gadget(CaseId::FallbackGeneric));
    if (handcrafted.stats.fallback_count == 0 ||
        handcrafted.opt != opt_exact_bruteforce(case_gadget(CaseId::FallbackGeneric))) {
        v.ok = false;
        v.detail = "the handcrafted generic-split graph is not solved through the fallback";
        return v;
    }
    for (unsigned long long seed = 0; seed < 50; ++seed) {
        Graph g = gen_case_fixture(CaseId::FallbackGeneric, seed);
        MinimizeResult res = solve_minimize(g);
        ++instances;
        total_nodes += res.stats.nodes_expanded;
        total_fallbacks += res.stats.fallback_count;
        if (res.stats.fallback_count > 0) ++fallback_instances;
        if (res.opt != opt_via_3k(g)) {
            v.ok = false;
            v.detail = "generic-split fixture seed " + std::to_string(seed) + " solved inexactly";
            return v;
        }
    }

    std::ostringstream detail;
    detail << "fallback branchings/search nodes = " << total_fallbacks << "/" << total_nodes
           << " across " << instances << " instances; " << fallback_instances
           << " instances branched generically and every one stayed exact";
    v.detail = detail.str();
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    struct Criterion {
        int id;
        const char* title;
        Verdict (*run)();
    };
    const Criterion criteria[] = {
        {1, "exhaustive agreement with brute force on five vertices", criterion1},
        {2, "random instances match two independent oracles", criterion2},
        {3, "every reduction rule fires and preserves the optimum", criterion3},
        {4, "case fixtures land in their case and branch completely", criterion4},
        {5, "branching numbers match their pinned constants", criterion5},
        {6, "planted-noise search trees stay under 2.75^k nodes", criterion6},
        {7, "thirteen-branch table audit", criterion7},
        {8, "closed-form optima on paths and cycles", criterion8},
        {9, "fallback branching stays exact wherever it occurs", criterion9},
    };

    std::string which = argc > 1 ? argv[1] : "all";
    bool all_ok = true;
    bool ran_any = false;
    for (const Criterion& c : criteria) {
        if (which != "all" && which != std::to_string(c.id)) continue;
        ran_any = true;
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v.ok = false;
            v.detail = std::string("threw: ") + e.what();
        }
        std::cout << (v.ok ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.title;
        if (!v.detail.empty()) std::cout << " | " << v.detail;
        std::cout << std::endl;
        all_ok = all_ok && v.ok;
    }
    if (!ran_any) {
        std::cerr << "usage: acceptance [1..9|all]\n";
        return 2;
    }
    return all_ok ? 0 : 1;
}
