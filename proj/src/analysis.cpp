#include "twoclub/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "twoclub/oracle.hpp"
#include "twoclub/rng.hpp"

namespace twoclub {

double branching_number(const std::vector<int>& depths) {
    if (depths.empty()) throw std::invalid_argument("branching_number: no branches");
    for (int d : depths)
        if (d < 1) throw std::invalid_argument("branching_number: depths must be positive");
    if (depths.size() == 1) return 1.0;

    auto excess = [&](double x) {
        double s = 0.0;
        for (int d : depths) s += std::pow(x, -d);
        return s - 1.0;
    };
    // excess(1) = #branches - 1 > 0 and excess(#branches) <= 0, and the sum
    // is strictly decreasing on x >= 1, so the root is bracketed.
    double lo = 1.0, hi = static_cast<double>(depths.size());
    while (hi - lo > 1e-9) {
        double mid = 0.5 * (lo + hi);
        (excess(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

CompletenessReport check_branch_completeness(const Graph& g, const CaseDescriptor& cd, int cap) {
    CompletenessReport report;
    report.opt = opt_via_3k(g);
    if (report.opt > cap) {
        report.verdict = Completeness::Indeterminate;
        report.detail = "optimum exceeds cap";
        return report;
    }
    int best = -1;
    for (const std::vector<Edge>& branch : cd.branch_sets) {
        int value = static_cast<int>(branch.size()) + opt_via_3k(delete_edges(g, branch));
        if (best < 0 || value < best) best = value;
        if (value == report.opt) break;  // cannot beat the optimum
    }
    report.best_branch = best;
    if (best == report.opt) {
        report.verdict = Completeness::Complete;
        report.detail = "some branch set extends to an optimal solution";
    } else {
        report.verdict = Completeness::Incomplete;
        report.detail = "every branch overshoots the optimum";
    }
    return report;
}

BranchRuleTable liu_case_224() {
    BranchRuleTable table;
    table.edges = {Edge(2, 3), Edge(1, 2), Edge(0, 1), Edge(3, 5),
                   Edge(1, 4), Edge(4, 5), Edge(0, 6), Edge(6, 5)};
    table.graph = make_graph(7, table.edges, {"v", "u", "t", "s", "x", "w", "y"});
    table.branches = {{1, 5, 7}, {1, 5, 8}, {1, 6, 7}, {1, 6, 8},
                      {2, 4},
                      {2, 5, 7}, {2, 5, 8}, {2, 6, 7}, {2, 6, 8},
                      {3, 7}, {3, 8}, {3, 4, 5}, {3, 4, 6}};
    return table;
}

bool liu_gap_check(const BranchRuleTable& table) {
    for (const std::vector<int>& branch : table.branches) {
        auto has = [&](int label) {
            return std::find(branch.begin(), branch.end(), label) != branch.end();
        };
        if (has(1) && has(4) && !has(2) && !has(3)) return false;
    }
    return true;
}

namespace {

std::vector<Edge> branch_edges(const BranchRuleTable& table, const std::vector<int>& labels) {
    std::vector<Edge> out;
    for (int label : labels) out.push_back(table.edges[label - 1]);
    return out;
}

// min over the table's branches of |B| + OPT(g - B)
int table_reach(const BranchRuleTable& table, const Graph& g) {
    int best = -1;
    for (const std::vector<int>& labels : table.branches) {
        std::vector<Edge> b = branch_edges(table, labels);
        int value = static_cast<int>(b.size()) + opt_via_3k(delete_edges(g, b));
        if (best < 0 || value < best) best = value;
    }
    return best;
}

}  // namespace

WitnessSearchResult liu_witness_search(unsigned long long seed, int attempts) {
    const BranchRuleTable table = liu_case_224();
    Rng rng(seed);
    WitnessSearchResult result;
    result.graph = table.graph;

    for (int attempt = 0; attempt < attempts; ++attempt) {
        // Decorate the eight-edge graph with one to three extra vertices,
        // each attached to a few random earlier vertices.
        int extra = 1 + rng.below(3);
        int n = 7 + extra;
        std::vector<Edge> edges = table.edges;
        for (int v = 7; v < n; ++v) {
            int stubs = 1 + rng.below(3);
            for (int s = 0; s < stubs; ++s) {
                Edge e(v, rng.below(v));
                if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
            }
        }
        Graph g = make_graph(n, edges);
        int opt = opt_via_3k(g);
        int reach = table_reach(table, g);
        result.graph = g;
        result.opt = opt;
        result.best_uncovered = reach;
        if (reach > opt) {
            result.found = true;
            return result;
        }
    }
    return result;
}

double empirical_branching(long long nodes, int k) {
    if (k <= 0 || nodes <= 0) return 1.0;
    return std::pow(static_cast<double>(nodes), 1.0 / static_cast<double>(k));
}

const std::vector<NamedBranchingVector>& known_branching_vectors() {
    static const std::vector<NamedBranchingVector> rows = {
        {"case1", {1, 1, 2}},
        {"case2", {1, 1}},
        {"case3", {1, 2, 2, 2, 2}},
        {"case4.1", {1, 2, 2, 2, 2}},
        {"case4.2.1", {2, 2, 3, 3, 2, 3, 3, 3, 3, 3, 3, 3, 3, 4, 4, 4, 4}},
        {"case4.2.2", {2, 2, 3, 3, 2, 3, 3, 3, 3, 3, 3, 3, 3, 3}},
        {"liu-original", {3, 3, 3, 3, 2, 3, 3, 3, 3, 2, 2, 3, 3}},
        {"liu-repaired", {3, 3, 3, 3, 2, 3, 3, 3, 3, 2, 2, 3, 3, 2}},
    };
    return rows;
}

}  // namespace twoclub
