#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twoclub/graph.hpp"
#include "twoclub/reduction.hpp"

namespace twoclub {

// Branching situations, tried in this order. The numbered cases carry the
// branching vectors {1,1,>=2}, {1,1}, {1,2,2,2,2}, {1,2,2,2,2},
// {2,2,2, 3x10, 4x4} and {2,2,2, 3x11}; the fallback is the plain 3-way
// split on the canonical conflict quadruple.
enum class CaseId {
    Case1,
    Case2,
    Case3,
    Case41,
    Case421,
    Case422,
    FallbackGeneric,
};

const char* case_name(CaseId id);

// One branching decision: which case fired, the vertices playing the named
// roles, and the edge sets to branch on (every set is a subset of the
// current edges; listing order is fixed and deterministic).
struct CaseDescriptor {
    CaseId id = CaseId::FallbackGeneric;
    std::map<std::string, int> roles;
    std::vector<std::vector<Edge>> branch_sets;
};

struct Solution {
    std::vector<Edge> deleted;
    int cost() const { return static_cast<int>(deleted.size()); }
};

struct SearchStats {
    long long nodes_expanded = 0;
    std::map<CaseId, long long> per_case_counts;
    std::map<int, long long> per_rule_counts;
    long long fallback_count = 0;
    int max_depth = 0;
};

// Selects the branching case for a graph that is fully reduced under the
// budget-free rules (3, 5, 6; Rule 4 depends on the budget and cannot be
// re-checked here) and is not yet a 2-clubs graph. Throws std::logic_error
// when called on a reducible or conflict-free graph.
CaseDescriptor detect_case(const Graph& g);

struct DecisionResult {
    bool answer = false;
    std::optional<Solution> solution;
    SearchStats stats;
};

// Bounded branch-and-reduce search. Every yes answer carries a certificate
// that has already passed verify_solution.
DecisionResult solve_decision(const Instance& inst);

struct MinimizeResult {
    int opt = 0;
    Solution solution;
    SearchStats stats;  // summed over all deepening iterations
};

// Iterative deepening over solve_decision: k = 0, 1, 2, ...
MinimizeResult solve_minimize(const Graph& g);

// True iff deleting the solution's edges leaves a 2-clubs graph. Throws
// std::invalid_argument if a listed edge is not in the graph.
bool verify_solution(const Graph& g, const Solution& solution);

}  // namespace twoclub
