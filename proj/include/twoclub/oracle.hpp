#pragma once

#include <optional>
#include <vector>

#include "twoclub/graph.hpp"
#include "twoclub/reduction.hpp"

namespace twoclub {

// Ground-truth results used to check the branch-and-reduce solver. Both
// oracles below deliberately avoid the solver's machinery: validity is
// decided with a Floyd-Warshall distance closure instead of BFS, and no
// reduction rule or branching case is consulted.

struct OracleResult {
    std::optional<int> opt;                        // nullopt: every size up to cap failed
    std::optional<std::vector<Edge>> witness;      // deletion set achieving opt
    long long subsets_examined = 0;
};

// Exhaustive search over edge subsets by size, lexicographic within each
// size, stopping at the first subset whose removal leaves a 2-clubs graph.
// cap bounds the subset size; cap >= edge count makes the search exact.
OracleResult opt_bruteforce(const Graph& g, int cap);

// Exact optimum (cap = all edges).
int opt_exact_bruteforce(const Graph& g);

struct ThreeWayResult {
    bool answer = false;
    std::optional<std::vector<Edge>> witness;
    long long nodes = 0;
};

// Plain bounded search: find the canonical conflict quadruple, branch on
// deleting ab | bc | cd, decrement the budget. No reductions, no cases.
ThreeWayResult solve_3k(const Instance& inst);

// Iterative deepening over solve_3k; returns the optimum.
int opt_via_3k(const Graph& g);

}  // namespace twoclub
