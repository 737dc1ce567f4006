#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twoclub/graph.hpp"
#include "twoclub/solver.hpp"

namespace twoclub {

// Unique root x >= 1 of 1 = sum_i x^(-d_i) for the branching vector d
// (d_i = edges deleted in branch i). A single branch gives 1; each depth
// must be a positive integer. Bisection to within 1e-6.
double branching_number(const std::vector<int>& depths);

enum class Completeness { Complete, Incomplete, Indeterminate };

struct CompletenessReport {
    Completeness verdict = Completeness::Indeterminate;
    int opt = -1;           // optimum of the instance, when computed
    int best_branch = -1;   // min over branches of |B| + OPT(G - B)
    std::string detail;
};

// Exhaustively checks one branching step against the optimum: a branch list
// is complete when some branch set B is a subset of an optimal solution,
// i.e. min_B (|B| + OPT(G - B)) == OPT(G). Uses the subset oracle, so only
// viable for small graphs; cap bounds the oracle's search depth.
CompletenessReport check_branch_completeness(const Graph& g, const CaseDescriptor& cd, int cap);

// One row per branch: the edge indices (1-based labels into a fixed edge
// list) that branch deletes.
struct BranchRuleTable {
    Graph graph;
    std::vector<Edge> edges;                  // edges[i] carries label i+1
    std::vector<std::vector<int>> branches;   // each branch lists edge labels
};

// The 13-branch table for the eight-edge obstruction studied by Liu, Zhang
// and Zhu: a conflict path v-u-t-s with edges 1..3, a lower detour through
// x (5,6) and an upper detour through y (7,8), both meeting w, plus sw (4).
BranchRuleTable liu_case_224();

// True iff no branch deletes edges 1 and 4 while keeping both 2 and 3,
// the split that a correct analysis of the gadget must also cover.
bool liu_gap_check(const BranchRuleTable& table);

struct WitnessSearchResult {
    bool found = false;
    Graph graph;          // the decorated gadget examined last / the witness
    int opt = -1;         // its optimum
    int best_uncovered = -1;  // best value achievable under the table's branches
};

// Random search for a concrete graph on which the 13 branches miss the
// optimum: decorates the gadget with up to three extra vertices/edges and
// compares the table's reach against the true optimum. Best effort within
// the given number of attempts; deterministic for a fixed seed.
WitnessSearchResult liu_witness_search(unsigned long long seed, int attempts);

// nodes^(1/k): the observed per-deletion growth of a search tree. Returns
// 1.0 when k <= 0.
double empirical_branching(long long nodes, int k);

struct NamedBranchingVector {
    std::string name;
    std::vector<int> depths;
};

// The branching vectors realised by the solver's cases plus reference rows
// for the gadget analysis (original and repaired).
const std::vector<NamedBranchingVector>& known_branching_vectors();

}  // namespace twoclub
