#pragma once

#include <vector>

#include "twoclub/graph.hpp"

namespace twoclub {

// A problem instance: make every component of `graph` a 2-club by deleting
// at most `budget` edges.
struct Instance {
    Graph graph;
    int budget = 0;
};

enum class ReductionStatus {
    Reduced,      // fixpoint reached, question still open
    AnsweredYes,  // graph emptied with budget >= 0
    AnsweredNo,   // budget went negative
};

// One rule firing. Vertices/edges are reported in the ids of the graph the
// reduction was started on, budget_delta is the number of edges charged.
struct RuleEvent {
    int rule = 0;
    std::vector<int> vertices;
    std::vector<Edge> edges;
    int budget_delta = 0;
};

// Result of a single rule operation.
struct RuleApplication {
    bool changed = false;
    Instance residual;
    std::vector<Edge> deleted;       // input ids
    std::vector<int> vertex_origin;  // residual index -> input index
    std::vector<RuleEvent> events;
};

struct ReductionOutcome {
    ReductionStatus status = ReductionStatus::Reduced;
    Instance instance;               // residual (meaningful for Reduced/AnsweredNo)
    std::vector<Edge> deleted;       // input ids, disjoint from residual edges
    std::vector<int> vertex_origin;  // residual index -> input index
    std::vector<RuleEvent> rule_log;
};

// Rule 3: remove every connected component that is already a 2-club
// (isolated vertices included). Budget untouched.
RuleApplication rule3_strip_two_club_components(const Instance& inst);

// Rule 4: a non-adjacent pair a,b with more than `budget` common neighbors
// must stay together, so the edges from a to N(a)\N2[b] and from b to
// N(b)\N2[a] are forced out. Fires on the first (a,b) pair, scanned
// lexicographically, whose forced set is non-empty.
RuleApplication rule4_heavy_common_neighbors(const Instance& inst);

// Rule 5: resolve every component of maximum degree <= 2 optimally. A path
// on s vertices loses the edges v3-v4, v6-v7, ... (ceil(s/3)-1 of them); a
// cycle of length >= 6 loses its lexicographically smallest edge and is then
// resolved as a path, ceil(n/3) deletions in total. Shorter paths and cycles
// are 2-clubs and are left for Rule 3.
RuleApplication rule5_resolve_degree_two_components(const Instance& inst);

// Rule 6: a 3-tail (a,b,c,d) — d pendant, b and c of degree two, a of degree
// at least two — forces a and d into different clubs; deleting ab is optimal.
// Fires on the tail with the smallest pendant d.
RuleApplication rule6_three_tail(const Instance& inst);

// Applies Rules 1-6 in order, restarting from Rule 1 after every change,
// until no rule fires (Reduced) or Rule 1/2 decides the instance.
ReductionOutcome reduce_exhaustively(const Instance& inst);

}  // namespace twoclub
