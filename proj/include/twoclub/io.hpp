#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "twoclub/graph.hpp"
#include "twoclub/solver.hpp"

namespace twoclub {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& message);
};

// Text format, one record per line:
//   c <comment>
//   c label <i> <name>     optional vertex name, i is 1-based, name has no spaces
//   p edge <n> <m>         exactly once, before any edge line
//   e <u> <v>              1-based endpoints, no self-loops, no duplicates
// Anything else raises ParseError with the offending line number.
Graph parse_graph(std::istream& in);
Graph parse_graph_text(const std::string& text);
Graph read_graph_file(const std::string& path);

// Canonical form: problem line, label lines in vertex order (only when the
// graph carries labels), then edges sorted with the smaller endpoint first.
std::string write_graph(const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

// G(n, p): each pair (u, v), u < v in lexicographic order, gets an edge
// with probability p. A seed pins the graph exactly.
Graph gen_random(int n, double p, unsigned long long seed);

// Disjoint clubs of `club_size` vertices (a hub adjacent to the whole club,
// other pairs joined with probability 1/2) connected by exactly `noise`
// edges between different clubs. Deleting the noise edges separates the
// clubs, so the optimum is at most `noise`.
Graph gen_planted(int clubs, int club_size, int noise, unsigned long long seed);

// Minimal graph on which detect_case lands in the given case.
Graph case_gadget(CaseId id);

// Chain of three edges hanging off a branching vertex with two extra
// leaves; the smallest shape the three-tail rule resolves.
Graph tail_gadget();

// case_gadget(id) plus seeded decoration (extra vertices and edges), kept
// only when the budget-free rules still find nothing and detect_case still
// lands in `id`. Falls back to the bare gadget when no decorated attempt
// validates within 200 tries.
Graph gen_case_fixture(CaseId id, unsigned long long seed);

}  // namespace twoclub
