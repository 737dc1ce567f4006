#pragma once

#include <optional>
#include <span>
#include <string>

#include "json.hpp"

#include "twoclub/graph.hpp"
#include "twoclub/solver.hpp"

namespace twoclub {

// Version string stamped into every machine-readable report.
const char* tool_version();

// {"vertices": n, "edges": m}
nlohmann::json graph_summary_json(const Graph& g);

// Search counters, with case and rule tallies keyed by name.
nlohmann::json stats_json(const SearchStats& stats);

// Edges as 1-based endpoint pairs, sorted.
nlohmann::json edges_json(std::span<const Edge> edges);

// Endpoint labels for the same edges, same order.
nlohmann::json edge_labels_json(const Graph& g, std::span<const Edge> edges);

// Wraps a command's payload with the version stamp, the command name and,
// when given, wall-clock timings.
nlohmann::json make_report(const std::string& command, nlohmann::json payload,
                           std::optional<double> total_ms);

}  // namespace twoclub
