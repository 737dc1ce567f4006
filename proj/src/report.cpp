#include "twoclub/report.hpp"

#include <algorithm>

namespace twoclub {

const char* tool_version() { return "0.1.0"; }

nlohmann::json graph_summary_json(const Graph& g) {
    return {{"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
}

nlohmann::json stats_json(const SearchStats& stats) {
    nlohmann::json cases = nlohmann::json::object();
    for (const auto& [id, count] : stats.per_case_counts) cases[case_name(id)] = count;
    nlohmann::json rules = nlohmann::json::object();
    for (const auto& [rule, count] : stats.per_rule_counts)
        rules["rule" + std::to_string(rule)] = count;
    return {{"nodes_expanded", stats.nodes_expanded},
            {"max_depth", stats.max_depth},
            {"fallback_count", stats.fallback_count},
            {"case_counts", cases},
            {"rule_counts", rules}};
}

nlohmann::json edges_json(std::span<const Edge> edges) {
    std::vector<Edge> sorted(edges.begin(), edges.end());
    std::sort(sorted.begin(), sorted.end());
    nlohmann::json out = nlohmann::json::array();
    for (const Edge& e : sorted) out.push_back({e.u + 1, e.v + 1});
    return out;
}

nlohmann::json edge_labels_json(const Graph& g, std::span<const Edge> edges) {
    std::vector<Edge> sorted(edges.begin(), edges.end());
    std::sort(sorted.begin(), sorted.end());
    nlohmann::json out = nlohmann::json::array();
    for (const Edge& e : sorted) out.push_back({g.label(e.u), g.label(e.v)});
    return out;
}

nlohmann::json make_report(const std::string& command, nlohmann::json payload,
                           std::optional<double> total_ms) {
    payload["tool_version"] = tool_version();
    payload["command"] = command;
    if (total_ms) payload["timings"] = {{"total_ms", *total_ms}};
    return payload;
}

}  // namespace twoclub
