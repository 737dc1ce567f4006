#include "twoclub/reduction.hpp"

#include <algorithm>
#include <stdexcept>

namespace twoclub {
namespace {

std::vector<int> identity_map(int n) {
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) out[i] = i;
    return out;
}

RuleApplication unchanged(const Instance& inst) {
    RuleApplication app;
    app.changed = false;
    app.residual = inst;
    app.vertex_origin = identity_map(inst.graph.vertex_count());
    return app;
}

// Vertices of a path component in walk order, starting at the smaller
// endpoint. Expects max degree <= 2 and at least one endpoint.
std::vector<int> path_order(const Graph& g, const std::vector<int>& comp) {
    int start = -1;
    for (int v : comp)
        if (g.degree(v) <= 1) { start = v; break; }  // comp is sorted
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (true) {
        int next = -1;
        for (int w : g.neighbors(cur))
            if (w != prev) { next = w; break; }
        if (next == -1) break;
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

// Edges v3-v4, v6-v7, ... of a path given in walk order.
std::vector<Edge> path_cut_edges(const std::vector<int>& order) {
    std::vector<Edge> cuts;
    int s = static_cast<int>(order.size());
    for (int pos = 3; pos + 1 <= s; pos += 3) cuts.emplace_back(order[pos - 1], order[pos]);
    return cuts;
}

}  // namespace

RuleApplication rule3_strip_two_club_components(const Instance& inst) {
    std::vector<Component> comps = component_diameters(inst.graph);
    std::vector<int> keep;
    RuleApplication app;
    for (const Component& c : comps) {
        if (c.diameter <= 2) {
            RuleEvent ev;
            ev.rule = 3;
            ev.vertices = c.vertices;
            app.events.push_back(std::move(ev));
        } else {
            keep.insert(keep.end(), c.vertices.begin(), c.vertices.end());
        }
    }
    if (app.events.empty()) return unchanged(inst);
    std::sort(keep.begin(), keep.end());
    app.changed = true;
    app.residual = {induced_subgraph(inst.graph, keep), inst.budget};
    app.vertex_origin = keep;
    return app;
}

RuleApplication rule4_heavy_common_neighbors(const Instance& inst) {
    const Graph& g = inst.graph;
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a) {
        std::vector<int> dist_a;  // filled lazily, only when a has a heavy partner
        for (int b = a + 1; b < n; ++b) {
            if (g.has_edge(a, b)) continue;
            const auto& na = g.neighbors(a);
            const auto& nb = g.neighbors(b);
            std::vector<int> common;
            std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(),
                                  std::back_inserter(common));
            if (static_cast<int>(common.size()) <= inst.budget) continue;
            // a and b must end in the same club; anything a (or b) touches
            // that sits at distance > 2 from b (or a) cannot join them.
            if (dist_a.empty()) dist_a = distances_from(g, a);
            std::vector<int> dist_b = distances_from(g, b);
            std::vector<Edge> forced;
            for (int u : na)
                if (dist_b[u] > 2) forced.emplace_back(a, u);
            for (int u : nb)
                if (dist_a[u] > 2) forced.emplace_back(b, u);
            if (forced.empty()) continue;
            std::sort(forced.begin(), forced.end());
            RuleApplication app;
            app.changed = true;
            app.residual = {delete_edges(g, forced), inst.budget - static_cast<int>(forced.size())};
            app.deleted = forced;
            app.vertex_origin = identity_map(n);
            RuleEvent ev;
            ev.rule = 4;
            ev.vertices = {a, b};
            ev.edges = forced;
            ev.budget_delta = static_cast<int>(forced.size());
            app.events.push_back(std::move(ev));
            return app;
        }
    }
    return unchanged(inst);
}

RuleApplication rule5_resolve_degree_two_components(const Instance& inst) {
    const Graph& g = inst.graph;
    std::vector<Edge> cuts;
    std::vector<RuleEvent> events;
    for (const std::vector<int>& comp : components(g)) {
        bool low_degree = true;
        bool has_endpoint = false;
        for (int v : comp) {
            if (g.degree(v) > 2) { low_degree = false; break; }
            if (g.degree(v) <= 1) has_endpoint = true;
        }
        if (!low_degree) continue;
        std::vector<Edge> comp_cuts;
        if (has_endpoint) {
            // Path on s vertices: ceil(s/3)-1 deletions (none for s <= 3).
            comp_cuts = path_cut_edges(path_order(g, comp));
        } else if (static_cast<int>(comp.size()) >= 6) {
            // Cycle: open it at the lexicographically smallest edge, then
            // resolve the resulting path. ceil(n/3) deletions in total.
            // comp[0] is the component minimum, so the smallest edge is
            // (comp[0], its smallest neighbor) and the opened path already
            // starts at its smaller endpoint.
            Edge opener(comp[0], g.neighbors(comp[0])[0]);
            std::vector<int> order{opener.u};
            int prev = opener.v;  // forbid stepping straight across the opened edge
            int cur = opener.u;
            while (cur != opener.v) {
                int next = -1;
                for (int w : g.neighbors(cur))
                    if (w != prev) { next = w; break; }
                order.push_back(next);
                prev = cur;
                cur = next;
            }
            comp_cuts.push_back(opener);
            for (const Edge& e : path_cut_edges(order)) comp_cuts.push_back(e);
        }
        if (comp_cuts.empty()) continue;
        std::sort(comp_cuts.begin(), comp_cuts.end());
        RuleEvent ev;
        ev.rule = 5;
        ev.vertices = comp;
        ev.edges = comp_cuts;
        ev.budget_delta = static_cast<int>(comp_cuts.size());
        events.push_back(std::move(ev));
        cuts.insert(cuts.end(), comp_cuts.begin(), comp_cuts.end());
    }
    if (cuts.empty()) return unchanged(inst);
    std::sort(cuts.begin(), cuts.end());
    RuleApplication app;
    app.changed = true;
    app.residual = {delete_edges(g, cuts), inst.budget - static_cast<int>(cuts.size())};
    app.deleted = cuts;
    app.vertex_origin = identity_map(g.vertex_count());
    app.events = std::move(events);
    return app;
}

RuleApplication rule6_three_tail(const Instance& inst) {
    const Graph& g = inst.graph;
    for (int d = 0; d < g.vertex_count(); ++d) {
        if (g.degree(d) != 1) continue;
        int c = g.neighbors(d)[0];
        if (g.degree(c) != 2) continue;
        int b = g.neighbors(c)[0] == d ? g.neighbors(c)[1] : g.neighbors(c)[0];
        if (g.degree(b) != 2) continue;
        int a = g.neighbors(b)[0] == c ? g.neighbors(b)[1] : g.neighbors(b)[0];
        if (g.degree(a) < 2) continue;  // whole component is a path; Rule 5 territory
        // a and d sit at distance exactly three through the degree-two
        // corridor b,c; deleting ab splits off the 2-club {b,c,d}.
        Edge cut(a, b);
        RuleApplication app;
        app.changed = true;
        app.residual = {delete_edges(g, {&cut, 1}), inst.budget - 1};
        app.deleted = {cut};
        app.vertex_origin = identity_map(g.vertex_count());
        RuleEvent ev;
        ev.rule = 6;
        ev.vertices = {a, b, c, d};
        ev.edges = {cut};
        ev.budget_delta = 1;
        app.events.push_back(std::move(ev));
        return app;
    }
    return unchanged(inst);
}

ReductionOutcome reduce_exhaustively(const Instance& inst) {
    ReductionOutcome out;
    out.instance = inst;
    out.vertex_origin = identity_map(inst.graph.vertex_count());

    auto absorb = [&out](RuleApplication&& app) {
        // Map the application's ids (current residual ids) back to the ids
        // of the original reduce input.
        for (Edge& e : app.deleted)
            out.deleted.emplace_back(out.vertex_origin[e.u], out.vertex_origin[e.v]);
        for (RuleEvent& ev : app.events) {
            for (int& v : ev.vertices) v = out.vertex_origin[v];
            for (Edge& e : ev.edges) e = Edge(out.vertex_origin[e.u], out.vertex_origin[e.v]);
            out.rule_log.push_back(std::move(ev));
        }
        std::vector<int> composed(app.vertex_origin.size());
        for (size_t i = 0; i < app.vertex_origin.size(); ++i)
            composed[i] = out.vertex_origin[app.vertex_origin[i]];
        out.vertex_origin = std::move(composed);
        out.instance = std::move(app.residual);
    };

    while (true) {
        // Rule 1: the budget ran out.
        if (out.instance.budget < 0) {
            out.status = ReductionStatus::AnsweredNo;
            out.rule_log.push_back({1, {}, {}, 0});
            return out;
        }
        // Rule 2: nothing left to fix.
        if (out.instance.graph.vertex_count() == 0) {
            out.status = ReductionStatus::AnsweredYes;
            out.rule_log.push_back({2, {}, {}, 0});
            return out;
        }
        RuleApplication app = rule3_strip_two_club_components(out.instance);
        if (!app.changed) app = rule4_heavy_common_neighbors(out.instance);
        if (!app.changed) app = rule5_resolve_degree_two_components(out.instance);
        if (!app.changed) app = rule6_three_tail(out.instance);
        if (!app.changed) {
            out.status = ReductionStatus::Reduced;
            return out;
        }
        absorb(std::move(app));
    }
}

}  // namespace twoclub
