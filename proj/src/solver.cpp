#include "twoclub/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace twoclub {

const char* case_name(CaseId id) {
    switch (id) {
        case CaseId::Case1: return "case1";
        case CaseId::Case2: return "case2";
        case CaseId::Case3: return "case3";
        case CaseId::Case41: return "case4.1";
        case CaseId::Case421: return "case4.2.1";
        case CaseId::Case422: return "case4.2.2";
        case CaseId::FallbackGeneric: return "fallback";
    }
    return "?";
}

namespace {

using Dist = std::vector<std::vector<int>>;

std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Case 1: an induced path (a,b,c) where at least two vertices hang off a or
// c at distance three from the far end. Either ab goes, or bc goes, or a,b,c
// stay one club and every such hanging edge is forced out at once.
std::optional<CaseDescriptor> try_case1(const Graph& g, const Dist& dist) {
    for (int a = 0; a < g.vertex_count(); ++a)
        for (int b : g.neighbors(a))
            for (int c : g.neighbors(b)) {
                if (c <= a || g.has_edge(a, c)) continue;
                std::vector<Edge> far;
                for (int u : g.neighbors(a))
                    if (dist[c][u] > 2) far.emplace_back(a, u);
                for (int u : g.neighbors(c))
                    if (dist[a][u] > 2) far.emplace_back(c, u);
                if (static_cast<int>(far.size()) < 2) continue;
                std::sort(far.begin(), far.end());
                CaseDescriptor cd;
                cd.id = CaseId::Case1;
                cd.roles = {{"a", a}, {"b", b}, {"c", c}};
                cd.branch_sets = {{Edge(a, b)}, {Edge(b, c)}, far};
                return cd;
            }
    return std::nullopt;
}

struct QuadrupleScan {
    std::optional<ConflictQuadruple> first;        // lexicographically smallest tuple
    std::optional<ConflictQuadruple> first_heavy;  // smallest tuple with degree(d) >= 2
};

// Ordered tuples (a,b,c,d) in lexicographic order; stops as soon as a tuple
// with a non-pendant d shows up (that is the canonical pick for Cases 3+,
// and its existence refutes Case 2).
QuadrupleScan scan_quadruples(const Graph& g, const Dist& dist) {
    QuadrupleScan scan;
    for (int a = 0; a < g.vertex_count(); ++a) {
        const std::vector<int>& da = dist[a];
        bool far3 = false;
        for (int u = 0; u < g.vertex_count(); ++u)
            if (da[u] == 3) { far3 = true; break; }
        if (!far3) continue;
        for (int b : g.neighbors(a))
            for (int c : g.neighbors(b)) {
                if (da[c] != 2) continue;
                for (int d : g.neighbors(c)) {
                    if (da[d] != 3) continue;
                    if (!scan.first) scan.first = ConflictQuadruple{a, b, c, d};
                    if (g.degree(d) >= 2) {
                        scan.first_heavy = ConflictQuadruple{a, b, c, d};
                        return scan;
                    }
                }
            }
    }
    return scan;
}

// Case 3 on (a,b,c,d): a common neighbor w of b and d besides c. Checked in
// both orientations; the a,c side is equivalent to Case 3 on the reversed
// tuple, and the later cases rely on both exclusions (they need
// N(b) n N(d) = {c} and N(a) n N(c) = {b} for their distance arguments).
std::optional<CaseDescriptor> try_case3(const Graph& g, const ConflictQuadruple& q) {
    auto build = [](int a, int b, int c, int d, int w) {
        CaseDescriptor cd;
        cd.id = CaseId::Case3;
        cd.roles = {{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"w", w}};
        cd.branch_sets = {{Edge(a, b)},
                          {Edge(b, c), Edge(b, w)},
                          {Edge(c, d), Edge(d, w)},
                          {Edge(b, c), Edge(d, w)},
                          {Edge(c, d), Edge(b, w)}};
        return cd;
    };
    for (int w : sorted_intersection(g.neighbors(q.b), g.neighbors(q.d)))
        if (w != q.c) return build(q.a, q.b, q.c, q.d, w);
    for (int w : sorted_intersection(g.neighbors(q.c), g.neighbors(q.a)))
        if (w != q.b) return build(q.d, q.c, q.b, q.a, w);
    return std::nullopt;
}

CaseDescriptor case41(int a, int b, int c, int d, int x, int y) {
    CaseDescriptor cd;
    cd.id = CaseId::Case41;
    cd.roles = {{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"x", x}, {"y", y}};
    cd.branch_sets = {{Edge(a, b)},
                      {Edge(b, c), Edge(b, x)},
                      {Edge(c, d), Edge(x, y)},
                      {Edge(b, x), Edge(c, d)},
                      {Edge(b, c), Edge(x, y)}};
    return cd;
}

CaseDescriptor case421(int a, int b, int c, int d, int x, int y, int v, int w) {
    CaseDescriptor cd;
    cd.id = CaseId::Case421;
    cd.roles = {{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"x", x}, {"y", y}, {"v", v}, {"w", w}};
    const Edge ab(a, b), bc(b, c), cd_(c, d), bx(b, x), xy(x, y), dy(d, y);
    const Edge av(a, v), vy(v, y), cw(c, w), vw(v, w);
    cd.branch_sets = {{dy, cd_},
                      {dy, bc},
                      {dy, ab, bx},
                      {dy, ab, xy},
                      {av, ab},
                      {av, bc, bx},
                      {av, bc, xy},
                      {av, cd_, bx},
                      {av, cd_, xy},
                      {vy, cd_, bx},
                      {vy, cd_, xy},
                      {vy, ab, cw},
                      {vy, ab, vw},
                      {vy, bc, bx, cw},
                      {vy, bc, bx, vw},
                      {vy, bc, xy, cw},
                      {vy, bc, xy, vw}};
    return cd;
}

CaseDescriptor case422(int a, int b, int c, int d, int x, int y, int v) {
    CaseDescriptor cd;
    cd.id = CaseId::Case422;
    cd.roles = {{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"x", x}, {"y", y}, {"v", v}};
    const Edge ab(a, b), bc(b, c), cd_(c, d), bx(b, x), xy(x, y), dy(d, y);
    const Edge av(a, v), vy(v, y), vb(v, b);
    cd.branch_sets = {{dy, cd_},
                      {dy, bc},
                      {dy, ab, bx},
                      {dy, ab, xy},
                      {av, ab},
                      {av, bc, bx},
                      {av, bc, xy},
                      {av, cd_, bx},
                      {av, cd_, xy},
                      {vy, cd_, bx},
                      {vy, cd_, xy},
                      {vy, bc, bx},
                      {vy, bc, xy},
                      {vy, ab, vb}};
    return cd;
}

// Case 4 family on (a,b,c,d): d has a neighbor y (not c) at distance two
// from b, reached through x. When y is also three away from a, branching on
// the two disjoint far pairs suffices (4.1). Otherwise a common neighbor v
// of a and y opens the second quadruple (a,v,y,d); the common neighbor w of
// v and c decides between 4.2.1 (w distinct) and 4.2.2 (w = b). Candidates
// are scanned lexicographically and must keep all roles distinct; if no
// candidate tuple completes a pattern, the caller falls back.
std::optional<CaseDescriptor> try_case4(const Graph& g, const Dist& dist,
                                        const ConflictQuadruple& q) {
    const int a = q.a, b = q.b, c = q.c, d = q.d;
    for (int y : g.neighbors(d)) {
        if (y == c || dist[b][y] != 2) continue;
        for (int x : sorted_intersection(g.neighbors(b), g.neighbors(y))) {
            if (x == d || g.has_edge(x, d)) continue;  // x must avoid N[d]
            if (dist[a][y] == 3) return case41(a, b, c, d, x, y);
            // dist[a][y] == 2 here: ay is a non-edge and a-v-y exists.
            for (int v : sorted_intersection(g.neighbors(a), g.neighbors(y))) {
                if (v == x || dist[v][c] != 2) continue;
                std::optional<int> w_distinct;
                bool w_is_b = false;
                for (int w : sorted_intersection(g.neighbors(v), g.neighbors(c))) {
                    if (w == b) { w_is_b = true; continue; }
                    if (w == x || w == y) continue;  // keep the roles distinct
                    w_distinct = w;
                    break;
                }
                if (w_distinct) return case421(a, b, c, d, x, y, v, *w_distinct);
                if (w_is_b) return case422(a, b, c, d, x, y, v);
            }
        }
    }
    return std::nullopt;
}

// Branch-set sanity: all edges present, sizes match the case's vector.
void check_descriptor(const Graph& g, const CaseDescriptor& cd) {
    for (const auto& set : cd.branch_sets) {
        if (set.empty()) throw std::logic_error("detect_case: empty branch set");
        for (const Edge& e : set)
            if (!g.has_edge(e.u, e.v)) throw std::logic_error("detect_case: branch edge not in graph");
    }
    std::vector<int> sizes;
    for (const auto& set : cd.branch_sets) sizes.push_back(static_cast<int>(set.size()));
    std::vector<int> expect;
    switch (cd.id) {
        case CaseId::Case1:
            if (sizes.size() != 3 || sizes[2] < 2) throw std::logic_error("detect_case: branch vector mismatch");
            expect = sizes;
            break;
        case CaseId::Case2: expect = {1, 1}; break;
        case CaseId::Case3: expect = {1, 2, 2, 2, 2}; break;
        case CaseId::Case41: expect = {1, 2, 2, 2, 2}; break;
        case CaseId::Case421: expect = {2, 2, 3, 3, 2, 3, 3, 3, 3, 3, 3, 3, 3, 4, 4, 4, 4}; break;
        case CaseId::Case422: expect = {2, 2, 3, 3, 2, 3, 3, 3, 3, 3, 3, 3, 3, 3}; break;
        case CaseId::FallbackGeneric: expect = {1, 1, 1}; break;
    }
    if (sizes != expect) throw std::logic_error("detect_case: branch vector mismatch");
}

}  // namespace

CaseDescriptor detect_case(const Graph& g) {
    // Precondition: budget-free rules are at a fixpoint and a conflict exists.
    if (rule3_strip_two_club_components({g, 0}).changed ||
        rule5_resolve_degree_two_components({g, 0}).changed ||
        rule6_three_tail({g, 0}).changed)
        throw std::logic_error("detect_case: graph is still reducible");

    Dist dist = all_pairs_distances(g);

    std::optional<CaseDescriptor> cd = try_case1(g, dist);
    if (!cd) {
        QuadrupleScan scan = scan_quadruples(g, dist);
        if (!scan.first) throw std::logic_error("detect_case: no conflict quadruple");
        if (!scan.first_heavy) {
            // Every conflict quadruple has pendant endpoints: deleting the
            // middle edge can only shift the conflict, so branch on the ends.
            const ConflictQuadruple& q = *scan.first;
            CaseDescriptor two;
            two.id = CaseId::Case2;
            two.roles = {{"a", q.a}, {"b", q.b}, {"c", q.c}, {"d", q.d}};
            two.branch_sets = {{Edge(q.a, q.b)}, {Edge(q.c, q.d)}};
            cd = two;
        } else {
            const ConflictQuadruple& q = *scan.first_heavy;
            cd = try_case3(g, q);
            if (!cd) cd = try_case4(g, dist, q);
            if (!cd) {
                CaseDescriptor fb;
                fb.id = CaseId::FallbackGeneric;
                fb.roles = {{"a", q.a}, {"b", q.b}, {"c", q.c}, {"d", q.d}};
                fb.branch_sets = {{Edge(q.a, q.b)}, {Edge(q.b, q.c)}, {Edge(q.c, q.d)}};
                cd = fb;
            }
        }
    }
    check_descriptor(g, *cd);
    return *cd;
}

namespace {

// Depth-first bounded search; returns deletions in g's vertex ids.
std::optional<std::vector<Edge>> search(const Graph& g, int budget, int depth, SearchStats& stats) {
    ++stats.nodes_expanded;
    if (depth > stats.max_depth) stats.max_depth = depth;

    ReductionOutcome red = reduce_exhaustively({g, budget});
    for (const RuleEvent& ev : red.rule_log) ++stats.per_rule_counts[ev.rule];
    if (red.status == ReductionStatus::AnsweredNo) return std::nullopt;
    if (red.status == ReductionStatus::AnsweredYes) return red.deleted;

    const Graph& h = red.instance.graph;
    const int left = red.instance.budget;
    CaseDescriptor cd = detect_case(h);
    ++stats.per_case_counts[cd.id];
    if (cd.id == CaseId::FallbackGeneric) ++stats.fallback_count;

    for (const std::vector<Edge>& branch : cd.branch_sets) {
        if (static_cast<int>(branch.size()) > left) continue;  // child would fail Rule 1
        auto sub = search(delete_edges(h, branch), left - static_cast<int>(branch.size()),
                          depth + 1, stats);
        if (!sub) continue;
        std::vector<Edge> result = red.deleted;
        for (const Edge& e : branch)
            result.emplace_back(red.vertex_origin[e.u], red.vertex_origin[e.v]);
        for (const Edge& e : *sub)
            result.emplace_back(red.vertex_origin[e.u], red.vertex_origin[e.v]);
        return result;
    }
    return std::nullopt;
}

}  // namespace

DecisionResult solve_decision(const Instance& inst) {
    DecisionResult result;
    auto found = search(inst.graph, inst.budget, 0, result.stats);
    result.answer = found.has_value();
    if (found) {
        std::sort(found->begin(), found->end());
        Solution sol{std::move(*found)};
        bool ok = false;
        try {
            ok = sol.cost() <= inst.budget && verify_solution(inst.graph, sol);
        } catch (const std::invalid_argument&) {
        }
        if (!ok) throw std::logic_error("solve_decision: certificate failed verification");
        result.solution = std::move(sol);
    }
    return result;
}

MinimizeResult solve_minimize(const Graph& g) {
    MinimizeResult out;
    for (int k = 0;; ++k) {
        DecisionResult dec = solve_decision({g, k});
        out.stats.nodes_expanded += dec.stats.nodes_expanded;
        out.stats.fallback_count += dec.stats.fallback_count;
        out.stats.max_depth = std::max(out.stats.max_depth, dec.stats.max_depth);
        for (auto& [id, count] : dec.stats.per_case_counts) out.stats.per_case_counts[id] += count;
        for (auto& [rule, count] : dec.stats.per_rule_counts) out.stats.per_rule_counts[rule] += count;
        if (dec.answer) {
            out.opt = k;
            out.solution = std::move(*dec.solution);
            return out;
        }
    }
}

bool verify_solution(const Graph& g, const Solution& solution) {
    std::vector<Edge> sorted = solution.deleted;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("verify_solution: duplicate edge in solution");
    for (const Edge& e : sorted)
        if (e.u < 0 || e.v >= g.vertex_count() || !g.has_edge(e.u, e.v))
            throw std::invalid_argument("verify_solution: edge not in graph");
    return is_two_clubs_graph(delete_edges(g, sorted));
}

}  // namespace twoclub
