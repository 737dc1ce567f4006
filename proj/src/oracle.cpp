#include "twoclub/oracle.hpp"

#include <algorithm>

namespace twoclub {
namespace {

// Adjacency matrix copy that the subset loop can poke edges out of.
std::vector<std::vector<char>> matrix_of(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<char>> m(n, std::vector<char>(n, 0));
    for (const Edge& e : g.edges()) {
        m[e.u][e.v] = 1;
        m[e.v][e.u] = 1;
    }
    return m;
}

// Distance closure by Floyd-Warshall over the matrix. Kept separate from the
// BFS in graph.cpp on purpose: the oracle must not share the code it checks.
std::vector<std::vector<int>> closure(const std::vector<std::vector<char>>& m) {
    int n = static_cast<int>(m.size());
    constexpr int far = 1 << 20;  // safely addable infinity
    std::vector<std::vector<int>> d(n, std::vector<int>(n, far));
    for (int i = 0; i < n; ++i) {
        d[i][i] = 0;
        for (int j = 0; j < n; ++j)
            if (m[i][j]) d[i][j] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            int dik = d[i][k];
            if (dik == far) continue;
            for (int j = 0; j < n; ++j)
                if (dik + d[k][j] < d[i][j]) d[i][j] = dik + d[k][j];
        }
    return d;
}

// Every finite pairwise distance <= 2 means every component is a 2-club.
bool two_clubs(const std::vector<std::vector<char>>& m) {
    constexpr int far = 1 << 20;
    auto d = closure(m);
    int n = static_cast<int>(m.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (d[i][j] > 2 && d[i][j] < far) return false;
    return true;
}

}  // namespace

OracleResult opt_bruteforce(const Graph& g, int cap) {
    if (cap < 0) cap = 0;
    std::vector<Edge> all = g.edges();
    int m = static_cast<int>(all.size());
    if (cap > m) cap = m;
    auto base = matrix_of(g);
    OracleResult result;

    for (int size = 0; size <= cap; ++size) {
        // Standard lexicographic combination walk over index vectors.
        std::vector<int> pick(size);
        for (int i = 0; i < size; ++i) pick[i] = i;
        while (true) {
            ++result.subsets_examined;
            auto mat = base;
            for (int i : pick) {
                mat[all[i].u][all[i].v] = 0;
                mat[all[i].v][all[i].u] = 0;
            }
            if (two_clubs(mat)) {
                std::vector<Edge> witness;
                for (int i : pick) witness.push_back(all[i]);
                result.opt = size;
                result.witness = std::move(witness);
                return result;
            }
            if (size == 0) break;
            int pos = size - 1;
            while (pos >= 0 && pick[pos] == m - size + pos) --pos;
            if (pos < 0) break;
            ++pick[pos];
            for (int i = pos + 1; i < size; ++i) pick[i] = pick[i - 1] + 1;
        }
    }
    return result;  // opt stays empty: exceeded cap
}

int opt_exact_bruteforce(const Graph& g) {
    return *opt_bruteforce(g, g.edge_count()).opt;
}

namespace {

// Canonical quadruple straight off the distance closure; independent of
// find_conflict_quadruple in graph.cpp.
std::optional<ConflictQuadruple> quadruple_by_closure(const Graph& g) {
    auto m = matrix_of(g);
    auto d = closure(m);
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a) {
        bool far3 = false;
        for (int u = 0; u < n; ++u)
            if (d[a][u] == 3) { far3 = true; break; }
        if (!far3) continue;
        for (int b = 0; b < n; ++b) {
            if (!m[a][b]) continue;
            for (int c = 0; c < n; ++c) {
                if (!m[b][c] || d[a][c] != 2) continue;
                for (int dd = 0; dd < n; ++dd)
                    if (m[c][dd] && d[a][dd] == 3) return ConflictQuadruple{a, b, c, dd};
            }
        }
    }
    return std::nullopt;
}

bool solve_3k_rec(const Graph& g, int budget, std::vector<Edge>& chosen, long long& nodes) {
    ++nodes;
    auto quad = quadruple_by_closure(g);
    if (!quad) return true;  // already a 2-clubs graph
    if (budget <= 0) return false;
    const Edge options[3] = {Edge(quad->a, quad->b), Edge(quad->b, quad->c), Edge(quad->c, quad->d)};
    for (const Edge& e : options) {
        chosen.push_back(e);
        if (solve_3k_rec(delete_edges(g, {&e, 1}), budget - 1, chosen, nodes)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

ThreeWayResult solve_3k(const Instance& inst) {
    ThreeWayResult result;
    if (inst.budget < 0) return result;
    std::vector<Edge> chosen;
    result.answer = solve_3k_rec(inst.graph, inst.budget, chosen, result.nodes);
    if (result.answer) result.witness = std::move(chosen);
    return result;
}

int opt_via_3k(const Graph& g) {
    for (int k = 0;; ++k)
        if (solve_3k({g, k}).answer) return k;
}

}  // namespace twoclub
