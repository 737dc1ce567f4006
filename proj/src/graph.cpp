#include "twoclub/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace twoclub {

Graph::Graph(int n, std::vector<std::string> labels)
    : adj_(n >= 0 ? static_cast<size_t>(n) : throw std::invalid_argument("negative vertex count")),
      labels_(std::move(labels)) {
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
        throw std::invalid_argument("label count does not match vertex count");
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || u >= vertex_count() || v < 0 || v >= vertex_count())
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop rejected");
    if (has_edge(u, v)) throw std::logic_error("duplicate edge rejected");
    auto insert_sorted = [](std::vector<int>& list, int x) {
        list.insert(std::lower_bound(list.begin(), list.end(), x), x);
    };
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
    ++edge_count_;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;  // already lexicographic: u ascending, then v ascending
}

std::string Graph::label(int v) const {
    check_vertex(v);
    if (has_labels()) return labels_[v];
    return std::to_string(v + 1);
}

Graph make_graph(int n, std::span<const Edge> edges, std::vector<std::string> labels) {
    Graph g(n, std::move(labels));
    for (const Edge& e : edges) g.add_edge(e.u, e.v);
    return g;
}

std::vector<int> distances_from(const Graph& g, int source) {
    if (source < 0 || source >= g.vertex_count())
        throw std::out_of_range("BFS source out of range");
    std::vector<int> dist(g.vertex_count(), kUnreachable);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : g.neighbors(u)) {
            if (dist[v] != kUnreachable) continue;
            dist[v] = dist[u] + 1;
            queue.push_back(v);
        }
    }
    return dist;
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
    std::vector<std::vector<int>> matrix;
    matrix.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) matrix.push_back(distances_from(g, v));
    return matrix;
}

std::vector<int> neighborhood_within(const Graph& g, int v, int t, bool closed) {
    std::vector<int> dist = distances_from(g, v);
    std::vector<int> out;
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (u == v && !closed) continue;
        if (dist[u] <= t) out.push_back(u);
    }
    return out;
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (seen[v]) continue;
        std::vector<int> comp;
        std::deque<int> queue{v};
        seen[v] = 1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            comp.push_back(u);
            for (int w : g.neighbors(u)) {
                if (seen[w]) continue;
                seen[w] = 1;
                queue.push_back(w);
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<Component> component_diameters(const Graph& g) {
    std::vector<Component> out;
    for (std::vector<int>& comp : components(g)) {
        int diameter = 0;
        for (int v : comp) {
            std::vector<int> dist = distances_from(g, v);
            for (int u : comp)
                if (dist[u] > diameter) diameter = dist[u];
        }
        out.push_back({std::move(comp), diameter});
    }
    return out;
}

bool is_two_clubs_graph(const Graph& g) {
    for (const Component& c : component_diameters(g))
        if (c.diameter > 2) return false;
    return true;
}

std::optional<ConflictQuadruple> find_conflict_quadruple(const Graph& g) {
    // Smallest a with an eccentricity-3 vertex, then smallest (b,c,d) along
    // b in N(a), c in N(b) at distance two, d in N(c) at distance three.
    // Inducedness is automatic: d(a,d)=3 rules out the chords ac, bd, ad.
    for (int a = 0; a < g.vertex_count(); ++a) {
        std::vector<int> dist = distances_from(g, a);
        bool has_far = false;
        for (int u = 0; u < g.vertex_count(); ++u)
            if (dist[u] == 3) { has_far = true; break; }
        if (!has_far) continue;
        for (int b : g.neighbors(a))
            for (int c : g.neighbors(b)) {
                if (dist[c] != 2) continue;
                for (int d : g.neighbors(c))
                    if (dist[d] == 3) return ConflictQuadruple{a, b, c, d};
            }
    }
    return std::nullopt;
}

Graph delete_edges(const Graph& g, std::span<const Edge> edges) {
    for (const Edge& e : edges)
        if (!g.has_edge(e.u, e.v))
            throw std::logic_error("delete_edges: edge (" + std::to_string(e.u + 1) + "," +
                                   std::to_string(e.v + 1) + ") not present");
    std::vector<Edge> gone(edges.begin(), edges.end());
    std::sort(gone.begin(), gone.end());
    if (std::adjacent_find(gone.begin(), gone.end()) != gone.end())
        throw std::logic_error("delete_edges: duplicate edge in deletion set");
    Graph out(g.vertex_count(), g.labels());
    for (const Edge& e : g.edges())
        if (!std::binary_search(gone.begin(), gone.end(), e)) out.add_edge(e.u, e.v);
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    std::vector<int> index_of(g.vertex_count(), -1);
    for (size_t i = 0; i < keep.size(); ++i) {
        int v = keep[i];
        if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("induced_subgraph: bad vertex");
        if (i > 0 && keep[i - 1] >= v) throw std::invalid_argument("induced_subgraph: keep list must be sorted and unique");
        index_of[v] = static_cast<int>(i);
    }
    std::vector<std::string> labels;
    if (g.has_labels())
        for (int v : keep) labels.push_back(g.labels()[v]);
    Graph out(static_cast<int>(keep.size()), std::move(labels));
    for (size_t i = 0; i < keep.size(); ++i)
        for (int w : g.neighbors(keep[i]))
            if (index_of[w] > static_cast<int>(i)) out.add_edge(static_cast<int>(i), index_of[w]);
    return out;
}

}  // namespace twoclub
