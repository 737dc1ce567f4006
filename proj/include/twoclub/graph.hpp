#pragma once

#include <compare>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace twoclub {

// Marker for "no path" in distance vectors/matrices.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

// Undirected edge, endpoints stored in (min,max) order.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge&) const = default;
};

// Induced path (a,b,c,d) with d(a,d) = 3. Such a path certifies that the
// component containing it has diameter at least three.
struct ConflictQuadruple {
    int a = 0;
    int b = 0;
    int c = 0;
    int d = 0;
};

// Simple undirected graph on dense 0-based vertex indices. Neighbor lists
// are kept sorted so every iteration order in the toolkit is deterministic.
// Optional per-vertex labels are carried for I/O only and never affect any
// algorithm.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n, std::vector<std::string> labels = {});

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }

    // Throws std::invalid_argument on out-of-range endpoints or a self-loop,
    // std::logic_error if the edge is already present.
    void add_edge(int u, int v);

    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    // All edges in canonical (min,max) lexicographic order.
    std::vector<Edge> edges() const;

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    // Label if present, else the 1-based vertex number as text.
    std::string label(int v) const;

  private:
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
    int edge_count_ = 0;

    void check_vertex(int v) const;
};

// Convenience constructor used throughout the tests and generators.
Graph make_graph(int n, std::span<const Edge> edges,
                 std::vector<std::string> labels = {});

// BFS distances from source; unreachable vertices get kUnreachable.
// Throws std::out_of_range on a bad source.
std::vector<int> distances_from(const Graph& g, int source);

// One BFS per vertex. matrix[u][v] is d(u,v) or kUnreachable.
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

// Sorted list of vertices u with d(v,u) <= t; v itself included only when
// closed is true.
std::vector<int> neighborhood_within(const Graph& g, int v, int t, bool closed);

struct Component {
    std::vector<int> vertices;  // sorted
    int diameter = 0;
};

// Connected components in order of their smallest vertex, each with its
// diameter (max eccentricity within the component).
std::vector<Component> component_diameters(const Graph& g);

// Components without diameters, same order.
std::vector<std::vector<int>> components(const Graph& g);

// True iff every component has diameter at most two.
bool is_two_clubs_graph(const Graph& g);

// Lexicographically smallest conflict quadruple (a,b,c,d), or nullopt when
// the graph is already a 2-clubs graph. The returned path is induced and
// d(a,d) = 3.
std::optional<ConflictQuadruple> find_conflict_quadruple(const Graph& g);

// Copy of g with the given edges removed. Vertex indices are unchanged.
// Throws std::logic_error if any edge is absent.
Graph delete_edges(const Graph& g, std::span<const Edge> edges);

// Subgraph induced by `keep` (sorted, duplicate-free, in range). Vertex i of
// the result corresponds to keep[i] in g; labels follow the vertices.
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);

}  // namespace twoclub
