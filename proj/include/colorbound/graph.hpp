#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace colorbound {

/// Vertices are labelled 1..v.
using Vertex = int;

struct Edge {
    Vertex u;
    Vertex w;

    auto operator<=>(const Edge &) const = default;
};

enum class GraphErrorKind {
    loop,
    duplicate_edge,
    vertex_out_of_range,
    invalid_vertex_count,
    invalid_family,
    not_connected,
    not_in_forest,
};

class GraphError : public std::invalid_argument {
public:
    GraphError(GraphErrorKind kind, const std::string &what)
        : std::invalid_argument(what), kind_(kind) {}

    GraphErrorKind kind() const noexcept { return kind_; }

private:
    GraphErrorKind kind_;
};

/// Simple undirected graph on {1,...,v}. Immutable after construction; edges
/// are stored normalized (u < w) in ascending lexicographic order.
class Graph {
public:
    /// Throws GraphError on loops, duplicate edges (in either orientation),
    /// labels outside 1..v, or v < 1.
    Graph(int v, std::span<const Edge> edges);
    Graph(int v, std::initializer_list<Edge> edges)
        : Graph(v, std::span<const Edge>(edges.begin(), edges.size())) {}

    int vertex_count() const noexcept { return v_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge> &edges() const noexcept { return edges_; }

    /// Neighbours of x in ascending order.
    const std::vector<Vertex> &neighbors(Vertex x) const { return adjacency_.at(x); }
    bool has_edge(Vertex a, Vertex b) const;
    bool contains(Vertex x) const noexcept { return x >= 1 && x <= v_; }

    friend bool operator==(const Graph &a, const Graph &b) {
        return a.v_ == b.v_ && a.edges_ == b.edges_;
    }

private:
    int v_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;  // index 0 unused
};

Graph make_graph(int v, std::span<const Edge> edges);

/// G_X: the vertices of X (sorted, original labels) and every edge of G with
/// both ends in X.
struct InducedSubgraph {
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
};

InducedSubgraph induced_subgraph(const Graph &graph, std::span<const Vertex> subset);

/// One tree of a spanning forest.
struct Tree {
    std::vector<Vertex> vertices;  // ascending
    std::vector<Edge> edges;       // normalized, ascending
};

/// Spanning forest of an induced subgraph. Components are numbered in order of
/// their smallest vertex, which is also the root of each tree.
class Forest {
public:
    static constexpr Vertex root_marker = 0;
    static constexpr int absent = -1;

    const std::vector<Vertex> &vertex_set() const noexcept { return vertices_; }
    const std::vector<Edge> &tree_edges() const noexcept { return tree_edges_; }
    int component_count() const noexcept { return static_cast<int>(roots_.size()); }

    bool contains(Vertex x) const noexcept;
    /// Component index of x, or `absent` when x is not in the vertex set.
    int component_of(Vertex x) const noexcept;
    /// Parent of x in its DFS tree, or `root_marker` for roots.
    Vertex parent(Vertex x) const;
    int depth(Vertex x) const;
    bool is_tree_edge(Vertex a, Vertex b) const;

    Tree component_tree(int component) const;

    friend bool operator==(const Forest &, const Forest &) = default;

private:
    friend Forest canonical_spanning_forest(const Graph &, std::span<const Vertex>);

    std::vector<Vertex> vertices_;
    std::vector<Edge> tree_edges_;
    std::vector<Vertex> roots_;
    std::vector<int> component_;  // indexed by vertex label, size v+1
    std::vector<Vertex> parent_;
    std::vector<int> depth_;
};

/// Depth-first spanning forest of G_X: each component is rooted at its
/// smallest vertex and neighbours are visited in ascending label order. The
/// result depends only on (G, X).
Forest canonical_spanning_forest(const Graph &graph, std::span<const Vertex> subset);

/// The unique tree path from u to w, starting at u.
std::vector<Vertex> forest_path(const Forest &forest, Vertex u, Vertex w);

enum class Family { path, cycle, complete, random };

std::optional<Family> parse_family_name(std::string_view name);
std::string_view family_name(Family family);

/// Deterministic graph families. `random` draws each pair {i,j}, i<j, in
/// lexicographic order from std::mt19937_64 seeded with `seed`; the pair is an
/// edge iff (draw >> 11) * 2^-53 < p.
Graph family(Family kind, int n, std::optional<std::uint64_t> seed = std::nullopt,
             std::optional<double> p = std::nullopt);

}  // namespace colorbound
