#include "colorbound/graph.hpp"

#include <algorithm>
#include <random>

namespace colorbound {

namespace {

std::string edge_text(Vertex a, Vertex b)
{
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::vector<char> membership(const Graph &graph, std::span<const Vertex> subset)
{
    std::vector<char> in(graph.vertex_count() + 1, 0);
    for (Vertex x : subset) {
        if (!graph.contains(x))
            throw GraphError(GraphErrorKind::vertex_out_of_range,
                             "vertex " + std::to_string(x) + " outside 1.." +
                                 std::to_string(graph.vertex_count()));
        in[x] = 1;
    }
    return in;
}

}  // namespace

Graph::Graph(int v, std::span<const Edge> edges) : v_(v)
{
    if (v < 1)
        throw GraphError(GraphErrorKind::invalid_vertex_count,
                         "vertex count must be at least 1, got " + std::to_string(v));

    edges_.reserve(edges.size());
    for (const Edge &e : edges) {
        if (!contains(e.u) || !contains(e.w))
            throw GraphError(GraphErrorKind::vertex_out_of_range,
                             "edge " + edge_text(e.u, e.w) + " has a vertex outside 1.." +
                                 std::to_string(v));
        if (e.u == e.w)
            throw GraphError(GraphErrorKind::loop, "loop at vertex " + std::to_string(e.u));
        edges_.push_back({std::min(e.u, e.w), std::max(e.u, e.w)});
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw GraphError(GraphErrorKind::duplicate_edge,
                         "duplicate edge " + edge_text(dup->u, dup->w));

    adjacency_.assign(v + 1, {});
    for (const Edge &e : edges_) {
        adjacency_[e.u].push_back(e.w);
        adjacency_[e.w].push_back(e.u);
    }
    for (auto &list : adjacency_)
        std::sort(list.begin(), list.end());
}

bool Graph::has_edge(Vertex a, Vertex b) const
{
    if (!contains(a) || !contains(b))
        return false;
    const auto &list = adjacency_[a];
    return std::binary_search(list.begin(), list.end(), b);
}

Graph make_graph(int v, std::span<const Edge> edges)
{
    return Graph(v, edges);
}

InducedSubgraph induced_subgraph(const Graph &graph, std::span<const Vertex> subset)
{
    auto in = membership(graph, subset);
    InducedSubgraph sub;
    for (Vertex x = 1; x <= graph.vertex_count(); ++x)
        if (in[x])
            sub.vertices.push_back(x);
    for (const Edge &e : graph.edges())
        if (in[e.u] && in[e.w])
            sub.edges.push_back(e);
    return sub;
}

bool Forest::contains(Vertex x) const noexcept
{
    return x >= 1 && x < static_cast<Vertex>(component_.size()) && component_[x] != absent;
}

int Forest::component_of(Vertex x) const noexcept
{
    return contains(x) ? component_[x] : absent;
}

Vertex Forest::parent(Vertex x) const
{
    if (!contains(x))
        throw GraphError(GraphErrorKind::not_in_forest,
                         "vertex " + std::to_string(x) + " is not in the forest");
    return parent_[x];
}

int Forest::depth(Vertex x) const
{
    if (!contains(x))
        throw GraphError(GraphErrorKind::not_in_forest,
                         "vertex " + std::to_string(x) + " is not in the forest");
    return depth_[x];
}

bool Forest::is_tree_edge(Vertex a, Vertex b) const
{
    if (!contains(a) || !contains(b))
        return false;
    return parent_[a] == b || parent_[b] == a;
}

Tree Forest::component_tree(int component) const
{
    if (component < 0 || component >= component_count())
        throw GraphError(GraphErrorKind::not_in_forest,
                         "no component " + std::to_string(component));
    Tree tree;
    for (Vertex x : vertices_)
        if (component_[x] == component)
            tree.vertices.push_back(x);
    for (const Edge &e : tree_edges_)
        if (component_[e.u] == component)
            tree.edges.push_back(e);
    return tree;
}

Forest canonical_spanning_forest(const Graph &graph, std::span<const Vertex> subset)
{
    auto in = membership(graph, subset);
    const int v = graph.vertex_count();

    Forest forest;
    forest.component_.assign(v + 1, Forest::absent);
    forest.parent_.assign(v + 1, Forest::root_marker);
    forest.depth_.assign(v + 1, 0);

    // Iterative DFS that reproduces the recursive visiting order.
    struct Frame {
        Vertex vertex;
        std::size_t next;
    };
    std::vector<Frame> stack;

    for (Vertex root = 1; root <= v; ++root) {
        if (!in[root] || forest.component_[root] != Forest::absent)
            continue;
        const int id = forest.component_count();
        forest.roots_.push_back(root);
        forest.component_[root] = id;
        stack.push_back({root, 0});
        while (!stack.empty()) {
            Frame &top = stack.back();
            const auto &nbrs = graph.neighbors(top.vertex);
            if (top.next == nbrs.size()) {
                stack.pop_back();
                continue;
            }
            Vertex next = nbrs[top.next++];
            if (!in[next] || forest.component_[next] != Forest::absent)
                continue;
            forest.component_[next] = id;
            forest.parent_[next] = top.vertex;
            forest.depth_[next] = forest.depth_[top.vertex] + 1;
            forest.tree_edges_.push_back({std::min(top.vertex, next), std::max(top.vertex, next)});
            stack.push_back({next, 0});
        }
    }

    for (Vertex x = 1; x <= v; ++x)
        if (in[x])
            forest.vertices_.push_back(x);
    std::sort(forest.tree_edges_.begin(), forest.tree_edges_.end());
    return forest;
}

std::vector<Vertex> forest_path(const Forest &forest, Vertex u, Vertex w)
{
    for (Vertex x : {u, w})
        if (!forest.contains(x))
            throw GraphError(GraphErrorKind::not_in_forest,
                             "vertex " + std::to_string(x) + " is not in the forest");
    if (forest.component_of(u) != forest.component_of(w))
        throw GraphError(GraphErrorKind::not_connected,
                         "vertices " + std::to_string(u) + " and " + std::to_string(w) +
                             " are in different components");

    std::vector<Vertex> from_u, from_w;
    Vertex a = u, b = w;
    while (forest.depth(a) > forest.depth(b)) {
        from_u.push_back(a);
        a = forest.parent(a);
    }
    while (forest.depth(b) > forest.depth(a)) {
        from_w.push_back(b);
        b = forest.parent(b);
    }
    while (a != b) {
        from_u.push_back(a);
        from_w.push_back(b);
        a = forest.parent(a);
        b = forest.parent(b);
    }
    from_u.push_back(a);
    from_u.insert(from_u.end(), from_w.rbegin(), from_w.rend());
    return from_u;
}

std::optional<Family> parse_family_name(std::string_view name)
{
    if (name == "path")
        return Family::path;
    if (name == "cycle")
        return Family::cycle;
    if (name == "complete")
        return Family::complete;
    if (name == "random")
        return Family::random;
    return std::nullopt;
}

std::string_view family_name(Family family)
{
    switch (family) {
    case Family::path:
        return "path";
    case Family::cycle:
        return "cycle";
    case Family::complete:
        return "complete";
    case Family::random:
        return "random";
    }
    return "unknown";
}

Graph family(Family kind, int n, std::optional<std::uint64_t> seed, std::optional<double> p)
{
    if (n < 1)
        throw GraphError(GraphErrorKind::invalid_family, "family size must be at least 1");

    std::vector<Edge> edges;
    switch (kind) {
    case Family::path:
        for (Vertex i = 1; i < n; ++i)
            edges.push_back({i, i + 1});
        break;
    case Family::cycle:
        if (n < 3)
            throw GraphError(GraphErrorKind::invalid_family, "cycle requires n >= 3");
        for (Vertex i = 1; i < n; ++i)
            edges.push_back({i, i + 1});
        edges.push_back({1, n});
        break;
    case Family::complete:
        for (Vertex i = 1; i <= n; ++i)
            for (Vertex j = i + 1; j <= n; ++j)
                edges.push_back({i, j});
        break;
    case Family::random: {
        if (!seed || !p)
            throw GraphError(GraphErrorKind::invalid_family, "random family requires seed and p");
        if (!(*p >= 0.0 && *p <= 1.0))
            throw GraphError(GraphErrorKind::invalid_family, "p must lie in [0,1]");
        std::mt19937_64 rng(*seed);
        for (Vertex i = 1; i <= n; ++i)
            for (Vertex j = i + 1; j <= n; ++j) {
                double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
                if (draw < *p)
                    edges.push_back({i, j});
            }
        break;
    }
    }
    return Graph(n, edges);
}

}  // namespace colorbound
