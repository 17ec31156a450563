#include "colorbound/injection.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace colorbound {

namespace {

std::string edge_string(const Edge &h)
{
    return "{" + std::to_string(h.u) + "," + std::to_string(h.w) + "}";
}

std::string describe(const DomainElem &x)
{
    return "h=" + edge_string(x.h) + " f=" + to_string(x.f);
}

std::string describe(const ImageElem &y)
{
    return "c=" + std::to_string(y.c + 1) + " g=" + to_string(y.g);
}

void require_instance(const Graph &graph, int lambda)
{
    if (lambda < 2)
        throw InjectionDomainError("the injection needs at least 2 colors, got " +
                                   std::to_string(lambda));
    if (graph.edge_count() < 1)
        throw InjectionDomainError("the injection needs at least one edge");
}

void require_coloring(const Graph &graph, int lambda, const Coloring &f)
{
    if (f.vertex_count() != graph.vertex_count())
        throw InjectionDomainError("coloring covers " + std::to_string(f.vertex_count()) +
                                   " vertices, graph has " +
                                   std::to_string(graph.vertex_count()));
    for (Color x : f.values())
        if (x < 0 || x >= lambda)
            throw InjectionDomainError("color " + std::to_string(x) + " outside 0.." +
                                       std::to_string(lambda - 1));
}

std::vector<Vertex> color_class(const Coloring &g, Color a, Color b)
{
    std::vector<Vertex> out;
    for (Vertex x = 1; x <= g.vertex_count(); ++x)
        if (g(x) == a || g(x) == b)
            out.push_back(x);
    return out;
}

// Tree adjacency restricted to one component, indexed by vertex label.
std::vector<std::vector<Vertex>> tree_adjacency(const Tree &tree, int label_bound)
{
    std::vector<std::vector<Vertex>> adj(label_bound + 1);
    for (const Edge &e : tree.edges) {
        adj[e.u].push_back(e.w);
        adj[e.w].push_back(e.u);
    }
    return adj;
}

int label_bound(const Tree &tree)
{
    return tree.vertices.empty() ? 0 : *std::max_element(tree.vertices.begin(), tree.vertices.end());
}

// The mono tree edges must form one simple path. Returns it from the smaller
// endpoint to the larger, or nullopt when the edges form anything else.
std::optional<std::vector<Vertex>> as_single_path(const std::vector<Edge> &edges)
{
    if (edges.empty())
        return std::nullopt;
    std::map<Vertex, std::vector<Vertex>> adj;
    for (const Edge &e : edges) {
        adj[e.u].push_back(e.w);
        adj[e.w].push_back(e.u);
    }
    std::vector<Vertex> ends;
    for (const auto &[x, nbrs] : adj) {
        if (nbrs.size() > 2)
            return std::nullopt;
        if (nbrs.size() == 1)
            ends.push_back(x);
    }
    if (ends.size() != 2)
        return std::nullopt;

    std::vector<Vertex> path{ends.front()};
    Vertex prev = 0, cur = ends.front();
    while (cur != ends.back()) {
        const auto &nbrs = adj[cur];
        Vertex next = nbrs[0] != prev ? nbrs[0] : (nbrs.size() > 1 ? nbrs[1] : 0);
        if (next == 0)
            return std::nullopt;
        prev = cur;
        cur = next;
        path.push_back(cur);
    }
    // Disconnected pieces (a path plus cycles) leave edges unvisited.
    if (path.size() != edges.size() + 1)
        return std::nullopt;
    return path;
}

}  // namespace

std::map<Vertex, Color> recolor_component(const Tree &component, const std::vector<Vertex> &path,
                                          Color c, Color d)
{
    if (c == d)
        throw InjectionDomainError("recoloring needs two distinct colors");
    if (path.empty())
        throw InjectionDomainError("empty path");

    auto in_tree = [&](Vertex x) {
        return std::binary_search(component.vertices.begin(), component.vertices.end(), x);
    };
    auto is_edge = [&](Vertex a, Vertex b) {
        Edge e{std::min(a, b), std::max(a, b)};
        return std::binary_search(component.edges.begin(), component.edges.end(), e);
    };
    std::set<Vertex> seen;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (!in_tree(path[i]) || !seen.insert(path[i]).second)
            throw InjectionDomainError("path is not a simple path inside the tree");
        if (i > 0 && !is_edge(path[i - 1], path[i]))
            throw InjectionDomainError("consecutive path vertices " + std::to_string(path[i - 1]) +
                                       "," + std::to_string(path[i]) + " are not a tree edge");
    }

    const auto adj = tree_adjacency(component, label_bound(component));
    std::map<Vertex, Color> out;
    std::map<Vertex, int> dist;
    std::deque<Vertex> queue;
    for (Vertex x : path) {
        dist[x] = 0;
        queue.push_back(x);
    }
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop_front();
        out[x] = dist[x] % 2 == 0 ? d : c;
        for (Vertex y : adj[x])
            if (!dist.contains(y)) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
    }
    if (out.size() != component.vertices.size())
        throw InjectionDomainError("component is not connected");
    return out;
}

ImageElem apply_injection(const Graph &graph, int lambda, const DomainElem &x)
{
    require_instance(graph, lambda);
    require_coloring(graph, lambda, x.f);
    if (x.h.u >= x.h.w || !graph.has_edge(x.h.u, x.h.w))
        throw InjectionDomainError(edge_string(x.h) + " is not an edge written with u < w");
    if (!is_proper(graph, x.f))
        throw InjectionDomainError("f is not proper: " + to_string(x.f));

    const Vertex u = x.h.u, w = x.h.w;
    const Color d = x.f(u);
    const Color c = x.f(w);

    const auto subset = color_class(x.f, c, d);
    const Forest forest = canonical_spanning_forest(graph, subset);
    const auto path = forest_path(forest, u, w);
    const Tree component = forest.component_tree(forest.component_of(u));

    Coloring g = x.f;
    for (const auto &[vertex, color] : recolor_component(component, path, c, d))
        g.set(vertex, color);
    return {c, std::move(g)};
}

std::optional<DomainElem> invert_injection(const Graph &graph, int lambda, const ImageElem &y)
{
    require_instance(graph, lambda);
    require_coloring(graph, lambda, y.g);
    if (y.c < 0 || y.c >= lambda)
        throw InjectionDomainError("color " + std::to_string(y.c) + " outside 0.." +
                                   std::to_string(lambda - 1));
    std::set<Color> palette = bad_colors(graph, y.g);
    if (palette.empty())
        throw InjectionDomainError("g is proper: " + to_string(y.g));

    palette.insert(y.c);
    if (palette.size() != 2)
        return std::nullopt;

    const Color c = y.c;
    const Color other = *palette.begin() == c ? *palette.rbegin() : *palette.begin();
    const auto subset = color_class(y.g, c, other);
    const Forest forest = canonical_spanning_forest(graph, subset);

    std::set<Color> tree_bad;
    std::vector<Edge> mono;
    for (const Edge &e : forest.tree_edges())
        if (y.g(e.u) == y.g(e.w)) {
            tree_bad.insert(y.g(e.u));
            mono.push_back(e);
        }
    if (tree_bad.size() != 1 || *tree_bad.begin() == c)
        return std::nullopt;
    const Color d = *tree_bad.begin();

    const auto path = as_single_path(mono);
    if (!path)
        return std::nullopt;
    const Vertex u = path->front(), w = path->back();
    if (!graph.has_edge(u, w))
        return std::nullopt;

    // Proper {c,d}-coloring of the tree K in which u keeps d.
    const Tree component = forest.component_tree(forest.component_of(u));
    const auto adj = tree_adjacency(component, label_bound(component));
    Coloring f = y.g;
    std::map<Vertex, int> dist{{u, 0}};
    std::deque<Vertex> queue{u};
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop_front();
        f.set(x, dist[x] % 2 == 0 ? d : c);
        for (Vertex z : adj[x])
            if (!dist.contains(z)) {
                dist[z] = dist[x] + 1;
                queue.push_back(z);
            }
    }
    if (!is_proper(graph, f))
        return std::nullopt;

    DomainElem candidate{{u, w}, std::move(f)};
    if (apply_injection(graph, lambda, candidate) != y)
        return std::nullopt;
    return candidate;
}

int image_multiplicity(const Graph &graph, int lambda, const Coloring &g)
{
    int count = 0;
    for (Color c = 0; c < lambda; ++c)
        if (invert_injection(graph, lambda, {c, g}))
            ++count;
    return count;
}

VerificationReport verify_theorem(const Graph &graph, int lambda, std::uint64_t budget,
                                  std::size_t max_counterexamples)
{
    require_instance(graph, lambda);
    const BigInt all = coloring_count(graph.vertex_count(), lambda);
    if (all > budget)
        throw BudgetExceeded("verifying over " + all.str() + " colorings exceeds budget " +
                             std::to_string(budget));

    VerificationReport report;
    report.v = graph.vertex_count();
    report.e = graph.edge_count();
    report.lambda = lambda;

    auto fail = [&](bool &flag, const char *property, std::string witness) {
        flag = false;
        if (report.counterexamples.size() < max_counterexamples)
            report.counterexamples.push_back({property, std::move(witness)});
    };

    std::vector<Coloring> proper, improper;
    for (const Coloring &f : enumerate_colorings(graph.vertex_count(), lambda))
        (is_proper(graph, f) ? proper : improper).push_back(f);

    report.proper_count = proper.size();
    report.domain_size = report.proper_count * report.e;

    std::map<ImageElem, DomainElem> images;
    for (const Edge &h : graph.edges()) {
        for (const Coloring &f : proper) {
            DomainElem x{h, f};
            ImageElem y;
            try {
                y = apply_injection(graph, lambda, x);
            } catch (const std::exception &err) {
                fail(report.total, "total", describe(x) + ": " + err.what());
                continue;
            }
            if (y.c < 0 || y.c >= lambda || is_proper(graph, y.g)) {
                fail(report.total, "total", describe(x) + " -> " + describe(y));
                continue;
            }

            auto [it, fresh] = images.emplace(y, x);
            if (!fresh)
                fail(report.injective, "injective",
                     describe(it->second) + " and " + describe(x) + " -> " + describe(y));

            auto back = invert_injection(graph, lambda, y);
            if (!back || *back != x)
                fail(report.round_trip_forward, "round_trip_forward",
                     describe(x) + " -> " + describe(y) + " -> " +
                         (back ? describe(*back) : std::string("not in image")));

            const Color d = f(h.u);
            const auto bad = bad_colors(graph, y.g);
            bool shaped = (bad.size() == 1 || bad.size() == 2) && bad.contains(d);
            const Forest forest = canonical_spanning_forest(graph, color_class(f, y.c, d));
            for (const Edge &t : forest.tree_edges())
                if (y.g(t.u) == y.c && y.g(t.w) == y.c)
                    shaped = false;
            if (!shaped)
                fail(report.image_structure, "image_structure", describe(x) + " -> " + describe(y));
        }
    }

    for (const Coloring &g : improper) {
        int multiplicity = 0;
        for (Color c = 0; c < lambda; ++c) {
            ImageElem y{c, g};
            auto back = invert_injection(graph, lambda, y);
            if (!back)
                continue;
            ++multiplicity;
            if (apply_injection(graph, lambda, *back) != y || !images.contains(y))
                fail(report.round_trip_backward, "round_trip_backward",
                     describe(y) + " -> " + describe(*back));
        }
        report.image_size += multiplicity;
        report.max_image_multiplicity = std::max(report.max_image_multiplicity, multiplicity);
        if (multiplicity > lambda - 1)
            fail(report.multiplicity_bounded, "multiplicity_bounded",
                 "g=" + to_string(g) + " multiplicity " + std::to_string(multiplicity));
        if (bad_colors(graph, g).size() == 2 && multiplicity > 1)
            fail(report.two_bad_colors_unique, "two_bad_colors_unique",
                 "g=" + to_string(g) + " multiplicity " + std::to_string(multiplicity));
    }

    if (report.image_size != report.domain_size && report.counterexamples.size() < max_counterexamples)
        report.counterexamples.push_back(
            {"image_size", "scanned image has " + report.image_size.str() + " pairs, domain has " +
                               report.domain_size.str()});

    report.inequality_lhs = report.domain_size;
    report.inequality_rhs = BigInt(lambda - 1) * (all - report.proper_count);
    report.bound_holds = report.inequality_lhs <= report.inequality_rhs;
    if (!report.bound_holds && report.counterexamples.size() < max_counterexamples)
        report.counterexamples.push_back(
            {"bound_holds", report.inequality_lhs.str() + " > " + report.inequality_rhs.str()});
    return report;
}

}  // namespace colorbound
