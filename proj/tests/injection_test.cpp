#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "colorbound/injection.hpp"
#include "test_support.hpp"

using namespace colorbound;
using colorbound::testing::all_labeled_graphs;
using colorbound::testing::all_trees;
using colorbound::testing::random_graphs;

namespace {

Graph k2() { return family(Family::complete, 2); }
Graph k3() { return family(Family::complete, 3); }
Graph p3() { return family(Family::path, 3); }
Graph c4() { return family(Family::cycle, 4); }

Tree whole_tree(const Graph &g)
{
    std::vector<Vertex> all;
    for (Vertex x = 1; x <= g.vertex_count(); ++x)
        all.push_back(x);
    return {all, g.edges()};
}

}  // namespace

TEST_CASE("apply_injection examples")
{
    CHECK(apply_injection(k2(), 2, {{1, 2}, {0, 1}}) == ImageElem{1, {0, 0}});

    ImageElem path = apply_injection(p3(), 2, {{1, 2}, {0, 1, 0}});
    CHECK(path == ImageElem{1, {0, 0, 1}});
    CHECK(bad_colors(p3(), path.g) == std::set<Color>{0});

    ImageElem cyc = apply_injection(c4(), 2, {{2, 3}, {0, 1, 0, 1}});
    CHECK(cyc == ImageElem{0, {0, 1, 1, 0}});
    CHECK(bad_colors(c4(), cyc.g) == std::set<Color>{0, 1});

    // Only vertices of the {c,d} classes are touched.
    ImageElem three = apply_injection(k3(), 3, {{1, 3}, {0, 2, 1}});
    CHECK(three == ImageElem{1, {0, 2, 0}});
}

TEST_CASE("apply_injection rejects inputs outside its domain")
{
    CHECK_THROWS_AS(apply_injection(k2(), 2, {{1, 2}, {0, 0}}), InjectionDomainError);
    CHECK_THROWS_AS(apply_injection(p3(), 2, {{1, 3}, {0, 1, 0}}), InjectionDomainError);
    CHECK_THROWS_AS(apply_injection(k2(), 1, {{1, 2}, {0, 0}}), InjectionDomainError);
    CHECK_THROWS_AS(apply_injection(Graph(2, {}), 2, {{1, 2}, {0, 1}}), InjectionDomainError);
    CHECK_THROWS_AS(apply_injection(k2(), 2, {{1, 2}, {0, 2}}), InjectionDomainError);
}

TEST_CASE("recolor_component examples")
{
    auto single = recolor_component(whole_tree(k2()), {1, 2}, 1, 0);
    CHECK(single == std::map<Vertex, Color>{{1, 0}, {2, 0}});

    auto path = recolor_component(whole_tree(p3()), {1, 2}, 1, 0);
    CHECK(path == std::map<Vertex, Color>{{1, 0}, {2, 0}, {3, 1}});

    CHECK_THROWS_AS(recolor_component(whole_tree(p3()), {1, 3}, 1, 0), InjectionDomainError);
    CHECK_THROWS_AS(recolor_component(whole_tree(p3()), {1, 4}, 1, 0), InjectionDomainError);
    CHECK_THROWS_AS(recolor_component(whole_tree(p3()), {1, 2}, 0, 0), InjectionDomainError);
}

TEST_CASE("recolor_component is the unique valid recoloring")
{
    const Color c = 1, d = 0;
    for (int k = 1; k <= 5; ++k) {
        for (const Graph &tree : all_trees(k)) {
            const Tree t = whole_tree(tree);
            Forest forest = canonical_spanning_forest(tree, t.vertices);
            for (Vertex a = 1; a <= k; ++a)
                for (Vertex b = a; b <= k; ++b) {
                    auto path = forest_path(forest, a, b);
                    std::set<Vertex> on_path(path.begin(), path.end());
                    auto on_path_edge = [&](const Edge &e) {
                        for (std::size_t i = 1; i < path.size(); ++i)
                            if (Edge{std::min(path[i - 1], path[i]), std::max(path[i - 1], path[i])} == e)
                                return true;
                        return false;
                    };

                    int valid = 0;
                    std::map<Vertex, Color> witness;
                    for (unsigned mask = 0; mask < (1u << k); ++mask) {
                        std::map<Vertex, Color> col;
                        for (Vertex x = 1; x <= k; ++x)
                            col[x] = (mask >> (x - 1) & 1) ? c : d;
                        bool ok = std::all_of(on_path.begin(), on_path.end(),
                                              [&](Vertex x) { return col[x] == d; });
                        for (const Edge &e : t.edges)
                            if (!on_path_edge(e) && col[e.u] == col[e.w])
                                ok = false;
                        if (ok) {
                            ++valid;
                            witness = col;
                        }
                    }
                    REQUIRE(valid == 1);
                    REQUIRE(recolor_component(t, path, c, d) == witness);
                }
        }
    }
}

TEST_CASE("invert_injection examples")
{
    auto k2_back = invert_injection(k2(), 2, {1, {0, 0}});
    REQUIRE(k2_back);
    CHECK(*k2_back == DomainElem{{1, 2}, {0, 1}});

    auto c4_back = invert_injection(c4(), 2, {0, {0, 1, 1, 0}});
    REQUIRE(c4_back);
    CHECK(*c4_back == DomainElem{{2, 3}, {0, 1, 0, 1}});

    CHECK_FALSE(invert_injection(k2(), 2, {0, {0, 0}}));
    CHECK_THROWS_AS(invert_injection(k2(), 2, {0, {0, 1}}), InjectionDomainError);
}

TEST_CASE("image_multiplicity examples")
{
    CHECK(image_multiplicity(k2(), 2, {0, 0}) == 1);
    CHECK(image_multiplicity(k3(), 2, {0, 0, 0}) == 0);
    CHECK(image_multiplicity(c4(), 2, {0, 1, 1, 0}) == 1);
    CHECK_THROWS_AS(image_multiplicity(c4(), 2, {0, 1, 0, 1}), InjectionDomainError);
}

TEST_CASE("verify_theorem examples")
{
    auto k2r = verify_theorem(k2(), 2);
    CHECK(k2r.all_hold());
    CHECK(k2r.injective);
    CHECK(k2r.max_image_multiplicity == 1);
    CHECK(k2r.inequality_lhs == 2);
    CHECK(k2r.inequality_rhs == 2);
    CHECK(k2r.tight());

    auto k3r = verify_theorem(k3(), 3);
    CHECK(k3r.all_hold());
    CHECK(k3r.proper_count == 6);
    CHECK(k3r.inequality_lhs == 18);
    CHECK(k3r.inequality_rhs == 42);

    auto p3r = verify_theorem(p3(), 2);
    CHECK(p3r.all_hold());
    CHECK(p3r.inequality_lhs == 4);
    CHECK(p3r.inequality_rhs == 6);

    CHECK_THROWS_AS(verify_theorem(Graph(3, {}), 2), InjectionDomainError);
    CHECK_THROWS_AS(verify_theorem(k3(), 1), InjectionDomainError);
    CHECK_THROWS_AS(verify_theorem(family(Family::complete, 6), 3, 100), BudgetExceeded);
}

TEST_CASE("injection properties on every graph with 4 vertices")
{
    // Checked here directly from the map, not through verify_theorem's flags.
    for (const Graph &g : all_labeled_graphs(4)) {
        if (g.edge_count() == 0)
            continue;
        for (int lambda : {2, 3}) {
            std::set<ImageElem> seen;
            std::size_t domain = 0;
            for (const Coloring &f : enumerate_colorings(4, lambda)) {
                if (!is_proper(g, f))
                    continue;
                for (const Edge &h : g.edges()) {
                    DomainElem x{h, f};
                    ImageElem y = apply_injection(g, lambda, x);
                    REQUIRE_FALSE(is_proper(g, y.g));
                    REQUIRE(seen.insert(y).second);
                    auto back = invert_injection(g, lambda, y);
                    REQUIRE(back);
                    REQUIRE(*back == x);
                    ++domain;
                }
            }
            std::size_t in_image = 0;
            for (const Coloring &g2 : enumerate_colorings(4, lambda)) {
                auto bad = bad_colors(g, g2);
                if (bad.empty())
                    continue;
                int m = image_multiplicity(g, lambda, g2);
                REQUIRE(m <= lambda - 1);
                if (bad.size() == 2)
                    REQUIRE(m <= 1);
                in_image += m;
                for (Color c = 0; c < lambda; ++c)
                    if (auto back = invert_injection(g, lambda, {c, g2}))
                        REQUIRE(apply_injection(g, lambda, *back) == ImageElem{c, g2});
            }
            REQUIRE(in_image == domain);
            REQUIRE(seen.size() == domain);
        }
    }
}

TEST_CASE("verify_theorem on sampled graphs with 5 and 6 vertices")
{
    for (double p : {0.3, 0.6, 0.9}) {
        for (const Graph &g : random_graphs(12, 5, 6, p, 77)) {
            if (g.edge_count() == 0)
                continue;
            for (int lambda : {2, 3}) {
                auto r = verify_theorem(g, lambda);
                INFO("v=", g.vertex_count(), " e=", g.edge_count(), " lambda=", lambda);
                REQUIRE(r.counterexamples.empty());
                REQUIRE(r.all_hold());
                REQUIRE(r.domain_size == r.proper_count * g.edge_count());
            }
        }
    }
}
