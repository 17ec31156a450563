// End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "colorbound/bounds.hpp"
#include "colorbound/cli.hpp"
#include "colorbound/coloring.hpp"
#include "colorbound/injection.hpp"
#include "../test_support.hpp"

using namespace colorbound;
using namespace colorbound::testing;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string &why)
    {
        if (ok)
            detail = why;
        ok = false;
    }
};

struct Criterion {
    int id;
    std::string name;
    double time_limit_s;  // 0 = no stated limit
    std::function<Outcome()> body;
};

std::string describe(const Graph &g)
{
    std::string s = "v=" + std::to_string(g.vertex_count()) + " E=";
    for (const Edge &e : g.edges())
        s += "{" + std::to_string(e.u) + "," + std::to_string(e.w) + "}";
    return s;
}

const std::vector<Graph> &graphs_on_four()
{
    static const std::vector<Graph> corpus = all_labeled_graphs(4);
    return corpus;
}

// 200 random graphs on 5 or 6 vertices.
const std::vector<Graph> &random_corpus()
{
    static const std::vector<Graph> corpus = random_graphs(200, 5, 6, 0.5, 1);
    return corpus;
}

Outcome theorem_validity()
{
    Outcome out;
    int checked = 0;
    for (const Graph &g : graphs_on_four())
        for (int lambda = 1; lambda <= 4; ++lambda) {
            BigInt count = count_proper_brute(g, lambda);
            Rational bound = klazar_bound(g.vertex_count(), g.edge_count(), lambda);
            if (!(Rational(count) <= bound))
                out.fail(describe(g) + " lambda=" + std::to_string(lambda) + ": " + count.str() +
                         " > " + to_fraction_string(bound));
            ++checked;
        }
    out.detail = out.ok ? std::to_string(checked) + " instances" : out.detail;
    return out;
}

Outcome injection_suite()
{
    Outcome out;
    int runs = 0;
    for (const Graph &g : graphs_on_four()) {
        if (g.edge_count() == 0)
            continue;
        for (int lambda : {2, 3}) {
            auto r = verify_theorem(g, lambda);
            ++runs;
            const bool expected_equation =
                r.inequality_lhs == BigInt(g.edge_count()) * r.proper_count &&
                r.inequality_rhs ==
                    BigInt(lambda - 1) * (coloring_count(g.vertex_count(), lambda) - r.proper_count);
            if (!r.all_hold() || !r.counterexamples.empty() || !expected_equation ||
                r.max_image_multiplicity > lambda - 1) {
                std::string why = describe(g) + " lambda=" + std::to_string(lambda);
                if (!r.counterexamples.empty())
                    why += " [" + r.counterexamples.front().property + "] " +
                           r.counterexamples.front().witness;
                out.fail(why);
            }
        }
    }
    if (out.ok)
        out.detail = std::to_string(runs) + " verifications, 0 counterexamples";
    return out;
}

Outcome oracle_agreement()
{
    Outcome out;
    int checked = 0;
    auto check = [&](const Graph &g) {
        ChromaticPolynomial p = chromatic_polynomial(g);
        for (int lambda = 0; lambda <= 4; ++lambda) {
            BigInt brute = count_proper_brute(g, lambda);
            BigInt poly = evaluate_polynomial(p, lambda);
            if (brute != poly)
                out.fail(describe(g) + " lambda=" + std::to_string(lambda) + ": brute " +
                         brute.str() + ", polynomial " + poly.str());
            ++checked;
        }
    };
    for (const Graph &g : graphs_on_four())
        check(g);
    for (const Graph &g : random_corpus())
        check(g);
    if (out.ok)
        out.detail = std::to_string(checked) + " exact equalities";
    return out;
}

Outcome tightness()
{
    Outcome out;
    Graph k2 = family(Family::complete, 2);
    BigInt count = count_proper_brute(k2, 2);
    Rational bound = klazar_bound(2, 1, 2);
    if (count != 2 || bound != Rational(2))
        out.fail("count " + count.str() + ", bound " + to_fraction_string(bound));
    auto r = verify_theorem(k2, 2);
    if (!r.tight())
        out.fail("inequality not tight: " + r.inequality_lhs.str() + " vs " + r.inequality_rhs.str());
    if (out.ok)
        out.detail = "count = bound = 2";
    return out;
}

Outcome bound_ordering()
{
    Outcome out;
    int checked = 0;
    auto check = [&](const Graph &g) {
        const int v = g.vertex_count(), e = g.edge_count();
        if (e == 0)
            return;
        for (int lambda = 2; lambda <= 4; ++lambda) {
            auto laz = lazebnik_bound(v, e, lambda);
            Rational k = klazar_bound(v, e, lambda);
            auto lm = liu_murty_bound(v, e, lambda);
            const Rational all = Rational(power(BigInt(lambda), v));
            std::string where = describe(g) + " lambda=" + std::to_string(lambda);
            if (!lm)
                out.fail(where + ": Liu-Murty not applicable with e >= 1");
            else if (!(laz.bound <= k && k <= *lm))
                out.fail(where + ": ordering broken");
            if (laz.terms[2] != k / all || laz.terms[2] != klazar_factor(e, lambda))
                out.fail(where + ": third Lazebnik term differs from the klazar factor");
            if (laz.factor > laz.terms[0] || laz.factor > laz.terms[1] || laz.factor > laz.terms[2])
                out.fail(where + ": A is not the minimum");
            ++checked;
        }
    };
    for (const Graph &g : graphs_on_four())
        check(g);
    for (const Graph &g : random_corpus())
        check(g);
    if (out.ok)
        out.detail = std::to_string(checked) + " instances";
    return out;
}

Outcome exponent_identity()
{
    Outcome out;
    for (std::uint64_t e = 0; e <= 1'000'000; ++e) {
        const std::uint64_t m = lazebnik_exponent(e);
        const bool criterion = m * (m + 1) >= 2 * e && (m == 0 || (m - 1) * m < 2 * e);
        if (!criterion || m != exponent_by_square_root(e)) {
            out.fail("e=" + std::to_string(e) + ": m=" + std::to_string(m) + ", sqrt route " +
                     std::to_string(exponent_by_square_root(e)));
            break;
        }
    }
    if (out.ok)
        out.detail = "e = 0..1000000";
    return out;
}

Outcome recoloring_uniqueness()
{
    Outcome out;
    int cases = 0;
    for (int k = 1; k <= 5; ++k) {
        for (const Graph &tree : all_trees(k)) {
            Tree t;
            for (Vertex x = 1; x <= k; ++x)
                t.vertices.push_back(x);
            t.edges = tree.edges();
            Forest forest = canonical_spanning_forest(tree, t.vertices);
            for (Vertex a = 1; a <= k; ++a)
                for (Vertex b = a; b <= k; ++b) {
                    auto path = forest_path(forest, a, b);
                    std::vector<char> on_path(k + 1, 0);
                    for (Vertex x : path)
                        on_path[x] = 1;
                    auto path_edge = [&](const Edge &e) {
                        for (std::size_t i = 1; i < path.size(); ++i)
                            if (std::min(path[i - 1], path[i]) == e.u &&
                                std::max(path[i - 1], path[i]) == e.w)
                                return true;
                        return false;
                    };
                    const Color c = 1, d = 0;
                    int valid = 0;
                    unsigned valid_mask = 0;
                    for (unsigned mask = 0; mask < (1u << k); ++mask) {
                        auto color = [&](Vertex x) { return (mask >> (x - 1) & 1) ? c : d; };
                        bool ok = true;
                        for (Vertex x = 1; x <= k; ++x)
                            if (on_path[x] && color(x) != d)
                                ok = false;
                        for (const Edge &e : t.edges)
                            if (!path_edge(e) && color(e.u) == color(e.w))
                                ok = false;
                        if (ok) {
                            ++valid;
                            valid_mask = mask;
                        }
                    }
                    auto produced = recolor_component(t, path, c, d);
                    bool agrees = valid == 1;
                    for (Vertex x = 1; x <= k && agrees; ++x)
                        agrees = produced.at(x) == ((valid_mask >> (x - 1) & 1) ? c : d);
                    if (!agrees)
                        out.fail(describe(tree) + " path " + std::to_string(a) + ".." +
                                 std::to_string(b) + ": " + std::to_string(valid) + " valid");
                    ++cases;
                }
        }
    }
    if (out.ok)
        out.detail = std::to_string(cases) + " (tree, path) pairs";
    return out;
}

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome cli_contract()
{
    Outcome out;
    const std::string golden = COLORBOUND_GOLDEN_DIR;
    struct Golden {
        std::vector<std::string> args;
        std::string file;
    };
    const std::vector<Golden> cases = {
        {{"bounds", "--family", "complete:2", "--lambda", "1..4"}, "bounds_k2.csv"},
        {{"bounds", "--family", "complete:3", "--lambda", "1..4"}, "bounds_k3.csv"},
        {{"bounds", "--family", "path:3", "--lambda", "1..4"}, "bounds_path3.csv"},
        {{"sweep", "--family", "random:4..6:0.5", "--lambda", "1..3", "--seed", "2024"},
         "sweep_random.csv"},
        {{"sweep", "--family", "random:4..6:0.5", "--lambda", "2", "--seed", "2024", "--format",
          "json"},
         "sweep_random.json"},
    };

    auto run = [](std::vector<std::string> args, std::string &text) {
        args.insert(args.begin(), "colorbound");
        std::ostringstream o, e;
        int status = cli::run(args, o, e);
        text = o.str();
        return status;
    };

    for (const auto &c : cases) {
        std::string first, second;
        int s1 = run(c.args, first);
        int s2 = run(c.args, second);
        if (s1 != cli::exit_ok || s2 != cli::exit_ok)
            out.fail(c.file + ": exit status " + std::to_string(s1));
        if (first != second)
            out.fail(c.file + ": output differs between runs");
        if (first != read_file(golden + "/" + c.file))
            out.fail(c.file + ": output differs from golden file");
    }

    struct Status {
        std::vector<std::string> args;
        int expected;
    };
    const std::vector<Status> statuses = {
        {{"verify", "--family", "complete:2", "--lambda", "2"}, cli::exit_ok},
        {{"verify", "--family", "path:3", "--lambda", "1"}, cli::exit_ok},
        {{"count", "--family", "cycle:2", "--lambda", "2"}, cli::exit_input_error},
        {{"count", "--graph", golden + "/bounds_k2.csv", "--lambda", "2"}, cli::exit_input_error},
        {{"verify", "--family", "complete:6", "--lambda", "4", "--budget", "1000"},
         cli::exit_budget_exceeded},
        {{"count", "--family", "complete:6", "--lambda", "4", "--method", "brute", "--budget", "10"},
         cli::exit_budget_exceeded},
    };
    for (const auto &s : statuses) {
        std::string ignored;
        int got = run(s.args, ignored);
        if (got != s.expected) {
            std::string cmd;
            for (const auto &a : s.args)
                cmd += a + " ";
            out.fail(cmd + "exited " + std::to_string(got) + ", expected " +
                     std::to_string(s.expected));
        }
    }
    if (out.ok)
        out.detail = std::to_string(cases.size()) + " golden files, " +
                     std::to_string(statuses.size()) + " exit statuses";
    return out;
}

}  // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "bound validity, all graphs on 4 vertices, lambda 1..4", 5, theorem_validity},
        {2, "injection properties, all graphs on 4 vertices, lambda 2..3", 60, injection_suite},
        {3, "brute force equals chromatic polynomial, lambda 0..4", 30, oracle_agreement},
        {4, "tightness at K2, lambda 2", 0, tightness},
        {5, "bound ordering and third-term identity", 0, bound_ordering},
        {6, "exponent identity for e <= 10^6", 5, exponent_identity},
        {7, "recoloring uniqueness on trees with <= 5 vertices", 5, recoloring_uniqueness},
        {8, "CLI golden files, determinism and exit statuses", 0, cli_contract},
    };

    int failures = 0;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.body();
        } catch (const std::exception &e) {
            outcome.fail(std::string("exception: ") + e.what());
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit_s > 0 && seconds >= c.time_limit_s)
            outcome.fail("took " + std::to_string(seconds) + " s, limit " +
                         std::to_string(c.time_limit_s) + " s");
        failures += !outcome.ok;
        std::printf("[%s] criterion %d: %s (%.3f s) - %s\n", outcome.ok ? "PASS" : "FAIL", c.id,
                    c.name.c_str(), seconds, outcome.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
