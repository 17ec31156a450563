#include "colorbound/coloring.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace colorbound {

namespace {

// A minor during deletion-contraction: vertices 0..n-1, sorted simple edges.
struct Minor {
    int n;
    std::vector<std::pair<int, int>> edges;

    auto operator<=>(const Minor &) const = default;
};

class DeletionContraction {
public:
    explicit DeletionContraction(std::uint64_t budget) : budget_(budget) {}

    std::vector<BigInt> solve(const Minor &g)
    {
        if (g.edges.empty()) {
            std::vector<BigInt> mono(g.n + 1, 0);
            mono[g.n] = 1;
            return mono;
        }
        if (auto it = memo_.find(g); it != memo_.end())
            return it->second;
        if (++expanded_ > budget_)
            throw BudgetExceeded("deletion-contraction exceeded " + std::to_string(budget_) +
                                 " minors");

        const auto [a, b] = g.edges.front();

        Minor deleted{g.n, {g.edges.begin() + 1, g.edges.end()}};

        // Merge b into a, shift labels above b down by one, drop the loop and
        // parallel edges.
        Minor contracted{g.n - 1, {}};
        auto relabel = [a = a, b = b](int x) { return x == b ? a : (x > b ? x - 1 : x); };
        for (const auto &[x, y] : g.edges) {
            int p = relabel(x), q = relabel(y);
            if (p == q)
                continue;
            contracted.edges.emplace_back(std::min(p, q), std::max(p, q));
        }
        std::sort(contracted.edges.begin(), contracted.edges.end());
        contracted.edges.erase(std::unique(contracted.edges.begin(), contracted.edges.end()),
                               contracted.edges.end());

        std::vector<BigInt> result = solve(deleted);
        std::vector<BigInt> minus = solve(contracted);
        for (std::size_t k = 0; k < minus.size(); ++k)
            result[k] -= minus[k];
        memo_.emplace(g, result);
        return result;
    }

private:
    std::uint64_t budget_;
    std::uint64_t expanded_ = 0;
    std::map<Minor, std::vector<BigInt>> memo_;
};

}  // namespace

ChromaticPolynomial::ChromaticPolynomial(std::vector<BigInt> coefficients)
    : coefficients_(std::move(coefficients))
{
    while (coefficients_.size() > 1 && coefficients_.back() == 0)
        coefficients_.pop_back();
}

std::string to_string(const ChromaticPolynomial &p)
{
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const BigInt &c = p.coefficient(k);
        if (c == 0)
            continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (mag != 1 || k == 0)
            out += mag.str();
        if (k >= 1)
            out += "x";
        if (k >= 2)
            out += "^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

ChromaticPolynomial chromatic_polynomial(const Graph &graph, std::uint64_t budget)
{
    Minor g{graph.vertex_count(), {}};
    for (const Edge &e : graph.edges())
        g.edges.emplace_back(e.u - 1, e.w - 1);
    return ChromaticPolynomial(DeletionContraction(budget).solve(g));
}

BigInt evaluate_polynomial(const ChromaticPolynomial &p, int lambda)
{
    if (lambda < 0)
        throw std::invalid_argument("lambda must be non-negative");
    BigInt acc = 0;
    for (int k = p.degree(); k >= 0; --k)
        acc = acc * lambda + p.coefficient(k);
    return acc;
}

}  // namespace colorbound
