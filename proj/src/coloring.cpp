#include "colorbound/coloring.hpp"

#include <algorithm>

namespace colorbound {

namespace {

void require_total(const Graph &graph, const Coloring &f)
{
    if (f.vertex_count() != graph.vertex_count())
        throw std::invalid_argument("coloring covers " + std::to_string(f.vertex_count()) +
                                    " vertices, graph has " +
                                    std::to_string(graph.vertex_count()));
}

}  // namespace

int Coloring::color_bound() const noexcept
{
    if (values_.empty())
        return 0;
    return *std::max_element(values_.begin(), values_.end()) + 1;
}

std::string to_string(const Coloring &f)
{
    std::string out = "(";
    for (int i = 0; i < f.vertex_count(); ++i) {
        if (i > 0)
            out += ",";
        out += std::to_string(f.values()[i] + 1);
    }
    return out + ")";
}

bool is_proper(const Graph &graph, const Coloring &f)
{
    require_total(graph, f);
    return std::none_of(graph.edges().begin(), graph.edges().end(),
                        [&](const Edge &e) { return f(e.u) == f(e.w); });
}

std::set<Color> bad_colors(const Graph &graph, const Coloring &g)
{
    require_total(graph, g);
    std::set<Color> bad;
    for (const Edge &e : graph.edges())
        if (g(e.u) == g(e.w))
            bad.insert(g(e.u));
    return bad;
}

BigInt coloring_count(int v, int lambda)
{
    if (v < 0 || lambda < 0)
        throw std::invalid_argument("negative vertex or color count");
    return power(BigInt(lambda), static_cast<unsigned>(v));
}

ColoringRange::iterator &ColoringRange::iterator::operator++()
{
    std::vector<Color> digits(current_.values().begin(), current_.values().end());
    for (auto i = static_cast<std::ptrdiff_t>(digits.size()) - 1; i >= 0; --i) {
        if (++digits[i] < lambda_) {
            current_ = Coloring(std::move(digits));
            return *this;
        }
        digits[i] = 0;
    }
    done_ = true;
    current_ = Coloring();
    return *this;
}

ColoringRange::ColoringRange(int v, int lambda) : v_(v), lambda_(lambda)
{
    if (v < 1)
        throw std::invalid_argument("vertex count must be at least 1");
    if (lambda < 0)
        throw std::invalid_argument("color count must be non-negative");
}

ColoringRange::iterator ColoringRange::begin() const
{
    if (lambda_ == 0)
        return end();
    return iterator(Coloring(std::vector<Color>(v_, 0)), lambda_, false);
}

ColoringRange enumerate_colorings(int v, int lambda)
{
    return ColoringRange(v, lambda);
}

Coloring coloring_at_rank(int v, int lambda, std::uint64_t rank)
{
    std::vector<Color> digits(v, 0);
    for (int i = v - 1; i >= 0; --i) {
        digits[i] = static_cast<Color>(rank % lambda);
        rank /= lambda;
    }
    if (rank != 0)
        throw std::out_of_range("rank exceeds lambda^v");
    return Coloring(std::move(digits));
}

BigInt count_proper_block(const Graph &graph, int lambda, std::uint64_t first, std::uint64_t last)
{
    if (lambda < 1 || first >= last)
        return 0;
    const int v = graph.vertex_count();
    const auto &edges = graph.edges();

    // Odometer over raw digits; avoids rebuilding a Coloring per step.
    Coloring start = coloring_at_rank(v, lambda, first);
    std::vector<Color> digits(start.values().begin(), start.values().end());
    std::uint64_t proper = 0;
    for (std::uint64_t rank = first; rank < last; ++rank) {
        bool ok = true;
        for (const Edge &e : edges)
            if (digits[e.u - 1] == digits[e.w - 1]) {
                ok = false;
                break;
            }
        proper += ok;
        for (int i = v - 1; i >= 0; --i) {
            if (++digits[i] < lambda)
                break;
            digits[i] = 0;
        }
    }
    return proper;
}

BigInt count_proper_brute(const Graph &graph, int lambda, std::uint64_t budget)
{
    if (lambda < 0)
        throw std::invalid_argument("color count must be non-negative");
    const BigInt total = coloring_count(graph.vertex_count(), lambda);
    if (total > budget)
        throw BudgetExceeded("enumerating " + total.str() + " colorings exceeds budget " +
                             std::to_string(budget));
    return count_proper_block(graph, lambda, 0, static_cast<std::uint64_t>(total));
}

}  // namespace colorbound
