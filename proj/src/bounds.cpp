#include "colorbound/bounds.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace colorbound {

namespace {

__extension__ typedef unsigned __int128 uint128;

void require_params(int v, int e, int lambda)
{
    if (v < 1)
        throw std::invalid_argument("v must be at least 1, got " + std::to_string(v));
    if (e < 0)
        throw std::invalid_argument("e must be non-negative, got " + std::to_string(e));
    if (lambda < 1)
        throw std::invalid_argument("lambda must be at least 1, got " + std::to_string(lambda));
}

Rational colorings(int v, int lambda)
{
    return Rational(power(BigInt(lambda), static_cast<unsigned>(v)));
}

}  // namespace

std::optional<Rational> liu_murty_bound(int v, int e, int lambda)
{
    require_params(v, e, lambda);
    if (e == 0)
        return lambda == 1 ? std::optional<Rational>(colorings(v, lambda)) : std::nullopt;
    return colorings(v, lambda) * Rational(lambda - 1, e);
}

Rational klazar_factor(int e, int lambda)
{
    if (e < 0 || lambda < 1)
        throw std::invalid_argument("need e >= 0 and lambda >= 1");
    if (e == 0)
        return 1;
    return Rational(lambda - 1, e + lambda - 1);
}

Rational klazar_bound(int v, int e, int lambda)
{
    require_params(v, e, lambda);
    return colorings(v, lambda) * klazar_factor(e, lambda);
}

std::uint64_t lazebnik_exponent(std::uint64_t e)
{
    // m(m+1) >= 2e is monotone in m; m = e always satisfies it.
    std::uint64_t lo = 0, hi = e;
    while (lo < hi) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        if (static_cast<uint128>(mid) * (mid + 1) >= static_cast<uint128>(e) * 2)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

LazebnikBound lazebnik_bound(int v, int e, int lambda)
{
    require_params(v, e, lambda);
    const auto m = lazebnik_exponent(static_cast<std::uint64_t>(e));
    const BigInt pairs = BigInt(e) * (e - 1) / 2;

    LazebnikBound out;
    out.terms[0] = power(Rational(lambda - 1, lambda), static_cast<unsigned>(m));
    out.terms[1] = Rational(1) - Rational(e, lambda) + Rational(pairs, BigInt(lambda) * lambda);
    out.terms[2] = klazar_factor(e, lambda);
    out.factor = *std::min_element(out.terms.begin(), out.terms.end());
    out.bound = colorings(v, lambda) * out.factor;
    return out;
}

BoundReport compare_bounds(const Graph &graph, int lambda, std::optional<BigInt> count)
{
    BoundReport report;
    report.v = graph.vertex_count();
    report.e = graph.edge_count();
    report.lambda = lambda;
    report.liu_murty = liu_murty_bound(report.v, report.e, lambda);
    report.klazar = klazar_bound(report.v, report.e, lambda);
    report.lazebnik = lazebnik_bound(report.v, report.e, lambda);
    report.proper_count = std::move(count);
    if (report.proper_count) {
        const Rational n(*report.proper_count);
        bool holds = n <= report.klazar && n <= report.lazebnik.bound;
        if (report.liu_murty)
            holds = holds && n <= *report.liu_murty;
        report.all_bounds_hold = holds;
    }
    return report;
}

}  // namespace colorbound
