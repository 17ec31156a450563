#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "colorbound/exact.hpp"
#include "colorbound/graph.hpp"

namespace colorbound {

// Every bound is an exact upper bound on the number of proper lambda-colorings.
// When e = 0 and lambda = 1 the factor (lambda-1)/(e+lambda-1) is 0/0, read as 1.

/// lambda^v * (lambda-1)/e. nullopt ("not applicable") when e = 0 and lambda >= 2.
std::optional<Rational> liu_murty_bound(int v, int e, int lambda);

/// The factor (lambda-1)/(e+lambda-1), 1 at e = 0.
Rational klazar_factor(int e, int lambda);

/// lambda^v * (lambda-1)/(e+lambda-1).
Rational klazar_bound(int v, int e, int lambda);

/// Smallest m >= 0 with m(m+1)/2 >= e, i.e. ceil(sqrt(2e + 1/4) - 1/2).
std::uint64_t lazebnik_exponent(std::uint64_t e);

struct LazebnikBound {
    /// ((lambda-1)/lambda)^m, 1 - e/lambda + C(e,2)/lambda^2, (lambda-1)/(e+lambda-1).
    std::array<Rational, 3> terms;
    Rational factor;  // min of the terms
    Rational bound;   // lambda^v * factor
};

LazebnikBound lazebnik_bound(int v, int e, int lambda);

struct BoundReport {
    int v = 0;
    int e = 0;
    int lambda = 0;
    std::optional<Rational> liu_murty;
    Rational klazar;
    LazebnikBound lazebnik;
    std::optional<BigInt> proper_count;
    /// count <= every applicable bound; empty without a count.
    std::optional<bool> all_bounds_hold;
};

BoundReport compare_bounds(const Graph &graph, int lambda,
                           std::optional<BigInt> count = std::nullopt);

}  // namespace colorbound
