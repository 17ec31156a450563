#pragma once

#include <compare>
#include <cstdint>
#include <iterator>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "colorbound/exact.hpp"
#include "colorbound/graph.hpp"

namespace colorbound {

/// Colors are 0..lambda-1.
using Color = int;

/// Total map from vertices 1..v to colors.
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(std::vector<Color> values) : values_(std::move(values)) {}
    Coloring(std::initializer_list<Color> values) : values_(values) {}

    int vertex_count() const noexcept { return static_cast<int>(values_.size()); }
    Color operator()(Vertex x) const { return values_.at(x - 1); }
    void set(Vertex x, Color c) { values_.at(x - 1) = c; }
    std::span<const Color> values() const noexcept { return values_; }

    /// Largest color used plus one; 0 for the empty coloring.
    int color_bound() const noexcept;

    auto operator<=>(const Coloring &) const = default;

private:
    std::vector<Color> values_;
};

/// 1-based rendering, e.g. "(1,2,2)".
std::string to_string(const Coloring &f);

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t default_enumeration_budget = 10'000'000;

bool is_proper(const Graph &graph, const Coloring &f);

/// Colors that appear on at least one monochromatic edge.
std::set<Color> bad_colors(const Graph &graph, const Coloring &g);

/// lambda^v as an exact integer.
BigInt coloring_count(int v, int lambda);

/// All lambda^v colorings of v vertices, lexicographic in (g(1),...,g(v)).
class ColoringRange {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Coloring;
        using difference_type = std::ptrdiff_t;
        using pointer = const Coloring *;
        using reference = const Coloring &;

        iterator() = default;
        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator &operator++();
        iterator operator++(int)
        {
            iterator old = *this;
            ++*this;
            return old;
        }
        friend bool operator==(const iterator &a, const iterator &b)
        {
            return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_);
        }

    private:
        friend class ColoringRange;
        iterator(Coloring start, int lambda, bool done)
            : current_(std::move(start)), lambda_(lambda), done_(done) {}

        Coloring current_;
        int lambda_ = 0;
        bool done_ = true;
    };

    ColoringRange(int v, int lambda);

    iterator begin() const;
    iterator end() const { return {}; }

private:
    int v_;
    int lambda_;
};

ColoringRange enumerate_colorings(int v, int lambda);

/// The coloring with the given lexicographic rank (base-lambda digits, g(1) most significant).
Coloring coloring_at_rank(int v, int lambda, std::uint64_t rank);

/// Proper colorings whose lexicographic rank lies in [first, last). Blocks may
/// be counted independently and summed.
BigInt count_proper_block(const Graph &graph, int lambda, std::uint64_t first, std::uint64_t last);

/// Exact |C^p| by exhaustive enumeration. lambda = 0 yields 0. Throws
/// BudgetExceeded when lambda^v exceeds `budget`.
BigInt count_proper_brute(const Graph &graph, int lambda,
                          std::uint64_t budget = default_enumeration_budget);

/// Integer polynomial in lambda; coefficient(k) multiplies lambda^k.
class ChromaticPolynomial {
public:
    ChromaticPolynomial() = default;
    explicit ChromaticPolynomial(std::vector<BigInt> coefficients);

    int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
    const BigInt &coefficient(int k) const { return coefficients_.at(k); }
    const std::vector<BigInt> &coefficients() const noexcept { return coefficients_; }

    bool operator==(const ChromaticPolynomial &) const = default;

private:
    std::vector<BigInt> coefficients_;
};

/// e.g. "x^3 - 3x^2 + 2x".
std::string to_string(const ChromaticPolynomial &p);

inline constexpr std::uint64_t default_polynomial_budget = 2'000'000;

/// Deletion-contraction on the lexicographically smallest edge, memoized on
/// the normalized edge set of each minor. `budget` caps the number of distinct
/// minors expanded; BudgetExceeded is thrown beyond it.
ChromaticPolynomial chromatic_polynomial(const Graph &graph,
                                         std::uint64_t budget = default_polynomial_budget);

/// Horner evaluation; lambda >= 0.
BigInt evaluate_polynomial(const ChromaticPolynomial &p, int lambda);

}  // namespace colorbound
