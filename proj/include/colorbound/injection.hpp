#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "colorbound/coloring.hpp"
#include "colorbound/exact.hpp"
#include "colorbound/graph.hpp"

namespace colorbound {

/// A pair (h, f): an edge h = {u,w}, u < w, and a proper coloring f.
struct DomainElem {
    Edge h;
    Coloring f;

    auto operator<=>(const DomainElem &) const = default;
};

/// A pair (c, g): a color c and an improper coloring g.
struct ImageElem {
    Color c;
    Coloring g;

    auto operator<=>(const ImageElem &) const = default;
};

/// Raised when an injection operation is called outside its domain
/// (lambda < 2, no edges, h not an edge, f improper, g proper).
class InjectionDomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The unique {c,d}-coloring of tree K in which every vertex of `path` gets d
/// and every tree edge off the path is bichromatic. Vertices at odd tree
/// distance from the path get c. Returned as (vertex, color) pairs in
/// ascending vertex order.
std::map<Vertex, Color> recolor_component(const Tree &component, const std::vector<Vertex> &path,
                                          Color c, Color d);

/// The forward map I((h,f)) = (c,g).
///
/// With h = {u,w}, u < w, d = f(u) and c = f(w): Y is the set of vertices
/// f-colored c or d, K the component of the canonical spanning forest F_Y
/// holding u and w, and P the tree path from u to w. g agrees with f off K and
/// is the recoloring of K that puts d on all of P. The returned color is c,
/// the one no longer present on P.
ImageElem apply_injection(const Graph &graph, int lambda, const DomainElem &x);

/// Reconstructs (h,f) from (c,g), or nullopt when (c,g) is not in the image.
/// Membership is settled by re-applying the forward map to the candidate and
/// comparing. Throws InjectionDomainError if g is proper.
std::optional<DomainElem> invert_injection(const Graph &graph, int lambda, const ImageElem &y);

/// Number of colors c with (c,g) in the image. Throws if g is proper.
int image_multiplicity(const Graph &graph, int lambda, const Coloring &g);

struct Counterexample {
    std::string property;
    std::string witness;
};

struct VerificationReport {
    int v = 0;
    int e = 0;
    int lambda = 0;
    BigInt proper_count;
    BigInt domain_size;
    BigInt image_size;  // in-image (c,g) pairs found by scanning L x (C \ C^p)

    bool total = true;              // every I(x) lands in L x (C \ C^p)
    bool injective = true;
    bool round_trip_forward = true;  // invert(apply(x)) == x
    bool round_trip_backward = true; // apply(invert(y)) == y
    bool multiplicity_bounded = true; // multiplicity <= lambda-1
    bool two_bad_colors_unique = true; // |B| = 2 implies multiplicity <= 1
    bool image_structure = true;     // |B| in {1,2}, d in B, c-mono edges off F_Y
    int max_image_multiplicity = 0;

    BigInt inequality_lhs;  // e * |C^p|
    BigInt inequality_rhs;  // (lambda - 1) * (lambda^v - |C^p|)
    bool bound_holds = false;

    std::vector<Counterexample> counterexamples;

    bool all_hold() const noexcept
    {
        return total && injective && round_trip_forward && round_trip_backward &&
               multiplicity_bounded && two_bad_colors_unique && image_structure &&
               bound_holds && image_size == domain_size;
    }
    bool tight() const { return inequality_lhs == inequality_rhs; }
};

/// Exhaustively checks the injection over E x C^p and every improper coloring.
/// Requires lambda >= 2 and e >= 1; throws BudgetExceeded when lambda^v
/// exceeds `budget`. Failures are recorded as counterexamples (at most
/// `max_counterexamples` are kept) rather than thrown.
VerificationReport verify_theorem(const Graph &graph, int lambda,
                                  std::uint64_t budget = default_enumeration_budget,
                                  std::size_t max_counterexamples = 16);

}  // namespace colorbound
