#ifndef ORDTOP_LEXINT_HPP
#define ORDTOP_LEXINT_HPP

#include <cstdint>
#include <vector>

#include "ordtop/rational.hpp"

namespace ordtop {

enum class LexOrder { Less, Equal, Greater };

/// A point of the lexicographically ordered cube [0,1]^dims with exact
/// rational coordinates.
class LexPoint {
public:
    LexPoint() = default;
    explicit LexPoint(std::vector<Rational> coords);

    std::size_t dims() const { return coords_.size(); }
    const std::vector<Rational>& coords() const { return coords_; }
    const Rational& operator[](std::size_t i) const { return coords_.at(i); }

    bool operator==(const LexPoint& rhs) const { return coords_ == rhs.coords_; }

private:
    std::vector<Rational> coords_;
};

/// The ambient cube; all zeros is the minimum, all ones the maximum.
struct LexInterval {
    std::size_t dims = 1;

    LexPoint min() const;
    LexPoint max() const;
    bool contains(const LexPoint& p) const { return p.dims() == dims; }
};

/// Verdict from the first differing coordinate.
LexOrder lex_compare(const LexPoint& p, const LexPoint& q);

inline bool lex_less(const LexPoint& p, const LexPoint& q) {
    return lex_compare(p, q) == LexOrder::Less;
}

/// Coordinatewise supremum recursion: s_b is the supremum of the b-th
/// coordinates over the points agreeing with s below b (0 when that set is
/// empty).  Equals the lexicographic maximum for finite nonempty input.
LexPoint sup_finite(const std::vector<LexPoint>& points);
LexPoint inf_finite(const std::vector<LexPoint>& points);

/// All points whose coordinates form a nonzero prefix of dyadics with
/// denominator <= 2^depth followed by zeros.  Sorted lexicographically.
/// Cardinality is sum over m of (2^depth)^m for m = 0..dims.
std::vector<LexPoint> dense_sample(const LexInterval& interval, unsigned depth);

/// Image of a point under the order epimorphism onto the wedge of two
/// copies of the interval.  First coordinate below 1/2 doubles into copy 1;
/// at or above 1/2 it lands in copy 2 via 2t-1.  The all-(1/2,0,...,0)
/// point is the glue: copy 1's maximum identified with copy 2's minimum.
struct WedgeImage {
    int copy = 1;  // 1 or 2
    LexPoint point;

    bool is_glue_point() const;
};

WedgeImage wedge_map(const LexPoint& p);

/// Compares wedge images: copy 1 precedes copy 2; the glue point is equal
/// to copy 1's maximum.
LexOrder wedge_compare(const WedgeImage& a, const WedgeImage& b);

/// Coordinatewise 1 - c; an order anti-isomorphism and an involution.
LexPoint reverse_point(const LexPoint& p);

} // namespace ordtop

#endif
