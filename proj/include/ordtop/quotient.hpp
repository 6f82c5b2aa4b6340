#ifndef ORDTOP_QUOTIENT_HPP
#define ORDTOP_QUOTIENT_HPP

#include <string>
#include <vector>

#include "ordtop/lexint.hpp"

namespace ordtop {

/// A finite sorted set of breakpoints in the ambient cube, always carrying
/// the ambient minimum and maximum.
class BreakpointSet {
public:
    BreakpointSet() = default;
    /// Adjoins the endpoints, sorts and deduplicates.
    BreakpointSet(LexInterval ambient, std::vector<LexPoint> atoms);

    const LexInterval& ambient() const { return ambient_; }
    const std::vector<LexPoint>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }
    std::size_t gap_count() const { return atoms_.size() - 1; }

    /// Index of an atom equal to p, or npos.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t find_atom(const LexPoint& p) const;
    /// Index i with atom_i < p < atom_{i+1}; p must not be an atom.
    std::size_t gap_of(const LexPoint& p) const;

    void check_member(const LexPoint& p) const;

    bool operator==(const BreakpointSet& rhs) const {
        return ambient_.dims == rhs.ambient_.dims && atoms_ == rhs.atoms_;
    }

private:
    LexInterval ambient_;
    std::vector<LexPoint> atoms_;
};

/// s ~ t iff the closed lexicographic interval [s, t] contains at most one
/// atom.  Not transitive for sparse atom sets.
bool related(const LexPoint& s, const LexPoint& t, const BreakpointSet& atoms);

/// The atoms interleaved with one formal rational block per gap.  Blocks are
/// never materialized; only the alternating structure matters.
struct DensifiedSet {
    BreakpointSet base;

    std::size_t block_count() const { return base.gap_count(); }
};

DensifiedSet densify(const BreakpointSet& atoms);

/// m atom points glued alternately with m-1 unit segments:
///   atom 0 < (segment 0, r) < atom 1 < ... < atom m-1,  r in (0,1).
struct MixedInterval {
    std::size_t atom_count = 2;

    std::size_t segment_count() const { return atom_count - 1; }
};

struct MixedPoint {
    bool is_atom = true;
    std::size_t index = 0;
    Rational position;  // segments only, strictly inside (0,1)

    static MixedPoint atom(std::size_t i) { return MixedPoint{true, i, Rational(0)}; }
    static MixedPoint segment(std::size_t i, Rational pos);

    bool operator==(const MixedPoint& rhs) const;
    std::string str() const;
};

LexOrder mixed_compare(const MixedPoint& a, const MixedPoint& b);

/// The computable quotient map onto the mixed interval.  Atoms map to their
/// indices.  A point strictly inside a gap maps into the gap's segment at
/// the affine position of its first-differing coordinate against the
/// bounding atoms; when that position degenerates to 0 or 1 the point joins
/// the bounding atom's class (the formal blocks sit strictly between the
/// atoms' coordinates).  Collapses trailing-coordinate fibers.
class QuotientMap {
public:
    QuotientMap() = default;
    QuotientMap(BreakpointSet source, MixedInterval target);

    const BreakpointSet& source() const { return source_; }
    const MixedInterval& target() const { return target_; }

    MixedPoint eval(const LexPoint& p) const;

private:
    BreakpointSet source_;
    MixedInterval target_;
};

/// Builds the quotient interval (one atom per breakpoint, one segment per
/// gap) and its quotient map.
std::pair<MixedInterval, QuotientMap> quotient_by_breakpoints(const BreakpointSet& atoms);

/// Class of a point in the densified quotient: an atom index, or a segment
/// position.  Same encoding as the quotient map's values, computed here for
/// the fiber check below.
MixedPoint densified_class(const LexPoint& p, const BreakpointSet& atoms);

/// TRUE iff for every sample pair, p identifies them exactly when they lie
/// in the same densified class.
bool fibers_match_classes(const BreakpointSet& atoms, const std::vector<LexPoint>& samples);

} // namespace ordtop

#endif
