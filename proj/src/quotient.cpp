#include "ordtop/quotient.hpp"

#include <algorithm>

#include "ordtop/errors.hpp"

namespace ordtop {

BreakpointSet::BreakpointSet(LexInterval ambient, std::vector<LexPoint> atoms)
    : ambient_(ambient), atoms_(std::move(atoms)) {
    for (const auto& a : atoms_)
        if (a.dims() != ambient_.dims)
            throw ValidationError("breakpoint dimension differs from the ambient interval");
    atoms_.push_back(ambient_.min());
    atoms_.push_back(ambient_.max());
    std::sort(atoms_.begin(), atoms_.end(), lex_less);
    atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
}

std::size_t BreakpointSet::find_atom(const LexPoint& p) const {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), p, lex_less);
    if (it != atoms_.end() && *it == p) return static_cast<std::size_t>(it - atoms_.begin());
    return npos;
}

std::size_t BreakpointSet::gap_of(const LexPoint& p) const {
    auto it = std::upper_bound(atoms_.begin(), atoms_.end(), p, lex_less);
    if (it == atoms_.begin() || it == atoms_.end())
        throw ValidationError("point outside the breakpoint range");
    return static_cast<std::size_t>(it - atoms_.begin()) - 1;
}

void BreakpointSet::check_member(const LexPoint& p) const {
    if (p.dims() != ambient_.dims)
        throw ValidationError("query dimension differs from the ambient interval");
}

bool related(const LexPoint& s, const LexPoint& t, const BreakpointSet& atoms) {
    atoms.check_member(s);
    atoms.check_member(t);
    const LexPoint& lo = lex_less(t, s) ? t : s;
    const LexPoint& hi = lex_less(t, s) ? s : t;
    std::size_t count = 0;
    for (const auto& a : atoms.atoms()) {
        if (!lex_less(a, lo) && !lex_less(hi, a)) {
            if (++count > 1) return false;
        }
    }
    return true;
}

DensifiedSet densify(const BreakpointSet& atoms) { return DensifiedSet{atoms}; }

MixedPoint MixedPoint::segment(std::size_t i, Rational pos) {
    if (pos <= 0 || pos >= 1)
        throw ValidationError("segment position must lie strictly inside (0,1)");
    return MixedPoint{false, i, std::move(pos)};
}

bool MixedPoint::operator==(const MixedPoint& rhs) const {
    if (is_atom != rhs.is_atom || index != rhs.index) return false;
    return is_atom || position == rhs.position;
}

std::string MixedPoint::str() const {
    if (is_atom) return "atom " + std::to_string(index);
    return "segment " + std::to_string(index) + " @ " + to_string(position);
}

LexOrder mixed_compare(const MixedPoint& a, const MixedPoint& b) {
    // atom i sits at i, segment (i, r) at i + r
    Rational ka = Rational(static_cast<long long>(a.index)) + (a.is_atom ? Rational(0) : a.position);
    Rational kb = Rational(static_cast<long long>(b.index)) + (b.is_atom ? Rational(0) : b.position);
    if (ka < kb) return LexOrder::Less;
    if (ka > kb) return LexOrder::Greater;
    return LexOrder::Equal;
}

namespace {

std::size_t first_diff_coord(const LexPoint& a, const LexPoint& b) {
    for (std::size_t i = 0; i < a.dims(); ++i)
        if (a[i] != b[i]) return i;
    throw ValidationError("consecutive atoms are equal");
}

} // namespace

QuotientMap::QuotientMap(BreakpointSet source, MixedInterval target)
    : source_(std::move(source)), target_(target) {
    if (target_.atom_count != source_.size())
        throw ValidationError("quotient target atom count differs from the breakpoint set");
}

MixedPoint QuotientMap::eval(const LexPoint& p) const {
    source_.check_member(p);
    std::size_t ai = source_.find_atom(p);
    if (ai != BreakpointSet::npos) return MixedPoint::atom(ai);

    std::size_t gi = source_.gap_of(p);
    const LexPoint& a = source_.atoms()[gi];
    const LexPoint& b = source_.atoms()[gi + 1];
    std::size_t delta = first_diff_coord(a, b);
    Rational r = (p[delta] - a[delta]) / (b[delta] - a[delta]);
    // an edge position means the densification blocks do not separate the
    // point from the bounding atom
    if (r == 0) return MixedPoint::atom(gi);
    if (r == 1) return MixedPoint::atom(gi + 1);
    return MixedPoint::segment(gi, std::move(r));
}

std::pair<MixedInterval, QuotientMap> quotient_by_breakpoints(const BreakpointSet& atoms) {
    MixedInterval j{atoms.size()};
    return {j, QuotientMap(atoms, j)};
}

MixedPoint densified_class(const LexPoint& p, const BreakpointSet& atoms) {
    atoms.check_member(p);
    const auto& pts = atoms.atoms();
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (pts[i] == p) return MixedPoint::atom(i);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (lex_less(pts[i], p) && lex_less(p, pts[i + 1])) {
            std::size_t delta = first_diff_coord(pts[i], pts[i + 1]);
            Rational r = (p[delta] - pts[i][delta]) / (pts[i + 1][delta] - pts[i][delta]);
            if (r == 0) return MixedPoint::atom(i);
            if (r == 1) return MixedPoint::atom(i + 1);
            return MixedPoint::segment(i, std::move(r));
        }
    }
    throw ValidationError("point outside the atom range");
}

bool fibers_match_classes(const BreakpointSet& atoms, const std::vector<LexPoint>& samples) {
    auto [j, p] = quotient_by_breakpoints(atoms);
    (void)j;
    std::vector<MixedPoint> images;
    std::vector<MixedPoint> classes;
    images.reserve(samples.size());
    classes.reserve(samples.size());
    for (const auto& s : samples) {
        images.push_back(p.eval(s));
        classes.push_back(densified_class(s, atoms));
    }
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t k = i + 1; k < samples.size(); ++k)
            if ((images[i] == images[k]) != (classes[i] == classes[k])) return false;
    return true;
}

} // namespace ordtop
