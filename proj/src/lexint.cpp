#include "ordtop/lexint.hpp"

#include <algorithm>

#include "ordtop/errors.hpp"

namespace ordtop {

LexPoint::LexPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
    for (const auto& c : coords_)
        if (!in_unit_interval(c))
            throw ValidationError("coordinate outside [0,1]: " + to_string(c));
}

LexPoint LexInterval::min() const { return LexPoint(std::vector<Rational>(dims, Rational(0))); }

LexPoint LexInterval::max() const { return LexPoint(std::vector<Rational>(dims, Rational(1))); }

LexOrder lex_compare(const LexPoint& p, const LexPoint& q) {
    if (p.dims() != q.dims()) throw ValidationError("lex_compare: dimension mismatch");
    for (std::size_t i = 0; i < p.dims(); ++i) {
        if (p[i] < q[i]) return LexOrder::Less;
        if (p[i] > q[i]) return LexOrder::Greater;
    }
    return LexOrder::Equal;
}

LexPoint sup_finite(const std::vector<LexPoint>& points) {
    if (points.empty()) throw ValidationError("sup_finite of an empty set");
    std::size_t dims = points[0].dims();
    for (const auto& p : points)
        if (p.dims() != dims) throw ValidationError("sup_finite: dimension mismatch");

    std::vector<Rational> s(dims);
    // surviving = the set agreeing with s on every settled coordinate
    std::vector<const LexPoint*> surviving;
    for (const auto& p : points) surviving.push_back(&p);
    for (std::size_t b = 0; b < dims; ++b) {
        if (surviving.empty()) {
            s[b] = 0;
            continue;
        }
        Rational sup = (*surviving[0])[b];
        for (const auto* p : surviving) sup = std::max(sup, (*p)[b]);
        s[b] = sup;
        std::vector<const LexPoint*> next;
        for (const auto* p : surviving)
            if ((*p)[b] == sup) next.push_back(p);
        surviving = std::move(next);
    }
    return LexPoint(std::move(s));
}

LexPoint inf_finite(const std::vector<LexPoint>& points) {
    if (points.empty()) throw ValidationError("inf_finite of an empty set");
    std::size_t dims = points[0].dims();
    for (const auto& p : points)
        if (p.dims() != dims) throw ValidationError("inf_finite: dimension mismatch");

    std::vector<Rational> s(dims);
    std::vector<const LexPoint*> surviving;
    for (const auto& p : points) surviving.push_back(&p);
    for (std::size_t b = 0; b < dims; ++b) {
        if (surviving.empty()) {
            s[b] = 1;
            continue;
        }
        Rational inf = (*surviving[0])[b];
        for (const auto* p : surviving) inf = std::min(inf, (*p)[b]);
        s[b] = inf;
        std::vector<const LexPoint*> next;
        for (const auto* p : surviving)
            if ((*p)[b] == inf) next.push_back(p);
        surviving = std::move(next);
    }
    return LexPoint(std::move(s));
}

std::vector<LexPoint> dense_sample(const LexInterval& interval, unsigned depth) {
    if (depth < 1) throw ValidationError("dense_sample depth must be >= 1");
    if (depth > 20) throw ValidationError("dense_sample depth too large to enumerate");
    const std::uint64_t den = std::uint64_t{1} << depth;

    std::vector<LexPoint> out;
    std::vector<Rational> prefix;
    // points with a nonzero dyadic prefix of length m and a zero tail
    auto emit = [&]() {
        std::vector<Rational> coords = prefix;
        coords.resize(interval.dims, Rational(0));
        out.emplace_back(std::move(coords));
    };
    auto rec = [&](auto&& self, std::size_t m) -> void {
        emit();
        if (m == interval.dims) return;
        for (std::uint64_t j = 1; j <= den; ++j) {
            prefix.emplace_back(static_cast<long long>(j), static_cast<long long>(den));
            self(self, m + 1);
            prefix.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

bool WedgeImage::is_glue_point() const {
    if (copy == 2) {
        for (const auto& c : point.coords())
            if (c != 0) return false;
        return true;
    }
    for (const auto& c : point.coords())
        if (c != 1) return false;
    return true;
}

WedgeImage wedge_map(const LexPoint& p) {
    if (p.dims() < 1) throw ValidationError("wedge_map needs at least one coordinate");
    std::vector<Rational> coords = p.coords();
    WedgeImage w;
    if (p[0] < Rational(1, 2)) {
        w.copy = 1;
        coords[0] = p[0] * 2;
    } else {
        w.copy = 2;
        coords[0] = p[0] * 2 - 1;
    }
    w.point = LexPoint(std::move(coords));
    return w;
}

LexOrder wedge_compare(const WedgeImage& a, const WedgeImage& b) {
    // the glue point compares as copy 2's minimum
    auto canonical = [](const WedgeImage& w) -> WedgeImage {
        if (w.copy == 1 && w.is_glue_point()) {
            return WedgeImage{2, LexPoint(std::vector<Rational>(w.point.dims(), Rational(0)))};
        }
        return w;
    };
    WedgeImage ca = canonical(a);
    WedgeImage cb = canonical(b);
    if (ca.copy != cb.copy) return ca.copy < cb.copy ? LexOrder::Less : LexOrder::Greater;
    return lex_compare(ca.point, cb.point);
}

LexPoint reverse_point(const LexPoint& p) {
    std::vector<Rational> coords;
    coords.reserve(p.dims());
    for (const auto& c : p.coords()) coords.push_back(Rational(1) - c);
    return LexPoint(std::move(coords));
}

} // namespace ordtop
