#include "ordtop/finspace.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "ordtop/disjoint_set.hpp"
#include "ordtop/errors.hpp"

namespace ordtop {

FinSpace::FinSpace(std::vector<std::string> points, std::vector<std::uint64_t> min_nbhds)
    : points_(std::move(points)), min_nbhd_(std::move(min_nbhds)) {
    if (points_.empty()) throw ValidationError("a space needs at least one point");
    if (points_.size() > 64) throw ValidationError("spaces are limited to 64 points");
    if (min_nbhd_.size() != points_.size())
        throw ValidationError("one minimal neighborhood per point required");
    std::set<std::string> seen(points_.begin(), points_.end());
    if (seen.size() != points_.size()) throw ValidationError("duplicate point labels");

    std::uint64_t full = full_mask();
    for (std::size_t x = 0; x < points_.size(); ++x) {
        if (min_nbhd_[x] & ~full)
            throw ValidationError("minimal neighborhood mentions unknown points");
        if (!((min_nbhd_[x] >> x) & 1))
            throw ValidationError("point '" + points_[x] + "' missing from its own neighborhood");
        for (std::size_t y = 0; y < points_.size(); ++y)
            if ((min_nbhd_[x] >> y) & 1) {
                if (min_nbhd_[y] & ~min_nbhd_[x])
                    throw ValidationError("minimal basis violated: U_" + points_[y] +
                                          " escapes U_" + points_[x]);
            }
    }
}

FinSpace FinSpace::from_opens(std::vector<std::string> points,
                              const std::vector<std::vector<std::string>>& opens) {
    if (points.empty()) throw ValidationError("a space needs at least one point");
    if (points.size() > 64) throw ValidationError("spaces are limited to 64 points");

    auto index_of = [&](const std::string& label) -> std::size_t {
        for (std::size_t i = 0; i < points.size(); ++i)
            if (points[i] == label) return i;
        throw ValidationError("open set mentions unknown point: " + label);
    };

    std::set<std::uint64_t> masks;
    for (const auto& open : opens) {
        std::uint64_t m = 0;
        for (const auto& label : open) m |= std::uint64_t{1} << index_of(label);
        masks.insert(m);
    }
    std::uint64_t full =
        points.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << points.size()) - 1;
    if (!masks.count(0)) throw ValidationError("the empty set must be open");
    if (!masks.count(full)) throw ValidationError("the whole space must be open");
    for (auto a : masks)
        for (auto b : masks) {
            if (!masks.count(a | b))
                throw ValidationError("opens not closed under union");
            if (!masks.count(a & b))
                throw ValidationError("opens not closed under intersection");
        }

    std::vector<std::uint64_t> nbhd(points.size(), 0);
    for (std::size_t x = 0; x < points.size(); ++x) {
        std::uint64_t acc = full;
        for (auto m : masks)
            if ((m >> x) & 1) acc &= m;
        nbhd[x] = acc;
    }
    return FinSpace(std::move(points), std::move(nbhd));
}

FinSpace FinSpace::single_point(const std::string& label) {
    return FinSpace({label}, {std::uint64_t{1}});
}

std::size_t FinSpace::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < points_.size(); ++i)
        if (points_[i] == label) return i;
    throw ValidationError("unknown point: " + label);
}

std::uint64_t FinSpace::full_mask() const {
    return points_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << points_.size()) - 1;
}

std::vector<std::string> FinSpace::min_nbhd(const std::string& label) const {
    std::size_t x = index_of(label);
    std::vector<std::string> out;
    for (std::size_t y = 0; y < points_.size(); ++y)
        if ((min_nbhd_[x] >> y) & 1) out.push_back(points_[y]);
    return out;
}

bool FinSpace::is_open(std::uint64_t mask) const {
    for (std::size_t x = 0; x < points_.size(); ++x)
        if ((mask >> x) & 1) {
            if (min_nbhd_[x] & ~mask) return false;
        }
    return true;
}

std::vector<std::uint64_t> FinSpace::all_opens() const {
    if (points_.size() > 20)
        throw ValidationError("open-set enumeration is limited to 20 points");
    std::set<std::uint64_t> opens{0};
    std::vector<std::uint64_t> queue{0};
    while (!queue.empty()) {
        std::uint64_t o = queue.back();
        queue.pop_back();
        for (std::size_t x = 0; x < points_.size(); ++x) {
            std::uint64_t next = o | min_nbhd_[x];
            if (opens.insert(next).second) queue.push_back(next);
        }
    }
    return std::vector<std::uint64_t>(opens.begin(), opens.end());
}

std::vector<std::vector<std::string>> equiv_classes(const FinSpace& space) {
    DisjointSet ds(space.size());
    for (std::size_t x = 0; x < space.size(); ++x)
        for (std::size_t y = 0; y < space.size(); ++y)
            if (space.in_min_nbhd(y, x)) ds.merge(x, y);

    std::vector<std::vector<std::string>> classes;
    std::vector<long> class_of(space.size(), -1);
    for (std::size_t x = 0; x < space.size(); ++x) {
        std::size_t root = ds.find(x);
        if (class_of[root] < 0) {
            class_of[root] = static_cast<long>(classes.size());
            classes.emplace_back();
        }
        classes[static_cast<std::size_t>(class_of[root])].push_back(space.point_at(x));
    }
    return classes;
}

bool equiv_related(const FinSpace& space, std::size_t a, std::size_t b) {
    DisjointSet ds(space.size());
    for (std::size_t x = 0; x < space.size(); ++x)
        for (std::size_t y = 0; y < space.size(); ++y)
            if (space.in_min_nbhd(y, x)) ds.merge(x, y);
    return ds.same(a, b);
}

bool is_T1(const FinSpace& space) {
    for (std::size_t x = 0; x < space.size(); ++x)
        if (std::popcount(space.min_nbhd_mask(x)) != 1) return false;
    return true;
}

std::size_t weight(const FinSpace& space) {
    std::set<std::uint64_t> basis;
    for (std::size_t x = 0; x < space.size(); ++x) basis.insert(space.min_nbhd_mask(x));
    return basis.size();
}

std::size_t compact_weight(const FinSpace& space) { return weight(space); }

SpaceMap SpaceMap::from_labels(FinSpace source, FinSpace target,
                               const std::vector<std::pair<std::string, std::string>>& pairs) {
    SpaceMap m;
    m.assignment.assign(source.size(), static_cast<std::size_t>(-1));
    for (const auto& [from, to] : pairs) {
        std::size_t i = source.index_of(from);
        std::size_t j = target.index_of(to);
        if (m.assignment[i] != static_cast<std::size_t>(-1) && m.assignment[i] != j)
            throw ValidationError("map not single-valued at '" + from + "'");
        m.assignment[i] = j;
    }
    for (std::size_t i = 0; i < source.size(); ++i)
        if (m.assignment[i] == static_cast<std::size_t>(-1))
            throw ValidationError("map undefined at '" + source.point_at(i) + "'");
    m.source = std::move(source);
    m.target = std::move(target);
    return m;
}

SpaceMap SpaceMap::identity(const FinSpace& space) {
    SpaceMap m;
    m.source = space;
    m.target = space;
    m.assignment.resize(space.size());
    for (std::size_t i = 0; i < space.size(); ++i) m.assignment[i] = i;
    return m;
}

SpaceMap SpaceMap::constant(FinSpace source, FinSpace target, const std::string& value) {
    SpaceMap m;
    m.assignment.assign(source.size(), target.index_of(value));
    m.source = std::move(source);
    m.target = std::move(target);
    return m;
}

bool is_continuous(const SpaceMap& m) {
    for (std::size_t x = 0; x < m.source.size(); ++x)
        for (std::size_t y = 0; y < m.source.size(); ++y)
            if (m.source.in_min_nbhd(y, x) && !m.target.in_min_nbhd(m.apply(y), m.apply(x)))
                return false;
    return true;
}

FinSpace product_space(const FinSpace& a, const FinSpace& b) {
    if (a.size() * b.size() > 64) throw ValidationError("product space exceeds 64 points");
    std::vector<std::string> points;
    std::vector<std::uint64_t> nbhd;
    points.reserve(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            points.push_back(a.point_at(i) + "|" + b.point_at(j));
            std::uint64_t m = 0;
            for (std::size_t p = 0; p < a.size(); ++p)
                for (std::size_t q = 0; q < b.size(); ++q)
                    if (a.in_min_nbhd(p, i) && b.in_min_nbhd(q, j))
                        m |= std::uint64_t{1} << (p * b.size() + q);
            nbhd.push_back(m);
        }
    return FinSpace(std::move(points), std::move(nbhd));
}

FinSpace switch_space() {
    // {early} open, late only sees the whole space
    return FinSpace({"early", "late"}, {0b01, 0b11});
}

std::vector<std::string> HomotopyCertificate::fixed_points(std::size_t step) const {
    const SpaceMap& a = chain.at(step);
    const SpaceMap& b = chain.at(step + 1);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < a.source.size(); ++i)
        if (a.apply(i) == b.apply(i)) out.push_back(a.source.point_at(i));
    return out;
}

StepHomotopyOutcome step_homotopy_check(const SpaceMap& f, const SpaceMap& g) {
    if (!(f.source == g.source) || !(f.target == g.target))
        throw ValidationError("step_homotopy_check needs maps with equal source and target");
    if (!is_continuous(f) || !is_continuous(g))
        throw ValidationError("step_homotopy_check needs continuous maps");
    StepHomotopyOutcome out;
    for (std::size_t x = 0; x < f.source.size(); ++x)
        if (!f.target.in_min_nbhd(f.apply(x), g.apply(x))) {
            out.witness = f.source.point_at(x);
            return out;
        }
    HomotopyCertificate cert;
    cert.chain = {f, g};
    cert.tags = {StepTag::Up};
    out.certificate = std::move(cert);
    return out;
}

SpaceMap step_product_map(const SpaceMap& from, const SpaceMap& to, StepTag tag) {
    // the early slice carries the map whose values must sit inside the
    // other's minimal neighborhoods
    const SpaceMap& early = tag == StepTag::Up ? from : to;
    const SpaceMap& late = tag == StepTag::Up ? to : from;
    SpaceMap h;
    h.source = product_space(from.source, switch_space());
    h.target = from.target;
    h.assignment.resize(h.source.size());
    for (std::size_t x = 0; x < from.source.size(); ++x) {
        h.assignment[x * 2 + 0] = early.apply(x);
        h.assignment[x * 2 + 1] = late.apply(x);
    }
    return h;
}

CertificateCheck verify_certificate(const HomotopyCertificate& cert) {
    CertificateCheck out;
    if (cert.chain.empty()) {
        out.ok = false;
        out.detail = "empty certificate chain";
        return out;
    }
    if (cert.tags.size() + 1 != cert.chain.size()) {
        out.ok = false;
        out.detail = "tag count does not match the chain";
        return out;
    }
    for (std::size_t i = 0; i < cert.chain.size(); ++i) {
        if (!(cert.chain[i].source == cert.chain[0].source) ||
            !(cert.chain[i].target == cert.chain[0].target)) {
            out.ok = false;
            out.detail = "chain map " + std::to_string(i) + " has mismatched spaces";
            return out;
        }
        if (!is_continuous(cert.chain[i])) {
            out.ok = false;
            out.detail = "chain map " + std::to_string(i) + " is not continuous";
            return out;
        }
    }
    for (std::size_t i = 0; i + 1 < cert.chain.size(); ++i) {
        const SpaceMap& a = cert.chain[i];
        const SpaceMap& b = cert.chain[i + 1];
        for (std::size_t x = 0; x < a.source.size(); ++x) {
            bool holds = cert.tags[i] == StepTag::Up
                             ? a.target.in_min_nbhd(a.apply(x), b.apply(x))
                             : a.target.in_min_nbhd(b.apply(x), a.apply(x));
            if (!holds) {
                out.ok = false;
                out.detail = "link " + std::to_string(i) + " fails at point '" +
                             a.source.point_at(x) + "'";
                return out;
            }
        }
        // cross-check: the switch-space product map must be continuous
        if (!is_continuous(step_product_map(a, b, cert.tags[i]))) {
            out.ok = false;
            out.detail = "link " + std::to_string(i) + " fails the switch-space check";
            return out;
        }
    }
    return out;
}

} // namespace ordtop
