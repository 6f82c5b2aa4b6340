#include "ordtop/bigmaps.hpp"

#include <algorithm>

#include "ordtop/errors.hpp"

namespace ordtop {

std::string CellRef::str() const {
    return (kind == Kind::Atom ? "atom " : "gap ") + std::to_string(index);
}

CellMap CellMap::on_interval(BreakpointSet breaks, FinSpace cspace, FinSpace target) {
    CellMap m;
    m.atom_count_ = breaks.size();
    m.geometry_ = std::move(breaks);
    m.cspace_ = std::move(cspace);
    m.target_ = std::move(target);
    m.values_.assign(m.cell_count(),
                     std::vector<std::size_t>(m.cspace_.size(), static_cast<std::size_t>(-1)));
    return m;
}

CellMap CellMap::on_mixed(MixedInterval interval, FinSpace cspace, FinSpace target) {
    if (interval.atom_count < 2) throw ValidationError("a mixed interval needs two atoms");
    CellMap m;
    m.atom_count_ = interval.atom_count;
    m.cspace_ = std::move(cspace);
    m.target_ = std::move(target);
    m.values_.assign(m.cell_count(),
                     std::vector<std::size_t>(m.cspace_.size(), static_cast<std::size_t>(-1)));
    return m;
}

const BreakpointSet& CellMap::geometry() const {
    if (!geometry_) throw ValidationError("cell map has no interval geometry");
    return *geometry_;
}

std::size_t CellMap::linear_index(CellRef cell) {
    return cell.kind == CellRef::Kind::Atom ? 2 * cell.index : 2 * cell.index + 1;
}

CellRef CellMap::cell_at(std::size_t linear) const {
    if (linear >= cell_count()) throw ValidationError("cell index out of range");
    return linear % 2 == 0 ? CellRef::atom(linear / 2) : CellRef::gap(linear / 2);
}

std::size_t CellMap::value(CellRef cell, std::size_t u) const {
    std::size_t idx = linear_index(cell);
    if (idx >= values_.size()) throw ValidationError("cell out of range: " + cell.str());
    std::size_t v = values_[idx].at(u);
    if (v == static_cast<std::size_t>(-1))
        throw ValidationError("cell map undefined at " + cell.str());
    return v;
}

const std::string& CellMap::value_label(CellRef cell, std::size_t u) const {
    return target_.point_at(value(cell, u));
}

std::size_t CellMap::value_at(const LexPoint& t, std::size_t u) const {
    const BreakpointSet& breaks = geometry();
    std::size_t ai = breaks.find_atom(t);
    if (ai != BreakpointSet::npos) return value(CellRef::atom(ai), u);
    return value(CellRef::gap(breaks.gap_of(t)), u);
}

void CellMap::set_value(CellRef cell, std::size_t u, std::size_t target_point) {
    std::size_t idx = linear_index(cell);
    if (idx >= values_.size()) throw ValidationError("cell out of range: " + cell.str());
    if (target_point >= target_.size()) throw ValidationError("target point out of range");
    values_[idx].at(u) = target_point;
}

void CellMap::set_value(CellRef cell, const std::string& u, const std::string& target_point) {
    set_value(cell, cspace_.index_of(u), target_.index_of(target_point));
}

bool CellMap::total() const {
    for (const auto& row : values_)
        for (auto v : row)
            if (v == static_cast<std::size_t>(-1)) return false;
    return true;
}

bool CellMap::operator==(const CellMap& rhs) const {
    bool geom_eq = geometry_.has_value() == rhs.geometry_.has_value() &&
                   (!geometry_.has_value() || *geometry_ == *rhs.geometry_);
    return geom_eq && atom_count_ == rhs.atom_count_ && cspace_ == rhs.cspace_ &&
           target_ == rhs.target_ && values_ == rhs.values_;
}

CellMap make_path(BreakpointSet breaks, const std::vector<std::string>& cell_values,
                  FinSpace target) {
    CellMap m = CellMap::on_interval(std::move(breaks), FinSpace::single_point(), target);
    if (cell_values.size() != m.cell_count())
        throw ValidationError("expected " + std::to_string(m.cell_count()) + " cell values, got " +
                              std::to_string(cell_values.size()));
    for (std::size_t c = 0; c < cell_values.size(); ++c)
        m.set_value(m.cell_at(c), 0, m.target().index_of(cell_values[c]));
    return m;
}

std::vector<std::string> path_values(const CellMap& path) {
    if (path.cspace().size() != 1) throw ValidationError("not a path: parameter space not a point");
    std::vector<std::string> out;
    out.reserve(path.cell_count());
    for (std::size_t c = 0; c < path.cell_count(); ++c)
        out.push_back(path.value_label(path.cell_at(c), 0));
    return out;
}

bool is_loop(const CellMap& path) {
    if (path.cspace().size() != 1) throw ValidationError("not a path: parameter space not a point");
    return path.value(CellRef::atom(0), 0) == path.value(CellRef::atom(path.atom_count() - 1), 0);
}

ContinuityCheck check_continuity(const CellMap& f) {
    if (!f.total()) throw ValidationError("continuity check needs a total cell map");
    const FinSpace& c = f.cspace();
    const FinSpace& x = f.target();
    ContinuityCheck out;

    auto fails = [&](CellRef base, std::size_t u, CellRef probe, std::size_t up) -> bool {
        if (x.in_min_nbhd(f.value(probe, up), f.value(base, u))) return false;
        out.ok = false;
        out.cell = base;
        out.u = u;
        out.detail = "value at (" + probe.str() + ", " + c.point_at(up) + ") escapes U_{f(" +
                     base.str() + ", " + c.point_at(u) + ")}";
        return true;
    };

    for (std::size_t u = 0; u < c.size(); ++u) {
        for (std::size_t up = 0; up < c.size(); ++up) {
            if (!c.in_min_nbhd(up, u)) continue;
            for (std::size_t i = 0; i < f.atom_count(); ++i) {
                CellRef b = CellRef::atom(i);
                if (fails(b, u, b, up)) return out;
                if (i > 0 && fails(b, u, CellRef::gap(i - 1), up)) return out;
                if (i + 1 < f.atom_count() && fails(b, u, CellRef::gap(i), up)) return out;
            }
            for (std::size_t i = 0; i + 1 < f.atom_count(); ++i) {
                CellRef g = CellRef::gap(i);
                if (fails(g, u, g, up)) return out;
            }
        }
    }
    return out;
}

namespace {

void require_compatible(const CellMap& f, const CellMap& g) {
    if (!(f.cspace() == g.cspace()))
        throw ValidationError("cell maps have different parameter spaces");
    if (!(f.target() == g.target())) throw ValidationError("cell maps have different targets");
}

LexPoint scale_into_half(const LexPoint& p, bool upper_half) {
    std::vector<Rational> coords = p.coords();
    if (upper_half)
        coords[0] = (coords[0] + 1) / 2;
    else
        coords[0] = coords[0] / 2;
    return LexPoint(std::move(coords));
}

} // namespace

CellMap concat(const CellMap& f, const CellMap& g) {
    require_compatible(f, g);
    const BreakpointSet& fb = f.geometry();
    const BreakpointSet& gb = g.geometry();
    if (fb.ambient().dims != gb.ambient().dims)
        throw ValidationError("concat: ambient dimensions differ");
    for (std::size_t u = 0; u < f.cspace().size(); ++u)
        if (f.value(CellRef::atom(f.atom_count() - 1), u) != g.value(CellRef::atom(0), u))
            throw ValidationError("concat: final value of the first path differs from the "
                                  "initial value of the second");

    std::size_t dims = fb.ambient().dims;
    std::vector<Rational> glue_coords(dims, Rational(0));
    glue_coords[0] = Rational(1, 2);
    LexPoint glue(std::move(glue_coords));

    std::vector<LexPoint> atoms;
    for (std::size_t i = 0; i + 1 < fb.size(); ++i) {
        if (fb.atoms()[i][0] == 1)
            throw ValidationError("concat: a non-final breakpoint of the first path sits in the "
                                  "closing slab (first coordinate 1)");
        atoms.push_back(scale_into_half(fb.atoms()[i], false));
    }
    atoms.push_back(glue);
    for (std::size_t i = 1; i < gb.size(); ++i)
        atoms.push_back(scale_into_half(gb.atoms()[i], true));

    BreakpointSet breaks(fb.ambient(), atoms);
    if (breaks.size() != fb.size() + gb.size() - 1)
        throw ValidationError("concat: rescaled breakpoints collide");

    CellMap out = CellMap::on_interval(std::move(breaks), f.cspace(), f.target());
    std::size_t fcells = 2 * f.atom_count() - 1;
    for (std::size_t u = 0; u < f.cspace().size(); ++u) {
        for (std::size_t cidx = 0; cidx < fcells; ++cidx)
            out.set_value(out.cell_at(cidx), u, f.value(f.cell_at(cidx), u));
        for (std::size_t cidx = 1; cidx < 2 * g.atom_count() - 1; ++cidx)
            out.set_value(out.cell_at(fcells - 1 + cidx), u, g.value(g.cell_at(cidx), u));
    }
    return out;
}

CellMap reverse(const CellMap& f) {
    CellMap out;
    if (f.has_geometry()) {
        std::vector<LexPoint> atoms;
        for (const auto& a : f.geometry().atoms()) atoms.push_back(reverse_point(a));
        out = CellMap::on_interval(BreakpointSet(f.geometry().ambient(), std::move(atoms)),
                                   f.cspace(), f.target());
    } else {
        out = CellMap::on_mixed(MixedInterval{f.atom_count()}, f.cspace(), f.target());
    }
    std::size_t last = f.cell_count() - 1;
    for (std::size_t u = 0; u < f.cspace().size(); ++u)
        for (std::size_t c = 0; c < f.cell_count(); ++c)
            out.set_value(out.cell_at(last - c), u, f.value(f.cell_at(c), u));
    return out;
}

CellMap reparam(const CellMap& f, const QuotientMap& p) {
    if (f.has_geometry())
        throw ValidationError("reparam expects a map on the quotient interval");
    if (f.atom_count() != p.target().atom_count)
        throw ValidationError("reparam: quotient map target does not match the map's cells");
    CellMap out = CellMap::on_interval(p.source(), f.cspace(), f.target());
    for (std::size_t u = 0; u < f.cspace().size(); ++u)
        for (std::size_t c = 0; c < f.cell_count(); ++c)
            out.set_value(out.cell_at(c), u, f.value(f.cell_at(c), u));
    return out;
}

LexPoint gap_sample(const BreakpointSet& breaks, std::size_t gap) {
    const LexPoint& a = breaks.atoms().at(gap);
    const LexPoint& b = breaks.atoms().at(gap + 1);
    std::size_t delta = 0;
    while (a[delta] == b[delta]) ++delta;
    std::vector<Rational> coords(breaks.ambient().dims, Rational(0));
    for (std::size_t i = 0; i < delta; ++i) coords[i] = a[i];
    coords[delta] = midpoint(a[delta], b[delta]);
    return LexPoint(std::move(coords));
}

Reduction density_reduce(const CellMap& f) {
    ContinuityCheck chk = check_continuity(f);
    if (!chk.ok) throw ValidationError("density_reduce needs a continuous map: " + chk.detail);
    const BreakpointSet& atoms = f.geometry();

    densify(atoms);  // blocks are formal; only the class structure matters
    auto [quotient, qmap] = quotient_by_breakpoints(atoms);

    CellMap reduced = CellMap::on_mixed(quotient, f.cspace(), f.target());
    for (std::size_t u = 0; u < f.cspace().size(); ++u)
        for (std::size_t c = 0; c < f.cell_count(); ++c)
            reduced.set_value(reduced.cell_at(c), u, f.value(f.cell_at(c), u));

    Reduction out{quotient, qmap, std::move(reduced)};
    if (!check_continuity(out.reduced).ok)
        throw std::logic_error("density_reduce produced a discontinuous map");
    if (!verify_reduction(f, out.reduced, out.map))
        throw std::logic_error("density_reduce output failed its own verification");
    return out;
}

bool verify_reduction(const CellMap& f, const CellMap& g, const QuotientMap& p) {
    require_compatible(f, g);
    if (g.atom_count() != p.target().atom_count)
        throw ValidationError("verify_reduction: quotient shapes disagree");
    const BreakpointSet& breaks = f.geometry();
    if (!(breaks == p.source()))
        throw ValidationError("verify_reduction: quotient source differs from the map's atoms");

    auto g_cell_for = [&](const MixedPoint& mp) -> CellRef {
        return mp.is_atom ? CellRef::atom(mp.index) : CellRef::gap(mp.index);
    };

    for (std::size_t u = 0; u < f.cspace().size(); ++u) {
        for (std::size_t i = 0; i < breaks.size(); ++i) {
            MixedPoint image = p.eval(breaks.atoms()[i]);
            if (!equiv_related(f.target(), f.value(CellRef::atom(i), u),
                               g.value(g_cell_for(image), u)))
                return false;
        }
        for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
            MixedPoint image = p.eval(gap_sample(breaks, i));
            if (!equiv_related(f.target(), f.value(CellRef::gap(i), u),
                               g.value(g_cell_for(image), u)))
                return false;
        }
    }
    return true;
}

} // namespace ordtop
