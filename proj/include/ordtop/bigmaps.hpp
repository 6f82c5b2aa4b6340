#ifndef ORDTOP_BIGMAPS_HPP
#define ORDTOP_BIGMAPS_HPP

#include <optional>
#include <string>
#include <vector>

#include "ordtop/finspace.hpp"
#include "ordtop/quotient.hpp"

namespace ordtop {

/// A cell of a one-dimensional complex: the atoms are closed points, the
/// gaps the open intervals between consecutive atoms.
struct CellRef {
    enum class Kind { Atom, Gap };
    Kind kind = Kind::Atom;
    std::size_t index = 0;

    static CellRef atom(std::size_t i) { return {Kind::Atom, i}; }
    static CellRef gap(std::size_t i) { return {Kind::Gap, i}; }
    std::string str() const;
    bool operator==(const CellRef& rhs) const = default;
};

/// A cellwise-constant map (complex x C) -> X.  The complex either lives on
/// a lexicographic interval (breakpoint geometry attached) or on a mixed
/// quotient interval (alternation only).  Cells are stored interleaved:
/// atom 0, gap 0, atom 1, ..., atom m-1.
class CellMap {
public:
    CellMap() = default;

    static CellMap on_interval(BreakpointSet breaks, FinSpace cspace, FinSpace target);
    static CellMap on_mixed(MixedInterval interval, FinSpace cspace, FinSpace target);

    bool has_geometry() const { return geometry_.has_value(); }
    const BreakpointSet& geometry() const;
    std::size_t atom_count() const { return atom_count_; }
    std::size_t cell_count() const { return 2 * atom_count_ - 1; }
    const FinSpace& cspace() const { return cspace_; }
    const FinSpace& target() const { return target_; }

    static std::size_t linear_index(CellRef cell);
    CellRef cell_at(std::size_t linear) const;

    std::size_t value(CellRef cell, std::size_t u) const;
    const std::string& value_label(CellRef cell, std::size_t u) const;
    /// Value at an ambient point (geometry required).
    std::size_t value_at(const LexPoint& t, std::size_t u) const;
    void set_value(CellRef cell, std::size_t u, std::size_t target_point);
    void set_value(CellRef cell, const std::string& u, const std::string& target_point);
    bool total() const;

    bool operator==(const CellMap& rhs) const;

private:
    std::optional<BreakpointSet> geometry_;
    std::size_t atom_count_ = 0;
    FinSpace cspace_;
    FinSpace target_;
    std::vector<std::vector<std::size_t>> values_;  // [cell][u]
};

/// A path is a cellwise map with the one-point parameter space.
CellMap make_path(BreakpointSet breaks, const std::vector<std::string>& cell_values,
                  FinSpace target);

std::vector<std::string> path_values(const CellMap& path);
bool is_loop(const CellMap& path);

struct ContinuityCheck {
    bool ok = true;
    CellRef cell;        // on failure: the cell whose neighborhood constraint broke
    std::size_t u = 0;   // the parameter point of the broken constraint
    std::string detail;
};

/// Continuity of a cellwise-constant map from (order interval x finite
/// space): for every atom b with adjacent gap gp and every u' in U_u,
///   f(gp, u') in U_{f(b, u)},  f(b, u') in U_{f(b, u)},
/// and on every gap  f(gp, u') in U_{f(gp, u)}.
ContinuityCheck check_continuity(const CellMap& f);

/// Concatenation along the wedge correspondence: f's breakpoints rescale
/// into first-coordinate [0,1/2], g's into [1/2,1]; the shared atom is the
/// glue preimage (1/2, 0, ..., 0).  Requires f's final values to equal g's
/// initial ones.
CellMap concat(const CellMap& f, const CellMap& g);

/// Breakpoints pushed through reverse_point, cell values mirrored.
CellMap reverse(const CellMap& f);

/// Pulls a map on the quotient interval back along the quotient map: the
/// result lives on p's source breakpoints with the image cell's values.
CellMap reparam(const CellMap& f, const QuotientMap& p);

struct Reduction {
    MixedInterval quotient;
    QuotientMap map;
    CellMap reduced;
};

/// The density-reduction pipeline: breakpoint atoms (endpoints adjoined)
/// become the separating set, the quotient interval replaces the ambient
/// cube, and the reduced map takes its values from cell representatives
/// (atoms for atom classes, affine midpoints for gap classes).  The output
/// is continuous and verify_reduction holds for it.
Reduction density_reduce(const CellMap& f);

/// Checks f(t,u) ~ g(p(t),u) in the target's point classes at every atom
/// and one interior sample per gap.
bool verify_reduction(const CellMap& f, const CellMap& g, const QuotientMap& p);

/// An interior point of gap i: the bounding atoms' shared prefix, the
/// midpoint at their first differing coordinate, zero tail.
LexPoint gap_sample(const BreakpointSet& breaks, std::size_t gap);

} // namespace ordtop

#endif
