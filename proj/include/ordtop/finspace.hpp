#ifndef ORDTOP_FINSPACE_HPP
#define ORDTOP_FINSPACE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ordtop {

/// A finite topological space stored through its minimal basis: for every
/// point x the set U_x, the intersection of all opens containing x (itself
/// open in a finite space).  The family must satisfy x in U_x and
/// y in U_x  =>  U_y subset of U_x.  At most 64 points.
class FinSpace {
public:
    FinSpace() = default;
    FinSpace(std::vector<std::string> points, std::vector<std::uint64_t> min_nbhds);

    /// Builds from a full list of opens (as point-label subsets); verifies
    /// closure under union and intersection and the presence of the empty
    /// set and the whole space.
    static FinSpace from_opens(std::vector<std::string> points,
                               const std::vector<std::vector<std::string>>& opens);

    static FinSpace single_point(const std::string& label = "*");

    std::size_t size() const { return points_.size(); }
    const std::vector<std::string>& points() const { return points_; }
    const std::string& point_at(std::size_t i) const { return points_.at(i); }
    std::size_t index_of(const std::string& label) const;

    std::uint64_t full_mask() const;
    std::uint64_t min_nbhd_mask(std::size_t i) const { return min_nbhd_.at(i); }
    bool in_min_nbhd(std::size_t member, std::size_t of) const {
        return (min_nbhd_.at(of) >> member) & 1;
    }

    /// N_x as sorted labels.
    std::vector<std::string> min_nbhd(const std::string& label) const;

    /// A subset is open iff it contains U_p for each of its members.
    bool is_open(std::uint64_t mask) const;

    /// All opens, as masks (unions of minimal basis sets).
    std::vector<std::uint64_t> all_opens() const;

    bool operator==(const FinSpace& rhs) const {
        return points_ == rhs.points_ && min_nbhd_ == rhs.min_nbhd_;
    }

private:
    std::vector<std::string> points_;
    std::vector<std::uint64_t> min_nbhd_;
};

/// Components of the relation generated by  x R y iff y in N_x.
std::vector<std::vector<std::string>> equiv_classes(const FinSpace& space);

/// Same-class test for two point indices.
bool equiv_related(const FinSpace& space, std::size_t a, std::size_t b);

/// T1 holds exactly when every N_x is a singleton.
bool is_T1(const FinSpace& space);

/// Number of distinct minimal-basis sets.  The compact weight coincides for
/// finite spaces, where every subset is compact.
std::size_t weight(const FinSpace& space);
std::size_t compact_weight(const FinSpace& space);

struct SpaceMap {
    FinSpace source;
    FinSpace target;
    std::vector<std::size_t> assignment;  // by source point index

    std::size_t apply(std::size_t i) const { return assignment.at(i); }
    static SpaceMap from_labels(FinSpace source, FinSpace target,
                                const std::vector<std::pair<std::string, std::string>>& pairs);
    static SpaceMap identity(const FinSpace& space);
    static SpaceMap constant(FinSpace source, FinSpace target, const std::string& value);

    bool operator==(const SpaceMap& rhs) const {
        return source == rhs.source && target == rhs.target && assignment == rhs.assignment;
    }
};

/// Finite-space continuity: m(U_x) inside U_{m(x)} for every x.
bool is_continuous(const SpaceMap& m);

/// Product space with pointwise minimal neighborhoods U_(x,y) = U_x x U_y.
/// Point labels are "x|y".
FinSpace product_space(const FinSpace& a, const FinSpace& b);

/// The two-point switch space ({early, late}, {early} open) modeling the
/// half-open parameter split of a one-step homotopy.
FinSpace switch_space();

enum class StepTag { Up, Down };

/// A chain of continuous maps h_0 .. h_n between fixed spaces; each
/// adjacent pair is tagged Up (h_i(x) in N_{h_{i+1}(x)} for all x) or Down
/// (the reverse inclusion).
struct HomotopyCertificate {
    std::vector<SpaceMap> chain;
    std::vector<StepTag> tags;  // one per adjacent pair

    /// Points where the two ends of a step agree.
    std::vector<std::string> fixed_points(std::size_t step) const;
};

struct StepHomotopyOutcome {
    std::optional<HomotopyCertificate> certificate;
    std::optional<std::string> witness;  // point with f(x) not in N_{g(x)}

    bool ok() const { return certificate.has_value(); }
};

/// Single-step check: succeeds iff f(x) lies in N_{g(x)} for every x,
/// returning the two-map chain tagged Up; otherwise reports the witness
/// point.  f and g must be continuous with equal source and target.
StepHomotopyOutcome step_homotopy_check(const SpaceMap& f, const SpaceMap& g);

struct CertificateCheck {
    bool ok = true;
    std::string detail;  // first failing link
};

/// Every chain map continuous, every link tag pointwise valid, and every
/// single step continuous as the induced map on (source x switch space).
CertificateCheck verify_certificate(const HomotopyCertificate& cert);

/// The induced map on source x switch space for one step: early slice is
/// the step's earlier map, late slice the later one (for an Up tag; roles
/// swap for Down).
SpaceMap step_product_map(const SpaceMap& from, const SpaceMap& to, StepTag tag);

} // namespace ordtop

#endif
