#ifndef ORDTOP_EMBEDDING_HPP
#define ORDTOP_EMBEDDING_HPP

#include <map>
#include <string>
#include <vector>

#include "ordtop/lexint.hpp"
#include "ordtop/orders.hpp"

namespace ordtop {

/// A finite total order together with the processing order in which its
/// elements are inserted.
struct InsertionOrder {
    FinOrder base;
    std::vector<std::string> sequence;  // permutation of base labels

    static InsertionOrder in_base_order(FinOrder order);
};

/// Exact mode emits true midpoints; dyadic mode restricts emitted values to
/// multiples of 2^-resolution strictly inside (0,1), which makes the
/// coordinate-spillover path reachable.
struct GridPolicy {
    enum class Mode { Exact, Dyadic };
    Mode mode = Mode::Exact;
    unsigned resolution = 1;  // dyadic only, >= 1

    static GridPolicy exact() { return GridPolicy{Mode::Exact, 1}; }
    static GridPolicy dyadic(unsigned k);
    static GridPolicy parse(const std::string& text);  // "exact" | "dyadic:K"
    std::string str() const;
};

/// One coordinate of one element's placement: the bound pair that was
/// computed and whether the coordinate saturated (value pinned to the lower
/// bound) or emitted a strictly intermediate value.
struct CoordStep {
    std::size_t coord = 0;
    Rational lower;
    Rational upper;
    Rational value;
    bool saturated = false;
};

struct TraceEntry {
    std::string label;
    std::vector<CoordStep> steps;  // one per visited coordinate

    bool spilled() const { return steps.size() > 1; }
};

/// Replayable record of a whole embedding run.
struct EmbeddingTrace {
    FinOrder base;
    std::vector<std::string> sequence;
    std::size_t dims = 1;
    GridPolicy grid;
    std::vector<TraceEntry> entries;

    std::size_t saturation_count() const;
};

struct EmbeddingResult {
    std::map<std::string, LexPoint> points;
    EmbeddingTrace trace;
};

/// Embeds the order into the lexicographic cube.  Elements are processed in
/// insertion order; the first lands on the all-(1/2) point.  Each later
/// element computes, per coordinate, the supremum of earlier smaller
/// elements and the infimum of earlier larger ones (restricted to the
/// elements agreeing with the settled prefix), with 0/1 defaults for empty
/// sets.  If an emittable value lies strictly between the bounds it is
/// emitted and the remaining coordinates are padded with 1/2; otherwise the
/// coordinate saturates to the lower bound and the next coordinate is
/// tried.  Throws CapacityError when every coordinate saturates.
EmbeddingResult embed_order(const InsertionOrder& order, const LexInterval& target,
                            const GridPolicy& grid);

/// Re-runs the algorithm from the trace, verifying every recorded bound,
/// value and saturation flag.  Throws ValidationError on any mismatch.
std::map<std::string, LexPoint> replay(const EmbeddingTrace& trace);

} // namespace ordtop

#endif
