#include "ordtop/embedding.hpp"

#include <algorithm>
#include <optional>

#include "ordtop/errors.hpp"

namespace ordtop {

InsertionOrder InsertionOrder::in_base_order(FinOrder order) {
    InsertionOrder io;
    io.sequence = order.labels();
    io.base = std::move(order);
    return io;
}

GridPolicy GridPolicy::dyadic(unsigned k) {
    if (k < 1) throw ValidationError("dyadic resolution must be >= 1");
    if (k > 62) throw ValidationError("dyadic resolution too large");
    return GridPolicy{Mode::Dyadic, k};
}

GridPolicy GridPolicy::parse(const std::string& text) {
    if (text == "exact") return exact();
    if (text.rfind("dyadic:", 0) == 0) {
        unsigned k = 0;
        try {
            k = static_cast<unsigned>(std::stoul(text.substr(7)));
        } catch (const std::exception&) {
            throw ValidationError("bad grid policy: " + text);
        }
        return dyadic(k);
    }
    throw ValidationError("bad grid policy: " + text + " (want exact or dyadic:K)");
}

std::string GridPolicy::str() const {
    return mode == Mode::Exact ? "exact" : "dyadic:" + std::to_string(resolution);
}

std::size_t EmbeddingTrace::saturation_count() const {
    std::size_t n = 0;
    for (const auto& e : entries)
        for (const auto& s : e.steps)
            if (s.saturated) ++n;
    return n;
}

namespace {

BigInt floor_nonneg(const Rational& q) { return numerator(q) / denominator(q); }

BigInt ceil_nonneg(const Rational& q) {
    return (numerator(q) + denominator(q) - 1) / denominator(q);
}

// Grid value strictly between the bounds, nearest to the midpoint, lower on
// ties; nullopt when the open interval misses the grid.
std::optional<Rational> pick_value(const GridPolicy& grid, const Rational& lower,
                                   const Rational& upper) {
    if (lower >= upper) return std::nullopt;
    if (grid.mode == GridPolicy::Mode::Exact) return midpoint(lower, upper);

    const BigInt den = BigInt(1) << grid.resolution;
    BigInt j_min = floor_nonneg(lower * Rational(den)) + 1;
    BigInt j_max = ceil_nonneg(upper * Rational(den)) - 1;
    if (j_min > j_max) return std::nullopt;
    // nearest to the midpoint, tie toward the smaller grid point
    Rational m = midpoint(lower, upper) * Rational(den);
    BigInt j = ceil_nonneg(m - Rational(1, 2));
    j = std::max(j_min, std::min(j_max, j));
    return Rational(j, den);
}

struct Placed {
    std::size_t rank;
    const LexPoint* point;
};

// One element's placement against the already placed points.
TraceEntry place_element(const std::string& label, std::size_t rank,
                         const std::vector<Placed>& placed, std::size_t dims,
                         const GridPolicy& grid) {
    TraceEntry entry;
    entry.label = label;
    std::vector<Rational> settled;
    for (std::size_t delta = 0; delta < dims; ++delta) {
        Rational lower(0), upper(1);
        for (const auto& pl : placed) {
            const LexPoint& pt = *pl.point;
            bool agrees = true;
            for (std::size_t g = 0; g < delta; ++g)
                if (pt[g] != settled[g]) {
                    agrees = false;
                    break;
                }
            if (!agrees) continue;
            if (pl.rank < rank)
                lower = std::max(lower, pt[delta]);
            else
                upper = std::min(upper, pt[delta]);
        }
        if (auto v = pick_value(grid, lower, upper)) {
            entry.steps.push_back({delta, lower, upper, *v, false});
            return entry;
        }
        entry.steps.push_back({delta, lower, upper, lower, true});
        settled.push_back(lower);
    }
    throw CapacityError("all " + std::to_string(dims) +
                        " coordinates saturated while placing '" + label + "'");
}

LexPoint entry_point(const TraceEntry& entry, std::size_t dims) {
    std::vector<Rational> coords;
    coords.reserve(dims);
    for (const auto& s : entry.steps) coords.push_back(s.value);
    coords.resize(dims, Rational(1, 2));
    return LexPoint(std::move(coords));
}

void check_insertion(const InsertionOrder& order) {
    if (order.base.size() == 0) throw ValidationError("cannot embed an empty order");
    if (order.sequence.size() != order.base.size())
        throw ValidationError("insertion sequence length differs from the order size");
    std::vector<bool> seen(order.base.size(), false);
    for (const auto& label : order.sequence) {
        std::size_t r = order.base.rank(label);
        if (seen[r]) throw ValidationError("insertion sequence repeats label: " + label);
        seen[r] = true;
    }
}

} // namespace

EmbeddingResult embed_order(const InsertionOrder& order, const LexInterval& target,
                            const GridPolicy& grid) {
    check_insertion(order);
    if (target.dims < 1) throw ValidationError("target must have at least one coordinate");

    EmbeddingResult result;
    result.trace.base = order.base;
    result.trace.sequence = order.sequence;
    result.trace.dims = target.dims;
    result.trace.grid = grid;

    std::vector<Placed> placed;
    std::vector<LexPoint> storage;
    storage.reserve(order.sequence.size());
    for (const auto& label : order.sequence) {
        std::size_t rank = order.base.rank(label);
        TraceEntry entry = place_element(label, rank, placed, target.dims, grid);
        storage.push_back(entry_point(entry, target.dims));
        placed.push_back({rank, &storage.back()});
        result.trace.entries.push_back(std::move(entry));
    }
    for (std::size_t i = 0; i < storage.size(); ++i)
        result.points.emplace(order.sequence[i], storage[i]);
    return result;
}

std::map<std::string, LexPoint> replay(const EmbeddingTrace& trace) {
    InsertionOrder order{trace.base, trace.sequence};
    check_insertion(order);
    if (trace.entries.size() != trace.sequence.size())
        throw ValidationError("corrupted trace: entry count differs from the sequence");

    std::map<std::string, LexPoint> points;
    std::vector<Placed> placed;
    std::vector<LexPoint> storage;
    storage.reserve(trace.entries.size());
    for (std::size_t i = 0; i < trace.entries.size(); ++i) {
        const TraceEntry& recorded = trace.entries[i];
        if (recorded.label != trace.sequence[i])
            throw ValidationError("corrupted trace: entry label differs from the sequence");
        std::size_t rank = trace.base.rank(recorded.label);
        TraceEntry recomputed = place_element(recorded.label, rank, placed, trace.dims, trace.grid);
        if (recomputed.steps.size() != recorded.steps.size())
            throw ValidationError("corrupted trace: step count mismatch at '" + recorded.label +
                                  "'");
        for (std::size_t s = 0; s < recorded.steps.size(); ++s) {
            const CoordStep& a = recorded.steps[s];
            const CoordStep& b = recomputed.steps[s];
            if (a.coord != b.coord || a.lower != b.lower || a.upper != b.upper ||
                a.value != b.value || a.saturated != b.saturated)
                throw ValidationError("corrupted trace: step mismatch at '" + recorded.label +
                                      "' coordinate " + std::to_string(b.coord));
        }
        storage.push_back(entry_point(recomputed, trace.dims));
        placed.push_back({rank, &storage.back()});
    }
    for (std::size_t i = 0; i < storage.size(); ++i) points.emplace(trace.sequence[i], storage[i]);
    return points;
}

} // namespace ordtop
