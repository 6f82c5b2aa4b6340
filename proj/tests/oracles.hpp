// Test-side oracles, kept independent of the implementation paths they
// check.  Everything here is dumb and definitional on purpose.
#ifndef ORDTOP_TESTS_ORACLES_HPP
#define ORDTOP_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "ordtop/lexint.hpp"
#include "ordtop/orders.hpp"

namespace oracles {

using ordtop::LexPoint;
using ordtop::Rational;

// Plain coordinatewise comparison, written without lex_compare.
inline bool plain_less(const LexPoint& a, const LexPoint& b) {
    for (std::size_t i = 0; i < a.dims(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

inline LexPoint brute_lex_max(const std::vector<LexPoint>& pts) {
    const LexPoint* best = &pts.front();
    for (const auto& p : pts)
        if (plain_less(*best, p)) best = &p;
    return *best;
}

inline LexPoint brute_lex_min(const std::vector<LexPoint>& pts) {
    const LexPoint* best = &pts.front();
    for (const auto& p : pts)
        if (plain_less(p, *best)) best = &p;
    return *best;
}

inline Rational random_unit_rational(std::mt19937_64& rng, int max_den = 64) {
    std::uniform_int_distribution<int> den_dist(1, max_den);
    int den = den_dist(rng);
    std::uniform_int_distribution<int> num_dist(0, den);
    return Rational(num_dist(rng), den);
}

inline LexPoint random_point(std::mt19937_64& rng, std::size_t dims, int max_den = 64) {
    std::vector<Rational> coords;
    coords.reserve(dims);
    for (std::size_t i = 0; i < dims; ++i) coords.push_back(random_unit_rational(rng, max_den));
    return LexPoint(std::move(coords));
}

inline ordtop::FinOrder chain_order(std::size_t n, const std::string& prefix = "x") {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
    return ordtop::FinOrder(std::move(labels));
}

inline std::vector<std::string> random_permutation(std::mt19937_64& rng,
                                                   std::vector<std::string> labels) {
    std::shuffle(labels.begin(), labels.end(), rng);
    return labels;
}

// ---- finite-topology oracles over explicit open-set families ----

struct Topology {
    std::size_t n = 0;
    std::set<std::uint64_t> opens;
};

inline std::uint64_t full_mask(std::size_t n) {
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

inline bool is_topology(std::size_t n, const std::set<std::uint64_t>& family) {
    if (!family.count(0) || !family.count(full_mask(n))) return false;
    for (auto a : family)
        for (auto b : family)
            if (!family.count(a | b) || !family.count(a & b)) return false;
    return true;
}

// Closes a subbasis under unions and intersections.
inline Topology close_subbasis(std::size_t n, std::vector<std::uint64_t> sets) {
    Topology t;
    t.n = n;
    sets.push_back(0);
    sets.push_back(full_mask(n));
    std::set<std::uint64_t> family(sets.begin(), sets.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::uint64_t> cur(family.begin(), family.end());
        for (auto a : cur)
            for (auto b : cur) {
                if (family.insert(a | b).second) grew = true;
                if (family.insert(a & b).second) grew = true;
            }
    }
    t.opens = std::move(family);
    return t;
}

// All topologies on n labeled points, by exhausting families of subsets.
// Feasible for n <= 3 (2^8 candidate families).
inline std::vector<Topology> all_topologies(std::size_t n) {
    std::vector<Topology> out;
    std::size_t subsets = std::size_t{1} << n;
    for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
        std::set<std::uint64_t> family;
        for (std::size_t s = 0; s < subsets; ++s)
            if ((fam >> s) & 1) family.insert(s);
        if (is_topology(n, family)) out.push_back({n, family});
    }
    return out;
}

inline std::uint64_t oracle_min_nbhd(const Topology& t, std::size_t x) {
    std::uint64_t acc = full_mask(t.n);
    for (auto o : t.opens)
        if ((o >> x) & 1) acc &= o;
    return acc;
}

// x and y connected through chains of the relation "y in N_x or x in N_y".
inline std::vector<std::vector<bool>> oracle_equiv_closure(const Topology& t) {
    std::size_t n = t.n;
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t x = 0; x < n; ++x) {
        reach[x][x] = true;
        std::uint64_t nx = oracle_min_nbhd(t, x);
        for (std::size_t y = 0; y < n; ++y)
            if ((nx >> y) & 1) reach[x][y] = reach[y][x] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (reach[i][k] && reach[k][j]) reach[i][j] = true;
    return reach;
}

// T1 straight from the separation definition.
inline bool oracle_is_T1(const Topology& t) {
    for (std::size_t x = 0; x < t.n; ++x)
        for (std::size_t y = 0; y < t.n; ++y) {
            if (x == y) continue;
            bool separated = false;
            for (auto o : t.opens)
                if (((o >> x) & 1) && !((o >> y) & 1)) {
                    separated = true;
                    break;
                }
            if (!separated) return false;
        }
    return true;
}

// Join-irreducible opens: nonempty opens that are not unions of strictly
// smaller opens.  They are the unique minimal basis of a finite space.
inline std::vector<std::uint64_t> oracle_minimal_basis(const Topology& t) {
    std::vector<std::uint64_t> basis;
    for (auto o : t.opens) {
        if (o == 0) continue;
        std::uint64_t covered = 0;
        for (auto s : t.opens)
            if (s != o && (s & ~o) == 0) covered |= s;
        if (covered != o) basis.push_back(o);
    }
    return basis;
}

// Does the family generate exactly the topology's opens?
inline bool generates(const Topology& t, const std::vector<std::uint64_t>& basis) {
    std::set<std::uint64_t> gen{0};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::uint64_t> cur(gen.begin(), gen.end());
        for (auto a : cur)
            for (auto b : basis)
                if (gen.insert(a | b).second) grew = true;
    }
    return gen == t.opens;
}

} // namespace oracles

#endif
