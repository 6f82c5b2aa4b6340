#include <doctest.h>

#include <random>

#include "ordtop/errors.hpp"
#include "ordtop/quotient.hpp"
#include "oracles.hpp"

using namespace ordtop;

namespace {

Rational R(const std::string& s) { return parse_rational(s); }

LexPoint pt(std::vector<std::string> coords) {
    std::vector<Rational> r;
    for (const auto& c : coords) r.push_back(parse_rational(c));
    return LexPoint(std::move(r));
}

BreakpointSet line_atoms(std::vector<std::string> values) {
    std::vector<LexPoint> atoms;
    for (auto& v : values) atoms.push_back(pt({v}));
    return BreakpointSet(LexInterval{1}, std::move(atoms));
}

} // namespace

TEST_CASE("breakpoint sets adjoin endpoints, sort and deduplicate") {
    BreakpointSet a = line_atoms({"1/2", "1/4"});
    REQUIRE(a.size() == 4);
    CHECK(a.atoms()[0] == pt({"0"}));
    CHECK(a.atoms()[1] == pt({"1/4"}));
    CHECK(a.atoms()[2] == pt({"1/2"}));
    CHECK(a.atoms()[3] == pt({"1"}));
    CHECK(a.gap_count() == 3);
    CHECK(line_atoms({"0", "1", "1/2", "1/2"}).size() == 3);
}

TEST_CASE("related counts atoms in the closed interval") {
    BreakpointSet a = line_atoms({"1/4", "1/2"});
    CHECK(related(pt({"3/10"}), pt({"2/5"}), a));      // no atoms inside
    CHECK_FALSE(related(pt({"0"}), pt({"1/4"}), a));   // two atoms
    CHECK(related(pt({"1/10"}), pt({"1/4"}), a));      // exactly one
    CHECK(related(pt({"3/10"}), pt({"3/10"}), a));     // degenerate interval
}

TEST_CASE("raw relatedness is not transitive for sparse atoms") {
    BreakpointSet a = line_atoms({"1/4", "1/3"});
    CHECK(related(pt({"1/10"}), pt({"3/10"}), a));
    CHECK(related(pt({"3/10"}), pt({"2/5"}), a));
    CHECK_FALSE(related(pt({"1/10"}), pt({"2/5"}), a));
}

TEST_CASE("densify inserts one block per gap and is stable") {
    DensifiedSet d1 = densify(line_atoms({}));
    CHECK(d1.block_count() == 1);
    DensifiedSet d2 = densify(line_atoms({"1/2"}));
    CHECK(d2.block_count() == 2);
    CHECK(densify(d2.base).base == d2.base);
}

TEST_CASE("quotient map fixtures on the line") {
    BreakpointSet a = line_atoms({"1/4", "1/2"});
    auto [j, p] = quotient_by_breakpoints(a);
    CHECK(j.atom_count == 4);
    CHECK(j.segment_count() == 3);
    CHECK(p.eval(pt({"1/4"})) == MixedPoint::atom(1));
    CHECK(p.eval(pt({"3/10"})) == MixedPoint::segment(1, R("1/5")));
    CHECK(p.eval(pt({"0"})) == MixedPoint::atom(0));
    CHECK(p.eval(pt({"1"})) == MixedPoint::atom(3));
}

TEST_CASE("fiber collapse in two dimensions") {
    BreakpointSet a(LexInterval{2},
                    {pt({"0", "0"}), pt({"1/4", "0"}), pt({"1/2", "0"}), pt({"1", "1"})});
    auto [j, p] = quotient_by_breakpoints(a);
    CHECK(j.atom_count == 4);
    MixedPoint m1 = p.eval(pt({"3/8", "1/4"}));
    MixedPoint m2 = p.eval(pt({"3/8", "3/4"}));
    CHECK(m1 == MixedPoint::segment(1, R("1/2")));
    CHECK(m1 == m2);
}

TEST_CASE("edge fibers join the bounding atom's class") {
    // atoms with nonzero trailing coordinates leave room above the lower
    // atom and below the upper one
    BreakpointSet a(LexInterval{2}, {pt({"1/4", "1/2"}), pt({"1/2", "1/2"})});
    auto [j, p] = quotient_by_breakpoints(a);
    (void)j;
    CHECK(p.eval(pt({"1/4", "3/4"})) == p.eval(pt({"1/4", "1/2"})));
    CHECK(p.eval(pt({"1/2", "1/4"})) == p.eval(pt({"1/2", "1/2"})));
    CHECK(densified_class(pt({"1/4", "3/4"}), a) == MixedPoint::atom(1));
}

TEST_CASE("fibers match classes on fixtures") {
    BreakpointSet a = line_atoms({"1/4", "1/2"});
    CHECK(fibers_match_classes(a, a.atoms()));
    CHECK(fibers_match_classes(
        a, {pt({"1/10"}), pt({"1/4"}), pt({"3/10"}), pt({"2/5"}), pt({"3/5"}), pt({"1"})}));

    BreakpointSet b(LexInterval{2},
                    {pt({"0", "0"}), pt({"1/4", "0"}), pt({"1/2", "0"}), pt({"1", "1"})});
    CHECK(fibers_match_classes(
        b, {pt({"3/8", "1/4"}), pt({"3/8", "3/4"}), pt({"1/8", "0"}), pt({"1/4", "0"})}));
}

TEST_CASE("quotient map is monotone on random pairs") {
    std::mt19937_64 rng(606);
    std::uniform_int_distribution<std::size_t> dims_dist(1, 3);
    std::uniform_int_distribution<std::size_t> natoms(0, 6);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t dims = dims_dist(rng);
        std::vector<LexPoint> atoms;
        for (std::size_t i = natoms(rng); i > 0; --i)
            atoms.push_back(oracles::random_point(rng, dims, 16));
        BreakpointSet a(LexInterval{dims}, atoms);
        auto [j, p] = quotient_by_breakpoints(a);
        (void)j;
        for (int k = 0; k < 30; ++k) {
            LexPoint s = oracles::random_point(rng, dims, 32);
            LexPoint t = oracles::random_point(rng, dims, 32);
            if (lex_less(t, s)) std::swap(s, t);
            CHECK(mixed_compare(p.eval(s), p.eval(t)) != LexOrder::Greater);
        }
        // atoms map strictly increasingly onto the quotient atoms
        for (std::size_t i = 0; i < a.size(); ++i)
            CHECK(p.eval(a.atoms()[i]) == MixedPoint::atom(i));
    }
}

TEST_CASE("line quotients with distinct first coordinates are injective on samples") {
    BreakpointSet a = line_atoms({"1/4", "1/2", "3/4"});
    auto [j, p] = quotient_by_breakpoints(a);
    (void)j;
    std::mt19937_64 rng(17);
    std::vector<LexPoint> samples;
    for (int i = 0; i < 40; ++i) samples.push_back(oracles::random_point(rng, 1, 64));
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t k = i + 1; k < samples.size(); ++k)
            if (!(samples[i] == samples[k]))
                CHECK_FALSE(p.eval(samples[i]) == p.eval(samples[k]));
}

TEST_CASE("densified classes are transitive on sample triples") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<LexPoint> atoms;
        std::uniform_int_distribution<std::size_t> natoms(0, 5);
        for (std::size_t i = natoms(rng); i > 0; --i)
            atoms.push_back(oracles::random_point(rng, 2, 8));
        BreakpointSet a(LexInterval{2}, atoms);
        std::vector<LexPoint> samples;
        for (int i = 0; i < 12; ++i) samples.push_back(oracles::random_point(rng, 2, 16));
        std::vector<MixedPoint> cls;
        for (const auto& s : samples) cls.push_back(densified_class(s, a));
        for (std::size_t x = 0; x < samples.size(); ++x)
            for (std::size_t y = 0; y < samples.size(); ++y)
                for (std::size_t z = 0; z < samples.size(); ++z)
                    if (cls[x] == cls[y] && cls[y] == cls[z]) CHECK(cls[x] == cls[z]);
    }
}

TEST_CASE("quotient rejects mismatched queries") {
    BreakpointSet a = line_atoms({"1/2"});
    auto [j, p] = quotient_by_breakpoints(a);
    (void)j;
    CHECK_THROWS_AS(p.eval(pt({"1/2", "1/2"})), ValidationError);
}
