#include <doctest.h>

#include "ordtop/errors.hpp"
#include "ordtop/ordinal.hpp"

using ordtop::Ordinal;

TEST_CASE("ordinal construction and classification") {
    CHECK(Ordinal::zero().is_zero());
    CHECK(Ordinal::finite(3).is_finite());
    CHECK(Ordinal::finite(3).finite_value() == 3);
    CHECK(Ordinal::omega().is_limit());
    CHECK_FALSE(Ordinal::omega().is_successor());
    CHECK(Ordinal::omega().successor().is_successor());
    CHECK(Ordinal::omega().successor().predecessor() == Ordinal::omega());
    CHECK(Ordinal::finite(1).predecessor().is_zero());
}

TEST_CASE("ordinal comparison is the lexicographic CNF order") {
    Ordinal w = Ordinal::omega();
    CHECK(Ordinal::finite(100) < w);
    CHECK(w < w.successor());
    CHECK(w.successor() < w.plus(w));                    // w+1 < w*2
    CHECK(w.plus(w) < Ordinal::omega_power(Ordinal::finite(2)));  // w*2 < w^2
    CHECK(Ordinal::omega_power(Ordinal::finite(2)) <
          Ordinal::omega_power(Ordinal::omega()));       // w^2 < w^w
}

TEST_CASE("CNF addition absorbs low terms") {
    Ordinal w = Ordinal::omega();
    CHECK(Ordinal::finite(3).plus(w) == w);
    CHECK(w.plus(Ordinal::finite(3)).str() == "w+3");
    CHECK(w.plus(w).str() == "w*2");
}

TEST_CASE("ordinal parsing round-trips") {
    for (const char* text : {"0", "7", "w", "w*2", "w+1", "w^2+3", "w^w", "w^(w+1)*2+w*3+1"}) {
        Ordinal o = Ordinal::parse(text);
        CHECK(Ordinal::parse(o.str()) == o);
        CHECK(o.str() == text);
    }
    CHECK(Ordinal::parse("3+w") == Ordinal::omega());
    CHECK_THROWS_AS(Ordinal::parse("w^"), ordtop::ValidationError);
    CHECK_THROWS_AS(Ordinal::parse("q"), ordtop::ValidationError);
    CHECK_THROWS_AS(Ordinal::parse("w*0"), ordtop::ValidationError);
}

TEST_CASE("nesting depth is bounded") {
    Ordinal tower = Ordinal::omega();
    for (int i = 0; i < 6; ++i) tower = Ordinal::omega_power(tower);
    CHECK(tower.depth() == 8);
    CHECK_THROWS_AS(Ordinal::omega_power(tower), ordtop::ValidationError);
}
