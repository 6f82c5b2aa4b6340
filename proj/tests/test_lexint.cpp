#include <doctest.h>

#include <random>

#include "ordtop/errors.hpp"
#include "ordtop/lexint.hpp"
#include "oracles.hpp"

using namespace ordtop;

namespace {

LexPoint pt(std::vector<std::string> coords) {
    std::vector<Rational> r;
    for (const auto& c : coords) r.push_back(parse_rational(c));
    return LexPoint(std::move(r));
}

} // namespace

TEST_CASE("lex_compare fixtures") {
    CHECK(lex_compare(pt({"1/2", "1"}), pt({"3/4", "0"})) == LexOrder::Less);
    CHECK(lex_compare(pt({"1/2", "1/4"}), pt({"1/2", "3/4"})) == LexOrder::Less);
    CHECK(lex_compare(pt({"1/2", "1/4"}), pt({"1/2", "1/4"})) == LexOrder::Equal);
    CHECK_THROWS_AS(lex_compare(pt({"0"}), pt({"0", "0"})), ValidationError);
    CHECK_THROWS_AS(pt({"3/2"}), ValidationError);
}

TEST_CASE("sup_finite fixtures") {
    CHECK(sup_finite({pt({"1/2", "1"}), pt({"3/4", "0"})}) == pt({"3/4", "0"}));
    CHECK(sup_finite({pt({"1/2", "1/4"}), pt({"1/2", "3/4"})}) == pt({"1/2", "3/4"}));
    CHECK(sup_finite({pt({"1/3", "2/3"})}) == pt({"1/3", "2/3"}));
    CHECK(inf_finite({pt({"1/2", "1"}), pt({"3/4", "0"})}) == pt({"1/2", "1"}));
    CHECK_THROWS_AS(sup_finite({}), ValidationError);
}

TEST_CASE("sup_finite equals the brute-force lexicographic maximum") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<std::size_t> dims_dist(1, 4);
    std::uniform_int_distribution<std::size_t> size_dist(1, 20);
    for (int trial = 0; trial < 3000; ++trial) {
        std::size_t dims = dims_dist(rng);
        std::size_t n = size_dist(rng);
        std::vector<LexPoint> pts;
        for (std::size_t i = 0; i < n; ++i) pts.push_back(oracles::random_point(rng, dims));
        LexPoint s = sup_finite(pts);
        CHECK(s == oracles::brute_lex_max(pts));
        CHECK(inf_finite(pts) == oracles::brute_lex_min(pts));
        for (const auto& p : pts) CHECK(lex_compare(p, s) != LexOrder::Greater);
    }
}

TEST_CASE("dense_sample fixtures") {
    LexInterval line{1};
    auto s1 = dense_sample(line, 1);
    REQUIRE(s1.size() == 3);
    CHECK(s1[0] == pt({"0"}));
    CHECK(s1[1] == pt({"1/2"}));
    CHECK(s1[2] == pt({"1"}));

    LexInterval plane{2};
    auto s2 = dense_sample(plane, 1);
    auto has = [&](const LexPoint& p) {
        return std::find(s2.begin(), s2.end(), p) != s2.end();
    };
    CHECK(has(pt({"1/2", "0"})));
    CHECK(has(pt({"1/2", "1/2"})));
    CHECK(lex_less(pt({"1/2", "0"}), pt({"1/2", "1/2"})));
    // support must be a prefix: (0,1) is not sampled
    CHECK_FALSE(has(pt({"0", "1"})));

    // separation witness between a=(0,1) and b=(1/2,0) appears at depth 2
    auto s3 = dense_sample(plane, 2);
    LexPoint witness = pt({"1/4", "0"});
    CHECK(std::find(s3.begin(), s3.end(), witness) != s3.end());
    CHECK(lex_less(pt({"0", "1"}), witness));
    CHECK(lex_less(witness, pt({"1/2", "0"})));
}

TEST_CASE("dense_sample counts match the closed form") {
    for (std::size_t dims = 1; dims <= 3; ++dims) {
        for (unsigned depth = 1; depth <= 3; ++depth) {
            std::size_t expected = 0, power = 1;
            for (std::size_t m = 0; m <= dims; ++m) {
                expected += power;
                power *= std::size_t{1} << depth;
            }
            auto sample = dense_sample(LexInterval{dims}, depth);
            CHECK(sample.size() == expected);
            // sorted strictly increasing: no duplicates
            for (std::size_t i = 1; i < sample.size(); ++i)
                CHECK(lex_less(sample[i - 1], sample[i]));
        }
    }
}

TEST_CASE("dense_sample refines between its own members") {
    LexInterval plane{2};
    auto coarse = dense_sample(plane, 1);
    auto fine = dense_sample(plane, 2);
    for (std::size_t i = 0; i < coarse.size(); ++i)
        for (std::size_t j = i + 1; j < coarse.size(); ++j) {
            bool found = false;
            for (const auto& s : fine)
                if (lex_less(coarse[i], s) && lex_less(s, coarse[j])) {
                    found = true;
                    break;
                }
            CHECK(found);
        }
}

TEST_CASE("wedge_map fixtures") {
    WedgeImage w1 = wedge_map(pt({"1/4", "2/3"}));
    CHECK(w1.copy == 1);
    CHECK(w1.point == pt({"1/2", "2/3"}));

    WedgeImage glue = wedge_map(pt({"1/2", "0", "0"}));
    CHECK(glue.is_glue_point());
    CHECK(glue.copy == 2);
    CHECK(glue.point == pt({"0", "0", "0"}));

    WedgeImage top = wedge_map(pt({"1", "1"}));
    CHECK(top.copy == 2);
    CHECK(top.point == pt({"1", "1"}));
}

TEST_CASE("wedge_map is strictly monotone") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 2000; ++trial) {
        LexPoint p = oracles::random_point(rng, 3);
        LexPoint q = oracles::random_point(rng, 3);
        LexOrder o = lex_compare(p, q);
        LexOrder w = wedge_compare(wedge_map(p), wedge_map(q));
        CHECK(w == o);
    }
    // glue identification: copy 1's maximum equals copy 2's minimum
    WedgeImage copy1_max{1, pt({"1", "1"})};
    WedgeImage copy2_min{2, pt({"0", "0"})};
    CHECK(wedge_compare(copy1_max, copy2_min) == LexOrder::Equal);
}

TEST_CASE("reverse_point fixtures and properties") {
    CHECK(reverse_point(pt({"0", "0"})) == pt({"1", "1"}));
    CHECK(reverse_point(pt({"1/4", "3/4"})) == pt({"3/4", "1/4"}));
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 2000; ++trial) {
        LexPoint p = oracles::random_point(rng, 3);
        LexPoint q = oracles::random_point(rng, 3);
        CHECK(reverse_point(reverse_point(p)) == p);
        if (lex_less(p, q)) CHECK(lex_less(reverse_point(q), reverse_point(p)));
    }
}
