#include <doctest.h>

#include <random>

#include "ordtop/errors.hpp"
#include "ordtop/orders.hpp"
#include "oracles.hpp"

using namespace ordtop;

namespace {

MonotoneMap make_map(const FinOrder& dom, const FinOrder& cod,
                     std::vector<std::pair<std::string, std::string>> graph,
                     Extension ext = Extension::None) {
    MonotoneMap m;
    m.domain = dom;
    m.codomain = cod;
    m.graph = std::move(graph);
    m.extension = ext;
    return m;
}

// All strictly monotone injections from subsets of I into J, as index lists:
// choose a in 0..|I|, then increasing input ranks and increasing output ranks.
void for_each_injection(const FinOrder& I, const FinOrder& J,
                        const std::function<void(const MonotoneMap&)>& fn) {
    std::size_t n = I.size(), m = J.size();
    std::vector<std::size_t> in, out;
    std::function<void(std::size_t, std::size_t)> rec_out = [&](std::size_t k, std::size_t start) {
        if (k == in.size()) {
            MonotoneMap h;
            h.domain = I;
            h.codomain = J;
            for (std::size_t i = 0; i < in.size(); ++i)
                h.graph.emplace_back(I.label_at(in[i]), J.label_at(out[i]));
            fn(h);
            return;
        }
        for (std::size_t j = start; j < m; ++j) {
            out.push_back(j);
            rec_out(k + 1, j + 1);
            out.pop_back();
        }
    };
    std::function<void(std::size_t)> rec_in = [&](std::size_t start) {
        rec_out(0, 0);
        for (std::size_t i = start; i < n; ++i) {
            in.push_back(i);
            rec_in(i + 1);
            in.pop_back();
        }
    };
    rec_in(0);
}

// All total monotone maps J -> I.
void for_each_monotone(const FinOrder& J, const FinOrder& I,
                       const std::function<void(const MonotoneMap&)>& fn) {
    std::vector<std::size_t> img(J.size());
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t k, std::size_t lo) {
        if (k == J.size()) {
            MonotoneMap g;
            g.domain = J;
            g.codomain = I;
            for (std::size_t j = 0; j < J.size(); ++j)
                g.graph.emplace_back(J.label_at(j), I.label_at(img[j]));
            fn(g);
            return;
        }
        for (std::size_t v = lo; v < I.size(); ++v) {
            img[k] = v;
            rec(k + 1, v);
        }
    };
    rec(0, 0);
}

bool is_surjective(const MonotoneMap& g) {
    std::vector<bool> hit(g.codomain.size(), false);
    for (const auto& [in, out] : g.graph) hit[g.codomain.rank(out)] = true;
    for (bool b : hit)
        if (!b) return false;
    return true;
}

} // namespace

TEST_CASE("validate fixtures") {
    FinOrder chain3({"a", "b", "c"});
    CHECK(validate(make_map(chain3, chain3, {{"a", "a"}, {"b", "b"}, {"c", "c"}})).ok);

    FinOrder chain2({"a", "b"});
    auto swap = validate(make_map(chain2, chain2, {{"a", "b"}, {"b", "a"}}));
    CHECK_FALSE(swap.ok);
    REQUIRE(swap.violation.has_value());
    CHECK(swap.violation->first == "a");
    CHECK(swap.violation->second == "b");

    CHECK_FALSE(validate(make_map(chain2, chain2, {{"a", "a"}, {"a", "b"}})).ok);
    CHECK_FALSE(validate(make_map(chain2, chain2, {{"z", "a"}})).ok);
}

TEST_CASE("surjection from injection: spec fixtures") {
    FinOrder I({"i0", "i1"});
    FinOrder J({"j0", "j1", "j2"});

    MonotoneMap h = make_map(I, J, {{"i0", "j0"}, {"i1", "j2"}});
    MonotoneMap g = surjection_from_injection(h, I);
    CHECK(g.eval("j0") == "i0");
    CHECK(g.eval("j1") == "i0");
    CHECK(g.eval("j2") == "i1");
    CHECK(g.extension == Extension::Sup);

    // empty bound set lands on the minimum
    MonotoneMap h2 = make_map(I, J, {{"i0", "j1"}, {"i1", "j2"}});
    MonotoneMap g2 = surjection_from_injection(h2, I);
    CHECK(g2.eval("j0") == "i0");

    FinOrder chain({"a", "b", "c"});
    MonotoneMap id = make_map(chain, chain, {{"a", "a"}, {"b", "b"}, {"c", "c"}});
    MonotoneMap gid = surjection_from_injection(id, chain);
    for (const auto& l : chain.labels()) CHECK(gid.eval(l) == l);

    CHECK_THROWS_AS(surjection_from_injection(
                        make_map(I, J, {{"i0", "j1"}, {"i1", "j1"}}), I),
                    ValidationError);
}

TEST_CASE("injection from surjection: spec fixtures") {
    FinOrder I({"i0", "i1"});
    FinOrder J({"j0", "j1", "j2"});
    MonotoneMap g = make_map(J, I, {{"j0", "i0"}, {"j1", "i0"}, {"j2", "i1"}});
    MonotoneMap f = injection_from_surjection(g);
    CHECK(f.eval("i0") == "j1");
    CHECK(f.eval("i1") == "j2");

    FinOrder chain({"a", "b"});
    MonotoneMap id = make_map(chain, chain, {{"a", "a"}, {"b", "b"}});
    MonotoneMap fid = injection_from_surjection(id);
    for (const auto& l : chain.labels()) CHECK(fid.eval(l) == l);

    // constant map onto a point: the image is the domain maximum
    FinOrder pt({"p"});
    MonotoneMap c = make_map(J, pt, {{"j0", "p"}, {"j1", "p"}, {"j2", "p"}});
    CHECK(injection_from_surjection(c).eval("p") == "j2");

    // not surjective: empty fiber
    MonotoneMap bad = make_map(J, I, {{"j0", "i0"}, {"j1", "i0"}, {"j2", "i0"}});
    CHECK_THROWS_AS(injection_from_surjection(bad), ValidationError);
}

TEST_CASE("compose and reverse") {
    FinOrder chain({"a", "b", "c"});
    CHECK(reverse(chain).labels() == std::vector<std::string>{"c", "b", "a"});
    CHECK(reverse(reverse(chain)) == chain);

    MonotoneMap id = make_map(chain, chain, {{"a", "a"}, {"b", "b"}, {"c", "c"}});
    MonotoneMap m = make_map(chain, chain, {{"a", "a"}, {"b", "a"}, {"c", "b"}});
    MonotoneMap composed = compose(id, m);
    CHECK(composed.graph == m.graph);

    FinOrder other({"x", "y"});
    MonotoneMap n = make_map(chain, other, {{"a", "x"}, {"b", "x"}, {"c", "y"}});
    CHECK_THROWS_AS(compose(n, m), ValidationError);

    // strict monotonicity is preserved by composition on a random instance
    std::mt19937_64 rng(5);
    FinOrder big = oracles::chain_order(6);
    MonotoneMap s1 = make_map(big, big,
                              {{"x0", "x0"}, {"x1", "x2"}, {"x2", "x3"},
                               {"x3", "x4"}, {"x4", "x5"}});
    MonotoneMap s2 = make_map(big, big,
                              {{"x0", "x1"}, {"x2", "x3"}, {"x3", "x4"},
                               {"x4", "x5"}, {"x5", "x5"}});
    // compose where defined
    MonotoneMap s2_ext = s2;
    s2_ext.extension = Extension::Sup;
    CHECK(is_strictly_monotone(s1));
    MonotoneMap both = compose(s1, s2_ext);
    CHECK(validate(both).ok);
}

TEST_CASE("duality round trips, exhaustive to size 4") {
    for (std::size_t ni = 1; ni <= 4; ++ni) {
        for (std::size_t nj = 1; nj <= 4; ++nj) {
            FinOrder I = oracles::chain_order(ni, "i");
            FinOrder J = oracles::chain_order(nj, "j");
            for_each_injection(I, J, [&](const MonotoneMap& h) {
                MonotoneMap g = surjection_from_injection(h, I);
                CHECK(validate(g).ok);
                // g recovers every element of A
                for (const auto& [i, hi] : h.graph) CHECK(g.eval(hi) == i);
                // g hits all of A plus the minimum
                std::set<std::string> image;
                for (const auto& [j, gj] : g.graph) image.insert(gj);
                for (const auto& [i, hi] : h.graph) CHECK(image.count(i) == 1);
            });
            for_each_monotone(J, I, [&](const MonotoneMap& g) {
                if (!is_surjective(g)) return;
                MonotoneMap f = injection_from_surjection(g);
                CHECK(is_strictly_monotone(f));
                for (const auto& [t, ft] : f.graph) CHECK(g.eval(ft) == t);
            });
        }
    }
}

TEST_CASE("reverse is an involution and compose associates") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<std::size_t> size(1, 8);
        FinOrder o = oracles::chain_order(size(rng));
        CHECK(reverse(reverse(o)) == o);
    }
    FinOrder a = oracles::chain_order(4, "a");
    FinOrder b = oracles::chain_order(3, "b");
    FinOrder c = oracles::chain_order(3, "c");
    FinOrder d = oracles::chain_order(2, "d");
    MonotoneMap m1 = make_map(a, b, {{"a0", "b0"}, {"a1", "b0"}, {"a2", "b1"}, {"a3", "b2"}});
    MonotoneMap m2 = make_map(b, c, {{"b0", "c0"}, {"b1", "c2"}, {"b2", "c2"}});
    MonotoneMap m3 = make_map(c, d, {{"c0", "d0"}, {"c1", "d1"}, {"c2", "d1"}});
    MonotoneMap left = compose(compose(m1, m2), m3);
    MonotoneMap right = compose(m1, compose(m2, m3));
    CHECK(left.graph == right.graph);
}
