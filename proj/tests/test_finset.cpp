#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "homops/finset.hpp"
#include "homops/json_io.hpp"

using namespace homops;

namespace {

FinSetMap random_map(std::mt19937_64& rng, int m, int n) {
    std::uniform_int_distribution<int> d(1, n);
    std::vector<int> img(static_cast<size_t>(m));
    for (auto& v : img) v = d(rng);
    return FinSetMap(m, n, img);
}

Morphism random_morphism(std::mt19937_64& rng, int m, int n, int terms) {
    Morphism r(m, n);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int t = 0; t < terms; ++t) r.add_term(random_map(rng, m, n), Scalar::integer(c(rng)));
    return r;
}

}  // namespace

TEST_CASE("multiplication maps") {
    CHECK(mult_map(3, 1, 2).image == std::vector<int>{1, 1, 2});
    CHECK(mult_map(3, 2, 3).image == std::vector<int>{1, 2, 2});
    // deleting slot 3 renumbers the leftover order-preservingly
    CHECK(mult_map(4, 1, 3).image == std::vector<int>{1, 2, 1, 3});
    CHECK_THROWS_AS(mult_map(3, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(mult_map(1, 1, 1), std::invalid_argument);
}

TEST_CASE("faces") {
    CHECK(face(1, 0, 0) == Morphism(FinSetMap(2, 1, {1, 1})));
    // wraparound at i = k collapses the pair {1, k+1} onto the basepoint
    CHECK(face(1, 0, 1) == Morphism(FinSetMap(2, 1, {1, 1})));
    CHECK(face(2, 1, 1) == Morphism(FinSetMap(4, 3, {1, 2, 2, 3})));
    CHECK(face(2, 0, 2) == Morphism(FinSetMap(3, 2, {1, 2, 1})));
    CHECK_THROWS_AS(face(2, 0, 3), std::invalid_argument);
}

TEST_CASE("unit insertions") {
    CHECK(unit_insertion(2, 0, 1) == FinSetMap(1, 2, {1}));
    CHECK(unit_insertion(3, 0, 2) == FinSetMap(2, 3, {1, 2}));
    CHECK_THROWS_AS(unit_insertion(2, 0, 2), std::invalid_argument);
}

TEST_CASE("composition and tensor") {
    Morphism id2 = Morphism::identity(2);
    CHECK(compose(id2, id2) == id2);
    // collapsing twice sends everything to the basepoint
    Morphism m3 = Morphism(mult_map(3, 1, 2));
    Morphism m2 = Morphism(mult_map(2, 1, 2));
    CHECK(compose(m3, m2) == Morphism(FinSetMap(3, 1, {1, 1, 1})));
    CHECK(Morphism::identity(1).tensor(Morphism::identity(1)) == Morphism::identity(2));
    CHECK(Morphism(mult_map(2, 1, 2)).tensor(Morphism::identity(1)) ==
          Morphism(FinSetMap(3, 2, {1, 1, 2})));
    CHECK_THROWS_AS(compose(Morphism::identity(2), Morphism::identity(3)), std::invalid_argument);
}

TEST_CASE("scaling identities compose like scalars") {
    Morphism two_id = Morphism::identity(2) * Scalar::integer(2);
    CHECK(compose(two_id, two_id) == Morphism::identity(2) * Scalar::integer(4));
}

TEST_CASE("morphism algebra on random samples") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        Morphism f = random_morphism(rng, 3, 4, 3);
        Morphism g = random_morphism(rng, 4, 3, 3);
        Morphism h = random_morphism(rng, 3, 2, 2);
        // associativity of composition
        CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
        // unitality
        CHECK(compose(Morphism::identity(3), f) == f);
        CHECK(compose(f, Morphism::identity(4)) == f);
        // interchange of tensor and composition
        Morphism f2 = random_morphism(rng, 2, 2, 2);
        Morphism g2 = random_morphism(rng, 2, 5, 2);
        CHECK(compose(f.tensor(f2), g.tensor(g2)) == compose(f, g).tensor(compose(f2, g2)));
        // tensor associativity
        CHECK(f.tensor(f2).tensor(h) == f.tensor(f2.tensor(h)));
    }
}

TEST_CASE("simplicial identities for faces acting by postcomposition") {
    // d_i d_j = d_{j-1} d_i for i < j, on morphisms into circle products
    for (int k = 2; k <= 6; ++k) {
        for (int j = 1; j <= k; ++j)
            for (int i = 0; i < j; ++i) {
                Morphism a = compose(face(k, 0, j), face(k - 1, 0, i));
                Morphism b = compose(face(k, 0, i), face(k - 1, 0, j - 1));
                CHECK(a == b);
            }
    }
}

TEST_CASE("canonical form has no zero terms") {
    Morphism m(2, 2);
    m.add_term(FinSetMap::identity(2), Scalar::integer(1));
    m.add_term(FinSetMap::identity(2), Scalar::integer(-1));
    CHECK(m.is_zero());
    CHECK(m.term_count() == 0);
}

TEST_CASE("reduced map enumeration") {
    // maps {1,2} -> {1,2,3} hitting {2,3}: exactly the two bijections onto {2,3}
    auto basis = enumerate_reduced_maps(2, 3);
    REQUIRE(basis.size() == 2);
    CHECK(basis[0].image == std::vector<int>{2, 3});
    CHECK(basis[1].image == std::vector<int>{3, 2});
    // counts for maps {1..s} -> {1..w} hitting {2..w} by inclusion-exclusion
    for (int s = 1; s <= 6; ++s)
        for (int w = 1; w <= s + 1; ++w) {
            long expect = 0;
            for (int miss = 0; miss <= w - 1; ++miss) {
                long ways = 1;
                for (int t = 0; t < s; ++t) ways *= (w - miss);
                long choose = 1;
                for (int t = 0; t < miss; ++t) choose = choose * (w - 1 - t) / (t + 1);
                expect += (miss % 2 == 0 ? 1 : -1) * choose * ways;
            }
            CHECK(static_cast<long>(enumerate_reduced_maps(s, w).size()) == expect);
        }
    CHECK(enumerate_reduced_maps(1, 3).empty());
}

TEST_CASE("json round trips") {
    std::mt19937_64 rng(5);
    Morphism m = random_morphism(rng, 3, 3, 4);
    json j = to_json(m);
    CHECK(morphism_from_json(j) == m);
    FinSetMap f = random_map(rng, 4, 2);
    CHECK(finset_map_from_json(to_json(f)) == f);
}
