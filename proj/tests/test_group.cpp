#include <doctest.h>

#include <map>

#include "galmod/group.hpp"

using namespace galmod;

namespace {

// independent isomorphism check for abelian groups given by factor
// lists: census of element orders
std::map<i64, i64> order_census(const std::vector<i64>& factors) {
    FinAbGroup g = FinAbGroup::make(factors);
    std::map<i64, i64> census;
    for (i64 i = 0; i < g.order(); ++i) ++census[g.element_at(i).order()];
    return census;
}

}  // namespace

TEST_CASE("make normalizes to the divisibility chain") {
    FinAbGroup g = FinAbGroup::make({6, 4});
    CHECK(g.factors() == std::vector<i64>{2, 12});
    CHECK(g.order() == 24);
    CHECK(g.exponent() == 12);
    CHECK(order_census({6, 4}) == order_census({2, 12}));
}

TEST_CASE("make examples") {
    CHECK(FinAbGroup::make({4, 6, 10}).factors() == std::vector<i64>{2, 2, 60});
    CHECK(FinAbGroup::make({5}).factors() == std::vector<i64>{5});
    CHECK(FinAbGroup::make({2, 2}).factors() == std::vector<i64>{2, 2});
    CHECK(FinAbGroup::make({}).order() == 1);
    CHECK_THROWS_AS(FinAbGroup::make({1}), error);
    CHECK_THROWS_AS(FinAbGroup::make({0}), error);
    CHECK_THROWS_AS(FinAbGroup::make({-3}), error);
}

TEST_CASE("element arithmetic and enumeration") {
    FinAbGroup g = FinAbGroup::make({2, 12});
    ModuleElement a = g.element({1, 5});
    ModuleElement b = g.element({1, 9});
    CHECK((a + b) == g.element({0, 2}));
    CHECK((a - b) == g.element({0, 8}));
    CHECK((-a) == g.element({1, 7}));
    CHECK(scale(3, a) == g.element({1, 3}));
    CHECK(a.order() == 12);
    CHECK(g.zero().is_zero());
    // element_at and index_of are inverse
    for (i64 i = 0; i < g.order(); ++i) CHECK(g.index_of(g.element_at(i)) == i);
    // coordinates reduce
    CHECK(g.element({3, 25}) == g.element({1, 1}));
    CHECK(g.element({-1, -1}) == g.element({1, 11}));
}

TEST_CASE("mixed parents rejected") {
    FinAbGroup g = FinAbGroup::make({4});
    FinAbGroup h = FinAbGroup::make({8});
    CHECK_THROWS_AS(g.element({1}) + h.element({1}), parent_mismatch);
}

TEST_CASE("endomorphism well-definedness") {
    FinAbGroup g = FinAbGroup::make({2, 4});
    // row 0 maps into Z/2, column 1 has order-4 source: 2 | a01 * 4 always,
    // but mapping the Z/4 generator into Z/2 with coefficient from Z/2 back
    // into Z/4 must respect 4 | a10 * 2, so a10 must be even
    CHECK_THROWS_AS(Endomorphism::make(g, {{1, 0}, {1, 1}}), bad_endomorphism);
    Endomorphism ok = Endomorphism::make(g, {{1, 0}, {2, 1}});
    CHECK(ok(g.element({1, 1})) == g.element({1, 3}));
}

TEST_CASE("endomorphism algebra") {
    FinAbGroup g = FinAbGroup::make({5, 5});
    Endomorphism r = Endomorphism::make(g, {{0, 1}, {-1, 0}});
    CHECK(r.is_invertible());
    CHECK((r * r) == Endomorphism::scalar(g, -1));
    CHECK((r * r * r * r).is_identity());
    CHECK((r - r).is_zero());
    Endomorphism s = Endomorphism::make(g, {{1, 0}, {0, 0}});
    CHECK(!s.is_invertible());
    CHECK(Endomorphism::scalar(g, 2).is_invertible());
    CHECK(!Endomorphism::scalar(g, 5).is_invertible());
    CHECK(Endomorphism::zero(g).is_zero());
    CHECK(Endomorphism::identity(g).is_identity());
}

TEST_CASE("rotation on (Z/5)^2 sends (2,1) to (1,3)") {
    FinAbGroup g = FinAbGroup::make({5, 5});
    Endomorphism r = Endomorphism::make(g, {{0, 1}, {-1, 0}});
    CHECK(r(g.element({2, 1})) == g.element({1, 3}));
}
