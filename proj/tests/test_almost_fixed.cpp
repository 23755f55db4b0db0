#include <doctest.h>

#include "galmod/almost_fixed.hpp"

using namespace galmod;

TEST_CASE("orders with 1 almost fixed under all units") {
    std::set<i64> expect = {1, 2, 3, 6};
    CHECK(almost_rational_roots_of_unity(200) == expect);
    CHECK(almost_rational_roots_of_unity(6) == expect);
    CHECK(almost_rational_roots_of_unity(5) == std::set<i64>{1, 2, 3});
}

TEST_CASE("rotation module on (Z/5)^2 is almost fixed as a module") {
    FinAbGroup m = FinAbGroup::make({5, 5});
    ActionGroup g = ActionGroup::close_generators(
        m, {Endomorphism::make(m, {{0, 1}, {-1, 0}})});
    CHECK(is_almost_fixed_module(g).holds);
    CHECK(is_almost_fixed_submodule(g, Subgroup::whole(m)).holds);
    CHECK(is_almost_fixed_submodule(g, Subgroup::trivial(m)).holds);
}

TEST_CASE("rotation point (2,1) fails the element check with witness A, A^2") {
    FinAbGroup m = FinAbGroup::make({5, 5});
    Endomorphism a = Endomorphism::make(m, {{0, 1}, {-1, 0}});
    ActionGroup g = ActionGroup::close_generators(m, {a});
    auto res = is_almost_fixed_element(g, m.element({2, 1}));
    CHECK(!res.holds);
    REQUIRE(res.witness.has_value());
    CHECK(g[res.witness->g] == a);
    CHECK(g[res.witness->h] == a * a);
}

TEST_CASE("negation on Z/4: every element almost fixed") {
    // g + h - 2 = 0 forces g = h = 1 when the only elements are +-1 and
    // -1 - 1 - 2 = -4 = 0 on Z/4 pairs with 2P = 0 points
    FinAbGroup m = FinAbGroup::make({4});
    ActionGroup g = ActionGroup::close_generators(m, {Endomorphism::scalar(m, -1)});
    CHECK(!is_almost_fixed_module(g).holds);  // (-1) + (-1) - 2 = 0 but -1 != 1
    CHECK(is_almost_fixed_element(g, m.element({2})).holds);   // fixed point
    CHECK(!is_almost_fixed_element(g, m.element({1})).holds);
}

TEST_CASE("unit action on Z/6 is almost fixed") {
    ActionGroup g = ActionGroup::unit_multiplication(FinAbGroup::make({6}));
    CHECK(is_almost_fixed_module(g).holds);
}

TEST_CASE("unit action on Z/5: 1 is not almost fixed") {
    FinAbGroup m = FinAbGroup::make({5});
    ActionGroup g = ActionGroup::unit_multiplication(m);
    auto res = is_almost_fixed_element(g, m.element({1}));
    CHECK(!res.holds);
    // the witness pair really violates the definition
    REQUIRE(res.witness.has_value());
    ModuleElement p = m.element({1});
    const Endomorphism& a = g[res.witness->g];
    const Endomorphism& b = g[res.witness->h];
    CHECK((a(p) + b(p)) == scale(2, p));
    CHECK(a(p) != p);
}

TEST_CASE("supporting lemmas on sample instances") {
    FinAbGroup m = FinAbGroup::make({12});
    ActionGroup g = ActionGroup::unit_multiplication(m);
    for (i64 i = 0; i < m.order(); ++i) {
        ModuleElement p = m.element_at(i);
        if (!is_almost_fixed_element(g, p).holds) continue;
        CHECK(check_conjugate_lemma(g, p));
        CHECK(check_square_lemma(g, p));
    }
    CHECK(check_generators_lemma(g, {m.element({6}), m.element({4})}));
}
