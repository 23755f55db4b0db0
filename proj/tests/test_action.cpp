#include <doctest.h>

#include "galmod/action.hpp"

using namespace galmod;

TEST_CASE("closure of a cyclic unit action") {
    FinAbGroup g = FinAbGroup::make({7});
    ActionGroup a = ActionGroup::close_generators(g, {Endomorphism::scalar(g, 3)});
    CHECK(a.size() == 6);  // 3 generates (Z/7)^*
    CHECK(a[0].is_identity());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a.product_index(i, a.inverse_index(i)) == a.identity_index());
        for (std::size_t j = 0; j < a.size(); ++j)
            CHECK(a[a.product_index(i, j)] == a[i] * a[j]);
    }
    CHECK(a.index_of(Endomorphism::scalar(g, 2)) < a.size());
}

TEST_CASE("unit_multiplication sizes") {
    CHECK(ActionGroup::unit_multiplication(FinAbGroup::make({12})).size() == 4);
    CHECK(ActionGroup::unit_multiplication(FinAbGroup::make({9})).size() == 6);
    CHECK(ActionGroup::trivial(FinAbGroup::make({9})).size() == 1);
}

TEST_CASE("closure cap") {
    FinAbGroup g = FinAbGroup::make({101});
    CHECK_THROWS_AS(ActionGroup::close_generators(g, {Endomorphism::scalar(g, 2)}, 10),
                    cap_exceeded);
}

TEST_CASE("non-invertible generators rejected") {
    FinAbGroup g = FinAbGroup::make({4});
    CHECK_THROWS_AS(ActionGroup::close_generators(g, {Endomorphism::scalar(g, 2)}),
                    non_invertible_generator);
}

TEST_CASE("orbit-stabilizer on (Z/5)^2 rotation") {
    FinAbGroup g = FinAbGroup::make({5, 5});
    ActionGroup a = ActionGroup::close_generators(
        g, {Endomorphism::make(g, {{0, 1}, {-1, 0}})});
    CHECK(a.size() == 4);
    for (i64 i = 0; i < g.order(); ++i) {
        ModuleElement p = g.element_at(i);
        CHECK(orbit(a, p).size() * stabilizer(a, p).size() == a.size());
    }
    CHECK(orbit(a, g.element({2, 1})).size() == 4);
    CHECK(stabilizer(a, g.zero()).size() == 4);
}

TEST_CASE("fixed subgroup of negation on Z/4") {
    FinAbGroup g = FinAbGroup::make({4});
    ActionGroup a = ActionGroup::close_generators(g, {Endomorphism::scalar(g, -1)});
    Subgroup f = fixed_subgroup(g, a);
    CHECK(f.order() == 2);
    CHECK(f.contains(g.element({2})));
}

TEST_CASE("module_generated under the trivial action") {
    FinAbGroup g = FinAbGroup::make({12});
    ActionGroup a = ActionGroup::trivial(g);
    CHECK(module_generated(a, g.element({2})).order() == 6);
}

TEST_CASE("module_generated is stable and contains the orbit") {
    FinAbGroup g = FinAbGroup::make({3, 9});
    ActionGroup a = ActionGroup::close_generators(
        g, {Endomorphism::make(g, {{1, 1}, {0, 1}})});
    ModuleElement p = g.element({0, 1});
    Subgroup s = module_generated(a, p);
    CHECK(is_stable(a, s));
    for (const auto& q : orbit(a, p)) CHECK(s.contains(q));
    CHECK(s.order() == 27);  // orbit hits (1,1), and 3*(0,1) stays inside
}

TEST_CASE("is_stable") {
    FinAbGroup g = FinAbGroup::make({5, 5});
    ActionGroup a = ActionGroup::close_generators(
        g, {Endomorphism::make(g, {{0, 1}, {-1, 0}})});
    CHECK(is_stable(a, Subgroup::trivial(g)));
    CHECK(is_stable(a, Subgroup::whole(g)));
    CHECK(!is_stable(a, Subgroup::generated(g, {g.element({1, 0})})));
}
