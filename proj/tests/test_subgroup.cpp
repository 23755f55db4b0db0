#include <doctest.h>

#include "galmod/subgroup.hpp"

using namespace galmod;

TEST_CASE("orders and containment") {
    FinAbGroup g = FinAbGroup::make({12});
    Subgroup s = Subgroup::generated(g, {g.element({4})});
    CHECK(s.order() == 3);
    CHECK(s.contains(g.element({8})));
    CHECK(!s.contains(g.element({2})));
    CHECK(Subgroup::trivial(g).order() == 1);
    CHECK(Subgroup::whole(g).order() == 12);
    CHECK(s.invariant_factors() == std::vector<i64>{3});
    CHECK(s.elements().size() == 3);
}

TEST_CASE("lagrange over all cyclic subgroups of Z/2 x Z/12") {
    FinAbGroup g = FinAbGroup::make({2, 12});
    for (i64 i = 0; i < g.order(); ++i) {
        Subgroup s = Subgroup::generated(g, {g.element_at(i)});
        CHECK(s.order() == g.element_at(i).order());
        QuotientMap q(g, s);
        CHECK(s.order() * q.quotient().order() == g.order());
    }
}

TEST_CASE("quotient structure and projection") {
    FinAbGroup g = FinAbGroup::make({12});
    Subgroup s = Subgroup::generated(g, {g.element({4})});
    QuotientMap q(g, s);
    CHECK(q.quotient().factors() == std::vector<i64>{4});
    CHECK(q.project(g.element({4})).is_zero());
    CHECK(!q.project(g.element({1})).is_zero());
    CHECK(q.project(g.element({1})).order() == 4);
    CHECK(q.project(g.element({5})) == q.project(g.element({1})));
}

TEST_CASE("quotient of a rank-2 group") {
    FinAbGroup g = FinAbGroup::make({2, 12});
    Subgroup s = Subgroup::generated(g, {g.element({0, 6})});
    QuotientMap q(g, s);
    CHECK(q.quotient().order() == 12);
    CHECK(q.quotient().factors() == std::vector<i64>{2, 6});
    CHECK(q.project(g.element({0, 6})).is_zero());
}

TEST_CASE("sum and intersection") {
    FinAbGroup g = FinAbGroup::make({12});
    Subgroup a = Subgroup::generated(g, {g.element({4})});  // order 3
    Subgroup b = Subgroup::generated(g, {g.element({6})});  // order 2
    CHECK(a.sum(b).order() == 6);
    CHECK(a.intersect(b).order() == 1);
    Subgroup c = Subgroup::generated(g, {g.element({2})});  // order 6
    CHECK(a.intersect(c) == a);
    CHECK(a.sum(c) == c);
}

TEST_CASE("primary decomposition of Z/12") {
    FinAbGroup g = FinAbGroup::make({12});
    auto [mp, mq] = primary_decompose(g, 2);
    CHECK(mp.order() == 4);
    CHECK(mq.order() == 3);
    CHECK(mp.intersect(mq).is_trivial());
    CHECK(mp.sum(mq).order() == 12);
    auto [m3, rest] = primary_decompose(g, 3);
    CHECK(m3.order() == 3);
    CHECK(rest.order() == 4);
}

TEST_CASE("from_lattice_rows matches generated") {
    FinAbGroup g = FinAbGroup::make({5, 5});
    Subgroup a = Subgroup::generated(g, {g.element({1, 0})});
    Subgroup b = Subgroup::from_lattice_rows(g, {{1, 0}, {0, 5}});
    CHECK(a == b);
}
