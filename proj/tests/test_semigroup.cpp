#include <doctest.h>

#include "galmod/semigroup.hpp"

using namespace galmod;

TEST_CASE("gap sets of small semigroups") {
    NumericalSemigroup s35({3, 5});
    CHECK(s35.gaps() == std::set<i64>{1, 2, 4, 7});
    CHECK(s35.frobenius() == 7);
    CHECK(s35.genus() == 4);
    CHECK(s35.contains(8));
    CHECK(!s35.contains(7));
    CHECK(s35.contains(0));

    NumericalSemigroup s357({3, 5, 7});
    CHECK(s357.gaps() == std::set<i64>{1, 2, 4});

    NumericalSemigroup full({1});
    CHECK(full.gaps().empty());
    CHECK(full.frobenius() == -1);

    NumericalSemigroup s23({2, 3});
    CHECK(s23.gaps() == std::set<i64>{1});
    CHECK(s23.frobenius() == 1);
}

TEST_CASE("gcd > 1 is rejected") {
    CHECK_THROWS_AS(NumericalSemigroup({4, 6}), not_cofinite);
    CHECK_THROWS_AS(NumericalSemigroup(std::vector<i64>{}), error);
    CHECK_THROWS_AS(NumericalSemigroup({0, 3}), error);
}

TEST_CASE("two-generator closed forms over a sweep") {
    for (i64 a = 2; a <= 12; ++a)
        for (i64 b = a + 1; b <= 13; ++b) {
            if (std::gcd(a, b) != 1) continue;
            NumericalSemigroup s({a, b});
            CHECK(s.frobenius() == a * b - a - b);
            CHECK(s.genus() == (a - 1) * (b - 1) / 2);
        }
}

TEST_CASE("postage lemma") {
    CHECK(check_postage(3, 5, 30));
    CHECK(check_postage(2, 3, 12));
    for (i64 a = 2; a <= 10; ++a)
        for (i64 b = a + 1; b <= 11; ++b)
            if (std::gcd(a, b) == 1) CHECK(check_postage(a, b, 2 * a * b));
}

TEST_CASE("admissible odd nongaps") {
    // r with r mod p in {0, 1, p-1} are excluded
    CHECK(admissible_odd_nongaps(5, 3) == std::set<i64>{3, 5});   // r = 2, 3
    CHECK(admissible_odd_nongaps(5, 4) == std::set<i64>{3, 5});   // r = 4 = p-1 excluded
    CHECK(admissible_odd_nongaps(7, 4) == std::set<i64>{3, 5, 7});
    CHECK(admissible_odd_nongaps(29, 4) == std::set<i64>{3, 5, 7});
}

TEST_CASE("genus bound pipeline") {
    CHECK(genus_bound_pipeline(5).bound == 4);
    CHECK(genus_bound_pipeline(7).bound == 3);
    GenusBoundReport r29 = genus_bound_pipeline(29);
    CHECK(r29.bound == 2);
    CHECK(!r29.excluded.empty());
    CHECK_THROWS_AS(genus_bound_pipeline(3), error);  // needs p >= 5
    CHECK_THROWS_AS(genus_bound_pipeline(8), error);
}
