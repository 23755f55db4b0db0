#include <doctest.h>

#include "galmod/mat.hpp"

using namespace galmod;

TEST_CASE("hnf reduces a redundant basis") {
    Mat h = hnf({{2, 0}, {0, 2}, {1, 1}});
    CHECK(h == Mat{{1, 1}, {0, 2}});
    CHECK(hnf_det(h) == 2);
}

TEST_CASE("hnf drops zero rows and sorts pivots") {
    Mat h = hnf({{0, 0}, {0, 3}, {6, 0}});
    CHECK(h == Mat{{6, 0}, {0, 3}});
    CHECK(hnf_det(h) == 18);
}

TEST_CASE("hnf_solve membership") {
    Mat h = hnf({{2, 1}, {0, 3}});
    CHECK(hnf_contains(h, {2, 1}));
    CHECK(hnf_contains(h, {2, 4}));
    CHECK(hnf_contains(h, {0, 0}));
    CHECK(!hnf_contains(h, {1, 0}));
    CHECK(!hnf_contains(h, {0, 1}));
    auto c = hnf_solve(h, {4, 5});
    REQUIRE(c.has_value());
    CHECK((*c)[0] * 2 == 4);
    CHECK((*c)[0] * 1 + (*c)[1] * 3 == 5);
}

TEST_CASE("int_kernel spans the null space") {
    Mat k = int_kernel({{2, 4}}, 2);
    REQUIRE(k.size() == 1);
    CHECK(2 * k[0][0] + 4 * k[0][1] == 0);
    CHECK((k[0][0] != 0 || k[0][1] != 0));
    // primitive: the gcd of the coordinates is 1
    CHECK(std::gcd(k[0][0], k[0][1]) == 1);
}

TEST_CASE("snf diagonal") {
    CHECK(snf_diagonal({{4, 0}, {0, 6}}) == Vec{2, 12});
    CHECK(snf_diagonal({{2, 0}, {0, 2}}) == Vec{2, 2});
    CHECK(snf_diagonal({{1, 0}, {0, 5}}) == Vec{1, 5});
}

TEST_CASE("snf_right transform is consistent") {
    Mat m = {{4, 0}, {0, 6}};
    SnfRight s = snf_right(m);
    CHECK(s.diag == Vec{2, 12});
    // v is unimodular 2x2
    i64 det = s.v[0][0] * s.v[1][1] - s.v[0][1] * s.v[1][0];
    CHECK((det == 1 || det == -1));
}

TEST_CASE("congruence_kernel solves 2x = 0 mod 4") {
    Mat k = congruence_kernel({{2}}, {4}, {4});
    CHECK(hnf_det(k) == 2);          // solutions {0, 2} mod 4
    CHECK(hnf_contains(k, {2}));
    CHECK(!hnf_contains(k, {1}));
}

TEST_CASE("congruence_kernel two unknowns") {
    // x + y = 0 mod 6 on (Z/6)^2: order 6 solution set
    Mat k = congruence_kernel({{1, 1}}, {6}, {6, 6});
    CHECK(hnf_det(k) == 6);
    CHECK(hnf_contains(k, {1, 5}));
    CHECK(hnf_contains(k, {2, 4}));
    CHECK(!hnf_contains(k, {1, 1}));
}

TEST_CASE("lattice_intersection") {
    Mat a = hnf({{2, 0}, {0, 1}});
    Mat b = hnf({{1, 0}, {0, 3}});
    Mat c = lattice_intersection(a, b, 2);
    CHECK(hnf(c) == Mat{{2, 0}, {0, 3}});
}
