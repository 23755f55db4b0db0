#include <doctest.h>

#include "galmod/field.hpp"
#include "galmod/errors.hpp"

using namespace galmod;

TEST_CASE("field arithmetic in F_9") {
    FiniteField f(3, 2);
    CHECK(f.size() == 9);
    CHECK(f.modulus().size() == 3);
    CHECK(f.modulus().back() == 1);  // monic
    // the multiplicative group is cyclic of order 8
    for (i64 i = 1; i < f.size(); ++i) {
        FiniteField::Elt a = f.from_index(i);
        CHECK(f.index(f.pow(a, 8)) == f.index(f.one()));
        CHECK(!f.is_zero(a));
    }
    CHECK(f.is_zero(f.zero()));
    // norm is multiplicative into F_3^*
    for (i64 i = 1; i < f.size(); ++i)
        for (i64 j = 1; j < f.size(); ++j) {
            FiniteField::Elt a = f.from_index(i), b = f.from_index(j);
            CHECK(f.norm(f.mul(a, b)) == mul_mod(f.norm(a), f.norm(b), 3));
        }
    // add/index round trip
    for (i64 i = 0; i < f.size(); ++i) CHECK(f.index(f.from_index(i)) == i);
}

TEST_CASE("squares match square norms") {
    CHECK(square_norm_criterion(3, 2));
    CHECK(square_norm_criterion(5, 2));
    CHECK(square_norm_criterion(7, 1));  // degree 1: tautology
    CHECK(square_norm_criterion(3, 4));
    CHECK(square_norm_criterion(11, 2));
}

TEST_CASE("invalid parameters") {
    CHECK_THROWS_AS(square_norm_criterion(2, 2), odd_prime_required);
    CHECK_THROWS_AS(FiniteField(4, 2), error);
    CHECK_THROWS_AS(FiniteField(5, 0), error);
}
