#pragma once

#include <optional>
#include <vector>

#include "galmod/ints.hpp"

namespace galmod {

/// A validated solution of x^e + y^e == 2 (mod m) with x^e, y^e != 1.
struct UnitSolution {
    i64 modulus;
    i64 exponent;
    i64 x;
    i64 y;
    i64 xe;  // certificate: x^e mod m
    i64 ye;  // certificate: y^e mod m
    bool validate() const;
};

/// Lexicographically smallest solution, or nullopt after exhausting all
/// unit pairs.
std::optional<UnitSolution> find_unit_solution(i64 m, i64 e);

struct EmpiricalC {
    i64 e;
    i64 m_max;
    std::vector<i64> exceptions;  // all m <= m_max with no solution
    i64 largest_exception;        // 0 when none; verified up to m_max only
};

EmpiricalC empirical_c(i64 e, i64 m_max);

/// Hensel-lifted witness mod p^k with x^e = 1 + p^(k-1) and
/// y^e = 1 - p^(k-1); requires p > e (nullopt otherwise).
std::optional<UnitSolution> hensel_witness(i64 p, int k, i64 e);

/// Projective point count of x^e + y^e = 2 z^e over F_p with the Weil
/// slack |N - (p+1)| against (e-1)(e-2)sqrt(p); the genus (e-1)(e-2)/2
/// of a smooth plane curve of degree e is a classical input, not checked
/// here.
struct PointCount {
    i64 p;
    i64 e;
    i64 count;
    i64 slack;       // |count - (p+1)|
    bool weil_ok;    // slack^2 <= (e-1)^2 (e-2)^2 p
};

PointCount count_curve_points(i64 p, i64 e);

/// Affine points with x^e or y^e in {0,1} number at most (e+1)^2.
bool near_units_bound_check(i64 p, i64 e);

}  // namespace galmod
