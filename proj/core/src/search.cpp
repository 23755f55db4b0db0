#include "galmod/search.hpp"

#include <numeric>

#include "galmod/errors.hpp"

namespace galmod {

bool UnitSolution::validate() const {
    if (std::gcd(x, modulus) != 1 || std::gcd(y, modulus) != 1) return false;
    i64 px = pow_mod(x, exponent, modulus);
    i64 py = pow_mod(y, exponent, modulus);
    if (px != xe || py != ye) return false;
    if (px == 1 % modulus || py == 1 % modulus) return false;
    return mod_reduce(px + py - 2, modulus) == 0;
}

std::optional<UnitSolution> find_unit_solution(i64 m, i64 e) {
    if (m < 2 || e < 1) throw error("find_unit_solution: need m >= 2, e >= 1");
    for (i64 x = 1; x < m; ++x) {
        if (std::gcd(x, m) != 1) continue;
        i64 px = pow_mod(x, e, m);
        if (px == 1) continue;
        i64 want = mod_reduce(2 - px, m);
        for (i64 y = 1; y < m; ++y) {
            if (std::gcd(y, m) != 1) continue;
            i64 py = pow_mod(y, e, m);
            if (py == 1 || py != want) continue;
            UnitSolution s{m, e, x, y, px, py};
            if (!s.validate()) throw error("find_unit_solution: certificate failed");
            return s;
        }
    }
    return std::nullopt;
}

EmpiricalC empirical_c(i64 e, i64 m_max) {
    if (e < 1 || m_max < 10) throw error("empirical_c: need e >= 1, m_max >= 10");
    EmpiricalC out{e, m_max, {}, 0};
    for (i64 m = 2; m <= m_max; ++m) {
        // existence only: collect the set of e-th powers of units
        std::vector<char> is_unit_power(m, 0);
        for (i64 x = 1; x < m; ++x) {
            if (std::gcd(x, m) != 1) continue;
            is_unit_power[pow_mod(x, e, m)] = 1;
        }
        bool found = false;
        for (i64 a = 0; a < m && !found; ++a) {
            if (!is_unit_power[a] || a == 1) continue;
            i64 b = mod_reduce(2 - a, m);
            if (b != 1 && is_unit_power[b]) found = true;
        }
        if (!found) {
            out.exceptions.push_back(m);
            out.largest_exception = m;
        }
    }
    return out;
}

std::optional<UnitSolution> hensel_witness(i64 p, int k, i64 e) {
    if (!is_prime(p) || k < 2 || e < 1) throw error("hensel_witness: need prime p, k >= 2, e >= 1");
    if (p <= e) return std::nullopt;
    i64 pk = 1;
    for (int i = 0; i < k; ++i) pk = checked_mul(pk, p);
    i64 pk1 = pk / p;  // p^(k-1)

    // Newton-lift a root of f(x) = x^e - t from x == 1 (mod p); f'(1) = e
    // is a unit since p > e.
    auto lift_root = [&](i64 t) {
        i64 x = 1;
        i64 mod = p;
        while (mod < pk) {
            mod = checked_mul(mod, p);
            i64 m = std::min(mod, pk);
            i64 fx = mod_reduce(pow_mod(x, e, m) - t, m);
            i64 dfx = mul_mod(e, pow_mod(x, e - 1, m), m);
            x = mod_reduce(x - mul_mod(fx, inv_mod(dfx, m), m), m);
            mod = m;
            if (mod == pk) break;
        }
        if (pow_mod(x, e, pk) != mod_reduce(t, pk))
            throw error("hensel_witness: lift failed");
        return x;
    };

    i64 x = lift_root(mod_reduce(1 + pk1, pk));
    i64 y = lift_root(mod_reduce(1 - pk1, pk));
    UnitSolution s{pk, e, x, y, pow_mod(x, e, pk), pow_mod(y, e, pk)};
    if (!s.validate()) throw error("hensel_witness: certificate failed");
    return s;
}

PointCount count_curve_points(i64 p, i64 e) {
    if (!is_prime(p) || e < 1) throw error("count_curve_points: need prime p, e >= 1");
    if ((2 * e) % p == 0) throw error("count_curve_points: singular case p | 2e");
    if (p > 100000 || e > 10) throw cap_exceeded("count_curve_points: p <= 1e5, e <= 10");
    std::vector<i64> pow_count(p, 0);  // pow_count[v] = #{x in F_p : x^e = v}
    for (i64 x = 0; x < p; ++x) ++pow_count[pow_mod(x, e, p)];
    i64 affine = 0;
    for (i64 v = 0; v < p; ++v) {
        i64 w = mod_reduce(2 - v, p);
        affine += pow_count[v] * pow_count[w];
    }
    // points at infinity: x^e + y^e = 0 with y = 1 (x:1:0), plus none at (1:0:0)
    i64 inf = 0;
    for (i64 x = 0; x < p; ++x)
        if (mod_reduce(pow_mod(x, e, p) + 1, p) == 0) ++inf;
    i64 n = affine + inf;
    i64 slack = n > p + 1 ? n - (p + 1) : (p + 1) - n;
    i128 lhs = static_cast<i128>(slack) * slack;
    i128 rhs = static_cast<i128>((e - 1) * (e - 1)) * ((e - 2) * (e - 2)) * p;
    return PointCount{p, e, n, slack, lhs <= rhs};
}

bool near_units_bound_check(i64 p, i64 e) {
    if (!is_prime(p) || e < 1) throw error("near_units_bound_check: need prime p, e >= 1");
    if ((2 * e) % p == 0) throw error("near_units_bound_check: singular case p | 2e");
    i64 count = 0;
    for (i64 x = 0; x < p; ++x) {
        i64 px = pow_mod(x, e, p);
        for (i64 y = 0; y < p; ++y) {
            i64 py = pow_mod(y, e, p);
            if (mod_reduce(px + py - 2, p) != 0) continue;
            if (px == 0 || px == 1 || py == 0 || py == 1) ++count;
        }
    }
    return count <= (e + 1) * (e + 1);
}

}  // namespace galmod
