#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "galmod/errors.hpp"

namespace galmod {

using i64 = long long;
using i128 = __int128;

inline i64 mod_reduce(i64 a, i64 m) {
    if (m <= 1) return 0;
    a %= m;
    return a < 0 ? a + m : a;
}

inline i64 mul_mod(i64 a, i64 b, i64 m) {
    if (m <= 1) return 0;
    return static_cast<i64>(static_cast<i128>(mod_reduce(a, m)) * mod_reduce(b, m) % m);
}

inline i64 pow_mod(i64 base, i64 exp, i64 m) {
    if (m <= 1) return 0;
    i64 r = 1 % m;
    base = mod_reduce(base, m);
    while (exp > 0) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

/// Extended gcd: returns g = gcd(a,b) and x,y with a*x + b*y = g.
inline i64 ext_gcd(i64 a, i64 b, i64& x, i64& y) {
    if (b == 0) {
        x = (a >= 0) ? 1 : -1;
        y = 0;
        return a >= 0 ? a : -a;
    }
    i64 x1, y1;
    i64 g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

/// Inverse of a mod m; throws if gcd(a,m) != 1.
inline i64 inv_mod(i64 a, i64 m) {
    if (m == 1) return 0;
    i64 x, y;
    i64 g = ext_gcd(mod_reduce(a, m), m, x, y);
    if (g != 1) throw error("inv_mod: element not invertible");
    return mod_reduce(x, m);
}

inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Largest power of p dividing n.
inline i64 p_part(i64 n, i64 p) {
    i64 q = 1;
    while (n % p == 0) {
        n /= p;
        q *= p;
    }
    return q;
}

inline i64 checked_mul(i64 a, i64 b) {
    i128 r = static_cast<i128>(a) * b;
    if (r > INT64_MAX || r < INT64_MIN) throw error("integer overflow");
    return static_cast<i64>(r);
}

inline std::vector<i64> units_mod(i64 m) {
    std::vector<i64> u;
    for (i64 a = 0; a < m; ++a)
        if (std::gcd(a, m) == 1) u.push_back(a);
    if (m == 1) u.push_back(0);  // trivial ring, single unit
    return u;
}

/// Smallest primitive root mod p^k (p odd prime, k >= 1).
inline i64 primitive_root(i64 pk, i64 p) {
    i64 phi = pk / p * (p - 1);
    std::vector<i64> prime_divs;
    i64 n = phi;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            prime_divs.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) prime_divs.push_back(n);
    for (i64 g = 2; g < pk; ++g) {
        if (std::gcd(g, pk) != 1) continue;
        bool ok = true;
        for (i64 q : prime_divs)
            if (pow_mod(g, phi / q, pk) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw error("primitive_root: none found");
}

/// Multiplicative order of a mod m (gcd(a,m)=1).
inline i64 mult_order(i64 a, i64 m) {
    if (m == 1) return 1;
    i64 v = mod_reduce(a, m), x = v, ord = 1;
    while (x != 1) {
        x = mul_mod(x, v, m);
        ++ord;
        if (ord > m) throw error("mult_order: not a unit");
    }
    return ord;
}

}  // namespace galmod
