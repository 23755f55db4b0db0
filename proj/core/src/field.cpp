#include "galmod/field.hpp"

#include <set>

#include "galmod/errors.hpp"

namespace galmod {

namespace {

// Multiplies two F_p[t] polynomials and reduces mod the monic irred.
std::vector<i64> polymul_mod(const std::vector<i64>& a, const std::vector<i64>& b,
                             const std::vector<i64>& irred, i64 p) {
    const int n = static_cast<int>(irred.size()) - 1;
    std::vector<i64> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    for (int d = static_cast<int>(prod.size()) - 1; d >= n; --d) {
        i64 c = prod[d];
        if (c == 0) continue;
        for (int k = 0; k <= n; ++k)
            prod[d - n + k] = mod_reduce(prod[d - n + k] - c * irred[k], p);
    }
    prod.resize(n, 0);
    return prod;
}

// Degree-d polynomial from a mixed-radix index, coefficients low to high.
std::vector<i64> poly_from_index(i64 idx, int len, i64 p) {
    std::vector<i64> c(len);
    for (int i = 0; i < len; ++i) {
        c[i] = idx % p;
        idx /= p;
    }
    return c;
}

bool has_factor_of_degree(const std::vector<i64>& f, int d, i64 p) {
    // trial division by all monic polynomials of degree d
    i64 count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (i64 idx = 0; idx < count; ++idx) {
        std::vector<i64> g = poly_from_index(idx, d, p);
        g.push_back(1);  // monic
        // remainder of f mod g
        std::vector<i64> r = f;
        for (int t = static_cast<int>(r.size()) - 1; t >= d; --t) {
            i64 c = r[t];
            if (c == 0) continue;
            for (int k = 0; k <= d; ++k)
                r[t - d + k] = mod_reduce(r[t - d + k] - c * g[k], p);
        }
        bool zero = true;
        for (int k = 0; k < d; ++k)
            if (r[k] != 0) { zero = false; break; }
        if (zero) return true;
    }
    return false;
}

std::vector<i64> find_irreducible(i64 p, int n) {
    if (n == 1) return {0, 1};  // t itself
    i64 count = 1;
    for (int i = 0; i < n; ++i) count *= p;
    for (i64 idx = 0; idx < count; ++idx) {
        std::vector<i64> f = poly_from_index(idx, n, p);
        f.push_back(1);
        bool irred = true;
        for (int d = 1; irred && 2 * d <= n; ++d)
            if (has_factor_of_degree(f, d, p)) irred = false;
        if (irred) return f;
    }
    throw error("find_irreducible: none found");
}

}  // namespace

FiniteField::FiniteField(i64 p, int n) : p_(p), n_(n) {
    if (!is_prime(p)) throw error("FiniteField: p must be prime");
    if (n < 1) throw error("FiniteField: degree must be >= 1");
    q_ = 1;
    for (int i = 0; i < n; ++i) q_ = checked_mul(q_, p);
    irred_ = find_irreducible(p, n);
}

FiniteField::Elt FiniteField::from_index(i64 idx) const {
    return poly_from_index(idx, n_, p_);
}

i64 FiniteField::index(const Elt& a) const {
    i64 idx = 0, mul = 1;
    for (int i = 0; i < n_; ++i) {
        idx += a[i] * mul;
        mul *= p_;
    }
    return idx;
}

FiniteField::Elt FiniteField::one() const {
    Elt e(n_, 0);
    e[0] = 1;
    return e;
}

FiniteField::Elt FiniteField::add(const Elt& a, const Elt& b) const {
    Elt c(n_);
    for (int i = 0; i < n_; ++i) c[i] = mod_reduce(a[i] + b[i], p_);
    return c;
}

FiniteField::Elt FiniteField::mul(const Elt& a, const Elt& b) const {
    return polymul_mod(a, b, irred_, p_);
}

FiniteField::Elt FiniteField::pow(Elt a, i64 e) const {
    Elt r = one();
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

bool FiniteField::is_zero(const Elt& a) const {
    for (i64 c : a)
        if (c != 0) return false;
    return true;
}

i64 FiniteField::norm(const Elt& a) const {
    Elt n = pow(a, (q_ - 1) / (p_ - 1));
    for (int i = 1; i < n_; ++i)
        if (n[i] != 0) throw error("norm did not land in the prime field");
    return n[0];
}

bool square_norm_criterion(i64 p, int n) {
    if (p == 2) throw odd_prime_required("square_norm_criterion: p must be odd");
    FiniteField f(p, n);
    std::set<i64> squares;  // indices of nonzero squares in F_{p^n}
    for (i64 i = 1; i < f.size(); ++i) {
        auto x = f.from_index(i);
        squares.insert(f.index(f.mul(x, x)));
    }
    std::set<i64> base_squares;  // squares in F_p^*
    for (i64 a = 1; a < p; ++a) base_squares.insert(a * a % p);
    for (i64 i = 1; i < f.size(); ++i) {
        auto x = f.from_index(i);
        bool sq = squares.count(i) > 0;
        bool norm_sq = base_squares.count(f.norm(x)) > 0;
        if (sq != norm_sq) return false;
    }
    return true;
}

}  // namespace galmod
