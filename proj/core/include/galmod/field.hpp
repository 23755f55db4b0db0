#pragma once

#include <vector>

#include "galmod/ints.hpp"

namespace galmod {

/// F_{p^n} as F_p[t] modulo the lexicographically smallest monic
/// irreducible polynomial of degree n, found by exhaustive factor testing.
class FiniteField {
public:
    FiniteField(i64 p, int n);

    i64 p() const { return p_; }
    int degree() const { return n_; }
    i64 size() const { return q_; }

    using Elt = std::vector<i64>;  // coefficients, length n

    Elt from_index(i64 idx) const;
    i64 index(const Elt& a) const;
    Elt zero() const { return Elt(n_, 0); }
    Elt one() const;
    Elt add(const Elt& a, const Elt& b) const;
    Elt mul(const Elt& a, const Elt& b) const;
    Elt pow(Elt a, i64 e) const;
    bool is_zero(const Elt& a) const;

    /// Norm down to F_p: x^((q-1)/(p-1)) for nonzero x.
    i64 norm(const Elt& a) const;

    const std::vector<i64>& modulus() const { return irred_; }

private:
    i64 p_;
    int n_;
    i64 q_;
    std::vector<i64> irred_;  // monic, length n_+1
};

/// For every nonzero x in F_{p^n}: x is a square iff its norm to F_p is
/// a square.  Exhaustive check; p odd, p^n within desk scale.
bool square_norm_criterion(i64 p, int n);

}  // namespace galmod
