#pragma once

#include <set>
#include <string>
#include <vector>

#include "galmod/ints.hpp"

namespace galmod {

/// A cofinite submonoid of the nonnegative integers given by generators
/// with gcd 1; gaps are sieved up to an unconditional membership bound.
class NumericalSemigroup {
public:
    explicit NumericalSemigroup(std::vector<i64> gens);

    const std::vector<i64>& generators() const { return gens_; }
    const std::set<i64>& gaps() const { return gaps_; }
    i64 frobenius() const { return frobenius_; }  // -1 for the full monoid
    i64 genus() const { return static_cast<i64>(gaps_.size()); }
    bool contains(i64 m) const;

private:
    std::vector<i64> gens_;
    std::set<i64> gaps_;
    i64 frobenius_;
    i64 sieve_bound_;
    std::vector<bool> member_;  // up to sieve_bound_
};

/// Postage stamp lemma oracle: every m in [(a-1)(b-1), bound] is in
/// <a,b>, and ab-a-b is not (sharpness).
bool check_postage(i64 a, i64 b, i64 bound);

/// {2r-1 : 2 <= r <= r_max, r mod p not in {0, 1, p-1}}.
std::set<i64> admissible_odd_nongaps(i64 p, i64 r_max);

struct GenusBoundReport {
    i64 bound;
    std::set<i64> nongap_generators;
    std::set<i64> gap_superset;
    std::vector<std::string> excluded;  // one line per excluded genus
};

/// Genus bound for a ramified torsion point when the residue
/// characteristic is p (p >= 5): builds the semigroup generated by the
/// admissible odd nongaps, bounds the gap count, then removes genera g
/// where the point is forced to be a Weierstrass point while the orbit
/// has more than g^3 - g elements.
GenusBoundReport genus_bound_pipeline(i64 p);

}  // namespace galmod
