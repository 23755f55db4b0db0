#include "galmod/semigroup.hpp"

#include <algorithm>
#include <numeric>

#include "galmod/errors.hpp"

namespace galmod {

NumericalSemigroup::NumericalSemigroup(std::vector<i64> gens) : gens_(std::move(gens)) {
    if (gens_.empty()) throw error("NumericalSemigroup: empty generator set");
    for (i64 g : gens_)
        if (g <= 0) throw error("NumericalSemigroup: generators must be positive");
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    i64 g = 0;
    for (i64 a : gens_) g = std::gcd(g, a);
    if (g != 1) throw not_cofinite("NumericalSemigroup: gcd of generators is " + std::to_string(g));

    // Sieve up to the postage bound of a coprime generator pair when one
    // exists; otherwise grow the bound until a run of min-generator
    // consecutive members is found, after which membership is
    // unconditional.
    i64 bound = (gens_[0] - 1) * (gens_.back() - 1);
    for (std::size_t i = 0; i < gens_.size(); ++i)
        for (std::size_t j = i + 1; j < gens_.size(); ++j)
            if (std::gcd(gens_[i], gens_[j]) == 1)
                bound = std::min(bound, (gens_[i] - 1) * (gens_[j] - 1));
    bound = std::max(bound, gens_.back() + 1);

    for (;;) {
        sieve_bound_ = bound + gens_[0];
        member_.assign(sieve_bound_ + 1, false);
        member_[0] = true;
        for (i64 m = 1; m <= sieve_bound_; ++m)
            for (i64 a : gens_) {
                if (a > m) break;
                if (member_[m - a]) { member_[m] = true; break; }
            }
        bool run = true;
        for (i64 m = sieve_bound_ - gens_[0] + 1; m <= sieve_bound_; ++m)
            if (!member_[m]) { run = false; break; }
        if (run) break;
        bound *= 2;
    }
    frobenius_ = -1;
    for (i64 m = 1; m <= sieve_bound_; ++m)
        if (!member_[m]) {
            gaps_.insert(m);
            frobenius_ = m;
        }
}

bool NumericalSemigroup::contains(i64 m) const {
    if (m < 0) return false;
    if (m > sieve_bound_) return true;
    return member_[m];
}

bool check_postage(i64 a, i64 b, i64 bound) {
    if (a < 2 || b < 2 || std::gcd(a, b) != 1)
        throw hypothesis_not_met("postage lemma: need coprime a,b >= 2");
    NumericalSemigroup s({a, b});
    for (i64 m = (a - 1) * (b - 1); m <= bound; ++m)
        if (!s.contains(m)) return false;
    return !s.contains(a * b - a - b);  // sharpness
}

std::set<i64> admissible_odd_nongaps(i64 p, i64 r_max) {
    if (p < 3 || p % 2 == 0) throw error("admissible_odd_nongaps: odd p >= 3 required");
    std::set<i64> out;
    for (i64 r = 2; r <= r_max; ++r) {
        i64 c = r % p;
        if (c == 0 || c == 1 || c == p - 1) continue;
        out.insert(2 * r - 1);
    }
    return out;
}

GenusBoundReport genus_bound_pipeline(i64 p) {
    if (p < 5 || !is_prime(p)) throw error("genus_bound_pipeline: prime p >= 5 required");
    GenusBoundReport rep;
    rep.nongap_generators = admissible_odd_nongaps(p, p);  // residues repeat with period p
    NumericalSemigroup s(std::vector<i64>(rep.nongap_generators.begin(),
                                          rep.nongap_generators.end()));
    rep.gap_superset = s.gaps();
    i64 g = s.genus();
    while (g >= 2) {
        // the point is a Weierstrass point iff some nongap lies in [1, g]
        bool weierstrass = false;
        for (i64 m = 1; m <= g; ++m)
            if (s.contains(m)) { weierstrass = true; break; }
        if (weierstrass && p - 1 > g * g * g - g) {
            rep.excluded.push_back("genus " + std::to_string(g) + ": orbit size " +
                                   std::to_string(p - 1) + " exceeds Weierstrass point bound " +
                                   std::to_string(g * g * g - g));
            --g;
        } else {
            break;
        }
    }
    rep.bound = g;
    return rep;
}

}  // namespace galmod
