#pragma once

#include "galmod/action.hpp"

namespace galmod {

/// First group cohomology of a finite group of module automorphisms,
/// computed integrally: cocycles are tuples (f(g))_g in Z^(|G| k) cut out
/// by f(gh) = f(g) + g f(h), coboundaries by f(g) = (g-1)m.  Lattices
/// always contain the coordinate relation lattice, so group orders are
/// determinant ratios.
class CocycleSpace {
public:
    static constexpr std::size_t kGroupCap = 64;
    static constexpr i64 kModuleCap = 10000;

    explicit CocycleSpace(const ActionGroup& g);

    const ActionGroup& group() const { return group_; }
    i64 z1_order() const { return z1_order_; }
    i64 b1_order() const { return b1_order_; }
    i64 h1_order() const { return h1_order_; }
    /// Invariant factors (>= 2) of Z1/B1.
    const std::vector<i64>& h1_invariants() const { return h1_invariants_; }

    /// A cocycle is a map G -> M; internally a flat vector with k
    /// coordinates per group element, identity block first.
    bool is_cocycle(const std::vector<ModuleElement>& f) const;
    bool is_coboundary(const std::vector<ModuleElement>& f) const;

    /// Cocycles corresponding to the lattice basis rows.
    std::vector<std::vector<ModuleElement>> z1_basis() const;

private:
    std::vector<ModuleElement> unflatten(const Vec& flat) const;
    Vec flatten(const std::vector<ModuleElement>& f) const;

    ActionGroup group_;
    Mat z1_lattice_;
    Mat b1_lattice_;
    i64 z1_order_;
    i64 b1_order_;
    i64 h1_order_;
    std::vector<i64> h1_invariants_;
};

/// Central element oracle: for central g the cocycle s -> (g-1) f(s) is a
/// coboundary for every cocycle f; when additionally g-1 is invertible,
/// H1 vanishes.  Throws hypothesis_not_met when g is not central.
bool verify_sah(const CocycleSpace& c, std::size_t g);

/// Independent H1 computation for a cyclic group generated by element
/// `gen`: ker(1 + g + ... + g^(n-1)) / im(g - 1).  Returns the invariant
/// factors; throws hypothesis_not_met when gen does not generate.
std::vector<i64> h1_cyclic(const ActionGroup& g, std::size_t gen);

}  // namespace galmod
