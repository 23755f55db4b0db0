#pragma once

#include <optional>
#include <set>

#include "galmod/action.hpp"

namespace galmod {

/// Witness for a failed almost-fixed check: the first pair (g,h), in
/// BFS enumeration order, with (g+h-2)x = 0 but gx != x.
struct ViolatingPair {
    std::size_t g;
    std::size_t h;
};

struct AlmostFixedResult {
    bool holds;
    std::optional<ViolatingPair> witness;  // set iff !holds
    explicit operator bool() const { return holds; }
};

/// Element-level check: every pair (g,h) with (g+h-2)P = 0 must satisfy
/// (g-1)P = (h-1)P = 0.
AlmostFixedResult is_almost_fixed_element(const ActionGroup& g, const ModuleElement& p);

/// Module-level check via the matrix identity g+h-2 == 0.
AlmostFixedResult is_almost_fixed_module(const ActionGroup& g);

/// Module-level check restricted to a stable submodule.
AlmostFixedResult is_almost_fixed_submodule(const ActionGroup& g, const Subgroup& n);

/// Oracle: every conjugate sP of an almost fixed P is almost fixed.
bool check_conjugate_lemma(const ActionGroup& g, const ModuleElement& p);

/// Oracle: (g-1)^2 P = 0 implies (g-1)P = 0 for almost fixed P.
bool check_square_lemma(const ActionGroup& g, const ModuleElement& p);

/// Oracle: the module generated by almost fixed elements is almost fixed.
bool check_generators_lemma(const ActionGroup& g, const std::vector<ModuleElement>& gens);

/// All m <= m_max such that 1 in Z/m is almost fixed under the full unit
/// multiplication action.  Bounded verification of the mu_6 computation.
std::set<i64> almost_rational_roots_of_unity(i64 m_max);

}  // namespace galmod
