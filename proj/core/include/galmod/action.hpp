#pragma once

#include <cstddef>

#include "galmod/subgroup.hpp"

namespace galmod {

/// A finite group of invertible endomorphisms of a FinAbGroup, stored by
/// full element enumeration in deterministic breadth-first order from the
/// identity (generators in input order).
class ActionGroup {
public:
    static constexpr std::size_t kDefaultClosureCap = 10000;

    static ActionGroup close_generators(const FinAbGroup& m,
                                        const std::vector<Endomorphism>& gens,
                                        std::size_t cap = kDefaultClosureCap);
    /// The full unit group (Z/n)^* acting on Z/n by multiplication.
    static ActionGroup unit_multiplication(const FinAbGroup& cyclic);
    static ActionGroup trivial(const FinAbGroup& m);

    const FinAbGroup& module() const { return module_; }
    const std::vector<Endomorphism>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    const Endomorphism& operator[](std::size_t i) const { return elements_[i]; }
    std::size_t identity_index() const { return 0; }
    const std::vector<std::size_t>& generator_indices() const { return generator_indices_; }

    /// Index of the product elements[i] * elements[j].
    std::size_t product_index(std::size_t i, std::size_t j) const;
    std::size_t inverse_index(std::size_t i) const;
    std::size_t index_of(const Endomorphism& e) const;  // throws if absent

private:
    ActionGroup(FinAbGroup m) : module_(std::move(m)) {}
    FinAbGroup module_;
    std::vector<Endomorphism> elements_;
    std::vector<std::size_t> generator_indices_;
};

std::vector<ModuleElement> orbit(const ActionGroup& g, const ModuleElement& p);
std::vector<std::size_t> stabilizer(const ActionGroup& g, const ModuleElement& p);

/// The smallest subgroup of the module containing the orbit of p and
/// stable under every element of g.
Subgroup module_generated(const ActionGroup& g, const ModuleElement& p);

/// {x in M : gx = x for all g}, computed as the kernel of the stacked
/// (g - 1) congruence system.
Subgroup fixed_subgroup(const FinAbGroup& m, const ActionGroup& g);

/// True when every element of g maps the subgroup into itself.
bool is_stable(const ActionGroup& g, const Subgroup& s);

}  // namespace galmod
