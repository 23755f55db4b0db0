#pragma once

#include <optional>
#include <string>

#include "galmod/action.hpp"
#include "galmod/almost_fixed.hpp"

namespace galmod {

/// A finite model of tame inertia acting on a finite module: elements are
/// (endomorphism, chi-value) pairs closed under componentwise
/// composition, so that the cyclotomic character chi is a genuine
/// homomorphism into (Z/NZ)^* even when distinct inertia elements act by
/// the same matrix.  N is a power of p at least the exponent of M_p; the
/// prime-to-p cyclotomic component of inertia is trivial (the base field
/// is unramified), so "acts via chi" means multiplication by chi on the
/// p-part and the identity on the prime-to-p part.
class CyclotomicContext {
public:
    static constexpr std::size_t kDefaultCap = 10000;

    struct Element {
        Endomorphism mat;
        i64 chi;  // unit mod N
    };

    static CyclotomicContext close(i64 p, i64 chi_modulus, const FinAbGroup& m,
                                   const std::vector<std::pair<Mat, i64>>& gens,
                                   std::size_t cap = kDefaultCap);

    i64 p() const { return p_; }
    i64 chi_modulus() const { return n_; }
    const FinAbGroup& module() const { return module_; }
    std::size_t size() const { return elements_.size(); }
    const Element& operator[](std::size_t i) const { return elements_[i]; }
    const Endomorphism& mat(std::size_t i) const { return elements_[i].mat; }
    i64 chi(std::size_t i) const { return elements_[i].chi; }
    std::size_t identity_index() const { return 0; }
    std::size_t inverse_index(std::size_t i) const;

    /// chi mod p is surjective onto (Z/pZ)^*.
    bool full() const;

    /// The chi values cover every unit mod q.  Theorems whose proofs
    /// solve chi(g) + chi(h) == 2 need this with q = |M_p| before a
    /// finite model can stand in for the full inertia group.
    bool chi_onto(i64 q) const;

    /// I(n) = {g : chi(g) == 1 mod p^n} (p^n capped at N).
    std::vector<std::size_t> level_kernel(i64 n) const;
    bool in_level_kernel(std::size_t i, i64 n) const;

    /// The scalar action "multiplication by chi(g)" on the module:
    /// chi on the p-part, identity on the prime-to-p part.
    ModuleElement chi_action(std::size_t i, const ModuleElement& x) const;

    /// {x : gx = x for all g} over the matrix action.
    Subgroup fixed_points() const;
    bool acts_trivially() const;

private:
    CyclotomicContext(i64 p, i64 n, FinAbGroup m)
        : p_(p), n_(n), module_(std::move(m)) {}
    i64 p_;
    i64 n_;
    FinAbGroup module_;
    std::vector<Element> elements_;
};

/// Declared filtration 0 -> M' -> M -> M'' -> 0 for the ordinary
/// semistable check.
struct SemistableWitness {
    Subgroup m_prime;
};

enum class SemistableViolation {
    none,
    not_stable,
    not_cyclotomic_on_sub,
    not_trivial_on_quotient,
    not_trivial_on_non_p,  // ordinary good only
};

struct SemistableCheck {
    SemistableViolation violation = SemistableViolation::none;
    std::size_t g = 0;  // index of a violating element
    bool ok() const { return violation == SemistableViolation::none; }
    std::string describe() const;
};

SemistableCheck check_ordinary_semistable(const CyclotomicContext& ctx,
                                          const SemistableWitness& w);
bool verify_ordinary_semistable(const CyclotomicContext& ctx, const SemistableWitness& w);

/// Searches G-stable subgroups in increasing order of size for a valid
/// filtration.
std::optional<SemistableWitness> find_semistable_filtration(const CyclotomicContext& ctx,
                                                            i64 cap = 10000);

SemistableCheck check_ordinary_good(const CyclotomicContext& ctx, const SemistableWitness& w);
bool is_ordinary_good(const CyclotomicContext& ctx, const SemistableWitness& w);

/// Module-level almost-fixed with respect to the inertia model.
AlmostFixedResult almost_unramified(const CyclotomicContext& ctx);

// ---- theorem oracles (throw hypothesis_not_met when the stated
// hypotheses fail on the instance) ----

/// Order prime to p + ordinary semistable + almost unramified => trivial.
bool oracle_triviallemma(const CyclotomicContext& ctx, const SemistableWitness& w);

/// chi(g)+chi(h) == 2 mod |M_p|  =>  (g+h-2) M_p = 0.
bool oracle_chiprop(const CyclotomicContext& ctx, const SemistableWitness& w,
                    std::size_t g, std::size_t h);

struct TameTheoremResult {
    bool part1;
    std::optional<bool> part2;  // nullopt = NotApplicable
};

TameTheoremResult oracle_tametheorem(const CyclotomicContext& ctx, const SemistableWitness& w);

/// p M'_p = 0 and M_p = M'_p (+) (M_p)^I.
bool oracle_splitting(const CyclotomicContext& ctx, const SemistableWitness& w);

/// chi(g) == -r mod p  =>  (g+r)(g + g^{-1} - 2) M = 0.
bool oracle_splittingcor(const CyclotomicContext& ctx, const SemistableWitness& w,
                         std::size_t g, i64 r);

/// For a cyclic module generated by p with nontrivial action, the
/// stabilizer of the generator is exactly I(1).
bool oracle_stabilizer(const CyclotomicContext& ctx, const SemistableWitness& w,
                       const ModuleElement& gen);

/// p-group acting on a module of order prime to p with (g-1)^2 = 0 acts
/// trivially.
bool oracle_pro_p(const ActionGroup& gp, i64 p);

/// 2(g-1)M = 0 and (g-1)^2 M = 0 for all g  =>  (g^2-1)M = 0.
bool oracle_exceptional_identity(const ActionGroup& g);

}  // namespace galmod
