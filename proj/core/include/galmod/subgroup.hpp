#pragma once

#include <utility>

#include "galmod/group.hpp"

namespace galmod {

/// A subgroup of a FinAbGroup, stored canonically as the HNF basis of
/// its preimage lattice L in Z^k (the relation lattice D = diag(d_i) is
/// always contained in L, so L is full rank and equality of subgroups is
/// equality of bases).
class Subgroup {
public:
    static Subgroup generated(const FinAbGroup& parent,
                              const std::vector<ModuleElement>& gens);
    static Subgroup trivial(const FinAbGroup& parent);
    static Subgroup whole(const FinAbGroup& parent);
    static Subgroup from_lattice_rows(const FinAbGroup& parent, Mat rows);

    const FinAbGroup& parent() const { return parent_; }
    const Mat& lattice() const { return basis_; }

    i64 order() const;
    bool contains(const ModuleElement& x) const;
    bool is_trivial() const { return order() == 1; }

    /// Nonzero canonical basis elements (HNF rows reduced into M).
    std::vector<ModuleElement> canonical_basis() const;

    /// Invariant factors of the subgroup as an abstract group.
    std::vector<i64> invariant_factors() const;

    /// All elements (exhaustive; requires order within the global cap).
    std::vector<ModuleElement> elements() const;

    Subgroup sum(const Subgroup& o) const;
    Subgroup intersect(const Subgroup& o) const;

    bool operator==(const Subgroup& o) const {
        return parent_ == o.parent_ && basis_ == o.basis_;
    }

private:
    Subgroup(FinAbGroup parent, Mat basis)
        : parent_(std::move(parent)), basis_(std::move(basis)) {}
    FinAbGroup parent_;
    Mat basis_;  // k x k HNF, D subset of row span
};

/// The quotient M/S together with its projection map.
class QuotientMap {
public:
    QuotientMap(const FinAbGroup& parent, const Subgroup& s);
    const FinAbGroup& quotient() const { return quotient_; }
    ModuleElement project(const ModuleElement& x) const;

private:
    FinAbGroup parent_;
    FinAbGroup quotient_;
    Mat v_;            // SNF right transform of the subgroup lattice
    Vec diag_;         // full SNF diagonal (including 1s)
    std::vector<std::size_t> keep_;  // diagonal positions with d >= 2
};

/// M = M_p + M_nonp: the p-power part and the prime-to-p part.
std::pair<Subgroup, Subgroup> primary_decompose(const FinAbGroup& m, i64 p);

}  // namespace galmod
