#include "galmod/subgroup.hpp"

#include <deque>
#include <unordered_set>

#include "galmod/errors.hpp"

namespace galmod {

Subgroup Subgroup::from_lattice_rows(const FinAbGroup& parent, Mat rows) {
    const auto& d = parent.factors();
    for (std::size_t i = 0; i < d.size(); ++i) {
        Vec rel(d.size(), 0);
        rel[i] = d[i];
        rows.push_back(std::move(rel));
    }
    return Subgroup(parent, hnf(std::move(rows)));
}

Subgroup Subgroup::generated(const FinAbGroup& parent,
                             const std::vector<ModuleElement>& gens) {
    Mat rows;
    for (const auto& g : gens) {
        require_same_parent(parent, g.parent(), "subgroup_generated");
        rows.push_back(g.coords());
    }
    return from_lattice_rows(parent, std::move(rows));
}

Subgroup Subgroup::trivial(const FinAbGroup& parent) {
    return from_lattice_rows(parent, {});
}

Subgroup Subgroup::whole(const FinAbGroup& parent) {
    return Subgroup(parent, identity_mat(parent.rank()));
}

i64 Subgroup::order() const {
    return parent_.order() / hnf_det(basis_);
}

bool Subgroup::contains(const ModuleElement& x) const {
    require_same_parent(parent_, x.parent(), "subgroup contains");
    return hnf_contains(basis_, x.coords());
}

std::vector<ModuleElement> Subgroup::canonical_basis() const {
    std::vector<ModuleElement> out;
    for (const auto& row : basis_) {
        ModuleElement e = parent_.element(row);
        if (!e.is_zero()) out.push_back(std::move(e));
    }
    return out;
}

std::vector<i64> Subgroup::invariant_factors() const {
    const auto& d = parent_.factors();
    Mat c;
    for (std::size_t i = 0; i < d.size(); ++i) {
        Vec rel(d.size(), 0);
        rel[i] = d[i];
        auto coeff = hnf_solve(basis_, std::move(rel));
        if (!coeff) throw error("subgroup lattice is missing a relation vector");
        c.push_back(std::move(*coeff));
    }
    Vec diag = snf_diagonal(std::move(c));
    std::vector<i64> inv;
    for (i64 v : diag)
        if (v >= 2) inv.push_back(v);
    return inv;
}

std::vector<ModuleElement> Subgroup::elements() const {
    if (order() > global_order_cap()) throw cap_exceeded("subgroup element enumeration");
    std::vector<ModuleElement> out;
    std::unordered_set<i64> seen;
    std::deque<ModuleElement> work;
    auto basis = canonical_basis();
    ModuleElement z = parent_.zero();
    seen.insert(parent_.index_of(z));
    work.push_back(z);
    out.push_back(z);
    while (!work.empty()) {
        ModuleElement cur = work.front();
        work.pop_front();
        for (const auto& b : basis) {
            ModuleElement nxt = cur + b;
            if (seen.insert(parent_.index_of(nxt)).second) {
                out.push_back(nxt);
                work.push_back(nxt);
            }
        }
    }
    return out;
}

Subgroup Subgroup::sum(const Subgroup& o) const {
    require_same_parent(parent_, o.parent_, "subgroup sum");
    Mat rows = basis_;
    for (const auto& r : o.basis_) rows.push_back(r);
    return Subgroup(parent_, hnf(std::move(rows)));
}

Subgroup Subgroup::intersect(const Subgroup& o) const {
    require_same_parent(parent_, o.parent_, "subgroup intersect");
    Mat inter = lattice_intersection(basis_, o.basis_, parent_.rank());
    return Subgroup(parent_, std::move(inter));
}

QuotientMap::QuotientMap(const FinAbGroup& parent, const Subgroup& s)
    : parent_(parent) {
    require_same_parent(parent, s.parent(), "quotient");
    SnfRight r = snf_right(s.lattice());
    v_ = std::move(r.v);
    diag_ = std::move(r.diag);
    std::vector<i64> factors;
    for (std::size_t i = 0; i < diag_.size(); ++i)
        if (diag_[i] >= 2) {
            keep_.push_back(i);
            factors.push_back(diag_[i]);
        }
    quotient_ = FinAbGroup::make(std::move(factors));
}

ModuleElement QuotientMap::project(const ModuleElement& x) const {
    require_same_parent(parent_, x.parent(), "quotient projection");
    Vec c(keep_.size(), 0);
    for (std::size_t t = 0; t < keep_.size(); ++t) {
        std::size_t j = keep_[t];
        i128 s = 0;
        for (std::size_t i = 0; i < v_.size(); ++i)
            s += static_cast<i128>(x.coords()[i]) * v_[i][j];
        c[t] = mod_reduce(static_cast<i64>(s % diag_[j]), diag_[j]);
    }
    return quotient_.element(std::move(c));
}

std::pair<Subgroup, Subgroup> primary_decompose(const FinAbGroup& m, i64 p) {
    if (!is_prime(p)) throw error("primary_decompose: p must be prime");
    const auto& d = m.factors();
    Mat prows, nrows;
    for (std::size_t i = 0; i < d.size(); ++i) {
        i64 pp = p_part(d[i], p);
        Vec pe(d.size(), 0), ne(d.size(), 0);
        pe[i] = d[i] / pp;  // generates the p-power part of factor i
        ne[i] = pp;         // generates the prime-to-p part
        prows.push_back(std::move(pe));
        nrows.push_back(std::move(ne));
    }
    return {Subgroup::from_lattice_rows(m, std::move(prows)),
            Subgroup::from_lattice_rows(m, std::move(nrows))};
}

}  // namespace galmod
