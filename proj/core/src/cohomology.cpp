#include "galmod/cohomology.hpp"

#include <set>

#include "galmod/errors.hpp"

namespace galmod {

namespace {

struct QuotInfo {
    i64 order;
    std::vector<i64> invariants;
};

// Invariant factors and order of big/small for nested full-rank lattices
// small subset of big in Z^n.
QuotInfo lattice_quotient(const Mat& big, const Mat& small_lat) {
    // quotient order from the columnwise pivot ratios; for nested square
    // HNF bases the sub-lattice pivot is a multiple of the super-lattice
    // pivot in every column
    if (big.size() != small_lat.size()) throw error("lattice_quotient: rank mismatch");
    i64 m = 1;
    for (std::size_t i = 0; i < big.size(); ++i) {
        if (big[i][i] == 0 || small_lat[i][i] % big[i][i] != 0)
            throw error("lattice_quotient: lattices are not nested");
        m = checked_mul(m, small_lat[i][i] / big[i][i]);
    }
    if (m == 1) return {1, {}};
    Mat c;
    for (const auto& row : small_lat) {
        auto sol = hnf_solve(big, row);
        if (!sol) throw error("lattice_quotient: lattices are not nested");
        c.push_back(std::move(*sol));
    }
    // the coefficient lattice contains m Z^n, so the quotient invariants
    // come from the modular Smith form with bounded entries
    const std::size_t n = big.size();
    Vec diag = snf_diagonal_mod(std::move(c), m, n);
    QuotInfo out{m, {}};
    i64 prod = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (diag[i] == 0) throw error("lattice_quotient: quotient is infinite");
        prod = checked_mul(prod, diag[i]);
        if (diag[i] >= 2) out.invariants.push_back(diag[i]);
    }
    if (prod != m) throw error("lattice_quotient: inconsistent order");
    return out;
}

Mat diagonal_lattice(const Vec& mods) {
    Mat d(mods.size(), Vec(mods.size(), 0));
    for (std::size_t i = 0; i < mods.size(); ++i) d[i][i] = mods[i];
    return d;
}

}  // namespace

CocycleSpace::CocycleSpace(const ActionGroup& g) : group_(g) {
    if (group_.size() > kGroupCap)
        throw cap_exceeded("CocycleSpace: group size exceeds cap");
    if (group_.module().order() > kModuleCap)
        throw cap_exceeded("CocycleSpace: module order exceeds cap");
    const auto& d = group_.module().factors();
    std::size_t k = d.size();
    std::size_t ng = group_.size();
    std::size_t n = ng * k;
    if (n == 0) {
        z1_order_ = b1_order_ = h1_order_ = 1;
        return;
    }

    Vec coord_mod(n);
    for (std::size_t i = 0; i < ng; ++i)
        for (std::size_t r = 0; r < k; ++r) coord_mod[i * k + r] = d[r];

    // f(gh) - f(g) - g f(h) == 0, one row per (g, h, coordinate)
    Mat c;
    Vec row_mod;
    for (std::size_t i = 0; i < ng; ++i)
        for (std::size_t j = 0; j < ng; ++j) {
            std::size_t t = group_.product_index(i, j);
            const Mat& a = group_[i].matrix();
            for (std::size_t r = 0; r < k; ++r) {
                Vec row(n, 0);
                row[t * k + r] += 1;
                row[i * k + r] -= 1;
                for (std::size_t s = 0; s < k; ++s) row[j * k + s] -= a[r][s];
                c.push_back(std::move(row));
                row_mod.push_back(d[r]);
            }
        }
    z1_lattice_ = congruence_kernel(c, row_mod, coord_mod);

    Mat b = diagonal_lattice(coord_mod);
    for (std::size_t s = 0; s < k; ++s) {
        Vec row(n, 0);
        for (std::size_t i = 0; i < ng; ++i) {
            const Mat& a = group_[i].matrix();
            for (std::size_t r = 0; r < k; ++r)
                row[i * k + r] = a[r][s] - (r == s ? 1 : 0);
        }
        b.push_back(std::move(row));
    }
    b1_lattice_ = hnf(std::move(b));

    Mat rel = diagonal_lattice(coord_mod);
    z1_order_ = lattice_quotient(z1_lattice_, rel).order;
    b1_order_ = lattice_quotient(b1_lattice_, rel).order;
    QuotInfo q = lattice_quotient(z1_lattice_, b1_lattice_);
    h1_order_ = q.order;
    h1_invariants_ = std::move(q.invariants);
}

std::vector<ModuleElement> CocycleSpace::unflatten(const Vec& flat) const {
    std::size_t k = group_.module().rank();
    std::vector<ModuleElement> f;
    for (std::size_t i = 0; i < group_.size(); ++i) {
        Vec coords(flat.begin() + i * k, flat.begin() + (i + 1) * k);
        f.push_back(group_.module().element(std::move(coords)));
    }
    return f;
}

Vec CocycleSpace::flatten(const std::vector<ModuleElement>& f) const {
    if (f.size() != group_.size()) throw error("CocycleSpace: cocycle has wrong length");
    Vec flat;
    for (const auto& x : f) {
        require_same_parent(group_.module(), x.parent(), "CocycleSpace");
        flat.insert(flat.end(), x.coords().begin(), x.coords().end());
    }
    return flat;
}

bool CocycleSpace::is_cocycle(const std::vector<ModuleElement>& f) const {
    if (f.size() != group_.size()) throw error("CocycleSpace: cocycle has wrong length");
    for (std::size_t i = 0; i < group_.size(); ++i)
        for (std::size_t j = 0; j < group_.size(); ++j) {
            std::size_t t = group_.product_index(i, j);
            if (!(f[t] == f[i] + group_[i](f[j]))) return false;
        }
    return true;
}

bool CocycleSpace::is_coboundary(const std::vector<ModuleElement>& f) const {
    return hnf_contains(b1_lattice_, flatten(f));
}

std::vector<std::vector<ModuleElement>> CocycleSpace::z1_basis() const {
    std::vector<std::vector<ModuleElement>> out;
    for (const auto& row : z1_lattice_) out.push_back(unflatten(row));
    return out;
}

bool verify_sah(const CocycleSpace& c, std::size_t g) {
    const ActionGroup& gp = c.group();
    for (std::size_t j = 0; j < gp.size(); ++j)
        if (gp.product_index(g, j) != gp.product_index(j, g))
            throw hypothesis_not_met("sah: element " + std::to_string(g) + " is not central");
    Endomorphism d = gp[g] - Endomorphism::identity(gp.module());
    for (const auto& f : c.z1_basis()) {
        std::vector<ModuleElement> h;
        for (const auto& x : f) h.push_back(d(x));
        if (!c.is_cocycle(h)) throw error("sah: (g-1)f is not a cocycle");
        if (!c.is_coboundary(h)) return false;
    }
    if (d.is_invertible() && c.h1_order() != 1) return false;
    return true;
}

std::vector<i64> h1_cyclic(const ActionGroup& g, std::size_t gen) {
    std::set<std::size_t> powers;
    std::size_t cur = g.identity_index();
    do {
        powers.insert(cur);
        cur = g.product_index(cur, gen);
    } while (cur != g.identity_index());
    if (powers.size() != g.size())
        throw hypothesis_not_met("h1_cyclic: element does not generate the group");

    const FinAbGroup& m = g.module();
    Endomorphism norm = Endomorphism::zero(m);
    cur = g.identity_index();
    for (std::size_t i = 0; i < g.size(); ++i) {
        norm = norm + g[cur];
        cur = g.product_index(cur, gen);
    }
    const auto& d = m.factors();
    Vec mods(d.begin(), d.end());
    Subgroup ker = Subgroup::from_lattice_rows(m, congruence_kernel(norm.matrix(), mods, mods));

    Endomorphism dg = g[gen] - Endomorphism::identity(m);
    std::vector<ModuleElement> im_gens;
    for (std::size_t s = 0; s < d.size(); ++s) {
        Vec e(d.size(), 0);
        e[s] = 1;
        im_gens.push_back(dg(m.element(e)));
    }
    Subgroup im = Subgroup::generated(m, im_gens);
    QuotInfo q = lattice_quotient(ker.lattice(), im.lattice());
    return q.invariants;
}

}  // namespace galmod
