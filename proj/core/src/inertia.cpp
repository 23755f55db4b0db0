#include "galmod/inertia.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "galmod/errors.hpp"

namespace galmod {

namespace {

bool is_p_power(i64 n, i64 p) {
    if (n < 1) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

}  // namespace

CyclotomicContext CyclotomicContext::close(i64 p, i64 chi_modulus, const FinAbGroup& m,
                                           const std::vector<std::pair<Mat, i64>>& gens,
                                           std::size_t cap) {
    if (p == 2) throw odd_prime_required("CyclotomicContext: p = 2 is not supported");
    if (!is_prime(p)) throw error("CyclotomicContext: p must be an odd prime");
    if (!is_p_power(chi_modulus, p))
        throw error("CyclotomicContext: chi modulus must be a power of p");
    i64 mp_exp = p_part(m.exponent(), p);
    if (chi_modulus % mp_exp != 0)
        throw error("CyclotomicContext: chi modulus must be divisible by the exponent of M_p");

    CyclotomicContext ctx(p, chi_modulus, m);
    std::vector<Element> gen_elems;
    for (const auto& [a, c] : gens) {
        Endomorphism e = Endomorphism::make(m, a);
        if (!e.is_invertible())
            throw non_invertible_generator("CyclotomicContext: generator is not invertible");
        i64 cr = mod_reduce(c, chi_modulus);
        if (chi_modulus > 1 && std::gcd(cr, chi_modulus) != 1)
            throw error("CyclotomicContext: chi value is not a unit");
        gen_elems.push_back({std::move(e), cr});
    }

    std::map<std::pair<Mat, i64>, std::size_t> seen;
    auto key_of = [](const Element& e) { return std::make_pair(e.mat.matrix(), e.chi); };
    Element id{Endomorphism::identity(m), mod_reduce(1, chi_modulus)};
    ctx.elements_.push_back(id);
    seen[key_of(id)] = 0;
    for (const auto& g : gen_elems) {
        auto [it, fresh] = seen.try_emplace(key_of(g), ctx.elements_.size());
        if (fresh) ctx.elements_.push_back(g);
    }
    std::deque<std::size_t> work;
    for (std::size_t i = 1; i < ctx.elements_.size(); ++i) work.push_back(i);
    while (!work.empty()) {
        std::size_t cur = work.front();
        work.pop_front();
        for (const auto& g : gen_elems) {
            Element prod{ctx.elements_[cur].mat * g.mat,
                         mul_mod(ctx.elements_[cur].chi, g.chi, chi_modulus)};
            auto [it, fresh] = seen.try_emplace(key_of(prod), ctx.elements_.size());
            if (fresh) {
                if (ctx.elements_.size() >= cap)
                    throw cap_exceeded("CyclotomicContext: closure cap exceeded");
                ctx.elements_.push_back(std::move(prod));
                work.push_back(it->second);
            }
        }
    }
    return ctx;
}

std::size_t CyclotomicContext::inverse_index(std::size_t i) const {
    for (std::size_t j = 0; j < elements_.size(); ++j)
        if ((elements_[i].mat * elements_[j].mat).is_identity() &&
            mul_mod(elements_[i].chi, elements_[j].chi, n_) == mod_reduce(1, n_))
            return j;
    throw error("CyclotomicContext: no inverse found");
}

bool CyclotomicContext::full() const {
    if (n_ % p_ != 0) return false;  // chi is modeled as identically 1
    std::set<i64> residues;
    for (const auto& e : elements_) residues.insert(mod_reduce(e.chi, p_));
    return static_cast<i64>(residues.size()) == p_ - 1;
}

bool CyclotomicContext::chi_onto(i64 q) const {
    if (q <= 1) return true;
    if (n_ % q != 0) return false;
    std::set<i64> residues;
    for (const auto& e : elements_) residues.insert(mod_reduce(e.chi, q));
    i64 units = 0;
    for (i64 r = 1; r < q; ++r)
        if (std::gcd(r, q) == 1) ++units;
    // chi values are units, so counting residues suffices
    return static_cast<i64>(residues.size()) == units;
}

bool CyclotomicContext::in_level_kernel(std::size_t i, i64 n) const {
    i64 q = 1;
    for (i64 t = 0; t < n && q < n_; ++t) q = std::min(q * p_, n_);
    return mod_reduce(elements_[i].chi - 1, q) == 0;
}

std::vector<std::size_t> CyclotomicContext::level_kernel(i64 n) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (in_level_kernel(i, n)) out.push_back(i);
    return out;
}

ModuleElement CyclotomicContext::chi_action(std::size_t i, const ModuleElement& x) const {
    require_same_parent(module_, x.parent(), "chi_action");
    i64 e = module_.exponent();
    i64 pk = p_part(e, p_);
    if (pk == 1) return x;
    i64 en = e / pk;
    // alpha == 1 mod p^k, == 0 mod the prime-to-p part of the exponent
    i64 alpha = mul_mod(en, inv_mod(en, pk), e);
    i64 c = mod_reduce(elements_[i].chi, pk);
    i64 s = mod_reduce(1 + mul_mod(c - 1, alpha, e), e);
    return scale(s, x);
}

Subgroup CyclotomicContext::fixed_points() const {
    const auto& d = module_.factors();
    Mat c;
    Vec row_mod;
    std::set<Mat> done;
    for (const auto& e : elements_) {
        if (e.mat.is_identity() || !done.insert(e.mat.matrix()).second) continue;
        for (std::size_t i = 0; i < d.size(); ++i) {
            Vec row = e.mat.matrix()[i];
            row[i] -= 1;
            c.push_back(std::move(row));
            row_mod.push_back(d[i]);
        }
    }
    Vec coord_mod(d.begin(), d.end());
    return Subgroup::from_lattice_rows(module_, congruence_kernel(c, row_mod, coord_mod));
}

bool CyclotomicContext::acts_trivially() const {
    for (const auto& e : elements_)
        if (!e.mat.is_identity()) return false;
    return true;
}

std::string SemistableCheck::describe() const {
    switch (violation) {
        case SemistableViolation::none:
            return "ok";
        case SemistableViolation::not_stable:
            return "NotStable: element " + std::to_string(g) + " does not preserve M'";
        case SemistableViolation::not_cyclotomic_on_sub:
            return "NotCyclotomicOnSub: element " + std::to_string(g) +
                   " does not act by chi on M'";
        case SemistableViolation::not_trivial_on_quotient:
            return "NotTrivialOnQuotient: element " + std::to_string(g) +
                   " acts nontrivially on M/M'";
        case SemistableViolation::not_trivial_on_non_p:
            return "NotTrivialOnNonP: element " + std::to_string(g) +
                   " acts nontrivially on the prime-to-p part";
    }
    return "unknown";
}

SemistableCheck check_ordinary_semistable(const CyclotomicContext& ctx,
                                          const SemistableWitness& w) {
    require_same_parent(ctx.module(), w.m_prime.parent(), "check_ordinary_semistable");
    auto basis = w.m_prime.canonical_basis();
    for (std::size_t g = 0; g < ctx.size(); ++g)
        for (const auto& b : basis)
            if (!w.m_prime.contains(ctx.mat(g)(b)))
                return {SemistableViolation::not_stable, g};
    for (std::size_t g = 0; g < ctx.size(); ++g)
        for (const auto& b : basis)
            if (!(ctx.mat(g)(b) == ctx.chi_action(g, b)))
                return {SemistableViolation::not_cyclotomic_on_sub, g};
    std::size_t k = ctx.module().rank();
    for (std::size_t g = 0; g < ctx.size(); ++g)
        for (std::size_t i = 0; i < k; ++i) {
            Vec e(k, 0);
            e[i] = 1;
            ModuleElement x = ctx.module().element(e);
            if (!w.m_prime.contains(ctx.mat(g)(x) - x))
                return {SemistableViolation::not_trivial_on_quotient, g};
        }
    return {};
}

bool verify_ordinary_semistable(const CyclotomicContext& ctx, const SemistableWitness& w) {
    return check_ordinary_semistable(ctx, w).ok();
}

std::optional<SemistableWitness> find_semistable_filtration(const CyclotomicContext& ctx,
                                                            i64 cap) {
    const FinAbGroup& m = ctx.module();
    if (m.order() > cap)
        throw cap_exceeded("find_semistable_filtration: module order exceeds cap");
    // every subgroup is reachable from the trivial one by adjoining
    // single elements, so breadth-first closure enumerates them all
    std::vector<ModuleElement> all;
    for (i64 i = 0; i < m.order(); ++i) all.push_back(m.element_at(i));
    std::map<Mat, Subgroup> seen;
    std::deque<Subgroup> work;
    Subgroup triv = Subgroup::trivial(m);
    seen.emplace(triv.lattice(), triv);
    work.push_back(triv);
    while (!work.empty()) {
        Subgroup s = work.front();
        work.pop_front();
        for (const auto& x : all) {
            if (s.contains(x)) continue;
            Subgroup t = s.sum(Subgroup::generated(m, {x}));
            if (seen.emplace(t.lattice(), t).second) work.push_back(t);
        }
    }
    std::vector<Subgroup> subs;
    for (auto& [lat, s] : seen) subs.push_back(s);
    std::stable_sort(subs.begin(), subs.end(),
                     [](const Subgroup& a, const Subgroup& b) { return a.order() < b.order(); });
    for (const auto& s : subs) {
        SemistableWitness w{s};
        if (verify_ordinary_semistable(ctx, w)) return w;
    }
    return std::nullopt;
}

SemistableCheck check_ordinary_good(const CyclotomicContext& ctx, const SemistableWitness& w) {
    SemistableCheck c = check_ordinary_semistable(ctx, w);
    if (!c.ok()) return c;
    auto [mp, mnonp] = primary_decompose(ctx.module(), ctx.p());
    auto basis = mnonp.canonical_basis();
    for (std::size_t g = 0; g < ctx.size(); ++g)
        for (const auto& b : basis)
            if (!(ctx.mat(g)(b) == b))
                return {SemistableViolation::not_trivial_on_non_p, g};
    return {};
}

bool is_ordinary_good(const CyclotomicContext& ctx, const SemistableWitness& w) {
    return check_ordinary_good(ctx, w).ok();
}

AlmostFixedResult almost_unramified(const CyclotomicContext& ctx) {
    // distinct chi values can share a matrix; the predicate only sees matrices
    std::vector<std::size_t> reps;
    std::set<Mat> seen;
    for (std::size_t i = 0; i < ctx.size(); ++i)
        if (seen.insert(ctx.mat(i).matrix()).second) reps.push_back(i);
    Endomorphism two = Endomorphism::scalar(ctx.module(), 2);
    for (std::size_t a = 0; a < reps.size(); ++a)
        for (std::size_t b = a; b < reps.size(); ++b) {
            std::size_t i = reps[a], j = reps[b];
            if (!(ctx.mat(i) + ctx.mat(j) - two).is_zero()) continue;
            if (!ctx.mat(i).is_identity() || !ctx.mat(j).is_identity())
                return {false, ViolatingPair{i, j}};
        }
    return {true, std::nullopt};
}

namespace {

void require_au_semistable(const CyclotomicContext& ctx, const SemistableWitness& w,
                           const char* name) {
    SemistableCheck c = check_ordinary_semistable(ctx, w);
    if (!c.ok())
        throw hypothesis_not_met(std::string(name) + ": witness is not ordinary semistable (" +
                                 c.describe() + ")");
    if (!almost_unramified(ctx).holds)
        throw hypothesis_not_met(std::string(name) + ": module is not almost unramified");
}

bool kills(const Endomorphism& e, const Subgroup& s) {
    for (const auto& b : s.canonical_basis())
        if (!e(b).is_zero()) return false;
    return true;
}

}  // namespace

bool oracle_triviallemma(const CyclotomicContext& ctx, const SemistableWitness& w) {
    if (ctx.module().order() % ctx.p() == 0)
        throw hypothesis_not_met("triviallemma: module order is divisible by p");
    require_au_semistable(ctx, w, "triviallemma");
    return ctx.acts_trivially();
}

bool oracle_chiprop(const CyclotomicContext& ctx, const SemistableWitness& w,
                    std::size_t g, std::size_t h) {
    require_au_semistable(ctx, w, "chiprop");
    i64 pm = p_part(ctx.module().order(), ctx.p());
    if (ctx.chi_modulus() % pm != 0)
        throw hypothesis_not_met("chiprop: chi modulus is smaller than |M_p|");
    if (mod_reduce(ctx.chi(g) + ctx.chi(h) - 2, pm) != 0)
        throw hypothesis_not_met("chiprop: chi(g) + chi(h) != 2 mod |M_p|");
    auto [mp, mnonp] = primary_decompose(ctx.module(), ctx.p());
    Endomorphism s = ctx.mat(g) + ctx.mat(h) - Endomorphism::scalar(ctx.module(), 2);
    return kills(s, mp);
}

namespace {

// Refuse models whose chi image is too small to solve
// chi(g) + chi(h) == 2 mod |M_p|, which the proofs rely on.
void require_chi_onto_p_part(const CyclotomicContext& ctx, const char* who) {
    i64 pm = p_part(ctx.module().order(), ctx.p());
    if (pm > 1 && !ctx.chi_onto(pm))
        throw hypothesis_not_met(std::string(who) +
                                 ": chi does not cover the units mod |M_p|");
}

}  // namespace

TameTheoremResult oracle_tametheorem(const CyclotomicContext& ctx, const SemistableWitness& w) {
    require_au_semistable(ctx, w, "tametheorem");
    require_chi_onto_p_part(ctx, "tametheorem");
    TameTheoremResult out{true, std::nullopt};
    for (std::size_t i : ctx.level_kernel(1))
        if (!ctx.mat(i).is_identity()) out.part1 = false;
    if (ctx.p() >= 5 && is_ordinary_good(ctx, w)) {
        if (!ctx.full())
            throw hypothesis_not_met("tametheorem: chi is not surjective mod p");
        out.part2 = ctx.acts_trivially();
    }
    return out;
}

bool oracle_splitting(const CyclotomicContext& ctx, const SemistableWitness& w) {
    require_au_semistable(ctx, w, "splitting");
    require_chi_onto_p_part(ctx, "splitting");
    auto [mp, mnonp] = primary_decompose(ctx.module(), ctx.p());
    Subgroup mp_prime = w.m_prime.intersect(mp);
    if (!kills(Endomorphism::scalar(ctx.module(), ctx.p()), mp_prime)) return false;
    Subgroup fixed_p = ctx.fixed_points().intersect(mp);
    return mp_prime.intersect(fixed_p).is_trivial() && mp_prime.sum(fixed_p) == mp;
}

bool oracle_splittingcor(const CyclotomicContext& ctx, const SemistableWitness& w,
                         std::size_t g, i64 r) {
    require_au_semistable(ctx, w, "splittingcor");
    require_chi_onto_p_part(ctx, "splittingcor");
    if (mod_reduce(ctx.chi(g) + r, ctx.p()) != 0)
        throw hypothesis_not_met("splittingcor: chi(g) != -r mod p");
    const Endomorphism& a = ctx.mat(g);
    const Endomorphism& ainv = ctx.mat(ctx.inverse_index(g));
    Endomorphism lhs = (a + Endomorphism::scalar(ctx.module(), r)) *
                       (a + ainv - Endomorphism::scalar(ctx.module(), 2));
    return lhs.is_zero();
}

bool oracle_stabilizer(const CyclotomicContext& ctx, const SemistableWitness& w,
                       const ModuleElement& gen) {
    require_au_semistable(ctx, w, "stabilizer");
    require_same_parent(ctx.module(), gen.parent(), "oracle_stabilizer");
    if (!ctx.full())
        throw hypothesis_not_met("stabilizer: chi is not surjective mod p");
    if (ctx.acts_trivially())
        throw hypothesis_not_met("stabilizer: action is trivial");
    // gen must generate M over the group action
    std::vector<ModuleElement> orb;
    for (std::size_t i = 0; i < ctx.size(); ++i) orb.push_back(ctx.mat(i)(gen));
    if (!(Subgroup::generated(ctx.module(), orb) == Subgroup::whole(ctx.module())))
        throw hypothesis_not_met("stabilizer: point does not generate the module");
    std::set<std::size_t> stab;
    for (std::size_t i = 0; i < ctx.size(); ++i)
        if (ctx.mat(i)(gen) == gen) stab.insert(i);
    auto lk = ctx.level_kernel(1);
    return stab == std::set<std::size_t>(lk.begin(), lk.end());
}

bool oracle_pro_p(const ActionGroup& gp, i64 p) {
    if (!is_prime(p)) throw error("oracle_pro_p: p must be prime");
    if (!is_p_power(static_cast<i64>(gp.size()), p))
        throw hypothesis_not_met("pro_p: group order is not a power of p");
    if (gp.module().order() % p == 0)
        throw hypothesis_not_met("pro_p: module order is divisible by p");
    Endomorphism id = Endomorphism::identity(gp.module());
    for (const auto& g : gp.elements()) {
        Endomorphism d = g - id;
        if (!(d * d).is_zero())
            throw hypothesis_not_met("pro_p: (g-1)^2 != 0 for some g");
    }
    for (const auto& g : gp.elements())
        if (!g.is_identity()) return false;
    return true;
}

bool oracle_exceptional_identity(const ActionGroup& g) {
    Endomorphism id = Endomorphism::identity(g.module());
    for (const auto& s : g.elements()) {
        Endomorphism d = s - id;
        if (!(d + d).is_zero())
            throw hypothesis_not_met("exceptional_identity: 2(g-1) != 0 for some g");
        if (!(d * d).is_zero())
            throw hypothesis_not_met("exceptional_identity: (g-1)^2 != 0 for some g");
    }
    for (const auto& s : g.elements())
        if (!(s * s - id).is_zero()) return false;
    return true;
}

}  // namespace galmod
