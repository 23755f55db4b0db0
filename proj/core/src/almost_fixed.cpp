#include "galmod/almost_fixed.hpp"

#include "galmod/errors.hpp"

namespace galmod {

AlmostFixedResult is_almost_fixed_element(const ActionGroup& g, const ModuleElement& p) {
    require_same_parent(g.module(), p.parent(), "is_almost_fixed_element");
    ModuleElement two_p = scale(2, p);
    for (std::size_t i = 0; i < g.size(); ++i) {
        ModuleElement gi_p = g[i](p);
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (gi_p + g[j](p) == two_p) {
                if (!(gi_p == p) || !(g[j](p) == p))
                    return {false, ViolatingPair{i, j}};
            }
        }
    }
    return {true, std::nullopt};
}

AlmostFixedResult is_almost_fixed_module(const ActionGroup& g) {
    Endomorphism two = Endomorphism::scalar(g.module(), 2);
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) {
            if ((g[i] + g[j] - two).is_zero()) {
                if (!g[i].is_identity() || !g[j].is_identity())
                    return {false, ViolatingPair{i, j}};
            }
        }
    return {true, std::nullopt};
}

AlmostFixedResult is_almost_fixed_submodule(const ActionGroup& g, const Subgroup& n) {
    auto basis = n.canonical_basis();
    Endomorphism two = Endomorphism::scalar(g.module(), 2);
    auto kills = [&](const Endomorphism& e) {
        for (const auto& b : basis)
            if (!e(b).is_zero()) return false;
        return true;
    };
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) {
            Endomorphism sum = g[i] + g[j] - two;
            if (kills(sum)) {
                Endomorphism one = Endomorphism::identity(g.module());
                if (!kills(g[i] - one) || !kills(g[j] - one))
                    return {false, ViolatingPair{i, j}};
            }
        }
    return {true, std::nullopt};
}

bool check_conjugate_lemma(const ActionGroup& g, const ModuleElement& p) {
    if (!is_almost_fixed_element(g, p))
        throw hypothesis_not_met("conjugate lemma: P is not almost fixed");
    for (const auto& s : g.elements())
        if (!is_almost_fixed_element(g, s(p))) return false;
    return true;
}

bool check_square_lemma(const ActionGroup& g, const ModuleElement& p) {
    if (!is_almost_fixed_element(g, p))
        throw hypothesis_not_met("square lemma: P is not almost fixed");
    Endomorphism one = Endomorphism::identity(g.module());
    for (const auto& e : g.elements()) {
        Endomorphism d = e - one;
        if ((d * d)(p).is_zero() && !d(p).is_zero()) return false;
    }
    return true;
}

bool check_generators_lemma(const ActionGroup& g, const std::vector<ModuleElement>& gens) {
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (!is_almost_fixed_element(g, gens[i]))
            throw hypothesis_not_met("generators lemma: generator " + std::to_string(i) +
                                     " is not almost fixed");
    // the G-module generated by the gens is spanned by their orbits
    std::vector<ModuleElement> span;
    for (const auto& p : gens)
        for (const auto& q : orbit(g, p)) span.push_back(q);
    Subgroup n = Subgroup::generated(g.module(), span);
    return is_almost_fixed_submodule(g, n).holds;
}

std::set<i64> almost_rational_roots_of_unity(i64 m_max) {
    std::set<i64> out;
    for (i64 m = 1; m <= m_max; ++m) {
        // units u with u != 1: the pair scan only needs scalars
        auto units = units_mod(m);
        bool ok = true;
        for (i64 a : units) {
            for (i64 b : units) {
                if (mod_reduce(a + b - 2, m) == 0 &&
                    (mod_reduce(a - 1, m) != 0 || mod_reduce(b - 1, m) != 0)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
        if (ok) out.insert(m);
    }
    return out;
}

}  // namespace galmod
