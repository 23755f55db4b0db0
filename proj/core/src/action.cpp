#include "galmod/action.hpp"

#include <deque>
#include <map>

#include "galmod/errors.hpp"

namespace galmod {

namespace {
// Canonical key for deduplication inside one module.
Mat key_of(const Endomorphism& e) { return e.matrix(); }
}  // namespace

ActionGroup ActionGroup::close_generators(const FinAbGroup& m,
                                          const std::vector<Endomorphism>& gens,
                                          std::size_t cap) {
    for (const auto& g : gens) {
        require_same_parent(m, g.parent(), "close_generators");
        if (!g.is_invertible())
            throw non_invertible_generator("close_generators: generator is not invertible");
    }
    ActionGroup ag(m);
    std::map<Mat, std::size_t> seen;
    Endomorphism id = Endomorphism::identity(m);
    ag.elements_.push_back(id);
    seen[key_of(id)] = 0;
    for (const auto& g : gens) {
        auto [it, fresh] = seen.try_emplace(key_of(g), ag.elements_.size());
        if (fresh) ag.elements_.push_back(g);
        ag.generator_indices_.push_back(it->second);
    }
    std::deque<std::size_t> work;
    for (std::size_t i = 1; i < ag.elements_.size(); ++i) work.push_back(i);
    while (!work.empty()) {
        std::size_t cur = work.front();
        work.pop_front();
        for (const auto& g : gens) {
            Endomorphism prod = ag.elements_[cur] * g;
            auto [it, fresh] = seen.try_emplace(key_of(prod), ag.elements_.size());
            if (fresh) {
                if (ag.elements_.size() >= cap)
                    throw cap_exceeded("close_generators: closure cap exceeded");
                ag.elements_.push_back(std::move(prod));
                work.push_back(it->second);
            }
        }
    }
    return ag;
}

ActionGroup ActionGroup::unit_multiplication(const FinAbGroup& cyclic) {
    if (cyclic.rank() > 1) throw error("unit_multiplication: cyclic group required");
    i64 n = cyclic.order();
    std::vector<Endomorphism> gens;
    for (i64 u : units_mod(n))
        if (n > 1 && u != 1) gens.push_back(Endomorphism::scalar(cyclic, u));
    return close_generators(cyclic, gens, static_cast<std::size_t>(n) + 1);
}

ActionGroup ActionGroup::trivial(const FinAbGroup& m) {
    return close_generators(m, {});
}

std::size_t ActionGroup::index_of(const Endomorphism& e) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (elements_[i] == e) return i;
    throw error("ActionGroup: element not in group");
}

std::size_t ActionGroup::product_index(std::size_t i, std::size_t j) const {
    return index_of(elements_[i] * elements_[j]);
}

std::size_t ActionGroup::inverse_index(std::size_t i) const {
    for (std::size_t j = 0; j < elements_.size(); ++j)
        if ((elements_[i] * elements_[j]).is_identity()) return j;
    throw error("ActionGroup: no inverse found");
}

std::vector<ModuleElement> orbit(const ActionGroup& g, const ModuleElement& p) {
    std::vector<ModuleElement> out;
    for (const auto& e : g.elements()) {
        ModuleElement q = e(p);
        bool dup = false;
        for (const auto& seen : out)
            if (seen == q) { dup = true; break; }
        if (!dup) out.push_back(std::move(q));
    }
    return out;
}

std::vector<std::size_t> stabilizer(const ActionGroup& g, const ModuleElement& p) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i](p) == p) out.push_back(i);
    return out;
}

Subgroup module_generated(const ActionGroup& g, const ModuleElement& p) {
    std::vector<ModuleElement> gens;
    for (const auto& q : orbit(g, p)) gens.push_back(q);
    return Subgroup::generated(g.module(), gens);
}

Subgroup fixed_subgroup(const FinAbGroup& m, const ActionGroup& g) {
    const auto& d = m.factors();
    Mat c;
    Vec row_mod;
    for (const auto& e : g.elements()) {
        if (e.is_identity()) continue;
        for (std::size_t i = 0; i < d.size(); ++i) {
            Vec row = e.matrix()[i];
            row[i] -= 1;
            c.push_back(std::move(row));
            row_mod.push_back(d[i]);
        }
    }
    Vec coord_mod(d.begin(), d.end());
    return Subgroup::from_lattice_rows(m, congruence_kernel(c, row_mod, coord_mod));
}

bool is_stable(const ActionGroup& g, const Subgroup& s) {
    auto basis = s.canonical_basis();
    for (const auto& e : g.elements())
        for (const auto& b : basis)
            if (!s.contains(e(b))) return false;
    return true;
}

}  // namespace galmod
