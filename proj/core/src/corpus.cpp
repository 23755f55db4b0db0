#include "galmod/corpus.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "galmod/errors.hpp"
#include "galmod/field.hpp"

namespace galmod {

namespace {

i64 ipow(i64 b, i64 e) {
    i64 r = 1;
    for (i64 i = 0; i < e; ++i) r = checked_mul(r, b);
    return r;
}

// w == r1 mod m1 and w == r2 mod m2 for coprime m1, m2.
i64 crt2(i64 r1, i64 m1, i64 r2, i64 m2) {
    i64 w = mod_reduce(r1, m1) +
            m1 * mul_mod(mod_reduce(r2 - r1, m2), inv_mod(m1, m2), m2);
    return mod_reduce(w, m1 * m2);
}

struct Tail {
    i64 q;
    i64 t;  // (t-1)^2 == 0 mod q, so the tail admits a filtration
};

const Tail kTails[] = {{1, 1}, {4, 1}, {4, 3}, {8, 5}, {9, 4}, {12, 7}};

void emit_instance(const std::function<void(const InertiaInstance&)>& f,
                   std::string id, CyclotomicContext ctx, SemistableWitness w) {
    if (!verify_ordinary_semistable(ctx, w))
        throw error("corpus: generated witness failed for " + id);
    InertiaInstance in{std::move(id), std::move(ctx), std::move(w)};
    f(in);
}

void each_extension_instance(i64 p, const std::function<void(const InertiaInstance&)>& f) {
    const std::pair<i64, i64> shapes[] = {{1, 1}, {1, 2}, {2, 2}, {2, 1}};
    for (auto [a, b] : shapes) {
        i64 n = ipow(p, a + b);
        i64 g0 = primitive_root(n, p);
        std::vector<i64> us{g0, 1, mul_mod(g0, g0, n)};
        std::sort(us.begin(), us.end());
        us.erase(std::unique(us.begin(), us.end()), us.end());
        for (const Tail& tl : kTails) {
            if (std::gcd(tl.q, p) != 1) continue;
            i64 pa = ipow(p, a), pb = ipow(p, b);
            for (i64 u : us) {
                std::string base = "ext-p" + std::to_string(p) + "-a" + std::to_string(a) +
                                   "-b" + std::to_string(b) + "-u" + std::to_string(u) +
                                   "-q" + std::to_string(tl.q) + "-t" + std::to_string(tl.t);
                if (a <= b) {
                    // chi on the first factor, unipotent second factor with tail
                    i64 d2 = pb * tl.q;
                    FinAbGroup m = FinAbGroup::make({pa, d2});
                    i64 w2 = crt2(1, pb, tl.t, tl.q);
                    for (i64 c = 0; c < pa; ++c) {
                        Mat t{{mod_reduce(u, pa), c}, {0, w2}};
                        Subgroup mp = Subgroup::from_lattice_rows(
                            m, {{1, 0}, {0, mod_reduce(pb * (tl.t - 1), d2)}});
                        emit_instance(f, base + "-c" + std::to_string(c),
                                      CyclotomicContext::close(p, n, m, {{t, u}}),
                                      SemistableWitness{mp});
                    }
                } else {
                    // chi on the larger second factor carrying the tail
                    i64 d2 = pa * tl.q;
                    FinAbGroup m = FinAbGroup::make({pb, d2});
                    i64 w2 = crt2(u, pa, tl.t, tl.q);
                    for (i64 j = 0; j < pb; ++j) {
                        i64 c = mod_reduce(ipow(p, a - b) * tl.q * j, d2);
                        Mat t{{1, 0}, {c, w2}};
                        Subgroup mp = Subgroup::from_lattice_rows(
                            m, {{0, tl.q}, {0, mod_reduce(pa * (tl.t - 1), d2)}});
                        emit_instance(f, base + "-c" + std::to_string(c),
                                      CyclotomicContext::close(p, n, m, {{t, u}}),
                                      SemistableWitness{mp});
                    }
                }
            }
        }
    }
}

void each_cyclic_instance(i64 p, const std::function<void(const InertiaInstance&)>& f) {
    for (i64 n = 2; n <= 100; ++n) {
        FinAbGroup m = FinAbGroup::make({n});
        i64 pk = p_part(n, p);
        for (i64 v : units_mod(n)) {
            std::vector<i64> chis;
            i64 cm;  // chi modulus
            if (pk > 1) {
                cm = pk;
                chis = {mod_reduce(v, pk)};
            } else {
                cm = p;
                chis = {1, primitive_root(p, p)};
            }
            for (i64 chi : chis) {
                CyclotomicContext ctx =
                    CyclotomicContext::close(p, cm, m, {{Mat{{v}}, chi}});
                auto w = find_semistable_filtration(ctx);
                if (!w) continue;
                InertiaInstance in{"cyc-p" + std::to_string(p) + "-n" + std::to_string(n) +
                                       "-v" + std::to_string(v) + "-x" + std::to_string(chi),
                                   std::move(ctx), std::move(*w)};
                f(in);
            }
        }
    }
}

// ---- inertia oracle application (hypotheses evaluated once per instance) ----

bool kills(const Endomorphism& e, const Subgroup& s) {
    for (const auto& b : s.canonical_basis())
        if (!e(b).is_zero()) return false;
    return true;
}

bool gate_au_semistable(const InertiaInstance& in) {
    return verify_ordinary_semistable(in.ctx, in.witness) && almost_unramified(in.ctx).holds;
}

bool gate_chi_onto_p_part(const CyclotomicContext& ctx) {
    i64 pm = p_part(ctx.module().order(), ctx.p());
    return pm <= 1 || ctx.chi_onto(pm);
}

// representative indices with distinct (matrix, chi mod q) pairs
std::vector<std::size_t> dedup_elements(const CyclotomicContext& ctx, i64 q) {
    std::vector<std::size_t> reps;
    std::set<std::pair<Mat, i64>> seen;
    for (std::size_t i = 0; i < ctx.size(); ++i)
        if (seen.insert({ctx.mat(i).matrix(), mod_reduce(ctx.chi(i), q)}).second)
            reps.push_back(i);
    return reps;
}

void record(OracleRun& r, const std::string& id, bool ok, const std::string& witness) {
    if (ok)
        ++r.pass_count;
    else
        r.failures.push_back({id, witness});
}

void apply_inertia_oracle(const std::string& name, const InertiaInstance& in, OracleRun& r) {
    const CyclotomicContext& ctx = in.ctx;
    ++r.instance_count;
    if (name == "triviallemma") {
        if (ctx.module().order() % ctx.p() == 0) return;
        if (!gate_au_semistable(in)) return;
        ++r.hypothesis_met;
        record(r, in.id, ctx.acts_trivially(), "nonidentity action");
        return;
    }
    if (name == "chiprop") {
        i64 pm = p_part(ctx.module().order(), ctx.p());
        if (ctx.chi_modulus() % pm != 0) return;
        if (!gate_au_semistable(in)) return;
        ++r.hypothesis_met;
        auto reps = dedup_elements(ctx, pm);
        Subgroup mp = primary_decompose(ctx.module(), ctx.p()).first;
        Endomorphism two = Endomorphism::scalar(ctx.module(), 2);
        bool ok = true;
        std::string wit;
        for (std::size_t x = 0; x < reps.size() && ok; ++x)
            for (std::size_t y = x; y < reps.size() && ok; ++y) {
                std::size_t g = reps[x], h = reps[y];
                if (mod_reduce(ctx.chi(g) + ctx.chi(h) - 2, pm) != 0) continue;
                if (!kills(ctx.mat(g) + ctx.mat(h) - two, mp)) {
                    ok = false;
                    wit = "g=" + std::to_string(g) + ",h=" + std::to_string(h);
                }
            }
        record(r, in.id, ok, wit);
        return;
    }
    if (name == "tametheorem") {
        if (!gate_au_semistable(in)) return;
        if (!gate_chi_onto_p_part(ctx)) return;
        bool good = is_ordinary_good(ctx, in.witness);
        bool part2req = ctx.p() >= 5 && good;
        if (part2req && !ctx.full()) return;  // surjectivity refusal
        ++r.hypothesis_met;
        bool part1 = true;
        for (std::size_t i : ctx.level_kernel(1))
            if (!ctx.mat(i).is_identity()) part1 = false;
        bool part2 = part2req ? ctx.acts_trivially() : true;
        record(r, in.id, part1 && part2,
               part1 ? "part2: nonidentity action" : "part1: I(1) acts nontrivially");
        return;
    }
    if (name == "splitting") {
        if (!gate_au_semistable(in)) return;
        if (!gate_chi_onto_p_part(ctx)) return;
        ++r.hypothesis_met;
        record(r, in.id, oracle_splitting(ctx, in.witness), "splitting failed");
        return;
    }
    if (name == "splittingcor") {
        if (!gate_au_semistable(in)) return;
        if (!gate_chi_onto_p_part(ctx)) return;
        ++r.hypothesis_met;
        auto reps = dedup_elements(ctx, ctx.chi_modulus());
        bool ok = true;
        std::string wit;
        Endomorphism two = Endomorphism::scalar(ctx.module(), 2);
        for (std::size_t g : reps) {
            i64 chi_p = ctx.chi_modulus() % ctx.p() == 0 ? mod_reduce(ctx.chi(g), ctx.p()) : 1;
            i64 rr = mod_reduce(-chi_p, ctx.p());
            const Endomorphism& a = ctx.mat(g);
            const Endomorphism& ai = ctx.mat(ctx.inverse_index(g));
            Endomorphism op = (a + Endomorphism::scalar(ctx.module(), rr)) * (a + ai - two);
            if (!op.is_zero()) {
                ok = false;
                wit = "g=" + std::to_string(g) + ",r=" + std::to_string(rr);
                break;
            }
        }
        record(r, in.id, ok, wit);
        return;
    }
    if (name == "stabilizer") {
        if (!gate_au_semistable(in)) return;
        if (!ctx.full() || ctx.acts_trivially()) return;
        std::size_t k = ctx.module().rank();
        std::vector<ModuleElement> cands;
        for (std::size_t i = 0; i < k; ++i) {
            Vec e(k, 0);
            e[i] = 1;
            cands.push_back(ctx.module().element(e));
        }
        cands.push_back(ctx.module().element(Vec(k, 1)));
        for (const auto& gen : cands) {
            std::vector<ModuleElement> orb;
            for (std::size_t i = 0; i < ctx.size(); ++i) orb.push_back(ctx.mat(i)(gen));
            if (!(Subgroup::generated(ctx.module(), orb) == Subgroup::whole(ctx.module())))
                continue;
            ++r.hypothesis_met;
            std::set<std::size_t> stab;
            for (std::size_t i = 0; i < ctx.size(); ++i)
                if (ctx.mat(i)(gen) == gen) stab.insert(i);
            auto lk = ctx.level_kernel(1);
            bool ok = stab == std::set<std::size_t>(lk.begin(), lk.end());
            record(r, in.id, ok, "stabilizer of " + gen.to_string() + " != I(1)");
            return;
        }
        return;
    }
    throw error("unknown inertia oracle: " + name);
}

void apply_action_oracle(const std::string& name, const ActionInstance& in, OracleRun& r) {
    const ActionGroup& g = in.group;
    const FinAbGroup& m = g.module();
    if (name == "conjugate" || name == "square") {
        for (i64 i = 0; i < m.order(); ++i) {
            ModuleElement p = m.element_at(i);
            ++r.instance_count;
            if (!is_almost_fixed_element(g, p).holds) continue;
            ++r.hypothesis_met;
            bool ok = name == "conjugate" ? check_conjugate_lemma(g, p)
                                          : check_square_lemma(g, p);
            record(r, in.id, ok, "P=" + p.to_string());
        }
        return;
    }
    if (name == "generators") {
        ++r.instance_count;
        std::vector<ModuleElement> gens;
        for (i64 i = 0; i < m.order(); ++i) {
            ModuleElement p = m.element_at(i);
            if (is_almost_fixed_element(g, p).holds) gens.push_back(p);
        }
        ++r.hypothesis_met;
        record(r, in.id, check_generators_lemma(g, gens), "generated module not almost fixed");
        return;
    }
    if (name == "exceptional-identity") {
        ++r.instance_count;
        try {
            bool ok = oracle_exceptional_identity(g);
            ++r.hypothesis_met;
            record(r, in.id, ok, "(g^2-1)M != 0");
        } catch (const hypothesis_not_met&) {
        }
        return;
    }
    throw error("unknown action oracle: " + name);
}

std::vector<ActionInstance> two_dim_cyclic_actions(i64 q, std::size_t max_order,
                                                   const std::string& prefix) {
    std::vector<ActionInstance> out;
    FinAbGroup m = FinAbGroup::make({q, q});
    std::set<std::set<Mat>> groups;
    for (i64 code = 0; code < q * q * q * q; ++code) {
        i64 c = code;
        Mat a(2, Vec(2));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                a[i][j] = c % q;
                c /= q;
            }
        Endomorphism e = Endomorphism::make(m, a);
        if (!e.is_invertible()) continue;
        // order of the cyclic group generated
        Endomorphism pw = e;
        std::size_t ord = 1;
        while (!pw.is_identity() && ord <= max_order) {
            pw = pw * e;
            ++ord;
        }
        if (ord > max_order) continue;
        ActionGroup ag = ActionGroup::close_generators(m, {e});
        std::set<Mat> key;
        for (const auto& el : ag.elements()) key.insert(el.matrix());
        if (!groups.insert(key).second) continue;
        out.push_back({prefix + "-q" + std::to_string(q) + "-m" + std::to_string(code),
                       std::move(ag)});
    }
    return out;
}

}  // namespace

void each_inertia_instance(const std::function<void(const InertiaInstance&)>& f) {
    for (i64 p : {3, 5, 7}) {
        each_extension_instance(p, f);
        each_cyclic_instance(p, f);
    }
}

std::vector<ActionInstance> default_almost_fixed_corpus() {
    std::vector<ActionInstance> out;
    for (i64 n = 2; n <= 100; ++n)
        out.push_back({"af-cyc-" + std::to_string(n),
                       ActionGroup::unit_multiplication(FinAbGroup::make({n}))});
    for (i64 p : {2, 3, 5, 7})
        for (auto& in : two_dim_cyclic_actions(p, 8, "af"))
            out.push_back(std::move(in));
    return out;
}

std::vector<ActionInstance> default_exceptional_corpus() {
    std::vector<ActionInstance> out;
    auto add = [&](const std::string& id, std::vector<i64> factors, Mat a) {
        FinAbGroup m = FinAbGroup::make(std::move(factors));
        out.push_back({id, ActionGroup::close_generators(m, {Endomorphism::make(m, a)})});
    };
    add("exc-trivial-z5", {5}, {{1}});
    add("exc-neg-z4", {4}, {{3}});
    add("exc-5-z8", {8}, {{5}});
    add("exc-3-z8", {8}, {{3}});          // violates 2(g-1) = 0
    add("exc-neg-z3", {3}, {{2}});        // violates 2(g-1) = 0
    add("exc-unip-z2z2", {2, 2}, {{1, 1}, {0, 1}});
    add("exc-swap-z2z2", {2, 2}, {{0, 1}, {1, 0}});
    add("exc-hybrid-z2z2z9", {2, 2, 9}, {{1, 1}, {0, 1}});
    return out;
}

std::vector<ActionInstance> default_pro_p_corpus(i64 p) {
    std::vector<ActionInstance> out;
    std::string pre = "prop-p" + std::to_string(p) + "-";
    for (i64 n = 2; n <= 16; ++n) {
        if (n % p == 0) continue;
        FinAbGroup m = FinAbGroup::make({n});
        for (i64 v : units_mod(n)) {
            i64 ord = mult_order(v, n);
            if (!(ord == 1 || p_part(ord, p) == ord)) continue;
            out.push_back({pre + "cyc-n" + std::to_string(n) + "-v" + std::to_string(v),
                           ActionGroup::close_generators(m, {Endomorphism::scalar(m, v)})});
        }
    }
    for (i64 q : {2, 3, 4, 5}) {
        if (q % p == 0) continue;
        for (auto& in : two_dim_cyclic_actions(q, 25, pre + "mat")) {
            i64 ord = static_cast<i64>(in.group.size());
            if (ord == 1 || p_part(ord, p) == ord) out.push_back(std::move(in));
        }
    }
    return out;
}

std::vector<CyclicActionInstance> default_cohomology_corpus() {
    std::vector<CyclicActionInstance> out;
    for (i64 n = 2; n <= 81; ++n) {
        FinAbGroup m = FinAbGroup::make({n});
        for (i64 v : units_mod(n)) {
            if (mult_order(v, n) > 12) continue;
            ActionGroup g = ActionGroup::close_generators(m, {Endomorphism::scalar(m, v)});
            std::size_t gen = g.generator_indices()[0];
            out.push_back({"coh-cyc-n" + std::to_string(n) + "-v" + std::to_string(v),
                           std::move(g), gen});
        }
    }
    for (i64 q : {2, 3, 4, 5, 7}) {
        for (auto& in : two_dim_cyclic_actions(q, 12, "coh")) {
            std::size_t gen = in.group.generator_indices().empty()
                                  ? in.group.identity_index()
                                  : in.group.generator_indices()[0];
            out.push_back({in.id, std::move(in.group), gen});
        }
    }
    return out;
}

const std::vector<std::string>& oracle_names() {
    static const std::vector<std::string> names = {
        "conjugate",    "square",      "generators",  "triviallemma", "chiprop",
        "tametheorem",  "splitting",   "splittingcor", "stabilizer",   "pro-p",
        "exceptional-identity", "sah", "square-norm"};
    return names;
}

bool is_oracle_name(const std::string& name) {
    const auto& n = oracle_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

namespace {

bool is_inertia_oracle(const std::string& name) {
    return name == "triviallemma" || name == "chiprop" || name == "tametheorem" ||
           name == "splitting" || name == "splittingcor" || name == "stabilizer";
}

bool is_action_oracle(const std::string& name) {
    return name == "conjugate" || name == "square" || name == "generators" ||
           name == "exceptional-identity";
}

}  // namespace

OracleRun run_inertia_oracle(const std::string& name,
                             const std::vector<InertiaInstance>& instances) {
    if (!is_inertia_oracle(name)) throw error("not an inertia oracle: " + name);
    OracleRun r;
    r.oracle = name;
    for (const auto& in : instances) apply_inertia_oracle(name, in, r);
    return r;
}

OracleRun run_action_oracle(const std::string& name,
                            const std::vector<ActionInstance>& instances) {
    if (!is_action_oracle(name)) throw error("not an action-group oracle: " + name);
    OracleRun r;
    r.oracle = name;
    for (const auto& in : instances) apply_action_oracle(name, in, r);
    return r;
}

OracleRun run_oracle(const std::string& name) {
    OracleRun r;
    r.oracle = name;
    if (is_inertia_oracle(name)) {
        each_inertia_instance([&](const InertiaInstance& in) {
            apply_inertia_oracle(name, in, r);
        });
        return r;
    }
    if (is_action_oracle(name)) {
        auto corpus = name == "exceptional-identity" ? default_exceptional_corpus()
                                                     : default_almost_fixed_corpus();
        for (const auto& in : corpus) apply_action_oracle(name, in, r);
        return r;
    }
    if (name == "pro-p") {
        for (i64 p : {3, 5})
            for (const auto& in : default_pro_p_corpus(p)) {
                ++r.instance_count;
                try {
                    bool ok = oracle_pro_p(in.group, p);
                    ++r.hypothesis_met;
                    record(r, in.id, ok, "nonidentity action");
                } catch (const hypothesis_not_met&) {
                }
            }
        return r;
    }
    if (name == "sah") {
        for (const auto& in : default_cohomology_corpus()) {
            ++r.instance_count;
            CocycleSpace cs(in.group);
            ++r.hypothesis_met;
            bool ok = true;
            std::string wit;
            for (std::size_t g = 0; g < in.group.size(); ++g) {
                try {
                    if (!verify_sah(cs, g)) {
                        ok = false;
                        wit = "g=" + std::to_string(g);
                    }
                } catch (const hypothesis_not_met&) {
                    // non-central elements are outside the lemma
                }
            }
            record(r, in.id, ok, wit);
        }
        return r;
    }
    if (name == "square-norm") {
        for (i64 p = 3; p <= 3000; p += 2) {
            if (!is_prime(p)) continue;
            for (i64 n = 1, pn = p; pn <= 3000; ++n, pn *= p) {
                ++r.instance_count;
                ++r.hypothesis_met;
                record(r, "sqn-p" + std::to_string(p) + "-n" + std::to_string(n),
                       square_norm_criterion(p, static_cast<int>(n)), "criterion failed");
                if (pn > 3000 / p) break;
            }
        }
        return r;
    }
    throw error("unknown oracle: " + name);
}

}  // namespace galmod
