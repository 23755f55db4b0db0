#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "galmod/json_io.hpp"
#include "galmod/search.hpp"
#include "galmod/semigroup.hpp"

namespace {

constexpr const char* kVersion = "galmod 1.0.0";

using galmod::i64;

// exit codes: 0 pass, 1 assertion failure, 2 usage or parse error, 3 cap exceeded
int g_exit = 0;

galmod::OracleRun run_named_oracle(const std::string& name, const std::string& corpus) {
    if (corpus == "default") return galmod::run_oracle(name);
    auto parsed = galmod::load_corpus_file(corpus);
    static const std::set<std::string> inertia = {"triviallemma", "chiprop", "tametheorem",
                                                  "splitting", "splittingcor", "stabilizer"};
    galmod::OracleRun run;
    if (inertia.count(name)) {
        std::vector<galmod::InertiaInstance> instances;
        for (const auto& p : parsed) instances.push_back(galmod::to_inertia_instance(p));
        run = galmod::run_inertia_oracle(name, instances);
    } else {
        std::vector<galmod::ActionInstance> instances;
        for (std::size_t i = 0; i < parsed.size(); ++i) {
            std::string id = parsed[i].id.empty() ? "imported-" + std::to_string(i)
                                                  : parsed[i].id;
            instances.push_back({id, galmod::to_action_group(parsed[i])});
        }
        run = galmod::run_action_oracle(name, instances);
    }
    run.corpus = corpus;
    return run;
}

void print_run(const galmod::OracleRun& run) {
    std::cout << "oracle " << run.oracle << ": instances=" << run.instance_count
              << " hypothesis-met=" << run.hypothesis_met << " pass=" << run.pass_count
              << " failures=" << run.failures.size() << "\n";
    for (const auto& f : run.failures)
        std::cout << "  FAIL " << f.instance << ": " << f.witness << "\n";
}

void cmd_oracle(const std::string& name, const std::string& corpus,
                const std::string& json_path, const std::string& replay_path) {
    if (!galmod::is_oracle_name(name))
        throw CLI::ValidationError("oracle", "unknown oracle name: " + name);
    auto start = std::chrono::steady_clock::now();
    galmod::OracleRun run = run_named_oracle(name, corpus);
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    print_run(run);
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw galmod::error("cannot write " + json_path);
        out << galmod::report_to_json(run, ms, kVersion) << "\n";
    }
    if (!replay_path.empty()) {
        galmod::ReportSummary stored = galmod::load_report_file(replay_path);
        if (stored.oracle != run.oracle)
            throw galmod::parse_error("replay report is for oracle " + stored.oracle);
        bool same = galmod::replay_matches(stored, run);
        std::cout << "replay: " << (same ? "match" : "MISMATCH") << "\n";
        if (!same) g_exit = 1;
    }
    if (!run.all_passed()) g_exit = 1;
}

galmod::Vec parse_point(const std::string& s) {
    galmod::Vec v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(std::stoll(tok));
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"galmod: finite Galois-module decision procedures and theorem oracles"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    // almost-fixed element|module --instance FILE [--point a,b]
    auto* af = app.add_subcommand("almost-fixed", "almost-fixed checks on an instance file");
    std::string af_kind, af_file, af_point;
    af->add_option("kind", af_kind, "element or module")->required()
        ->check(CLI::IsMember({"element", "module"}));
    af->add_option("--instance", af_file, "instance JSON file")->required();
    af->add_option("--point", af_point, "comma-separated coordinates for the element check");

    auto* mu = app.add_subcommand("mu6", "orders m <= max with 1 in Z/m almost rational");
    i64 mu_max = 200;
    mu->add_option("--max", mu_max, "largest order to scan")->required();

    auto* orc = app.add_subcommand("oracle", "run a named theorem oracle over a corpus");
    std::string orc_name, orc_corpus = "default", orc_json, orc_replay;
    orc->add_option("name", orc_name, "oracle name")->required();
    orc->add_option("--corpus", orc_corpus, "default or a corpus JSON file");
    orc->add_option("--json", orc_json, "write a JSON report here");
    orc->add_option("--replay", orc_replay, "compare against a stored JSON report");

    auto* sg = app.add_subcommand("semigroup", "numerical semigroup computations");
    std::string sg_kind;
    std::vector<i64> sg_args;
    sg->add_option("kind", sg_kind, "gaps | frobenius | postage | genus-bound")->required()
        ->check(CLI::IsMember({"gaps", "frobenius", "postage", "genus-bound"}));
    sg->add_option("args", sg_args, "integer arguments");

    auto* se = app.add_subcommand("search", "unit-solution searches mod m");
    std::string se_kind;
    std::vector<i64> se_args;
    se->add_option("kind", se_kind, "units | empirical-c | hensel | weil")->required()
        ->check(CLI::IsMember({"units", "empirical-c", "hensel", "weil"}));
    se->add_option("args", se_args, "integer arguments");

    auto* h1 = app.add_subcommand("h1", "first cohomology of an instance file");
    std::string h1_file;
    h1->add_option("--instance", h1_file, "instance JSON file")->required();

    try {
        app.parse(argc, argv);

        if (*af) {
            galmod::ParsedInstance in = galmod::load_instance_file(af_file);
            galmod::ActionGroup g = galmod::to_action_group(in);
            if (af_kind == "module") {
                auto res = galmod::is_almost_fixed_module(g);
                std::cout << "module almost-fixed: " << (res.holds ? "true" : "false");
                if (!res.holds)
                    std::cout << " (witness pair g=" << res.witness->g
                              << ", h=" << res.witness->h << ")";
                std::cout << "\n";
                if (!res.holds) g_exit = 1;
            } else if (!af_point.empty()) {
                galmod::ModuleElement p = in.module.element(parse_point(af_point));
                auto res = galmod::is_almost_fixed_element(g, p);
                std::cout << "element " << p.to_string()
                          << " almost-fixed: " << (res.holds ? "true" : "false");
                if (!res.holds)
                    std::cout << " (witness pair g=" << res.witness->g
                              << ", h=" << res.witness->h << ")";
                std::cout << "\n";
                if (!res.holds) g_exit = 1;
            } else {
                std::cout << "almost-fixed elements:";
                for (i64 i = 0; i < in.module.order(); ++i) {
                    galmod::ModuleElement p = in.module.element_at(i);
                    if (galmod::is_almost_fixed_element(g, p).holds)
                        std::cout << " " << p.to_string();
                }
                std::cout << "\n";
            }
        } else if (*mu) {
            std::cout << "almost-rational orders:";
            for (i64 m : galmod::almost_rational_roots_of_unity(mu_max))
                std::cout << " " << m;
            std::cout << "\n";
        } else if (*orc) {
            cmd_oracle(orc_name, orc_corpus, orc_json, orc_replay);
        } else if (*sg) {
            if (sg_kind == "gaps" || sg_kind == "frobenius") {
                galmod::NumericalSemigroup s(sg_args);
                if (sg_kind == "gaps") {
                    std::cout << "gaps:";
                    for (i64 m : s.gaps()) std::cout << " " << m;
                    std::cout << "; frobenius: " << s.frobenius()
                              << "; genus: " << s.genus() << "\n";
                } else {
                    std::cout << "frobenius: " << s.frobenius() << "\n";
                }
            } else if (sg_kind == "postage") {
                if (sg_args.size() < 2)
                    throw CLI::ValidationError("semigroup", "postage needs a b [bound]");
                i64 a = sg_args[0], b = sg_args[1];
                i64 bound = sg_args.size() > 2 ? sg_args[2] : 2 * a * b;
                bool ok = galmod::check_postage(a, b, bound);
                std::cout << "postage <" << a << "," << b << "> up to " << bound << ": "
                          << (ok ? "ok" : "FAILED") << "\n";
                if (!ok) g_exit = 1;
            } else {
                if (sg_args.size() != 1)
                    throw CLI::ValidationError("semigroup", "genus-bound needs one prime");
                auto rep = galmod::genus_bound_pipeline(sg_args[0]);
                std::cout << "bound: " << rep.bound << "\n";
                for (const auto& line : rep.excluded) std::cout << "  " << line << "\n";
            }
        } else if (*se) {
            if (se_kind == "units") {
                if (se_args.size() != 2)
                    throw CLI::ValidationError("search", "units needs m e");
                auto s = galmod::find_unit_solution(se_args[0], se_args[1]);
                if (s)
                    std::cout << "solution mod " << s->modulus << ": x=" << s->x
                              << " y=" << s->y << " (x^e=" << s->xe << ", y^e=" << s->ye
                              << ")\n";
                else
                    std::cout << "none\n";
            } else if (se_kind == "empirical-c") {
                if (se_args.size() != 2)
                    throw CLI::ValidationError("search", "empirical-c needs e m_max");
                auto r = galmod::empirical_c(se_args[0], se_args[1]);
                std::cout << "exceptions up to " << r.m_max << " (verified bound only):";
                for (i64 m : r.exceptions) std::cout << " " << m;
                std::cout << "\nlargest exception: " << r.largest_exception << "\n";
            } else if (se_kind == "hensel") {
                if (se_args.size() != 3)
                    throw CLI::ValidationError("search", "hensel needs p k e");
                auto s = galmod::hensel_witness(se_args[0], static_cast<int>(se_args[1]),
                                               se_args[2]);
                if (s)
                    std::cout << "witness mod " << s->modulus << ": x=" << s->x
                              << " y=" << s->y << "\n";
                else
                    std::cout << "not applicable (p <= e)\n";
            } else {
                if (se_args.size() != 2)
                    throw CLI::ValidationError("search", "weil needs e p_max");
                i64 e = se_args[0], pmax = se_args[1];
                i64 checked = 0, failed = 0;
                for (i64 p = 2; p <= pmax; ++p) {
                    if (!galmod::is_prime(p) || (2 * e) % p == 0) continue;
                    auto pc = galmod::count_curve_points(p, e);
                    ++checked;
                    if (!pc.weil_ok) {
                        ++failed;
                        std::cout << "  FAIL p=" << p << " count=" << pc.count
                                  << " slack=" << pc.slack << "\n";
                    }
                }
                std::cout << "weil e=" << e << ": primes checked=" << checked
                          << " failures=" << failed << "\n";
                if (failed > 0) g_exit = 1;
            }
        } else if (*h1) {
            galmod::ParsedInstance in = galmod::load_instance_file(h1_file);
            galmod::CocycleSpace cs(galmod::to_action_group(in));
            std::cout << "|Z1|=" << cs.z1_order() << " |B1|=" << cs.b1_order()
                      << " |H1|=" << cs.h1_order() << "; invariants:";
            if (cs.h1_invariants().empty()) std::cout << " (trivial)";
            for (i64 d : cs.h1_invariants()) std::cout << " " << d;
            std::cout << "\n";
        }
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const galmod::cap_exceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const galmod::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const galmod::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return g_exit;
}
