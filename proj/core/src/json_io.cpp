#include "galmod/json_io.hpp"

#include <fstream>

#include <json.hpp>

#include "galmod/errors.hpp"

namespace galmod {

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw parse_error(path + ": " + e.what());
    }
    return j;
}

i64 get_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) throw parse_error(path + ": expected integer");
    return j.get<i64>();
}

Vec get_int_array(const json& j, const std::string& path) {
    if (!j.is_array()) throw parse_error(path + ": expected array of integers");
    Vec v;
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(get_int(j[i], path + "[" + std::to_string(i) + "]"));
    return v;
}

Mat get_matrix(const json& j, const std::string& path) {
    if (!j.is_array()) throw parse_error(path + ": expected array of rows");
    Mat m;
    for (std::size_t i = 0; i < j.size(); ++i)
        m.push_back(get_int_array(j[i], path + "[" + std::to_string(i) + "]"));
    return m;
}

ParsedInstance parse_instance(const json& j, const std::string& path) {
    if (!j.is_object()) throw parse_error(path + ": expected object");
    ParsedInstance out;
    if (j.contains("schema_version") &&
        get_int(j.at("schema_version"), path + ".schema_version") != 1)
        throw parse_error(path + ".schema_version: unsupported version");
    if (j.contains("id")) {
        if (!j.at("id").is_string()) throw parse_error(path + ".id: expected string");
        out.id = j.at("id").get<std::string>();
    }
    if (!j.contains("group_factors"))
        throw parse_error(path + ".group_factors: missing");
    try {
        out.module = FinAbGroup::make(get_int_array(j.at("group_factors"),
                                                    path + ".group_factors"));
    } catch (const parse_error&) {
        throw;
    } catch (const error& e) {
        throw parse_error(path + ".group_factors: " + e.what());
    }
    if (j.contains("action_generators")) {
        const json& gens = j.at("action_generators");
        if (!gens.is_array())
            throw parse_error(path + ".action_generators: expected array");
        for (std::size_t i = 0; i < gens.size(); ++i)
            out.generators.push_back(get_matrix(
                gens[i], path + ".action_generators[" + std::to_string(i) + "]"));
    }
    if (j.contains("p")) out.p = get_int(j.at("p"), path + ".p");
    if (j.contains("chi")) {
        const json& chi = j.at("chi");
        if (!chi.is_object() || !chi.contains("modulus") || !chi.contains("values"))
            throw parse_error(path + ".chi: expected {modulus, values}");
        out.chi_modulus = get_int(chi.at("modulus"), path + ".chi.modulus");
        out.chi_values = get_int_array(chi.at("values"), path + ".chi.values");
        if (out.chi_values.size() != out.generators.size())
            throw parse_error(path + ".chi.values: one value per generator required");
    }
    if (j.contains("m_prime_generators"))
        out.m_prime_generators =
            get_matrix(j.at("m_prime_generators"), path + ".m_prime_generators");
    return out;
}

json instance_json(const ParsedInstance& in) {
    json j;
    j["schema_version"] = 1;
    if (!in.id.empty()) j["id"] = in.id;
    j["group_factors"] = in.module.factors();
    j["action_generators"] = in.generators;
    if (in.p) j["p"] = *in.p;
    if (in.chi_modulus) {
        j["chi"] = {{"modulus", *in.chi_modulus}, {"values", in.chi_values}};
    }
    if (in.m_prime_generators) j["m_prime_generators"] = *in.m_prime_generators;
    return j;
}

}  // namespace

ParsedInstance load_instance_file(const std::string& path) {
    return parse_instance(load_json(path), "$");
}

std::vector<ParsedInstance> load_corpus_file(const std::string& path) {
    json j = load_json(path);
    if (!j.is_object() || !j.contains("instances") || !j.at("instances").is_array())
        throw parse_error("$.instances: expected array");
    std::vector<ParsedInstance> out;
    for (std::size_t i = 0; i < j.at("instances").size(); ++i)
        out.push_back(parse_instance(j.at("instances")[i],
                                     "$.instances[" + std::to_string(i) + "]"));
    return out;
}

ActionGroup to_action_group(const ParsedInstance& in) {
    std::vector<Endomorphism> gens;
    for (const auto& a : in.generators) gens.push_back(Endomorphism::make(in.module, a));
    return ActionGroup::close_generators(in.module, gens);
}

InertiaInstance to_inertia_instance(const ParsedInstance& in) {
    if (!in.p) throw parse_error("$.p: required for inertia instances");
    if (!in.chi_modulus) throw parse_error("$.chi: required for inertia instances");
    std::vector<std::pair<Mat, i64>> gens;
    for (std::size_t i = 0; i < in.generators.size(); ++i)
        gens.push_back({in.generators[i], in.chi_values[i]});
    CyclotomicContext ctx =
        CyclotomicContext::close(*in.p, *in.chi_modulus, in.module, gens);
    Subgroup mp = in.m_prime_generators
                      ? Subgroup::from_lattice_rows(in.module, *in.m_prime_generators)
                      : Subgroup::trivial(in.module);
    std::string id = in.id.empty() ? "imported" : in.id;
    return InertiaInstance{id, std::move(ctx), SemistableWitness{mp}};
}

std::string instance_to_json(const ParsedInstance& in) {
    return instance_json(in).dump(2);
}

std::string report_to_json(const OracleRun& run, double wall_ms,
                           const std::string& tool_version) {
    json j;
    j["schema_version"] = 1;
    j["oracle"] = run.oracle;
    j["corpus"] = run.corpus;
    j["instance_count"] = run.instance_count;
    j["hypothesis_met"] = run.hypothesis_met;
    j["pass_count"] = run.pass_count;
    json fails = json::array();
    for (const auto& f : run.failures)
        fails.push_back({{"instance", f.instance}, {"witness", f.witness}});
    j["failures"] = fails;
    j["wall_time_ms"] = wall_ms;
    j["tool_version"] = tool_version;
    return j.dump(2);
}

ReportSummary load_report_file(const std::string& path) {
    json j = load_json(path);
    if (!j.is_object()) throw parse_error("$: expected report object");
    for (const char* key : {"oracle", "corpus"})
        if (!j.contains(key) || !j.at(key).is_string())
            throw parse_error(std::string("$.") + key + ": expected string");
    ReportSummary s;
    s.oracle = j.at("oracle").get<std::string>();
    s.corpus = j.at("corpus").get<std::string>();
    s.instance_count = get_int(j.at("instance_count"), "$.instance_count");
    s.hypothesis_met = get_int(j.at("hypothesis_met"), "$.hypothesis_met");
    s.pass_count = get_int(j.at("pass_count"), "$.pass_count");
    if (j.contains("failures")) {
        if (!j.at("failures").is_array()) throw parse_error("$.failures: expected array");
        for (const auto& f : j.at("failures"))
            s.failures.push_back({f.value("instance", std::string()),
                                  f.value("witness", std::string())});
    }
    return s;
}

bool replay_matches(const ReportSummary& stored, const OracleRun& fresh) {
    if (stored.oracle != fresh.oracle || stored.instance_count != fresh.instance_count ||
        stored.hypothesis_met != fresh.hypothesis_met ||
        stored.pass_count != fresh.pass_count ||
        stored.failures.size() != fresh.failures.size())
        return false;
    for (std::size_t i = 0; i < stored.failures.size(); ++i)
        if (stored.failures[i].instance != fresh.failures[i].instance ||
            stored.failures[i].witness != fresh.failures[i].witness)
            return false;
    return true;
}

}  // namespace galmod
