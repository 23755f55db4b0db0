#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <string>

#include "galmod/json_io.hpp"

using namespace galmod;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& text) {
        static int counter = 0;
        path = (std::filesystem::temp_directory_path() /
                ("galmod_test_" + std::to_string(++counter) + ".json"))
                   .string();
        std::ofstream out(path);
        out << text;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

std::string what_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const parse_error& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("instance round trip") {
    TempFile t(R"({
      "schema_version": 1,
      "id": "rot5",
      "group_factors": [5, 5],
      "action_generators": [[[0, 1], [-1, 0]]]
    })");
    ParsedInstance in = load_instance_file(t.path);
    CHECK(in.id == "rot5");
    CHECK(in.module.factors() == std::vector<i64>{5, 5});
    ActionGroup g = to_action_group(in);
    CHECK(g.size() == 4);
    // serialize and reload
    TempFile t2(instance_to_json(in));
    ParsedInstance back = load_instance_file(t2.path);
    CHECK(back.id == in.id);
    CHECK(back.module == in.module);
    CHECK(back.generators == in.generators);
}

TEST_CASE("inertia instance with chi and a declared filtration") {
    TempFile t(R"({
      "id": "z20",
      "group_factors": [20],
      "action_generators": [[[7]]],
      "p": 5,
      "chi": {"modulus": 5, "values": [2]},
      "m_prime_generators": [[2]]
    })");
    InertiaInstance inst = to_inertia_instance(load_instance_file(t.path));
    CHECK(inst.id == "z20");
    CHECK(inst.ctx.size() == 4);
    CHECK(inst.witness.m_prime.order() == 10);
    CHECK(verify_ordinary_semistable(inst.ctx, inst.witness));
}

TEST_CASE("corpus file") {
    TempFile t(R"({"instances": [
      {"id": "a", "group_factors": [6], "action_generators": [[[5]]]},
      {"id": "b", "group_factors": [4], "action_generators": [[[3]]]}
    ]})");
    auto parsed = load_corpus_file(t.path);
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0].id == "a");
    CHECK(parsed[1].module.factors() == std::vector<i64>{4});
}

TEST_CASE("parse errors carry json paths") {
    TempFile missing(R"({"id": "x"})");
    CHECK(what_of([&] { load_instance_file(missing.path); })
              .find("group_factors") != std::string::npos);

    TempFile bad_version(R"({"schema_version": 2, "group_factors": [5]})");
    CHECK(what_of([&] { load_instance_file(bad_version.path); })
              .find("schema_version") != std::string::npos);

    TempFile bad_chi(R"({"group_factors": [5], "p": 5, "chi": {"modulus": 5}})");
    CHECK(what_of([&] { load_instance_file(bad_chi.path); }).find("chi") !=
          std::string::npos);

    TempFile bad_matrix(R"({"group_factors": [5], "action_generators": [[["x"]]]})");
    CHECK(what_of([&] { load_instance_file(bad_matrix.path); })
              .find("action_generators[0]") != std::string::npos);

    TempFile not_json("{");
    CHECK_THROWS_AS(load_instance_file(not_json.path), parse_error);
    CHECK_THROWS_AS(load_instance_file("/nonexistent/galmod.json"), parse_error);

    TempFile no_list(R"({"not_instances": []})");
    CHECK_THROWS_AS(load_corpus_file(no_list.path), parse_error);
}

TEST_CASE("report round trip and replay comparison") {
    OracleRun run;
    run.oracle = "splitting";
    run.corpus = "default";
    run.instance_count = 10;
    run.hypothesis_met = 8;
    run.pass_count = 8;
    run.failures.push_back({"inst-3", "witness text"});
    TempFile t(report_to_json(run, 12.5, "galmod test"));
    ReportSummary s = load_report_file(t.path);
    CHECK(s.oracle == "splitting");
    CHECK(s.instance_count == 10);
    CHECK(s.pass_count == 8);
    REQUIRE(s.failures.size() == 1);
    CHECK(s.failures[0].instance == "inst-3");
    CHECK(replay_matches(s, run));

    OracleRun other = run;
    other.pass_count = 9;
    CHECK(!replay_matches(s, other));
    other = run;
    other.failures[0].witness = "different";
    CHECK(!replay_matches(s, other));
}
