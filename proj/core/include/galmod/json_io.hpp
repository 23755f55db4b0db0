#pragma once

#include <optional>
#include <string>

#include "galmod/corpus.hpp"

namespace galmod {

/// Deserialized instance description (schema_version 1): group factors,
/// generator matrices, and optional chi / prime / filtration data.
struct ParsedInstance {
    std::string id;
    FinAbGroup module;
    std::vector<Mat> generators;
    std::optional<i64> p;
    std::optional<i64> chi_modulus;
    std::vector<i64> chi_values;  // one per generator when chi present
    std::optional<Mat> m_prime_generators;  // coordinate rows
};

/// Single-instance file.  Malformed input raises parse_error with the
/// offending JSON path in the message.
ParsedInstance load_instance_file(const std::string& path);

/// Corpus file: {"schema_version": 1, "instances": [...]}.
std::vector<ParsedInstance> load_corpus_file(const std::string& path);

ActionGroup to_action_group(const ParsedInstance& in);
InertiaInstance to_inertia_instance(const ParsedInstance& in);

std::string instance_to_json(const ParsedInstance& in);

/// Machine-readable report for one oracle run.
std::string report_to_json(const OracleRun& run, double wall_ms,
                           const std::string& tool_version);

/// Pass/fail skeleton of a stored report, for replay comparison.
struct ReportSummary {
    std::string oracle;
    std::string corpus;
    i64 instance_count;
    i64 hypothesis_met;
    i64 pass_count;
    std::vector<OracleFailure> failures;
};

ReportSummary load_report_file(const std::string& path);

/// True when a fresh run reproduces the stored pass/fail data exactly.
bool replay_matches(const ReportSummary& stored, const OracleRun& fresh);

}  // namespace galmod
