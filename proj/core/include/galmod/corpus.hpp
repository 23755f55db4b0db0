#pragma once

#include <functional>
#include <string>

#include "galmod/cohomology.hpp"
#include "galmod/inertia.hpp"

namespace galmod {

/// One inertia-model instance: a (matrix, chi) closure together with a
/// filtration witness that passes the semistable check.
struct InertiaInstance {
    std::string id;
    CyclotomicContext ctx;
    SemistableWitness witness;
};

/// Streams the default inertia corpus (p in {3,5,7}): two-generator
/// modules Z/p^a + Z/p^b (a,b <= 2) with triangular chi-extension
/// actions over every cocycle value, optionally glued with a coprime
/// tail of order <= 12, plus all cyclic modules of order <= 100 under
/// single-unit multiplication.  Instances are streamed because the large
/// chi closures are expensive to hold all at once.
void each_inertia_instance(const std::function<void(const InertiaInstance&)>& f);

struct ActionInstance {
    std::string id;
    ActionGroup group;
};

/// All cyclic modules of order <= 100 with the full unit-multiplication
/// action, plus 2-dimensional modules over Z/p (p <= 7) with cyclic
/// matrix actions of order <= 8.
std::vector<ActionInstance> default_almost_fixed_corpus();

/// Instances for the 2(g-1) = (g-1)^2 = 0 identity, mixing satisfying
/// and hypothesis-violating actions.
std::vector<ActionInstance> default_exceptional_corpus();

/// Candidate p-power-order actions on modules of coprime order: all
/// invertible generators on a small module list whose closure has
/// p-power order.
std::vector<ActionInstance> default_pro_p_corpus(i64 p);

struct CyclicActionInstance {
    std::string id;
    ActionGroup group;
    std::size_t generator;  // index generating the cyclic group
};

/// Cyclic groups of order <= 12 acting on modules of order <= 81:
/// unit multiplications on cyclic modules and 2x2 matrix actions.
std::vector<CyclicActionInstance> default_cohomology_corpus();

struct OracleFailure {
    std::string instance;
    std::string witness;
};

/// Aggregate result of sweeping one oracle over a corpus.
struct OracleRun {
    std::string oracle;
    std::string corpus = "default";
    i64 instance_count = 0;
    i64 hypothesis_met = 0;
    i64 pass_count = 0;
    std::vector<OracleFailure> failures;
    bool all_passed() const { return failures.empty(); }
};

const std::vector<std::string>& oracle_names();
bool is_oracle_name(const std::string& name);

/// Runs a named oracle over its default corpus.
OracleRun run_oracle(const std::string& name);

/// Runs an inertia oracle over an explicit instance list (imported
/// corpora); name must be one of the inertia oracle names.
OracleRun run_inertia_oracle(const std::string& name,
                             const std::vector<InertiaInstance>& instances);

/// Runs an almost-fixed or action-based oracle over explicit instances.
OracleRun run_action_oracle(const std::string& name,
                            const std::vector<ActionInstance>& instances);

}  // namespace galmod
