#pragma once

#include <chrono>
#include <random>
#include <string>

#include "pcw/suites.hpp"

namespace pcw::checks {

std::mt19937_64 rng_for(const SuiteConfig& cfg, const std::string& name);

CheckResult pca_axioms(Workbench& wb, const SuiteConfig& cfg, bool numeric, int triples);
CheckResult fuel_monotonicity(Workbench& wb, const SuiteConfig& cfg);
CheckResult kleene_relations(Workbench& wb, const SuiteConfig& cfg);
CheckResult num_coherence(Workbench& wb, const SuiteConfig& cfg);
CheckResult godel_roundtrip(Workbench& wb, const SuiteConfig& cfg);
CheckResult filter_generation(Workbench& wb, const SuiteConfig& cfg);
CheckResult reduction_examples(Workbench& wb, const SuiteConfig& cfg);

CheckResult parser_examples(Workbench& wb, const SuiteConfig& cfg);
CheckResult compiler_correctness(Workbench& wb, const SuiteConfig& cfg);
CheckResult kit_laws_sk(Workbench& wb, const SuiteConfig& cfg);
CheckResult strong_if_poison(Workbench& wb, const SuiteConfig& cfg);
CheckResult sequence_laws(Workbench& wb, const SuiteConfig& cfg);
CheckResult kit_laws_num(Workbench& wb, const SuiteConfig& cfg);
CheckResult table_code(Workbench& wb, const SuiteConfig& cfg);

CheckResult kf_law(Workbench& wb, const SuiteConfig& cfg);
CheckResult sf_law(Workbench& wb, const SuiteConfig& cfg);
CheckResult tf_law(Workbench& wb, const SuiteConfig& cfg);
CheckResult rf_trace(Workbench& wb, const SuiteConfig& cfg);
CheckResult trace_determinism(Workbench& wb, const SuiteConfig& cfg);
CheckResult s_clauses(Workbench& wb, const SuiteConfig& cfg);
CheckResult oracle_examples(Workbench& wb, const SuiteConfig& cfg);
CheckResult af_axioms(Workbench& wb, const SuiteConfig& cfg);
CheckResult af_filter(Workbench& wb, const SuiteConfig& cfg);
CheckResult universal_tracker_check(Workbench& wb, const SuiteConfig& cfg);

CheckResult kappa_law(Workbench& wb, const SuiteConfig& cfg);
CheckResult sigma_law(Workbench& wb, const SuiteConfig& cfg);
CheckResult sigma_native_agrees(Workbench& wb, const SuiteConfig& cfg);
CheckResult tau_nu_rho(Workbench& wb, const SuiteConfig& cfg);
CheckResult composition_closure(Workbench& wb, const SuiteConfig& cfg);
CheckResult extension_tracker_check(Workbench& wb, const SuiteConfig& cfg);
CheckResult interchange_check(Workbench& wb, const SuiteConfig& cfg);
CheckResult chain_meets(Workbench& wb, const SuiteConfig& cfg);
CheckResult ba_examples(Workbench& wb, const SuiteConfig& cfg);

CheckResult functional_examples(Workbench& wb, const SuiteConfig& cfg);
CheckResult functional_monotonicity(Workbench& wb, const SuiteConfig& cfg);
CheckResult fixpoint_stages_check(Workbench& wb, const SuiteConfig& cfg);
CheckResult z_representers(Workbench& wb, const SuiteConfig& cfg);
CheckResult phi_coherence(Workbench& wb, const SuiteConfig& cfg);
CheckResult type3_tau_check(Workbench& wb, const SuiteConfig& cfg);
CheckResult type3_t_check(Workbench& wb, const SuiteConfig& cfg);

// Shared by the oracle, BA and higher checks.
struct ProbeSet {
    std::vector<Sk> probes;
    std::vector<std::string> kinds;      // "lift", "ask", "ask2"
    std::vector<int> parent;             // the asked probe, -1 for a lift
    std::vector<OracleTable<Sk>> tables;  // the lifted table
};
ProbeSet standard_probes(const Workbench& wb, ProbeBook<SkModel>& book, bool constant_only);
std::vector<Sk> interrogator_pool(const Workbench& wb, std::mt19937_64& rng);

}  // namespace pcw::checks
