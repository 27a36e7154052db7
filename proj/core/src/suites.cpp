#include "pcw/suites.hpp"

#include <chrono>
#include <sstream>

#include "checks/checks.hpp"
#include "pcw/print.hpp"

namespace pcw {

bool SuiteReport::ok() const { return failures() == 0; }

int SuiteReport::failures() const {
    int n = 0;
    for (const auto& c : checks) n += c.failed;
    return n;
}

int SuiteReport::inconclusive() const {
    int n = 0;
    for (const auto& c : checks) n += c.inconclusive;
    return n;
}

Kit<SkModel> make_full_kit(const SkModel& m) {
    Kit<SkModel> kit(m);
    add_table_combinators(kit);
    add_oracle_combinators(kit);
    add_ba_combinators(kit);
    add_higher_combinators(kit);
    add_type3_combinators(kit);
    return kit;
}

Workbench::Workbench() : kit_(std::make_unique<Kit<SkModel>>(make_full_kit(sk_))) {}

const Kit<NumModel>& Workbench::num_kit() const {
    if (!num_kit_) num_kit_ = std::make_unique<Kit<NumModel>>(num_, 20000);
    return *num_kit_;
}

Sk Workbench::random_element(std::mt19937_64& rng, int max_leaves) const {
    for (;;) {
        std::uniform_int_distribution<int> leaves(1, max_leaves);
        std::function<Sk(int)> build = [&](int n) -> Sk {
            if (n == 1) return rng() % 2 ? Sk::K() : Sk::S();
            int l = std::uniform_int_distribution<int>(1, n - 1)(rng);
            return Sk::app(build(l), build(n - l));
        };
        Fuel fuel(2000);
        auto r = sk_normalize(build(leaves(rng)), fuel);
        if (r.is_defined() && r.value().size() <= 80) return r.value();
    }
}

OracleTable<Sk> Workbench::random_table(std::mt19937_64& rng, int max_entries, bool allow_default) const {
    OracleTable<Sk> t;
    int n = std::uniform_int_distribution<int>(1, max_entries)(rng);
    for (int j = 0; j < n; ++j) t.set(numeral(rng() % 10), numeral(rng() % 10));
    if (allow_default && rng() % 5 < 2) t.set_default(numeral(rng() % 10));
    return t;
}

std::string Workbench::show(const Sk& e) const { return print_sk(e, *kit_); }

std::string Workbench::show(const Outcome<Sk>& o) const {
    if (o.is_defined()) return show(o.value());
    if (o.is_undefined()) return std::string("undefined(") + reason_name(o.reason()) + ")";
    return "fuel";
}

const std::vector<CheckDef>& all_checks() {
    using namespace checks;
    static const std::vector<CheckDef> defs = {
        {"kernel.pca-axioms-sk", "kernel", [](Workbench& w, const SuiteConfig& c) { return pca_axioms(w, c, false, 500); }},
        {"kernel.pca-axioms-num", "kernel", [](Workbench& w, const SuiteConfig& c) { return pca_axioms(w, c, true, 500); }},
        {"kernel.fuel-monotonicity", "kernel", fuel_monotonicity},
        {"kernel.kleene-relations", "kernel", kleene_relations},
        {"kernel.num-coherence", "kernel", num_coherence},
        {"kernel.godel-roundtrip", "kernel", godel_roundtrip},
        {"kernel.filter-generate", "kernel", filter_generation},
        {"kernel.reduction-examples", "kernel", reduction_examples},
        {"kit.parser", "kit", parser_examples},
        {"kit.compiler-correctness", "kit", compiler_correctness},
        {"kit.laws", "kit", kit_laws_sk},
        {"kit.strong-if-poison", "kit", strong_if_poison},
        {"kit.sequences", "kit", sequence_laws},
        {"kit.table-code", "kit", table_code},
        {"kit.num-laws", "kit", kit_laws_num},
        {"oracle.kf", "oracle", kf_law},
        {"oracle.sf", "oracle", sf_law},
        {"oracle.tf", "oracle", tf_law},
        {"oracle.rf-trace", "oracle", rf_trace},
        {"oracle.trace-determinism", "oracle", trace_determinism},
        {"oracle.S-clauses", "oracle", s_clauses},
        {"oracle.examples", "oracle", oracle_examples},
        {"oracle.af-axioms", "oracle", af_axioms},
        {"oracle.af-filter", "oracle", af_filter},
        {"oracle.universal-tracker", "oracle", universal_tracker_check},
        {"funcpca.kappa", "funcpca", kappa_law},
        {"funcpca.sigma", "funcpca", sigma_law},
        {"funcpca.sigma-native", "funcpca", sigma_native_agrees},
        {"funcpca.tau-nu-rho", "funcpca", tau_nu_rho},
        {"funcpca.composition", "funcpca", composition_closure},
        {"funcpca.extension-tracker", "funcpca", extension_tracker_check},
        {"funcpca.interchange", "funcpca", interchange_check},
        {"funcpca.chain-meet", "funcpca", chain_meets},
        {"funcpca.examples", "funcpca", ba_examples},
        {"higher.functionals", "higher", functional_examples},
        {"higher.monotonicity", "higher", functional_monotonicity},
        {"higher.fixpoint-stages", "higher", fixpoint_stages_check},
        {"higher.z-representer", "higher", z_representers},
        {"higher.phi-coherence", "higher", phi_coherence},
        {"higher.type3-tau", "higher", type3_tau_check},
        {"higher.type3-t", "higher", type3_t_check},
    };
    return defs;
}

std::vector<std::string> suite_names() { return {"kernel", "kit", "oracle", "funcpca", "higher", "all"}; }

CheckResult run_check(const std::string& name, Workbench& wb, const SuiteConfig& cfg) {
    for (const auto& d : all_checks())
        if (d.name == name) {
            auto start = std::chrono::steady_clock::now();
            CheckResult r;
            try {
                r = d.run(wb, cfg);
            } catch (const std::exception& e) {
                r.fail(std::string("exception: ") + e.what());
            }
            r.name = name;
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            return r;
        }
    CheckResult r;
    r.name = name;
    r.fail("no such check");
    return r;
}

SuiteReport run_suite(const std::string& suite, Workbench& wb, const SuiteConfig& cfg) {
    SuiteReport rep;
    rep.suite = suite;
    auto start = std::chrono::steady_clock::now();
    for (const auto& d : all_checks())
        if (suite == "all" || d.suite == suite) rep.checks.push_back(run_check(d.name, wb, cfg));
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

std::string format_check(const CheckResult& r) {
    std::ostringstream os;
    os << (r.failed ? "FAIL " : "ok   ") << r.name << "  passed=" << r.passed << " failed=" << r.failed
       << " inconclusive=" << r.inconclusive;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << " (" << r.seconds << "s)";
    for (const auto& n : r.notes) os << "\n     - " << n;
    return os.str();
}

}  // namespace pcw
