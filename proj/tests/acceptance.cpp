#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "pcw/suites.hpp"

using namespace pcw;

namespace {

struct Requirement {
    std::string check;
    int min_cases = 0;  // passed + inconclusive
    int min_passed = 0;
    bool exact = false;  // no inconclusive cases allowed
};

struct Criterion {
    int id;
    std::string title;
    std::vector<Requirement> reqs;
    double max_seconds = 0;  // 0 means no time bound beyond the full-suite one
};

const double kFullSuiteSeconds = 300.0;

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> c = {
        {1, "PCA axioms in both models",
         {{"kernel.pca-axioms-sk", 1500, 1400}, {"kernel.pca-axioms-num", 1500, 1400}}, 10.0},
        {2, "compiler correctness", {{"kit.compiler-correctness", 600, 600}}, 30.0},
        {3, "combinator kit laws in the SK model",
         {{"kit.laws", 0, 500, true}, {"kit.strong-if-poison", 0, 4, true}, {"kit.sequences", 0, 200, true}}},
        {4, "oracle laws and trace determinism",
         {{"oracle.kf", 1000, 1000},
          {"oracle.sf", 500, 100},
          {"oracle.tf", 100, 100},
          {"oracle.rf-trace", 0, 300},
          {"oracle.trace-determinism", 0, 100}}},
        {5, "universal tracker", {{"oracle.universal-tracker", 0, 250}}},
        {6, "BA laws",
         {{"funcpca.kappa", 50, 50},
          {"funcpca.sigma", 30, 30},
          {"funcpca.tau-nu-rho", 150, 150},
          {"funcpca.composition", 20, 20},
          {"funcpca.extension-tracker", 50, 50}}},
        {7, "numeric model coherence", {{"kernel.num-coherence", 40000, 40000, true}}},
        {8, "fixpoint stages and z-representers",
         {{"higher.functionals", 0, 3},
          {"higher.monotonicity", 0, 180},
          {"higher.fixpoint-stages", 0, 60},
          {"higher.z-representer", 0, 60}}},
        {9, "type-3 constructions",
         {{"higher.phi-coherence", 0, 40}, {"higher.type3-tau", 0, 20}, {"higher.type3-t", 0, 20}}},
        {10, "full suite wall-clock", {}, kFullSuiteSeconds},
    };
    return c;
}

}  // namespace

int main() {
    auto start = std::chrono::steady_clock::now();
    Workbench wb;
    SuiteConfig cfg;
    std::map<std::string, CheckResult> results;
    bool suite_ok = true;
    for (const auto& d : all_checks()) {
        auto r = run_check(d.name, wb, cfg);
        std::cerr << format_check(r) << "\n";
        for (const auto& n : r.notes) std::cerr << "     - " << n << "\n";
        suite_ok = suite_ok && r.ok();
        results[d.name] = r;
    }
    double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    bool all_ok = true;
    for (const auto& c : criteria()) {
        bool ok = true;
        double seconds = 0;
        std::string why;
        for (const auto& q : c.reqs) {
            auto it = results.find(q.check);
            if (it == results.end()) {
                ok = false;
                why += " missing " + q.check + ";";
                continue;
            }
            const auto& r = it->second;
            seconds += r.seconds;
            if (r.failed) why += " " + q.check + " failed " + std::to_string(r.failed) + ";";
            if (r.passed + r.inconclusive < q.min_cases) why += " " + q.check + " too few cases;";
            if (r.passed < q.min_passed) why += " " + q.check + " too few passes;";
            if (q.exact && r.inconclusive) why += " " + q.check + " inconclusive cases;";
        }
        if (c.id == 10) seconds = total;
        if (c.max_seconds > 0 && seconds >= c.max_seconds) why += " over the time bound;";
        ok = why.empty();
        all_ok = all_ok && ok;
        char line[256];
        std::snprintf(line, sizeof line, "criterion %2d: %s  %-38s %7.2fs", c.id, ok ? "pass" : "FAIL",
                      c.title.c_str(), seconds);
        std::cout << line;
        if (c.max_seconds > 0) std::cout << " (bound " << c.max_seconds << "s)";
        if (!ok) std::cout << " --" << why;
        std::cout << "\n";
    }
    std::cout << "full suite: " << (suite_ok ? "pass" : "FAIL") << ", " << results.size() << " checks\n";
    return all_ok && suite_ok ? 0 : 1;
}
