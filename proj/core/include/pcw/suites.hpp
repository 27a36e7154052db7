#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "pcw/higher.hpp"
#include "pcw/num.hpp"
#include "pcw/sk.hpp"

namespace pcw {

struct SuiteConfig {
    std::uint64_t fuel = 100000;
    std::uint64_t seed = 20240611;
    int stages = 8;
};

struct CheckResult {
    std::string name;
    int passed = 0;
    int failed = 0;
    int inconclusive = 0;
    double seconds = 0;
    std::vector<std::string> notes;  // first few failures, for the report

    bool ok() const { return failed == 0; }
    void pass() { ++passed; }
    void fail(const std::string& why) {
        ++failed;
        if (notes.size() < 8) notes.push_back(why);
    }
    void expect(bool cond, const std::string& why) { cond ? pass() : fail(why); }
    void unknown() { ++inconclusive; }
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    double seconds = 0;

    bool ok() const;
    int failures() const;
    int inconclusive() const;
};

// The shared models and kits, built once per process.
class Workbench {
public:
    Workbench();

    const SkModel& sk() const { return sk_; }
    const NumModel& num() const { return num_; }
    const Kit<SkModel>& kit() const { return *kit_; }
    const Kit<NumModel>& num_kit() const;

    Sk numeral(std::uint64_t n) const { return kit_->numeral(n); }
    // A random weak normal form with at most the given number of leaves.
    Sk random_element(std::mt19937_64& rng, int max_leaves = 7) const;
    OracleTable<Sk> random_table(std::mt19937_64& rng, int max_entries = 6, bool allow_default = true) const;
    std::string show(const Sk& e) const;
    std::string show(const Outcome<Sk>& o) const;

private:
    SkModel sk_;
    NumModel num_;
    std::unique_ptr<Kit<SkModel>> kit_;
    mutable std::unique_ptr<Kit<NumModel>> num_kit_;
};

Kit<SkModel> make_full_kit(const SkModel& m);

struct CheckDef {
    std::string name;
    std::string suite;
    std::function<CheckResult(Workbench&, const SuiteConfig&)> run;
};

const std::vector<CheckDef>& all_checks();
std::vector<std::string> suite_names();
CheckResult run_check(const std::string& name, Workbench& wb, const SuiteConfig& cfg);
SuiteReport run_suite(const std::string& suite, Workbench& wb, const SuiteConfig& cfg);

std::string format_check(const CheckResult& r);

}  // namespace pcw
