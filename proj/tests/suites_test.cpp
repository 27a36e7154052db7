#include <doctest.h>

#include <set>

#include "common.hpp"

using namespace pcw;

TEST_SUITE("suites") {

TEST_CASE("registry covers every suite") {
    std::set<std::string> seen;
    for (const auto& d : all_checks()) {
        CHECK(d.name.rfind(d.suite + ".", 0) == 0);
        seen.insert(d.suite);
    }
    for (const auto& s : {"kernel", "kit", "oracle", "funcpca", "higher"}) CHECK(seen.count(s) == 1);
    auto names = suite_names();
    CHECK(std::find(names.begin(), names.end(), "all") != names.end());
}

TEST_CASE("running a check by name") {
    auto r = run_check("kernel.reduction-examples", testing::wb(), SuiteConfig{});
    CHECK(r.ok());
    CHECK(r.passed > 0);
    CHECK(format_check(r).rfind("ok   kernel.reduction-examples  passed=", 0) == 0);
    CHECK_FALSE(run_check("kernel.nosuch", testing::wb(), SuiteConfig{}).ok());
}

TEST_CASE("a report fails when any check fails") {
    SuiteReport rep;
    CheckResult good, bad;
    good.pass();
    bad.fail("broken");
    bad.unknown();
    rep.checks = {good};
    CHECK(rep.ok());
    rep.checks.push_back(bad);
    CHECK_FALSE(rep.ok());
    CHECK(rep.failures() == 1);
    CHECK(rep.inconclusive() == 1);
    CHECK(format_check(bad).rfind("FAIL", 0) == 0);
}

}
