#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run pcw_run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = pcw::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_table(const std::string& name, const std::string& body) {
    std::string path = "pcw_cli_test_" + name + ".tbl";
    std::ofstream(path) << body;
    return path;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("eval") {
    auto r = pcw_run({"eval", "(#k #s) #k"});
    CHECK(r.code == pcw::cli::Ok);
    CHECK(r.out == "#s\n");
    CHECK(pcw_run({"eval", "(\\x. x) #k"}).out == "#k\n");
    auto loop = pcw_run({"eval", "#sii (#sii)"});
    CHECK(loop.code == pcw::cli::FuelInconclusive);
    CHECK(loop.out == "! fuel\n");
    auto m = pcw_run({"eval", "#suc 4", "--machine"});
    CHECK(m.out == "= num:5\n");
    auto bad = pcw_run({"eval", "(#k"});
    CHECK(bad.code == pcw::cli::ParseFailure);
    CHECK(bad.err == "parse error at 3: expected ')'\n");
}

TEST_CASE("eval in the numeric model") {
    auto r = pcw_run({"eval", "#p0 (#p #k #s)", "--model", "num", "--machine"});
    CHECK(r.code == pcw::cli::Ok);
    CHECK(r.out == "= #k\n");
    CHECK(pcw_run({"eval", "#k", "--model", "num"}).out == "#k\n");
}

TEST_CASE("compile") {
    auto r = pcw_run({"compile", "\\x y. x"});
    CHECK(r.code == pcw::cli::Ok);
    CHECK(r.out == "#s (#k #k) (#s #k #k)\n");
    CHECK(pcw_run({"compile", "\\x. x"}).out == "#s #k #k\n");
    CHECK(pcw_run({"compile", "\\x. y"}).code == pcw::cli::ParseFailure);
}

TEST_CASE("oracle") {
    std::string path = temp_table("five", "5 -> 7\n");
    auto hit = pcw_run({"oracle", "#rf", "5", "--oracle", path});
    CHECK(hit.code == pcw::cli::Ok);
    CHECK(hit.out == "? 5 => 7\n= 7\n");
    auto gap = pcw_run({"oracle", "#rf", "3", "--oracle", path});
    CHECK(gap.code == pcw::cli::Undefined);
    CHECK(gap.out == "! undefined(oracle)\n");
    auto kf = pcw_run({"oracle", "#kf", "#s"});
    CHECK(kf.code == pcw::cli::Ok);
    CHECK(kf.out.rfind("? ", 0) != 0);
    CHECK(kf.out.rfind("= ", 0) == 0);
    std::string broken = temp_table("broken", "5 -> 7\nnonsense\n");
    auto bad = pcw_run({"oracle", "#rf", "5", "--oracle", broken});
    CHECK(bad.code == pcw::cli::ParseFailure);
    CHECK(bad.err.find("line 2") != std::string::npos);
    std::remove(path.c_str());
    std::remove(broken.c_str());
}

TEST_CASE("fix") {
    auto c = pcw_run({"fix", "const:5", "--probes", "0,1,2"});
    CHECK(c.code == pcw::cli::Ok);
    CHECK(c.out == "functional const:5, 8 stages\n0\tstage 1\t5\n1\tstage 1\t5\n2\tstage 1\t5\nmonotone: yes\n");
    auto e = pcw_run({"fix", "eval0", "--probes", "lift(table{0->4; default 1}),ask(lift(table{; default 3}))",
                      "--machine", "--stages", "4"});
    CHECK(e.out ==
          "probe lift(table{0->4; default 1}) stage 1 value num:4\n"
          "probe ask(lift(table{; default 3})) stage 2 value num:3\n"
          "monotone yes\n");
    auto k = pcw_run({"fix", "kleeneE", "--probes", "ask(lift(table{0->4; default 0})),lift(table{1->0})"});
    CHECK(k.out.find("ask(lift(table{0->4; default 0}))\tstage 2\t1\n") != std::string::npos);
    CHECK(k.out.find("lift(table{1->0})\t>8\n") != std::string::npos);
    CHECK(pcw_run({"fix", "nosuch", "--probes", "0"}).code == pcw::cli::ParseFailure);
}

TEST_CASE("usage errors") {
    CHECK(pcw_run({}).code == pcw::cli::ParseFailure);
    CHECK(pcw_run({"eval"}).code == pcw::cli::ParseFailure);
    CHECK(pcw_run({"eval", "#k", "--model", "other"}).code == pcw::cli::ParseFailure);
    CHECK(pcw_run({"suite", "nosuch"}).code == pcw::cli::ParseFailure);
    CHECK(pcw_run({"--help"}).code == pcw::cli::Ok);
}

TEST_CASE("probe lists split outside brackets") {
    auto p = pcw::cli::split_probes("0,lift(table{1->2, 3->4}),ask(x, y)");
    REQUIRE(p.size() == 3);
    CHECK(p[1] == "lift(table{1->2, 3->4})");
    CHECK(p[2] == "ask(x, y)");
    CHECK(pcw::cli::split_probes("").empty());
}

}
