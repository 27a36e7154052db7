#include <doctest.h>

#include "common.hpp"
#include "pcw/print.hpp"

using namespace pcw;
using testing::N;
using testing::wb;

namespace {

using Fn = PartialFn<SkModel>;

const Kit<SkModel>& kit() { return wb().kit(); }

std::string render(const Trace<Sk>& t) {
    std::function<std::string(const Sk&)> show = [](const Sk& e) { return print_sk(e, kit()); };
    return t.render(show);
}

Interrogation<Sk> run(const Sk& a, const Sk& b, const Fn& f, std::uint64_t fuel = 100000) {
    Fuel g(fuel);
    return oracle_apply(kit(), a, b, f, g);
}

Env<Sk> env() { return kit().env(); }

OracleTable<Sk> read(const std::string& text) {
    std::function<Sk(const Term<Sk>&)> close = [](const Term<Sk>& t) {
        return compile_closed(t, wb().sk(), kit().basis());
    };
    return parse_table<Sk>(text, env(), close);
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("a single consultation through r_f") {
    Fn f = Fn::table(OracleTable<Sk>{{N(5), N(7)}});
    auto res = run(kit().get("rf"), N(5), f);
    REQUIRE(res.outcome.is_defined());
    CHECK(res.outcome.value() == N(7));
    REQUIRE(res.trace.steps.size() == 1);
    CHECK(res.trace.steps[0].first == N(5));
    CHECK(render(res.trace) == "? 5 => 7\n= 7\n");
    auto gap = run(kit().get("rf"), N(4), f);
    REQUIRE(gap.outcome.is_undefined());
    CHECK(gap.outcome.reason() == Reason::OracleUndefined);
    CHECK(gap.trace.pending_query == N(4));
    CHECK(render(gap.trace) == "! undefined(oracle)\n");
}

TEST_CASE("k_f never consults the oracle") {
    auto rng = testing::rng(8);
    for (int j = 0; j < 30; ++j) {
        Sk a = wb().random_element(rng), b = wb().random_element(rng);
        Fn f = Fn::table(wb().random_table(rng));
        auto once = run(kit().get("kf"), a, f);
        REQUIRE(once.outcome.is_defined());
        CHECK(once.trace.steps.empty());
        auto twice = run(once.outcome.value(), b, f);
        REQUIRE(twice.outcome.is_defined());
        CHECK(twice.outcome.value() == a);
        CHECK(twice.trace.steps.empty());
    }
}

TEST_CASE("t_f follows base application") {
    auto rng = testing::rng(9);
    Fn f = Fn::empty();
    for (int j = 0; j < 30; ++j) {
        Sk a = wb().random_element(rng), b = wb().random_element(rng);
        Fuel g(100000);
        auto direct = wb().sk().apply(a, b, g);
        if (!direct.is_defined()) continue;
        auto ta = run(kit().get("tf"), a, f);
        REQUIRE(ta.outcome.is_defined());
        auto tab = run(ta.outcome.value(), b, f, 1000000);
        REQUIRE(tab.outcome.is_defined());
        CHECK(tab.outcome.value() == direct.value());
    }
}

TEST_CASE("traces are reproducible and exact about fuel") {
    Fn f = Fn::table(OracleTable<Sk>{{N(1), N(2)}, {N(2), N(3)}});
    Sk twice = kit().compile_text(
        "\\x. if #zero (#pred (#lh x)) then #p #bot (#fst x) "
        "else if #zero (#pred (#pred (#lh x))) then #p #bot (#read x 1) else #p #top (#read x 2)");
    auto a = run(twice, N(1), f);
    auto b = run(twice, N(1), f);
    REQUIRE(a.outcome.is_defined());
    CHECK(a.outcome.value() == N(3));
    CHECK(render(a.trace) == "? 1 => 2\n? 2 => 3\n= 3\n");
    CHECK(render(a.trace) == render(b.trace));
    CHECK(a.trace.spent == b.trace.spent);
    auto exact = run(twice, N(1), f, a.trace.spent);
    CHECK(exact.outcome.is_defined());
    auto short_by_one = run(twice, N(1), f, a.trace.spent - 1);
    CHECK(short_by_one.outcome.is_exhausted());
    CHECK(render(short_by_one.trace).ends_with("! fuel\n"));
}

TEST_CASE("a non-boolean verdict is undefined") {
    Sk bad = kit().compile_text("\\x. #p (#k #k) x");
    auto res = run(bad, N(1), Fn::empty());
    REQUIRE(res.outcome.is_undefined());
    CHECK(res.outcome.reason() == Reason::NotABoolean);
}

TEST_CASE("adjoining an element") {
    Sk r = kit().get("sii");
    Fn hat = adjoin_element<SkModel>(r);
    for (std::uint64_t n = 0; n < 5; ++n) CHECK(run(kit().get("rf"), N(n), hat).outcome.value() == r);
    auto w = af_filter_member(kit(), r, hat, {Sk::K()}, 3, 100000);
    REQUIRE(w);
    CHECK(w->term == "f(x0)");
    CHECK(af_filter_member(kit(), Sk::K(), hat, {Sk::K()}, 3, 100000)->term == "x0");
}

TEST_CASE("the oracle model exposes k_f and s_f") {
    OracleModel<SkModel> om(kit(), Fn::table(OracleTable<Sk>{{N(0), N(1)}}));
    static_assert(PcaModel<OracleModel<SkModel>>);
    Fuel f(1000000);
    auto skk = apply_chain(om, om.s(), {om.k(), om.k(), N(4)}, f);
    REQUIRE(skk.is_defined());
    CHECK(skk.value() == N(4));
    Fuel g(100000);
    CHECK(om.apply(kit().get("rf"), N(0), g).value() == N(1));
}

TEST_CASE("oracle table files") {
    auto t = read("# a comment\n5 -> 7\n\n2 -> #k   # trailing remark\ndefault -> 0\n");
    CHECK(t.size() == 2);
    CHECK(t.lookup(N(5)) == N(7));
    CHECK(t.lookup(N(2)) == Sk::K());
    CHECK(t.lookup(N(9)) == N(0));
    auto line_of = [](const std::string& text) {
        try {
            read(text);
        } catch (const TableFormatError& e) {
            return e.line;
        }
        return 0;
    };
    CHECK(line_of("1 -> 2\n1 -> 3\n") == 2);
    CHECK(line_of("1 -> 2\nnot a mapping\n") == 2);
    CHECK(line_of("default -> 1\ndefault -> 2\n") == 2);
    CHECK(line_of("1 -> (#k\n") == 1);
    CHECK(line_of("") == 0);
    std::function<std::string(const Sk&)> show = [](const Sk& e) { return print_sk(e, kit()); };
    CHECK(print_table(t, show) == "5 -> 7\n2 -> #k\ndefault -> 0\n");
}

}
