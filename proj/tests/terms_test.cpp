#include <doctest.h>

#include "common.hpp"
#include "pcw/print.hpp"

using namespace pcw;
using testing::wb;

namespace {

using T = Term<Sk>;

const Kit<SkModel>& kit() { return wb().kit(); }

Outcome<Sk> run(const T& t, std::uint64_t fuel = 100000) {
    Fuel f(fuel);
    return evaluate(t, wb().sk(), kit().basis(), f);
}

T omega() {
    return T::app(T::constant(kit().get("sii")), T::constant(kit().get("sii")));
}

}  // namespace

TEST_SUITE("terms") {

TEST_CASE("surface syntax shapes") {
    auto t = kit().parse_term("(#k a) b");
    REQUIRE(t.is_app());
    CHECK(t.right() == T::var("b"));
    CHECK(t.left().left() == T::constant(Sk::K()));
    CHECK(t.left().right() == T::var("a"));
    auto s = parse_syntax("x y z");
    REQUIRE(s->kind == Syntax::Kind::App);
    CHECK(s->kids[1]->name == "z");
    CHECK(s->kids[0]->kind == Syntax::Kind::App);
    CHECK(s->kids[0]->kids[0]->name == "x");
    auto n = parse_syntax("num:12");
    CHECK(n->kind == Syntax::Kind::Numeral);
    CHECK(n->number == 12);
}

TEST_CASE("the identity abstraction compiles to i") {
    CHECK(kit().compile_text("\\x. x") == kit().i());
    CHECK(kit().compile_text("\\x y. x") == Sk::app(Sk::app(Sk::S(), Sk::app(Sk::K(), Sk::K())), kit().i()));
}

TEST_CASE("bracket abstraction clauses") {
    Basis<Sk> b = kit().basis();
    CHECK(bracket_abstract(T::var("u"), "u", b) == T::constant(b.i));
    CHECK(bracket_abstract(T::constant(b.s), "u", b) == T::app(T::constant(b.k), T::constant(b.s)));
    CHECK(bracket_abstract(T::var("v"), "u", b) == T::app(T::constant(b.k), T::var("v")));
    auto uu = bracket_abstract(T::app(T::var("u"), T::var("u")), "u", b);
    CHECK(uu == T::app(T::app(T::constant(b.s), T::constant(b.i)), T::constant(b.i)));
    auto rng = testing::rng(5);
    for (int j = 0; j < 50; ++j) {
        Sk a = wb().random_element(rng, 5);
        Fuel f1(100000), f2(100000);
        auto lhs = wb().sk().apply(run(uu).value(), a, f1);
        auto rhs = wb().sk().apply(a, a, f2);
        CHECK(kleene_eq(lhs, rhs, wb().sk()));
    }
}

TEST_CASE("compile examples") {
    auto rng = testing::rng(6);
    Sk id = compile(T::var("x"), {"x"}, wb().sk(), kit().basis());
    Sk c = compile(T::constant(Sk::S()), {"x"}, wb().sk(), kit().basis());
    for (int j = 0; j < 20; ++j) {
        Sk a = wb().random_element(rng);
        Fuel f(1000);
        CHECK(wb().sk().apply(id, a, f).value() == a);
        CHECK(wb().sk().apply(c, a, f).value() == Sk::S());
    }
    CHECK_THROWS_AS(compile(T::var("y"), {"x"}, wb().sk(), kit().basis()), TermError);
    CHECK_THROWS_AS(compile(T::var("x"), {"x", "x"}, wb().sk(), kit().basis()), TermError);
    CHECK_THROWS_AS(compile(T::var("x"), {}, wb().sk(), kit().basis()), TermError);
}

TEST_CASE("strong case distinction leaves the dead branch alone") {
    Basis<Sk> b = kit().basis();
    T a = T::constant(Sk::S()), bb = T::constant(kit().i());
    auto top = run(strong_if(T::constant(kit().top()), a, omega(), b));
    REQUIRE(top.is_defined());
    CHECK(top.value() == Sk::S());
    auto bot = run(strong_if(T::constant(kit().bot()), omega(), bb, b));
    REQUIRE(bot.is_defined());
    CHECK(bot.value() == kit().i());
    T kk = T::app(T::constant(Sk::K()), T::constant(Sk::K()));
    auto nb = run(strong_if(kk, a, bb, b));
    REQUIRE(nb.is_undefined());
    CHECK(nb.reason() == Reason::NotABoolean);
    auto text = run(kit().parse_term("if #top then #s else #sii #sii"));
    CHECK(text.value() == Sk::S());
}

TEST_CASE("evaluation is strict and needs closed terms") {
    CHECK(run(T::app(T::constant(Sk::K()), omega()), 5000).is_exhausted());
    CHECK_THROWS_AS(run(T::var("x")), TermError);
}

TEST_CASE("parse errors carry positions") {
    auto pos = [](const std::string& text) -> long {
        try {
            kit().parse_term(text);
        } catch (const ParseError& e) {
            return static_cast<long>(e.position);
        }
        return -1;
    };
    CHECK(pos("(#k") == 3);
    CHECK(pos("#nosuch") >= 0);
    CHECK(pos("x )") >= 0);
    CHECK(pos("") >= 0);
    CHECK(pos("if #k then #s") >= 0);
    CHECK(pos("\\. x") >= 0);
    CHECK(pos("(#k #s)") == -1);
}

TEST_CASE("substitution and printing") {
    auto t = kit().parse_term("x (#k y)");
    auto closed = substitute<Sk>(t, {{"x", Sk::S()}, {"y", Sk::K()}});
    CHECK(free_vars(closed).empty());
    std::function<std::string(const Sk&)> show = [](const Sk& e) { return sk_debug_string(e); };
    CHECK(print_term(t, show) == "x (K y)");
    CHECK(print_sk(testing::N(4), kit()) == "4");
    CHECK(print_sk(testing::N(4), kit(), true) == "num:4");
    CHECK(print_sk(Sk::K(), kit()) == "#k");
    CHECK(kit().compile_text(print_sk(kit().get("p"), kit())) == kit().get("p"));
}

}
