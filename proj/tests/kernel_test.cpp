#include <doctest.h>

#include "common.hpp"
#include "pcw/filter.hpp"
#include "pcw/num.hpp"
#include "reference.hpp"

using namespace pcw;
using testing::wb;

TEST_SUITE("kernel") {

TEST_CASE("fuel consumes steps and pins at the budget") {
    Fuel f(5);
    CHECK(f.step(3));
    CHECK(f.spent() == 3);
    CHECK(f.remaining() == 2);
    CHECK_FALSE(f.step(3));
    CHECK(f.exhausted());
    CHECK(f.spent() == 5);
    CHECK_FALSE(f.step());
}

TEST_CASE("outcome variants and reason names") {
    auto d = Outcome<int>::defined(4);
    CHECK(d.is_defined());
    CHECK(d.value() == 4);
    CHECK(d.map([](int x) { return x + 1; }).value() == 5);
    auto u = Outcome<int>::undefined(Reason::OracleUndefined);
    CHECK(u.is_undefined());
    CHECK_THROWS_AS(u.value(), std::logic_error);
    CHECK(u.forward<double>().reason() == Reason::OracleUndefined);
    auto e = Outcome<int>::exhausted(9);
    CHECK(e.spent() == 9);
    CHECK(std::string(reason_name(Reason::NotABoolean)) == "not-a-boolean");
    CHECK(std::string(reason_name(Reason::OracleUndefined)) == "oracle");
    CHECK(std::string(reason_name(Reason::ModelStuck)) == "stuck");
}

TEST_CASE("kleene relations on outcomes") {
    SkModel m;
    using O = Outcome<Sk>;
    O a = O::defined(Sk::K()), b = O::defined(Sk::S()), un = O::undefined(Reason::ModelStuck);
    O ex = O::exhausted(1);
    CHECK(kleene_leq(a, un, m));
    CHECK(kleene_leq(a, a, m));
    CHECK_FALSE(kleene_leq(un, a, m));
    CHECK(kleene_eq(a, a, m));
    CHECK(kleene_eq(un, un, m));
    CHECK_FALSE(kleene_eq(a, b, m));
    CHECK(kleene_leq(un, ex, m));
}

TEST_CASE("generated filter witnesses") {
    SkModel m;
    auto w1 = filter_generate(m, {Sk::K()}, Sk::K(), 4, 1000);
    REQUIRE(w1.term);
    CHECK(*w1.term == "x0");
    Sk i = Sk::app(Sk::app(Sk::S(), Sk::K()), Sk::K());
    auto w2 = filter_generate(m, {Sk::S(), Sk::K()}, i, 4, 1000);
    REQUIRE(w2.term);
    CHECK(*w2.term == "x0 x1 x1");
    CHECK(w2.size == 3);
    auto w3 = filter_generate(m, {Sk::K()}, Sk::S(), 6, 1000);
    CHECK_FALSE(w3.term);
}

TEST_CASE("axioms D, E and F against the reference rewriter") {
    auto rng = testing::rng(1);
    SkModel m;
    int checked = 0;
    for (int j = 0; j < 300; ++j) {
        Sk a = wb().random_element(rng), b = wb().random_element(rng), c = wb().random_element(rng);
        Fuel f1(100000);
        auto kab = apply2(m, m.k(), a, b, f1);
        REQUIRE(kab.is_defined());
        CHECK(kab.value() == a);
        Fuel f2(100000);
        auto sab = apply2(m, m.s(), a, b, f2);
        REQUIRE(sab.is_defined());
        auto ta = ref::from_sk(a), tb = ref::from_sk(b), tc = ref::from_sk(c);
        auto rhs = ref::normalize(ref::app(ref::app(ta, tc), ref::app(tb, tc)), 20000);
        if (!rhs.value) continue;
        Fuel f3(100000);
        auto lhs = m.apply(sab.value(), c, f3);
        REQUIRE(lhs.is_defined());
        CHECK(lhs.value() == ref::to_sk(*rhs.value));
        ++checked;
    }
    CHECK(checked >= 200);
}

}
