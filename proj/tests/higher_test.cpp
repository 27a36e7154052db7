#include <doctest.h>

#include "common.hpp"

using namespace pcw;
using testing::N;
using testing::wb;

namespace {

using B = BElem<SkModel>;
using Tab = OracleTable<Sk>;

const Kit<SkModel>& kit() { return wb().kit(); }

Outcome<Sk> at(const Functional2<SkModel>& F, const B& alpha) {
    Fuel f(100000);
    return F(alpha, f);
}

}  // namespace

TEST_SUITE("higher") {

TEST_CASE("kleene E on presented functions") {
    auto E = functional_by_name(kit(), "kleeneE");
    Tab zero;
    zero.set_default(N(0));
    CHECK(at(E, B::table(zero)).value() == N(0));
    Tab one{{N(3), N(1)}};
    one.set_default(N(0));
    CHECK(at(E, B::table(one)).value() == N(1));
    CHECK(at(E, B::table(Tab{{N(3), N(1)}})).is_exhausted());
}

TEST_CASE("functional names") {
    CHECK(at(functional_by_name(kit(), "const:4"), B::empty()).value() == N(4));
    Tab t{{N(0), N(9)}, {N(2), N(8)}};
    CHECK(at(functional_by_name(kit(), "eval0"), B::table(t)).value() == N(9));
    CHECK(at(functional_by_name(kit(), "eval:2"), B::table(t)).value() == N(8));
    CHECK(at(functional_by_name(kit(), "eval:1"), B::table(t)).is_undefined());
    CHECK_THROWS_AS(functional_by_name(kit(), "eval:x"), UnknownFunctional);
    CHECK_THROWS_AS(functional_by_name(kit(), "nosuch"), UnknownFunctional);
}

TEST_CASE("constant functional stabilizes at stage one") {
    auto F = functional_by_name(kit(), "const:5");
    auto rep = fixpoint_stage(kit(), F, 4, {N(0), N(1), N(2)}, 100000);
    CHECK(rep.monotone);
    for (const auto& ps : rep.probes) {
        CHECK(ps.first_defined == 1);
        CHECK(ps.value == N(5));
    }
    auto z = z_representer_check(kit(), functional_representer(kit(), "const:5"), rep, 100000);
    CHECK(z.agree == 3);
    CHECK(z.disagree == 0);
}

TEST_CASE("eval0 stages for lifted and asking probes") {
    ProbeBook<SkModel> book(kit());
    Tab t{{N(0), N(4)}};
    t.set_default(N(1));
    Sk lift = book.lift(t);
    Tab three;
    three.set_default(N(3));
    Sk ask = book.ask(book.lift(three));
    auto F = functional_by_name(kit(), "eval0");
    FixpointStages<SkModel> fs(kit(), F, &book);
    auto rep = fs.run(4, {lift, ask}, 1000000);
    CHECK(rep.monotone);
    CHECK(rep.probes[0].first_defined == 1);
    CHECK(rep.probes[0].value == N(4));
    CHECK(rep.probes[1].first_defined == 2);
    CHECK(rep.probes[1].value == N(3));
    Fuel f(10);
    CHECK(fs.stage(0)(lift, f).is_undefined());
    CHECK(&fs.stage(3) == &fs.stage(3));
}

TEST_CASE("kleene E needs the oracle once") {
    ProbeBook<SkModel> book(kit());
    Tab t{{N(0), N(4)}};
    t.set_default(N(0));
    Sk ask = book.ask(book.lift(t));
    Sk lift = book.lift(Tab{{N(1), N(0)}});
    auto rep = fixpoint_stage(kit(), functional_by_name(kit(), "kleeneE"), 5, {ask, lift}, 1000000, &book);
    CHECK(rep.probes[0].first_defined == 2);
    CHECK(rep.probes[0].value == N(1));
    CHECK_FALSE(rep.probes[1].first_defined);
}

TEST_CASE("type three functionals") {
    auto Phi = functional3_by_name(kit(), "phi-eval-id");
    Fuel f(100000);
    CHECK(Phi(functional_by_name(kit(), "eval:3"), f).value() == N(3));
    auto C = functional3_by_name(kit(), "phi-const:2");
    Fuel g(100000);
    CHECK(C(functional_by_name(kit(), "kleeneE"), g).value() == N(2));
    Sk s = kit().compile_text("\\b. b #i");
    Sk t = type3_t(kit(), s, N(1));
    Fuel h(1000000);
    auto tn = apply_chain(wb().sk(), t, {kit().compile_text("\\y x. x"), Sk::K()}, h);
    REQUIRE(tn.is_defined());
    CHECK(tn.value() == N(1));
}

}
