#include <doctest.h>

#include "common.hpp"

using namespace pcw;
using testing::N;
using testing::wb;

namespace {

const Kit<SkModel>& kit() { return wb().kit(); }

Outcome<Sk> call(const std::string& name, const std::vector<Sk>& args, std::uint64_t fuel = 1000000) {
    Fuel f(fuel);
    return apply_chain(wb().sk(), kit().get(name), args, f);
}

Sk seq(const std::vector<Sk>& xs) { return kit().seq_code(xs); }

}  // namespace

TEST_SUITE("kit") {

TEST_CASE("booleans and numerals") {
    CHECK(kit().top() != kit().bot());
    CHECK(kit().top() == Sk::K());
    CHECK(N(0) == kit().i());
    Fuel f(1000);
    CHECK(N(3) == apply2(wb().sk(), kit().p(), kit().bot(), N(2), f).value());
    CHECK(call("zero", {N(0)}).value() == kit().top());
    CHECK(call("zero", {N(3)}).value() == kit().bot());
    CHECK(call("suc", {N(7)}).value() == N(8));
    CHECK(call("pred", {N(7)}).value() == N(6));
    CHECK(call("pred", {N(0)}).value() == N(0));
    CHECK(kit().numeral_value(N(37)) == 37u);
    CHECK_FALSE(kit().numeral_value(Sk::S()));
}

TEST_CASE("pairs") {
    auto rng = testing::rng(7);
    for (int j = 0; j < 100; ++j) {
        Sk a = wb().random_element(rng), b = wb().random_element(rng);
        auto pab = call("p", {a, b});
        REQUIRE(pab.is_defined());
        CHECK(call("p0", {pab.value()}).value() == a);
        CHECK(call("p1", {pab.value()}).value() == b);
    }
}

TEST_CASE("the z fixpoint law") {
    Sk a = kit().compile_text("\\x y. y");
    Sk b = Sk::S();
    auto lhs = call("z", {a, b});
    REQUIRE(lhs.is_defined());
    CHECK(lhs.value() == b);
    Sk step = kit().compile_text("\\f n. if #zero n then 0 else #suc (#suc (f (#pred n)))");
    for (std::uint64_t n = 0; n < 8; ++n) CHECK(call("z", {step, N(n)}).value() == N(2 * n));
}

TEST_CASE("recursor and arithmetic") {
    Sk step = kit().compile_text("\\k acc. #suc (#suc acc)");
    Sk last = kit().compile_text("\\k acc. k");
    for (std::uint64_t n = 0; n <= 20; ++n) {
        CHECK(call("rec", {N(1), step, N(n)}).value() == N(2 * n + 1));
        CHECK(call("rec", {Sk::S(), last, N(n)}).value() == (n == 0 ? Sk::S() : N(n - 1)));
        CHECK(call("add", {N(n), N(3)}).value() == N(n + 3));
        CHECK(call("sub", {N(n), N(5)}).value() == N(n > 5 ? n - 5 : 0));
    }
    CHECK(call("eq", {N(4), N(4)}).value() == kit().top());
    CHECK(call("eq", {N(4), N(5)}).value() == kit().bot());
}

TEST_CASE("sequence operations") {
    Sk a = Sk::S(), b = Sk::K(), c = kit().i();
    CHECK(call("lh", {seq({a, b, c})}).value() == N(3));
    CHECK(call("read", {seq({a, b}), N(1)}).value() == b);
    CHECK(call("fst", {seq({c, a})}).value() == c);
    CHECK(call("last", {seq({a, b, c})}).value() == c);
    CHECK(call("unit", {a}).value() == seq({a}));
    CHECK(call("ext", {seq({a}), b}).value() == seq({a, b}));
    CHECK(call("concat", {seq({a}), seq({b})}).value() == seq({a, b}));
    CHECK(call("take", {seq({a, b, c}), N(2)}).value() == seq({a, b}));
    CHECK(call("dropseq", {seq({a, b, c}), N(2)}).value() == seq({c}));
    CHECK(call("concat", {seq({}), seq({})}).value() == seq({}));
}

TEST_CASE("table codes") {
    OracleTable<Sk> only_default;
    only_default.set_default(N(5));
    Sk r = table_to_code(only_default, kit());
    for (std::uint64_t n = 0; n <= 20; ++n) {
        Fuel f(100000);
        CHECK(wb().sk().apply(r, N(n), f).value() == N(5));
    }
    Sk r2 = table_to_code(OracleTable<Sk>{{N(3), N(7)}}, kit());
    Fuel f2(100000);
    CHECK(wb().sk().apply(r2, N(3), f2).value() == N(7));
    Fuel g(100000);
    CHECK_FALSE(wb().sk().apply(r2, N(4), g).is_defined());
    OracleTable<Sk> id{{N(0), N(0)}, {N(1), N(1)}};
    id.set_default(N(0));
    Sk r3 = table_to_code(id, kit());
    for (std::uint64_t n = 0; n <= 20; ++n) {
        Fuel h(100000);
        CHECK(wb().sk().apply(r3, N(n), h).value() == N(n == 1 ? 1 : 0));
    }
    CHECK_THROWS_AS(table_to_code(OracleTable<Sk>{{Sk::S(), N(1)}}, kit()), NotANumeral);
}

TEST_CASE("missing members are reported, not guessed") {
    CHECK_THROWS_AS(kit().get("nosuch"), KitMissing);
    const auto& nk = wb().num_kit();
    CHECK(nk.has("p"));
    CHECK(nk.has("k"));
    CHECK(nk.get("k") == 0);
    CHECK(nk.get("s") == 1);
    CHECK(nk.get("i") == 8);
    CHECK_FALSE(nk.has("suc"));
    CHECK_THROWS_AS(nk.get("suc"), KitMissing);
}

}
