#include <doctest.h>

#include <functional>

#include "common.hpp"
#include "reference.hpp"

using namespace pcw;

namespace {

Sk i_comb() { return Sk::app(Sk::app(Sk::S(), Sk::K()), Sk::K()); }
Sk sii() { return Sk::app(Sk::app(Sk::S(), i_comb()), i_comb()); }

Sk random_tree(std::mt19937_64& rng, int leaves) {
    if (leaves == 1) return rng() % 2 ? Sk::K() : Sk::S();
    int l = 1 + static_cast<int>(rng() % (leaves - 1));
    return Sk::app(random_tree(rng, l), random_tree(rng, leaves - l));
}

}  // namespace

TEST_SUITE("sk") {

TEST_CASE("reduction examples") {
    Fuel f(100);
    auto ks = sk_apply(Sk::K(), Sk::S(), f);
    REQUIRE(ks.is_defined());
    CHECK(ks.value() == Sk::app(Sk::K(), Sk::S()));
    CHECK(f.spent() == 0);
    auto s = sk_apply(ks.value(), Sk::K(), f);
    REQUIRE(s.is_defined());
    CHECK(s.value() == Sk::S());
    CHECK(f.spent() == 1);
    for (std::uint64_t budget : {10ULL, 1000ULL, 100000ULL}) {
        Fuel g(budget);
        auto o = sk_apply(sii(), sii(), g);
        CHECK(o.is_exhausted());
        CHECK(o.spent() == budget);
    }
}

TEST_CASE("the identity takes two contractions") {
    Fuel f(100);
    auto o = sk_apply(i_comb(), Sk::S(), f);
    REQUIRE(o.is_defined());
    CHECK(o.value() == Sk::S());
    CHECK(f.spent() == 2);
}

TEST_CASE("normal forms agree with the reference rewriter") {
    auto rng = testing::rng(2);
    int converged = 0;
    for (int j = 0; j < 2000; ++j) {
        Sk t = random_tree(rng, 2 + static_cast<int>(rng() % 14));
        auto want = ref::normalize(ref::from_sk(t), 5000);
        if (!want.value) continue;
        ++converged;
        Fuel f(want.steps);
        auto got = sk_normalize(t, f);
        REQUIRE(got.is_defined());
        CHECK(got.value() == ref::to_sk(*want.value));
        CHECK(got.value().normal());
        CHECK(f.spent() <= want.steps);
    }
    CHECK(converged >= 1500);
}

TEST_CASE("structural equality on shared graphs") {
    std::function<Sk(int, bool)> tower = [&](int n, bool top) {
        Sk x = top ? Sk::K() : Sk::S();
        for (int j = 0; j < n; ++j) x = Sk::app(x, x);
        return x;
    };
    Sk a = tower(80, true), b = tower(80, true), c = tower(80, false);
    CHECK(a == b);
    CHECK(a != c);
    CHECK(a.hash() == b.hash());
    CHECK(a.size() > 1000000);
}

TEST_CASE("applying the poison leaf throws") {
    Fuel f(100);
    CHECK_THROWS_AS(sk_apply(Sk::poison(), Sk::K(), f), PoisonError);
    Fuel g(100);
    auto kept = sk_apply(Sk::app(Sk::K(), Sk::K()), Sk::poison(), g);
    REQUIRE(kept.is_defined());
    CHECK(kept.value() == Sk::K());
}

TEST_CASE("debug rendering") {
    CHECK(sk_debug_string(i_comb()) == "S K K");
    CHECK(sk_debug_string(Sk::app(Sk::K(), i_comb())) == "K (S K K)");
}

}
