#include <doctest.h>

#include "common.hpp"
#include "pcw/num.hpp"
#include "reference.hpp"

using namespace pcw;

namespace {

std::string str(const Natural& n) { return n.str(); }

}  // namespace

TEST_SUITE("num") {

TEST_CASE("frozen codes of small combinators") {
    Sk K = Sk::K(), S = Sk::S();
    Sk i = Sk::app(Sk::app(S, K), K);
    CHECK(godel_encode(K) == 0);
    CHECK(godel_encode(S) == 1);
    CHECK(godel_encode(Sk::app(K, K)) == 2);
    CHECK(godel_encode(Sk::app(S, K)) == 3);
    CHECK(godel_encode(Sk::app(K, S)) == 4);
    CHECK(godel_encode(Sk::app(S, S)) == 6);
    CHECK(godel_encode(Sk::app(K, Sk::app(K, K))) == 7);
    CHECK(godel_encode(i) == 8);
    CHECK(godel_decode(0) == K);
    CHECK(godel_decode(1) == S);
    CHECK(godel_decode(8) == i);
}

TEST_CASE("cantor pairing round trips on large values") {
    auto rng = testing::rng(3);
    for (int j = 0; j < 200; ++j) {
        Natural a = rng(), b = rng();
        a = a * rng() * rng();
        b = b * rng();
        auto [x, y] = cantor_unpair(cantor_pair(a, b));
        CHECK(x == a);
        CHECK(y == b);
    }
    CHECK(cantor_pair(0, 0) == 0);
    CHECK(cantor_pair(1, 0) == 1);
    CHECK(cantor_pair(0, 1) == 2);
    CHECK(cantor_pair(2, 0) == 3);
}

TEST_CASE("codec agrees with the independent codec") {
    for (unsigned n = 0; n < 5000; ++n) {
        auto mine = godel_decode(n);
        auto theirs = ref::to_sk(ref::decode(n));
        REQUIRE(mine == theirs);
        CHECK(godel_encode(mine) == n);
    }
    auto rng = testing::rng(4);
    int compared = 0;
    for (int j = 0; j < 300; ++j) {
        Sk e = testing::wb().random_element(rng, 9);
        auto code = ref::encode(ref::from_sk(e));
        if (!code) continue;
        CHECK(str(godel_encode(e)) == ref::to_string(*code));
        ++compared;
    }
    CHECK(compared >= 100);
}

TEST_CASE("numeric application is encode after sk after decode") {
    NumModel num;
    int compared = 0;
    for (unsigned m = 0; m < 60; ++m)
        for (unsigned n = 0; n < 60; ++n) {
            auto want = ref::normalize(ref::app(ref::decode(m), ref::decode(n)), 20000);
            Fuel f(100000);
            auto got = num.apply(m, n, f);
            if (!want.value || got.is_exhausted()) continue;
            REQUIRE(got.is_defined());
            auto code = ref::encode(*want.value);
            if (!code) continue;
            CHECK(str(got.value()) == ref::to_string(*code));
            ++compared;
        }
    CHECK(compared >= 3000);
}

TEST_CASE("coding work is charged to the fuel") {
    NumModel num;
    Natural big = godel_encode(testing::N(5));
    Fuel tiny(3);
    CHECK(num.apply(big, 0, tiny).is_exhausted());
    Fuel ample(1000000);
    CHECK(num.apply(big, 0, ample).is_defined());
}

TEST_CASE("negative codes are rejected") { CHECK_THROWS_AS(godel_decode(Natural(-1)), std::invalid_argument); }

}
