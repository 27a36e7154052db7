#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <functional>
#include <string>

#include "pcw/kernel.hpp"
#include "pcw/sk.hpp"

namespace pcw {

using Natural = boost::multiprecision::cpp_int;

Natural cantor_pair(const Natural& a, const Natural& b);
std::pair<Natural, Natural> cantor_unpair(const Natural& n);

// K ↦ 0, S ↦ 1, App(x, y) ↦ 2 + pair(code x, code y).
Natural godel_encode(const Sk& e);
Sk godel_decode(const Natural& n);

// Upper bound on the bit length of godel_encode(e), without computing it.
double godel_bits_estimate(const Sk& e);

class NumModel {
public:
    using Element = Natural;

    // encode ∘ sk_apply ∘ decode. Coding work is charged to the fuel at one step per
    // 64-bit limb touched, so codes too large for the budget surface as FuelExhausted.
    Outcome<Natural> apply(const Natural& a, const Natural& b, Fuel& fuel) const;
    bool leq(const Natural& a, const Natural& b) const { return a == b; }
    bool in_filter(const Natural&) const { return true; }
    Natural k() const { return 0; }
    Natural s() const { return 1; }
    const char* name() const { return "num"; }
};

}  // namespace pcw

template <>
struct std::hash<pcw::Natural> {
    std::size_t operator()(const pcw::Natural& n) const {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto it = n.backend().limbs(), end = it + n.backend().size(); it != end; ++it)
            h = (h ^ static_cast<std::size_t>(*it)) * 0x100000001b3ULL;
        return h;
    }
};
