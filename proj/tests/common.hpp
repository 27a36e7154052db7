#pragma once

#include <random>

#include "pcw/suites.hpp"

namespace testing {

// One workbench per test process; building the kits takes a moment.
inline pcw::Workbench& wb() {
    static pcw::Workbench w;
    return w;
}

inline std::mt19937_64 rng(std::uint64_t salt) { return std::mt19937_64(0x5eed0000ULL + salt); }

inline pcw::Sk N(std::uint64_t n) { return wb().numeral(n); }

}  // namespace testing
