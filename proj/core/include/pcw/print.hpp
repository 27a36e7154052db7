#pragma once

#include <string>

#include "pcw/kit.hpp"
#include "pcw/num.hpp"
#include "pcw/sk.hpp"

namespace pcw {

// Parse-compatible rendering: numerals as decimal (with a num: prefix in machine mode),
// everything else as applications of #k and #s.
std::string print_sk(const Sk& e, const Kit<SkModel>& kit, bool machine = false);

// Numeric elements are printed through their decoded SK form.
std::string print_num(const Natural& n, const Kit<SkModel>& kit, bool machine = false);

}  // namespace pcw
