#include "pcw/print.hpp"

namespace pcw {

std::string print_sk(const Sk& e, const Kit<SkModel>& kit, bool machine) {
    if (auto n = kit.numeral_value(e)) return (machine ? "num:" : "") + std::to_string(*n);
    switch (e.tag()) {
        case Sk::Tag::K: return "#k";
        case Sk::Tag::S: return "#s";
        case Sk::Tag::Poison: return "#poison";
        case Sk::Tag::App: break;
    }
    std::string f = print_sk(e.left(), kit, machine);
    std::string a = print_sk(e.right(), kit, machine);
    if (a.find(' ') != std::string::npos) a = "(" + a + ")";
    return f + " " + a;
}

std::string print_num(const Natural& n, const Kit<SkModel>& kit, bool machine) {
    return print_sk(godel_decode(n), kit, machine);
}

}  // namespace pcw
