#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pcw/kernel.hpp"

namespace pcw {

struct GeneratedWitness {
    std::optional<std::string> term;  // over x0, x1, … naming the generators in order
    int size = 0;
    std::size_t enumerated = 0;
};

// Enumerates t(ā) for constant-free terms t by leaf count, keeping the first term reaching
// each value. It semi-decides membership in the filter generated by the generators.
template <PcaModel M>
GeneratedWitness filter_generate(const M& m, const std::vector<ElementOf<M>>& generators, const ElementOf<M>& query,
                                 int max_size, std::uint64_t fuel_per_term, std::size_t max_values = 20000) {
    using E = ElementOf<M>;
    GeneratedWitness out;
    std::vector<std::vector<std::pair<E, std::string>>> by_size(max_size + 1);
    std::unordered_map<E, bool> seen;
    for (std::size_t j = 0; j < generators.size(); ++j) {
        std::string name = "x" + std::to_string(j);
        if (generators[j] == query) {
            out.term = name;
            out.size = 1;
            out.enumerated = seen.size() + 1;
            return out;
        }
        if (seen.emplace(generators[j], true).second) by_size[1].emplace_back(generators[j], name);
    }
    auto wrap = [](const std::string& t) { return t.find(' ') == std::string::npos ? t : "(" + t + ")"; };
    for (int size = 2; size <= max_size; ++size) {
        for (int ls = size - 1; ls >= 1; --ls) {
            int rs = size - ls;
            for (const auto& [a, ta] : by_size[ls])
                for (const auto& [b, tb] : by_size[rs]) {
                    if (seen.size() >= max_values) {
                        out.enumerated = seen.size();
                        return out;
                    }
                    Fuel fuel(fuel_per_term);
                    auto r = m.apply(a, b, fuel);
                    if (!r.is_defined() || seen.count(r.value())) continue;
                    seen.emplace(r.value(), true);
                    std::string term = ta + " " + wrap(tb);
                    if (r.value() == query) {
                        out.term = term;
                        out.size = size;
                        out.enumerated = seen.size();
                        return out;
                    }
                    by_size[size].emplace_back(r.value(), term);
                }
        }
    }
    out.enumerated = seen.size();
    return out;
}

}  // namespace pcw
