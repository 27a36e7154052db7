#include "pcw/num.hpp"

#include <algorithm>
#include <unordered_map>

namespace pcw {

Natural cantor_pair(const Natural& a, const Natural& b) {
    Natural s = a + b;
    return s * (s + 1) / 2 + b;
}

std::pair<Natural, Natural> cantor_unpair(const Natural& n) {
    Natural m = 8 * n + 1;
    Natural w = (boost::multiprecision::sqrt(m) - 1) / 2;
    Natural t = w * (w + 1) / 2;
    Natural b = n - t;
    return {w - b, b};
}

namespace {

std::uint64_t limbs(const Natural& n) { return n.backend().size(); }

struct Encoder {
    std::unordered_map<const SkNode*, Natural> memo;
    Fuel* fuel = nullptr;

    bool encode(const Sk& e, Natural& out) {
        if (e.tag() == Sk::Tag::K) { out = 0; return true; }
        if (e.tag() == Sk::Tag::S) { out = 1; return true; }
        if (e.tag() == Sk::Tag::Poison) throw std::invalid_argument("the poison leaf has no Gödel code");
        if (auto it = memo.find(e.node()); it != memo.end()) {
            out = it->second;
            return true;
        }
        Natural l, r;
        if (!encode(e.left(), l) || !encode(e.right(), r)) return false;
        out = 2 + cantor_pair(l, r);
        if (fuel && !fuel->step(limbs(out))) return false;
        memo.emplace(e.node(), out);
        return true;
    }
};

bool decode_into(const Natural& n, Sk& out, Fuel* fuel) {
    if (n == 0) { out = Sk::K(); return true; }
    if (n == 1) { out = Sk::S(); return true; }
    if (fuel && !fuel->step(limbs(n))) return false;
    auto [a, b] = cantor_unpair(n - 2);
    Sk l, r;
    if (!decode_into(a, l, fuel) || !decode_into(b, r, fuel)) return false;
    out = Sk::app(std::move(l), std::move(r));
    return true;
}

}  // namespace

Natural godel_encode(const Sk& e) {
    Encoder enc;
    Natural out;
    enc.encode(e, out);
    return out;
}

Sk godel_decode(const Natural& n) {
    if (n < 0) throw std::invalid_argument("negative Gödel code");
    Sk out;
    decode_into(n, out, nullptr);
    return out;
}

double godel_bits_estimate(const Sk& e) {
    std::unordered_map<const SkNode*, double> memo;
    std::function<double(const Sk&)> go = [&](const Sk& t) -> double {
        if (t.is_leaf()) return 1.0;
        if (auto it = memo.find(t.node()); it != memo.end()) return it->second;
        double b = 2.0 * std::max(go(t.left()), go(t.right())) + 2.0;
        memo.emplace(t.node(), b);
        return b;
    };
    return go(e);
}

Outcome<Natural> NumModel::apply(const Natural& a, const Natural& b, Fuel& fuel) const {
    Sk x, y;
    if (!decode_into(a, x, &fuel) || !decode_into(b, y, &fuel)) return Outcome<Natural>::exhausted(fuel);
    auto r = sk_apply(x, y, fuel);
    if (!r.is_defined()) return r.forward<Natural>();
    double bits = godel_bits_estimate(r.value());
    if (bits / 64.0 > static_cast<double>(fuel.remaining())) {
        fuel.step(fuel.remaining() + 1);
        return Outcome<Natural>::exhausted(fuel);
    }
    Encoder enc;
    enc.fuel = &fuel;
    Natural out;
    if (!enc.encode(r.value(), out)) return Outcome<Natural>::exhausted(fuel);
    return Outcome<Natural>::defined(std::move(out));
}

}  // namespace pcw
