#pragma once

#include <cctype>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pcw/oracle.hpp"

namespace pcw {

template <PcaModel M>
using BElem = PartialFn<M>;

// (αβ)(a): the a-interrogation of β by α.
template <PcaModel M>
Interrogation<ElementOf<M>> b_apply(const Kit<M>& kit, const BElem<M>& alpha, const BElem<M>& beta,
                                    const ElementOf<M>& a, Fuel& fuel) {
    auto interrogator = [&](const ElementOf<M>& seq, Fuel& fl) { return alpha(seq, fl); };
    return interrogate(kit, interrogator, a, beta, fuel);
}

// αβ as an element of BA.
template <PcaModel M>
BElem<M> b_compose(const Kit<M>& kit, const BElem<M>& alpha, const BElem<M>& beta) {
    const Kit<M>* k = &kit;
    return BElem<M>::host(
        [k, alpha, beta](const ElementOf<M>& a, Fuel& fuel) { return b_apply(*k, alpha, beta, a, fuel).outcome; },
        "apply");
}

template <PcaModel M>
Outcome<ElementOf<M>> b_apply_chain(const Kit<M>& kit, const BElem<M>& head, const std::vector<BElem<M>>& args,
                                    const ElementOf<M>& a, Fuel& fuel) {
    BElem<M> cur = head;
    for (std::size_t j = 0; j + 1 < args.size(); ++j) cur = b_compose(kit, cur, args[j]);
    if (args.empty()) return cur(a, fuel);
    return b_apply(kit, cur, args.back(), a, fuel).outcome;
}

template <PcaModel M>
void add_ba_combinators(Kit<M>& kit) {
    kit.program("kappa", "\\x. if #zero (#pred (#lh x)) then #p #bot (#fst (#fst x)) else #p #top (#p #top (#read x 1))");

    // σ replays (αγ)(βγ)(a) from scratch on every call. The state is the triple of answer
    // lists (α-answers, β-answers, γ-answers) still to be consumed; a request beyond a
    // list's end is emitted as the matching query.
    kit.program("askA",
                "\\q st k. if #zero (#lh (#p0 st)) then #p #bot q "
                "else k (#fst (#p0 st)) (#p (#dropseq (#p0 st) 1) (#p1 st))");
    kit.program("askB",
                "\\q st k. if #zero (#lh (#p0 (#p1 st))) then #p #top (#p #bot q) "
                "else k (#fst (#p0 (#p1 st))) (#p (#p0 st) (#p (#dropseq (#p0 (#p1 st)) 1) (#p1 (#p1 st))))");
    kit.program("askG",
                "\\q st k. if #zero (#lh (#p1 (#p1 st))) then #p #top (#p #top (#p #bot q)) "
                "else k (#fst (#p1 (#p1 st))) (#p (#p0 st) (#p (#p0 (#p1 st)) (#dropseq (#p1 (#p1 st)) 1)))");
    kit.program("sloop",
                "#z (\\L ask st cur k. ask cur st (\\r s1. if #p0 r then k (#p1 r) s1 "
                "else #askG (#p1 r) s1 (\\g s2. L ask s2 (#ext cur g) k)))");
    kit.program("souter",
                "#z (\\O st cur. #sloop #askA st (#unit cur) (\\o s1. if #p0 o then #p #top (#p #top (#p #top (#p1 o))) "
                "else #sloop #askB s1 (#unit (#p1 o)) (\\v s2. O s2 (#ext cur v))))");
    kit.program("sigma",
                "\\x. #souter (#p (#dropseq x 1) (#p (#dropseq (#fst x) 1) (#dropseq (#fst (#fst x)) 1))) "
                "(#unit (#fst (#fst (#fst x))))");

    kit.program("tau",
                "\\x. if #zero (#pred (#lh x)) then (if #zero (#pred (#lh (#fst x))) then #p #top (#p #bot #i) "
                "else #p #bot #i) else #p #top (#p #top (#read x 1 (#read (#fst x) 1)))");
    kit.program("nu", "\\x. if #zero (#pred (#lh x)) then #p #bot #i else #p #top (#read x 1 (#fst x))");
    kit.program("rho",
                "\\x. if #zero (#pred (#lh x)) then (if #zero (#pred (#lh (#fst x))) then #p #top (#p #bot #i) "
                "else #p #bot (#read (#fst x) 1)) else #p #top (#p #top (#read x 1))");

    kit.program("repeat", "#z (\\f s n x. if #zero n then s else f (#ext s x) (#pred n) x)");
    kit.program("interchange",
                "\\x. if #zero (#pred (#lh x)) then #p #bot (#unit #i) "
                "else (\\u. if #p0 u then #p #top (#p1 u) else #p #bot (#repeat (#unit #i) (#pred (#lh x)) (#fst x))) "
                "(#last x)");

    // x u ⪯ … : the composition of representers, one step per consultation of y.
    kit.program("compose",
                "#z (\\T x y u. (\\r. if #p0 r then #p1 r else T x y (#ext u (y (#p1 r)))) (x u))");
}

template <PcaModel M>
BElem<M> build_kappa(const Kit<M>& kit) {
    return BElem<M>::coded(kit.get("kappa"), kit.model());
}
template <PcaModel M>
BElem<M> build_sigma(const Kit<M>& kit) {
    return BElem<M>::coded(kit.get("sigma"), kit.model());
}
template <PcaModel M>
std::optional<std::vector<ElementOf<M>>> decode_seq(const Kit<M>& kit, const ElementOf<M>& code, Fuel& fuel) {
    const M& m = kit.model();
    auto len = m.apply(kit.p0(), code, fuel);
    if (!len.is_defined()) return std::nullopt;
    auto n = kit.numeral_value(len.value(), 4096);
    if (!n) return std::nullopt;
    auto j = m.apply(kit.p1(), code, fuel);
    std::vector<ElementOf<M>> out;
    for (std::uint64_t k = 0; k < *n; ++k) {
        if (!j.is_defined()) return std::nullopt;
        auto h = m.apply(kit.p0(), j.value(), fuel);
        if (!h.is_defined()) return std::nullopt;
        out.push_back(h.value());
        j = m.apply(kit.p1(), j.value(), fuel);
    }
    return out;
}

// The σ schedule run natively on decoded sequences; it agrees with the coded σ wherever
// every verdict the simulation inspects is a boolean pair.
template <PcaModel M>
BElem<M> build_sigma_native(const Kit<M>& kit) {
    using E = ElementOf<M>;
    using O = Outcome<E>;
    const Kit<M>* kp = &kit;
    return BElem<M>::host(
        [kp](const E& x, Fuel& fuel) -> O {
            const Kit<M>& kit = *kp;
            const M& m = kit.model();
            auto stuck = [&]() { return fuel.exhausted() ? O::exhausted(fuel) : O::undefined(Reason::ModelStuck); };
            auto xs = decode_seq(kit, x, fuel);
            if (!xs || xs->empty()) return stuck();
            auto ys = decode_seq(kit, (*xs)[0], fuel);
            if (!ys || ys->empty()) return stuck();
            auto zs = decode_seq(kit, (*ys)[0], fuel);
            if (!zs || zs->empty()) return stuck();
            std::vector<E> V(xs->begin() + 1, xs->end()), Bs(ys->begin() + 1, ys->end()), W(zs->begin() + 1, zs->end());
            std::size_t vi = 0, bi = 0, wi = 0;
            auto pair = [&](const E& a, const E& b) { return apply2(m, kit.p(), a, b, fuel); };
            auto wrap = [&](int depth, const E& tagged) -> O {
                O cur = O::defined(tagged);
                for (int d = 0; d < depth && cur.is_defined(); ++d) cur = pair(kit.top(), cur.value());
                return cur;
            };
            // 0 = ⊤, 1 = ⊥, -1 = neither
            auto split = [&](const E& r, E& part) -> int {
                auto t = m.apply(kit.p0(), r, fuel);
                auto p = m.apply(kit.p1(), r, fuel);
                if (!t.is_defined() || !p.is_defined()) return -2;
                part = p.value();
                if (t.value() == kit.top()) return 0;
                if (t.value() == kit.bot()) return 1;
                return -1;
            };
            std::vector<E> cur{zs->front()};
            for (;;) {
                // αγ at cur
                auto sc = kit.seq_code(cur, fuel);
                if (!sc.is_defined()) return sc;
                std::vector<E> aq{sc.value()};
                E o;
                for (;;) {
                    auto q = kit.seq_code(aq, fuel);
                    if (!q.is_defined()) return q;
                    if (vi == V.size()) {
                        auto r = pair(kit.bot(), q.value());
                        return r;
                    }
                    E part;
                    int tag = split(V[vi++], part);
                    if (tag < 0) return stuck();
                    if (tag == 0) {
                        o = part;
                        break;
                    }
                    if (wi == W.size()) {
                        auto r = pair(kit.bot(), part);
                        return r.is_defined() ? wrap(2, r.value()) : r;
                    }
                    aq.push_back(W[wi++]);
                }
                E val;
                int otag = split(o, val);
                if (otag < 0) return stuck();
                if (otag == 0) {
                    auto r = pair(kit.top(), val);
                    return r.is_defined() ? wrap(2, r.value()) : r;
                }
                // βγ at val
                std::vector<E> bq{val};
                E answer;
                for (;;) {
                    auto q = kit.seq_code(bq, fuel);
                    if (!q.is_defined()) return q;
                    if (bi == Bs.size()) {
                        auto r = pair(kit.bot(), q.value());
                        return r.is_defined() ? wrap(1, r.value()) : r;
                    }
                    E part;
                    int tag = split(Bs[bi++], part);
                    if (tag < 0) return stuck();
                    if (tag == 0) {
                        answer = part;
                        break;
                    }
                    if (wi == W.size()) {
                        auto r = pair(kit.bot(), part);
                        return r.is_defined() ? wrap(2, r.value()) : r;
                    }
                    bq.push_back(W[wi++]);
                }
                cur.push_back(answer);
            }
        },
        "sigma");
}

template <PcaModel M>
BElem<M> build_tau(const Kit<M>& kit) {
    return BElem<M>::coded(kit.get("tau"), kit.model());
}
template <PcaModel M>
BElem<M> build_nu(const Kit<M>& kit) {
    return BElem<M>::coded(kit.get("nu"), kit.model());
}
template <PcaModel M>
BElem<M> build_rho(const Kit<M>& kit) {
    return BElem<M>::coded(kit.get("rho"), kit.model());
}
template <PcaModel M>
BElem<M> interchange_rho(const Kit<M>& kit) {
    return BElem<M>::coded(kit.get("interchange"), kit.model());
}

// i(a) = â.
template <PcaModel M>
BElem<M> embed_i(const ElementOf<M>& a) {
    return BElem<M>::constant(a);
}

// The composed representer λa. compose r s [a]; its b_apply counterpart is Coded(r)·Coded(s).
template <PcaModel M>
ElementOf<M> compose_representers(const Kit<M>& kit, const ElementOf<M>& r, const ElementOf<M>& s) {
    using T = Term<ElementOf<M>>;
    T body = T::app(T::app(T::app(T::constant(kit.get("compose")), T::constant(r)), T::constant(s)),
                    T::app(T::constant(kit.get("unit")), T::var("a")));
    return compile(body, {"a"}, kit.model(), kit.basis());
}

template <class E>
struct ExtensionTracker {
    E U;
    E tracker;  // λ*xyz. U x y (unit' z)
};

template <PcaModel M>
ExtensionTracker<ElementOf<M>> extension_tracker(const WitnessPack<ElementOf<M>>& w, const Kit<M>& kit) {
    using E = ElementOf<M>;
    Kit<M> local = kit;
    local.define("wt", w.t);
    local.define("wd", w.d);
    local.define("wp0", w.p0);
    local.define("wp1", w.p1);
    local.define("wunit", w.unit);
    local.define("wext", w.ext);
    local.program("p0'", "\\x. #wt #wp0 x");
    local.program("p1'", "\\x. #wt #wp1 x");
    local.program("unit'", "\\x. #wt #wunit x");
    local.program("ext'", "\\v a. #wt (#wt #wext v) a");
    E U = local.compile_text(
        "#z (\\U x y v. if #wd (#p0' (#wt x v)) then #p1' (#wt x v) "
        "else U x y (#ext' v (#wt y (#p1' (#wt x v)))))");
    local.define("U", U);
    E tracker = local.compile_text("\\x y z. #U x y (#unit' z)");
    return ExtensionTracker<E>{U, tracker};
}

struct ChainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// graph(small) ⊆ graph(big).
template <class E>
bool table_extends(const OracleTable<E>& big, const OracleTable<E>& small) {
    for (const auto& [k, v] : small.entries()) {
        auto w = big.lookup(k);
        if (!w || !(*w == v)) return false;
    }
    if (small.default_value()) {
        if (!big.default_value() || !(*big.default_value() == *small.default_value())) return false;
        for (const auto& [k, v] : big.entries())
            if (!small.has_key(k) && !(v == *small.default_value())) return false;
    }
    return true;
}

// Meet of a chain in the reverse-subfunction order: the union of the graphs.
template <class E>
OracleTable<E> chain_meet(const std::vector<OracleTable<E>>& chain) {
    if (chain.empty()) throw ChainError("chain_meet of an empty list");
    for (std::size_t a = 0; a < chain.size(); ++a)
        for (std::size_t b = a + 1; b < chain.size(); ++b)
            if (!table_extends(chain[a], chain[b]) && !table_extends(chain[b], chain[a]))
                throw ChainError("inputs " + std::to_string(a) + " and " + std::to_string(b) + " are not comparable");
    OracleTable<E> all;
    for (const auto& t : chain) {
        for (const auto& [k, v] : t.entries()) all.set(k, v);
        if (t.default_value()) all.set_default(t.default_value());
    }
    OracleTable<E> out;
    out.set_default(all.default_value());
    for (const auto& [k, v] : all.entries())
        if (!all.default_value() || !(v == *all.default_value())) out.set(k, v);
    return out;
}

// BA as a model, with κ and σ for k and s; elements are compared by identity.
template <PcaModel M>
class BaModel {
public:
    using Element = BElem<M>;

    enum class Sigma { Coded, Native };

    explicit BaModel(const Kit<M>& kit, Sigma sigma = Sigma::Coded)
        : kit_(&kit), kappa_(build_kappa(kit)),
          sigma_(sigma == Sigma::Coded ? build_sigma(kit) : build_sigma_native(kit)) {}

    Outcome<Element> apply(const Element& a, const Element& b, Fuel& fuel) const {
        if (!fuel.step()) return Outcome<Element>::exhausted(fuel);
        return Outcome<Element>::defined(b_compose(*kit_, a, b));
    }
    bool leq(const Element& a, const Element& b) const { return a.same(b); }
    bool in_filter(const Element& a) const { return a.is_coded() && kit_->model().in_filter(a.code()); }
    Element k() const { return kappa_; }
    Element s() const { return sigma_; }
    const Kit<M>& base() const { return *kit_; }

private:
    const Kit<M>* kit_;
    Element kappa_;
    Element sigma_;
};

// `table{k->v, ...; default v}` or `coded(<term>)`.
template <PcaModel M>
BElem<M> parse_belem(std::string_view text, const Kit<M>& kit) {
    using E = ElementOf<M>;
    auto trim = [](std::string_view s) {
        std::size_t b = s.find_first_not_of(" \t\r\n");
        std::size_t e = s.find_last_not_of(" \t\r\n");
        return b == std::string_view::npos ? std::string_view{} : s.substr(b, e - b + 1);
    };
    text = trim(text);
    auto close = [&](std::string_view t) { return compile_closed(parse(t, kit.env()), kit.model(), kit.basis()); };
    if (text.substr(0, 6) == "coded(" && text.back() == ')') return BElem<M>::coded(close(text.substr(6, text.size() - 7)), kit.model());
    if (text.substr(0, 6) != "table{" || text.back() != '}')
        throw ParseError("expected 'table{...}' or 'coded(...)'", 0);
    std::string_view body = text.substr(6, text.size() - 7);
    OracleTable<E> t;
    std::string_view entries = body;
    std::size_t semi = body.find(';');
    if (semi != std::string_view::npos) {
        entries = body.substr(0, semi);
        std::string_view d = trim(body.substr(semi + 1));
        if (d.substr(0, 7) != "default") throw ParseError("expected 'default' after ';'", 6 + semi);
        t.set_default(close(d.substr(7)));
    }
    std::size_t pos = 0;
    while (pos < entries.size()) {
        std::size_t comma = entries.find(',', pos);
        if (comma == std::string_view::npos) comma = entries.size();
        std::string_view item = trim(entries.substr(pos, comma - pos));
        pos = comma + 1;
        if (item.empty()) continue;
        std::size_t arrow = item.find("->");
        if (arrow == std::string_view::npos) throw ParseError("expected 'key->value'", 6 + pos);
        t.set(close(trim(item.substr(0, arrow))), close(trim(item.substr(arrow + 2))));
    }
    return BElem<M>::table(std::move(t));
}

}  // namespace pcw

namespace std {
template <pcw::PcaModel M>
struct hash<pcw::PartialFn<M>> {
    size_t operator()(const pcw::PartialFn<M>& f) const { return std::hash<const void*>{}(f.identity()); }
};
}  // namespace std
