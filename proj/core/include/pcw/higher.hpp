#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "pcw/funcpca.hpp"

namespace pcw {

// F ∈ B₂A: a host procedure on BElem, monotone on the inputs it can decide.
template <PcaModel M>
struct Functional2 {
    std::string name;
    std::function<Outcome<ElementOf<M>>(const BElem<M>&, Fuel&)> eval;
    Outcome<ElementOf<M>> operator()(const BElem<M>& a, Fuel& fuel) const { return eval(a, fuel); }
};

// Φ ∈ B₃A.
template <PcaModel M>
struct Functional3 {
    std::string name;
    std::function<Outcome<ElementOf<M>>(const Functional2<M>&, Fuel&)> eval;
    Outcome<ElementOf<M>> operator()(const Functional2<M>& f, Fuel& fuel) const { return eval(f, fuel); }
};

struct UnknownFunctional : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Interrogators with a known extension: lift(T) answers T(a') without consulting the oracle,
// ask(P) consults the oracle once at P and returns the answer.
template <PcaModel M>
class ProbeBook {
public:
    using E = ElementOf<M>;
    struct Entry {
        enum class Kind { Lift, Ask } kind;
        OracleTable<E> table;
        E query{};
        std::string text;
    };

    explicit ProbeBook(const Kit<M>& kit) : kit_(&kit) {}

    E lift(const OracleTable<E>& t, std::string text = {}) {
        using T = Term<E>;
        E code = table_to_code(t, *kit_);
        T body = T::app(T::app(T::constant(kit_->p()), T::constant(kit_->top())),
                        T::app(T::constant(code), T::app(T::constant(kit_->get("fst")), T::var("x"))));
        E r = compile(body, {"x"}, kit_->model(), kit_->basis());
        entries_.insert_or_assign(r, Entry{Entry::Kind::Lift, t, E{}, text.empty() ? "lift(...)" : text});
        return r;
    }

    E ask(const E& query, std::string text = {}) {
        Kit<M> local = *kit_;
        local.define("P", query);
        E r = local.compile_text("\\x. if #zero (#pred (#lh x)) then #p #bot #P else #p #top (#read x 1)");
        entries_.insert_or_assign(r, Entry{Entry::Kind::Ask, OracleTable<E>{}, query, text.empty() ? "ask(...)" : text});
        return r;
    }

    const Entry* find(const E& e) const {
        auto it = entries_.find(e);
        return it == entries_.end() ? nullptr : &it->second;
    }

    // The function λa'. probe ⊙_α a' as a table, when the probe is registered.
    std::optional<OracleTable<E>> certificate(const E& probe, const BElem<M>& alpha, Fuel& fuel) const {
        const Entry* e = find(probe);
        if (!e) return std::nullopt;
        if (e->kind == Entry::Kind::Lift) return e->table;
        OracleTable<E> t;
        if (!fuel.step()) return std::nullopt;
        auto v = alpha(e->query, fuel);
        if (v.is_exhausted()) return std::nullopt;
        if (v.is_defined()) t.set_default(v.value());
        return t;
    }

    const Kit<M>& kit() const { return *kit_; }

private:
    const Kit<M>* kit_;
    std::unordered_map<E, Entry> entries_;
};

// F̃(α)(a) ≃ F(λa'. a ⊙_α a').
template <PcaModel M>
BElem<M> tilde_F(const Kit<M>& kit, const Functional2<M>& F, const BElem<M>& alpha,
                 const ProbeBook<M>* book = nullptr) {
    using E = ElementOf<M>;
    const Kit<M>* k = &kit;
    return BElem<M>::host(
        [k, F, alpha, book](const E& a, Fuel& fuel) {
            auto g = BElem<M>::host([k, a, alpha](const E& x, Fuel& fl) { return oracle_apply(*k, a, x, alpha, fl).outcome; },
                                    "interrogation");
            if (book && book->find(a)) {
                g = g.with_table_view([book, a, alpha](Fuel& fl) { return book->certificate(a, alpha, fl); });
            }
            return F(g, fuel);
        },
        "tilde:" + F.name);
}

template <PcaModel M>
Functional2<M> constant_functional(const Kit<M>& kit, std::uint64_t c) {
    ElementOf<M> v = kit.numeral(c);
    return Functional2<M>{"const:" + std::to_string(c),
                          [v](const BElem<M>&, Fuel& fuel) {
                              if (!fuel.step()) return Outcome<ElementOf<M>>::exhausted(fuel);
                              return Outcome<ElementOf<M>>::defined(v);
                          }};
}

template <PcaModel M>
Functional2<M> eval_functional(const Kit<M>& kit, std::uint64_t n) {
    ElementOf<M> point = kit.numeral(n);
    return Functional2<M>{n == 0 ? std::string("eval0") : "eval:" + std::to_string(n),
                          [point](const BElem<M>& alpha, Fuel& fuel) {
                              if (!fuel.step()) return Outcome<ElementOf<M>>::exhausted(fuel);
                              return alpha(point, fuel);
                          }};
}

// E on total numeral functions presented by a table with default: 1 if some value is
// positive, 0 if all vanish. No other presentation is decided.
template <PcaModel M>
Functional2<M> kleene_E(const Kit<M>& kit) {
    const Kit<M>* k = &kit;
    return Functional2<M>{"kleeneE", [k](const BElem<M>& alpha, Fuel& fuel) {
        using O = Outcome<ElementOf<M>>;
        if (!fuel.step()) return O::exhausted(fuel);
        auto t = alpha.table_view(fuel);
        if (!t || !t->default_value()) return O::exhausted(fuel);
        bool positive = false;
        auto d = k->numeral_value(*t->default_value());
        if (!d) return O::exhausted(fuel);
        positive = *d > 0;
        for (const auto& [key, v] : t->entries()) {
            if (!fuel.step()) return O::exhausted(fuel);
            auto kv = k->numeral_value(key);
            auto vv = k->numeral_value(v);
            if (!kv || !vv) return O::exhausted(fuel);
            positive = positive || *vv > 0;
        }
        return O::defined(k->numeral(positive ? 1 : 0));
    }};
}

template <PcaModel M>
Functional2<M> functional_by_name(const Kit<M>& kit, const std::string& name) {
    auto suffix = [&](const std::string& prefix) -> std::optional<std::uint64_t> {
        if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size()) return std::nullopt;
        std::uint64_t v = 0;
        for (char c : name.substr(prefix.size())) {
            if (c < '0' || c > '9') return std::nullopt;
            v = v * 10 + static_cast<std::uint64_t>(c - '0');
            if (v > 100000) return std::nullopt;
        }
        return v;
    };
    if (auto c = suffix("const:")) return constant_functional(kit, *c);
    if (name == "eval0") return eval_functional(kit, 0);
    if (auto n = suffix("eval:")) return eval_functional(kit, *n);
    if (name == "kleeneE") return kleene_E(kit);
    throw UnknownFunctional("unknown functional '" + name + "'");
}

template <class E>
struct ProbeStages {
    E probe;
    std::vector<Outcome<E>> stages;  // stages[k-1] is f_k(probe), k = 1..n
    std::optional<int> first_defined;
    std::optional<E> value;
};

template <class E>
struct FixpointReport {
    int stages = 0;
    std::vector<ProbeStages<E>> probes;
    bool monotone = true;  // graph(f_k) ⊆ graph(f_{k+1}) on the probes
};

// f_0 = ∅, f_{n+1} = F̃(f_n), each stage a memoizing host function over the previous one.
template <PcaModel M>
class FixpointStages {
public:
    FixpointStages(const Kit<M>& kit, Functional2<M> F, const ProbeBook<M>* book = nullptr)
        : kit_(&kit), F_(std::move(F)), book_(book) {
        stages_.push_back(BElem<M>::empty());
    }

    const BElem<M>& stage(int n) {
        while (static_cast<int>(stages_.size()) <= n) stages_.push_back(tilde_F(*kit_, F_, stages_.back(), book_));
        return stages_[n];
    }

    FixpointReport<ElementOf<M>> run(int n, const std::vector<ElementOf<M>>& probes, std::uint64_t fuel_per_probe) {
        FixpointReport<ElementOf<M>> rep;
        rep.stages = n;
        for (const auto& p : probes) {
            ProbeStages<ElementOf<M>> ps{p, {}, std::nullopt, std::nullopt};
            for (int k = 1; k <= n; ++k) {
                Fuel fuel(fuel_per_probe);
                auto o = stage(k)(p, fuel);
                if (o.is_defined() && !ps.first_defined) {
                    ps.first_defined = k;
                    ps.value = o.value();
                }
                if (!ps.stages.empty() && ps.stages.back().is_defined() &&
                    !(o.is_defined() && o.value() == ps.stages.back().value()))
                    rep.monotone = false;
                ps.stages.push_back(o);
            }
            rep.probes.push_back(std::move(ps));
        }
        return rep;
    }

    const Functional2<M>& functional() const { return F_; }

private:
    const Kit<M>* kit_;
    Functional2<M> F_;
    const ProbeBook<M>* book_;
    std::vector<BElem<M>> stages_;
};

template <PcaModel M>
FixpointReport<ElementOf<M>> fixpoint_stage(const Kit<M>& kit, const Functional2<M>& F, int n,
                                            const std::vector<ElementOf<M>>& probes, std::uint64_t fuel_per_probe,
                                            const ProbeBook<M>* book = nullptr) {
    FixpointStages<M> fs(kit, F, book);
    return fs.run(n, probes, fuel_per_probe);
}

template <PcaModel M>
void add_higher_combinators(Kit<M>& kit) {
    kit.program("ispos", "\\n. if #zero n then 0 else 1");
}

// r with r·b·a ≃ F̃(α)(a) whenever b represents α, for the shipped functionals. The
// kleeneE representer reads the interrogated function at 0 only, so it is valid on
// probes whose interrogated function is constant.
template <PcaModel M>
ElementOf<M> functional_representer(const Kit<M>& kit, const std::string& name) {
    Kit<M> local = kit;
    if (name.rfind("const:", 0) == 0) {
        auto F = functional_by_name(kit, name);
        Fuel fuel(1000);
        local.define("C", F(BElem<M>::empty(), fuel).value());
        return local.compile_text("\\b a. #C");
    }
    if (name == "eval0" || name.rfind("eval:", 0) == 0) {
        std::uint64_t n = name == "eval0" ? 0 : std::stoull(name.substr(5));
        local.define("N", kit.numeral(n));
        return local.compile_text("\\b a. #compose a b (#unit #N)");
    }
    if (name == "kleeneE") return local.compile_text("\\b a. #ispos (#compose a b (#unit 0))");
    throw UnknownFunctional("no representer for '" + name + "'");
}

template <class E>
struct RepresenterReport {
    int agree = 0;
    int disagree = 0;
    int inconclusive = 0;
    std::vector<std::string> failures;
};

// z·r at each probe against the stabilized stage value.
template <PcaModel M>
RepresenterReport<ElementOf<M>> z_representer_check(const Kit<M>& kit, const ElementOf<M>& r,
                                                    const FixpointReport<ElementOf<M>>& stages,
                                                    std::uint64_t fuel) {
    RepresenterReport<ElementOf<M>> rep;
    Fuel build(1000);
    auto zr = kit.model().apply(kit.get("z"), r, build);
    for (std::size_t j = 0; j < stages.probes.size(); ++j) {
        const auto& ps = stages.probes[j];
        if (!ps.value) {
            ++rep.inconclusive;
            continue;
        }
        Fuel f(fuel);
        auto o = kit.model().apply(zr.value(), ps.probe, f);
        if (o.is_exhausted()) {
            ++rep.inconclusive;
        } else if (o.is_defined() && o.value() == *ps.value) {
            ++rep.agree;
        } else {
            ++rep.disagree;
            rep.failures.push_back("probe " + std::to_string(j));
        }
    }
    return rep;
}

// The identity function on A.
template <PcaModel M>
BElem<M> identity_fn() {
    return BElem<M>::host([](const ElementOf<M>& a, Fuel& fuel) {
        if (!fuel.step()) return Outcome<ElementOf<M>>::exhausted(fuel);
        return Outcome<ElementOf<M>>::defined(a);
    }, "id");
}

template <PcaModel M>
Functional3<M> phi_constant(const Kit<M>& kit, std::uint64_t c) {
    ElementOf<M> v = kit.numeral(c);
    return Functional3<M>{"phi-const:" + std::to_string(c), [v](const Functional2<M>&, Fuel& fuel) {
        if (!fuel.step()) return Outcome<ElementOf<M>>::exhausted(fuel);
        return Outcome<ElementOf<M>>::defined(v);
    }};
}

// Φ(F) ≃ F(id).
template <PcaModel M>
Functional3<M> phi_eval_id() {
    BElem<M> id = identity_fn<M>();
    return Functional3<M>{"phi-eval-id", [id](const Functional2<M>& F, Fuel& fuel) {
        if (!fuel.step()) return Outcome<ElementOf<M>>::exhausted(fuel);
        return F(id, fuel);
    }};
}

template <PcaModel M>
Functional3<M> functional3_by_name(const Kit<M>& kit, const std::string& name) {
    if (name == "phi-eval-id") return phi_eval_id<M>();
    if (name.rfind("phi-const:", 0) == 0 && name.size() > 10) {
        std::uint64_t c = 0;
        for (char ch : name.substr(10)) {
            if (ch < '0' || ch > '9' || c > 100000) throw UnknownFunctional("unknown functional '" + name + "'");
            c = c * 10 + static_cast<std::uint64_t>(ch - '0');
        }
        return phi_constant(kit, c);
    }
    throw UnknownFunctional("unknown functional '" + name + "'");
}

// An element of B(BA): a host map BA ⇀ BA.
template <PcaModel M>
using FunctionalBA = std::function<Outcome<BElem<M>>(const BElem<M>&, Fuel&)>;

// F̂(α) = widehat(F(α)).
template <PcaModel M>
FunctionalBA<M> hat(const Functional2<M>& F) {
    return [F](const BElem<M>& alpha, Fuel& fuel) {
        auto v = F(alpha, fuel);
        if (!v.is_defined()) return v.template forward<BElem<M>>();
        return Outcome<BElem<M>>::defined(BElem<M>::constant(v.value()));
    };
}

// Φ̃(F)(a) ≃ Φ(λα. F(α)(i)).
template <PcaModel M>
BElem<M> tilde_Phi(const Kit<M>& kit, const Functional3<M>& Phi, const FunctionalBA<M>& F) {
    using E = ElementOf<M>;
    E i = kit.i();
    Functional2<M> G{"collapse", [F, i](const BElem<M>& alpha, Fuel& fuel) {
        auto fa = F(alpha, fuel);
        if (!fa.is_defined()) return fa.template forward<E>();
        return fa.value()(i, fuel);
    }};
    return BElem<M>::host([Phi, G](const E&, Fuel& fuel) { return Phi(G, fuel); }, "tilde:" + Phi.name);
}

template <PcaModel M>
void add_type3_combinators(Kit<M>& kit) {
    kit.program("mapj", "#z (\\f j m. if #zero m then #i else #p (#p1 (#p0 j)) (f (#p1 j) (#pred m)))");
    kit.program("mapp1", "\\s. #p (#p0 s) (#mapj (#p1 s) (#p0 s))");
    // Interrogates its oracle G as G ⊙ id at i: each query is answered by itself.
    kit.program("idrho",
                "\\x. if #zero (#pred (#lh x)) then #p #bot (#unit #i) "
                "else (\\u. if #p0 u then #p #top (#p1 u) else #p #bot (#concat (#unit #i) (#mapp1 (#dropseq x 1)))) "
                "(#last x)");
    // β·[c, u…] simulates (g ⊙ n̂)(c) for its oracle g.
    kit.program("evalat",
                "\\n x. if #zero (#pred (#lh x)) then #p #bot (#unit (#fst x)) "
                "else (\\u. if #p0 u then #p #top (#p1 u) else #p #bot (#repeat (#unit (#fst x)) (#pred (#lh x)) n)) "
                "(#last x)");
}

// ρ representing Φ̃ for the two shipped Φ forms, used with BA standing in for BA[Φ̃].
template <PcaModel M>
BElem<M> type3_rho(const Kit<M>& kit, const std::string& phi_name) {
    if (phi_name == "phi-eval-id") return BElem<M>::coded(kit.get("idrho"), kit.model());
    auto Phi = functional3_by_name(kit, phi_name);
    Fuel fuel(1000);
    Functional2<M> dummy{"dummy", [](const BElem<M>&, Fuel& f) { return Outcome<ElementOf<M>>::exhausted(f); }};
    ElementOf<M> c = Phi(dummy, fuel).value();
    return b_compose(kit, build_kappa(kit), embed_i<M>(c));
}

// β with β ⊙ g = g ⊙ n̂: a representer of F̂ for F = eval:n.
template <PcaModel M>
BElem<M> eval_representer(const Kit<M>& kit, std::uint64_t n) {
    Fuel fuel(100000);
    auto r = kit.model().apply(kit.get("evalat"), kit.numeral(n), fuel);
    return BElem<M>::coded(r.value(), kit.model());
}

// τ = λ*x. ρ ⊙ (λ*y. x ⊙ (σ ⊙ y)) compiled in BA.
template <PcaModel M>
BElem<M> type3_tau(const BElem<M>& rho, const BElem<M>& sigma, const BaModel<M>& ba) {
    using B = BElem<M>;
    using T = Term<B>;
    Fuel fuel(100000);
    auto iba = apply_chain(ba, ba.s(), {ba.k(), ba.k()}, fuel).value();
    auto kbar = ba.apply(ba.k(), iba, fuel).value();
    Basis<B> basis{ba.k(), ba.s(), iba, kbar};
    T inner = T::app(T::var("x"), T::app(T::constant(sigma), T::var("y")));
    T body = T::app(T::constant(rho), abstract_all(inner, {"y"}, basis));
    return compile(body, {"x"}, ba, basis);
}

// t = λ*x. k (s (λ*y. x y j)).
template <PcaModel M>
ElementOf<M> type3_t(const Kit<M>& kit, const ElementOf<M>& s, const ElementOf<M>& j) {
    Kit<M> local = kit;
    local.define("S3", s);
    local.define("J", j);
    return local.compile_text("\\x. #k (#S3 (\\y. x y #J))");
}

}  // namespace pcw
