#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pcw/kernel.hpp"
#include "pcw/kit.hpp"
#include "pcw/table.hpp"

namespace pcw {

// A partial function A ⇀ A given by a table, a host procedure, or a code r (meaning λa. r·a).
template <PcaModel M>
class PartialFn {
public:
    using E = ElementOf<M>;
    using Proc = std::function<Outcome<E>(const E&, Fuel&)>;
    using TableView = std::function<std::optional<OracleTable<E>>(Fuel&)>;
    enum class Kind { Table, Host, Coded };

    static PartialFn table(OracleTable<E> t) {
        auto s = std::make_shared<State>();
        s->kind = Kind::Table;
        s->table = std::move(t);
        return PartialFn(std::move(s));
    }
    static PartialFn host(Proc proc, std::string label = "host") {
        auto s = std::make_shared<State>();
        s->kind = Kind::Host;
        s->proc = std::move(proc);
        s->label = std::move(label);
        return PartialFn(std::move(s));
    }
    static PartialFn coded(E r, M model) {
        auto s = std::make_shared<State>();
        s->kind = Kind::Coded;
        s->code = r;
        s->proc = [r, model](const E& a, Fuel& fuel) { return model.apply(r, a, fuel); };
        return PartialFn(std::move(s));
    }
    static PartialFn empty() { return table(OracleTable<E>{}); }
    static PartialFn constant(E v) {
        OracleTable<E> t;
        t.set_default(std::move(v));
        return table(std::move(t));
    }

    Kind kind() const { return s_->kind; }
    bool is_table() const { return s_->kind == Kind::Table; }
    bool is_coded() const { return s_->kind == Kind::Coded; }
    const OracleTable<E>& as_table() const { return s_->table; }
    const E& code() const { return s_->code; }
    const std::string& label() const { return s_->label; }

    // An optional certificate that this function agrees with a finite table.
    PartialFn with_table_view(TableView view) const {
        auto s = std::make_shared<State>();
        s->kind = s_->kind;
        s->table = s_->table;
        s->code = s_->code;
        s->proc = s_->proc;
        s->label = s_->label;
        s->view = std::move(view);
        return PartialFn(std::move(s));
    }
    std::optional<OracleTable<E>> table_view(Fuel& fuel) const {
        if (is_table()) return s_->table;
        if (s_->view) return s_->view(fuel);
        return std::nullopt;
    }

    // Evaluation; tables answer outright, procedures and codes draw on the caller's fuel.
    // Non-exhausted answers are cached together with their cost, and a hit charges that
    // same cost, so results are identical to recomputation for every budget.
    Outcome<E> operator()(const E& a, Fuel& fuel) const {
        if (s_->kind == Kind::Table) {
            auto v = s_->table.lookup(a);
            return v ? Outcome<E>::defined(*v) : Outcome<E>::undefined(Reason::OracleUndefined);
        }
        {
            std::lock_guard<std::mutex> lock(s_->mu);
            auto it = s_->memo.find(a);
            if (it != s_->memo.end()) {
                if (!fuel.step(it->second.second)) return Outcome<E>::exhausted(fuel);
                return it->second.first;
            }
        }
        std::uint64_t before = fuel.spent();
        auto r = s_->proc(a, fuel);
        if (!r.is_exhausted()) {
            std::lock_guard<std::mutex> lock(s_->mu);
            s_->memo.emplace(a, std::make_pair(r, fuel.spent() - before));
        }
        return r;
    }

    bool same(const PartialFn& o) const { return s_ == o.s_; }
    bool operator==(const PartialFn& o) const { return same(o); }
    const void* identity() const { return s_.get(); }

    PartialFn() : PartialFn(empty()) {}

private:
    struct State {
        Kind kind = Kind::Table;
        OracleTable<E> table;
        E code{};
        Proc proc;
        TableView view;
        std::string label;
        std::mutex mu;
        std::unordered_map<E, std::pair<Outcome<E>, std::uint64_t>> memo;
    };
    explicit PartialFn(std::shared_ptr<State> s) : s_(std::move(s)) {}
    std::shared_ptr<State> s_;
};

template <class E>
struct Trace {
    std::vector<std::pair<E, E>> steps;
    std::optional<Outcome<E>> verdict;
    std::uint64_t spent = 0;
    std::optional<E> pending_query;  // the query whose answer was undefined, if any

    std::string render(const std::function<std::string(const E&)>& print) const {
        std::string out;
        for (const auto& [q, a] : steps) out += "? " + print(q) + " => " + print(a) + "\n";
        if (verdict) {
            if (verdict->is_defined())
                out += "= " + print(verdict->value()) + "\n";
            else if (verdict->is_undefined())
                out += std::string("! undefined(") + reason_name(verdict->reason()) + ")\n";
            else
                out += "! fuel\n";
        }
        return out;
    }
};

template <class E>
struct Interrogation {
    Outcome<E> outcome;
    Trace<E> trace;
};

// The input-interrogation loop shared by A[f] and BA: feed [input, u0, …, u(i-1)] to the
// interrogator; a ⊥-verdict asks the oracle at the p1-part, a ⊤-verdict returns it.
template <PcaModel M, class Interrogator>
Interrogation<ElementOf<M>> interrogate(const Kit<M>& kit, Interrogator&& interrogator, const ElementOf<M>& input,
                                        const PartialFn<M>& oracle, Fuel& fuel) {
    using E = ElementOf<M>;
    using O = Outcome<E>;
    const M& m = kit.model();
    Trace<E> trace;
    std::uint64_t start = fuel.spent();
    auto finish = [&](O o) {
        trace.verdict = o;
        trace.spent = fuel.spent() - start;
        return Interrogation<E>{std::move(o), std::move(trace)};
    };
    std::vector<E> items{input};
    const E top = kit.top();
    const E bot = kit.bot();
    for (;;) {
        if (fuel.exhausted()) return finish(O::exhausted(fuel));
        O seq = kit.seq_code(items, fuel);
        if (!seq.is_defined()) return finish(seq);
        if (!fuel.step()) return finish(O::exhausted(fuel));
        O out = interrogator(seq.value(), fuel);
        if (!out.is_defined()) return finish(out);
        O tag = m.apply(kit.p0(), out.value(), fuel);
        if (!tag.is_defined()) return finish(tag);
        O part = m.apply(kit.p1(), out.value(), fuel);
        if (!part.is_defined()) return finish(part);
        if (tag.value() == top) return finish(part);
        if (!(tag.value() == bot)) return finish(O::undefined(Reason::NotABoolean));
        if (!fuel.step()) return finish(O::exhausted(fuel));
        O answer = oracle(part.value(), fuel);
        if (!answer.is_defined()) {
            trace.pending_query = part.value();
            return finish(answer);
        }
        trace.steps.emplace_back(part.value(), answer.value());
        items.push_back(answer.value());
    }
}

// a ⊙_f b.
template <PcaModel M>
Interrogation<ElementOf<M>> oracle_apply(const Kit<M>& kit, const ElementOf<M>& a, const ElementOf<M>& b,
                                         const PartialFn<M>& f, Fuel& fuel) {
    const M& m = kit.model();
    auto interrogator = [&](const ElementOf<M>& seq, Fuel& fl) { return m.apply(a, seq, fl); };
    return interrogate(kit, interrogator, b, f, fuel);
}

template <PcaModel M>
void add_oracle_combinators(Kit<M>& kit) {
    kit.program("kf", "\\x. #p #top (\\y. #p #top (#fst x))");
    kit.program("tf", "\\x. #p #top (\\y. #p #top (#fst x (#fst y)))");
    kit.program("rf", "\\x. if #zero (#pred (#lh x)) then #p #bot (#fst x) else #p #top (#read x 1)");
    // S x y u: scan prefixes of u for x's first ⊤, then y on the respliced remainder.
    kit.program("SB",
                "#z (\\sb y u L e m. (\\R. (\\v. if #p0 v then e (#concat (#unit (#p1 v)) (#dropseq R m)) "
                "else if #eq m (#lh R) then v else sb y u L e (#suc m)) "
                "(y (#concat (#unit (#fst u)) (#take R m)))) (#dropseq u L))");
    kit.program("SA",
                "#z (\\sa x y u L. (\\r. if #p0 r then #SB y u L (#p1 r) 0 "
                "else if #eq L (#lh u) then r else sa x y u (#suc L)) (x (#take u L)))");
    kit.program("S", "\\x y u. #SA x y u 1");
    kit.program("sf", "\\x. #p #top (\\y. #p #top (#S (#fst x) (#fst y)))");
}

// A[f] as a model in its own right: same carrier, application ⊙_f, combinators k_f, s_f.
template <PcaModel M>
class OracleModel {
public:
    using Element = ElementOf<M>;

    OracleModel(const Kit<M>& kit, PartialFn<M> f) : kit_(&kit), f_(std::move(f)) {}

    Outcome<Element> apply(const Element& a, const Element& b, Fuel& fuel) const {
        return oracle_apply(*kit_, a, b, f_, fuel).outcome;
    }
    bool leq(const Element& a, const Element& b) const { return kit_->model().leq(a, b); }
    bool in_filter(const Element& a) const { return kit_->model().in_filter(a); }
    Element k() const { return kit_->get("kf"); }
    Element s() const { return kit_->get("sf"); }
    const PartialFn<M>& oracle() const { return f_; }

private:
    const Kit<M>* kit_;
    PartialFn<M> f_;
};

// r̂: the constant function with value r, so that A[r̂] adjoins the element r.
template <PcaModel M>
PartialFn<M> adjoin_element(const ElementOf<M>& r) {
    return PartialFn<M>::constant(r);
}

template <class E>
struct WitnessPack {
    E t;       // tracker of g
    E d;       // decider for g
    E s;       // representer of f with respect to g
    E p0, p1, unit, ext, i;  // images under g
};

// The pack of the identity morphism on A, with s a code computing f.
template <PcaModel M>
WitnessPack<ElementOf<M>> identity_pack(const Kit<M>& kit, const ElementOf<M>& representer) {
    return WitnessPack<ElementOf<M>>{kit.compile_text("\\x y. x y"), kit.i(), representer, kit.p0(), kit.p1(),
                                     kit.get("unit"), kit.get("ext"), kit.i()};
}

template <class E>
struct TrackerCode {
    E T;        // T b v ⪯ if d(p0'(t b v)) then p1'(t b v) else T b (ext' v (s (p1'(t b v))))
    E tracker;  // λ*xy. T x (unit' y)
};

template <PcaModel M>
TrackerCode<ElementOf<M>> universal_tracker(const WitnessPack<ElementOf<M>>& w, const Kit<M>& kit) {
    using E = ElementOf<M>;
    Kit<M> local = kit;
    local.define("wt", w.t);
    local.define("wd", w.d);
    local.define("ws", w.s);
    local.define("wp0", w.p0);
    local.define("wp1", w.p1);
    local.define("wunit", w.unit);
    local.define("wext", w.ext);
    local.program("p0'", "\\x. #wt #wp0 x");
    local.program("p1'", "\\x. #wt #wp1 x");
    local.program("unit'", "\\x. #wt #wunit x");
    local.program("ext'", "\\v a. #wt (#wt #wext v) a");
    E T = local.compile_text(
        "#z (\\T b v. if #wd (#p0' (#wt b v)) then #p1' (#wt b v) "
        "else T b (#ext' v (#ws (#p1' (#wt b v)))))");
    local.define("T", T);
    E tracker = local.compile_text("\\x y. #T x (#unit' y)");
    return TrackerCode<E>{T, tracker};
}

// Semi-decides membership in A[f]^#: the closure of the generators under application in A,
// under ⊙_f, and under f, enumerated by generation depth.
template <class E>
struct FilterWitness {
    std::string term;
    int size = 0;
};

template <PcaModel M>
std::optional<FilterWitness<ElementOf<M>>> af_filter_member(const Kit<M>& kit, const ElementOf<M>& x,
                                                            const PartialFn<M>& f,
                                                            const std::vector<ElementOf<M>>& generators,
                                                            int max_size, std::uint64_t fuel_per_step,
                                                            std::size_t max_elements = 4000) {
    using E = ElementOf<M>;
    const M& m = kit.model();
    std::vector<std::vector<std::pair<E, std::string>>> by_size(max_size + 1);
    std::unordered_map<E, bool> seen;
    for (std::size_t j = 0; j < generators.size(); ++j) {
        const E& g = generators[j];
        if (seen.count(g)) continue;
        seen[g] = true;
        std::string name = "x" + std::to_string(j);
        if (g == x) return FilterWitness<E>{name, 1};
        by_size[1].emplace_back(g, name);
    }
    std::size_t total = seen.size();
    auto offer = [&](int size, const Outcome<E>& o, std::string term) -> std::optional<FilterWitness<E>> {
        if (!o.is_defined() || seen.count(o.value())) return std::nullopt;
        seen[o.value()] = true;
        ++total;
        if (o.value() == x) return FilterWitness<E>{term, size};
        by_size[size].emplace_back(o.value(), std::move(term));
        return std::nullopt;
    };
    for (int size = 2; size <= max_size; ++size) {
        for (const auto& [e, t] : by_size[size - 1]) {
            Fuel fuel(fuel_per_step);
            if (auto w = offer(size, f(e, fuel), "f(" + t + ")")) return w;
        }
        for (int ls = 1; ls < size - 1; ++ls) {
            int rs = size - 1 - ls;
            for (std::size_t li = 0; li < by_size[ls].size(); ++li)
                for (std::size_t ri = 0; ri < by_size[rs].size(); ++ri) {
                    if (total > max_elements) return std::nullopt;
                    const auto& [a, ta] = by_size[ls][li];
                    const auto& [b, tb] = by_size[rs][ri];
                    Fuel f1(fuel_per_step);
                    if (auto w = offer(size, m.apply(a, b, f1), "(" + ta + " " + tb + ")")) return w;
                    Fuel f2(fuel_per_step);
                    if (auto w = offer(size, oracle_apply(kit, a, b, f, f2).outcome, "(" + ta + " ⊙ " + tb + ")"))
                        return w;
                }
        }
    }
    return std::nullopt;
}

}  // namespace pcw
