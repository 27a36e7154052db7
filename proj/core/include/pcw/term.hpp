#pragma once

#include <functional>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pcw/kernel.hpp"

namespace pcw {

template <class E>
class Term {
public:
    enum class Kind { Var, Const, App };

    static Term var(std::string name) {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Var;
        n->name = std::move(name);
        return Term(std::move(n));
    }
    static Term constant(E value) {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Const;
        n->value = std::move(value);
        return Term(std::move(n));
    }
    static Term app(Term f, Term a, bool guard = false) {
        auto n = std::make_shared<Node>();
        n->kind = Kind::App;
        n->left = std::move(f);
        n->right = std::move(a);
        n->guard = guard;
        return Term(std::move(n));
    }

    Kind kind() const { return n_->kind; }
    bool is_var() const { return kind() == Kind::Var; }
    bool is_const() const { return kind() == Kind::Const; }
    bool is_app() const { return kind() == Kind::App; }
    const std::string& name() const { return n_->name; }
    const E& value() const { return n_->value; }
    const Term& left() const { return n_->left; }
    const Term& right() const { return n_->right; }
    // Marks the outermost application of a strong case distinction C t0 (λy.t1)(λy.t2) i.
    bool guard() const { return n_->guard; }

    bool operator==(const Term& o) const {
        if (n_ == o.n_) return true;
        if (kind() != o.kind()) return false;
        switch (kind()) {
            case Kind::Var: return name() == o.name();
            case Kind::Const: return value() == o.value();
            case Kind::App: return left() == o.left() && right() == o.right();
        }
        return false;
    }

    Term() = default;

private:
    struct Node {
        Kind kind;
        std::string name;
        E value{};
        Term left, right;
        bool guard = false;
    };
    explicit Term(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
    std::shared_ptr<const Node> n_;
};

// The model constants that bracket abstraction and case distinction are phrased in.
template <class E>
struct Basis {
    E k, s, i, kbar;
};

template <class E>
void collect_free(const Term<E>& t, std::set<std::string>& out) {
    if (t.is_var()) out.insert(t.name());
    if (t.is_app()) {
        collect_free(t.left(), out);
        collect_free(t.right(), out);
    }
}

template <class E>
std::set<std::string> free_vars(const Term<E>& t) {
    std::set<std::string> out;
    collect_free(t, out);
    return out;
}

template <class E>
bool occurs_free(const Term<E>& t, const std::string& u) {
    if (t.is_var()) return t.name() == u;
    if (t.is_app()) return occurs_free(t.left(), u) || occurs_free(t.right(), u);
    return false;
}

// λ*u.t by the three clauses: u ↦ i; constants and other variables ↦ k t;
// t0 t1 ↦ s (λ*u.t0) (λ*u.t1).
template <class E>
Term<E> bracket_abstract(const Term<E>& t, const std::string& u, const Basis<E>& b) {
    using T = Term<E>;
    if (t.is_var() && t.name() == u) return T::constant(b.i);
    if (!t.is_app()) return T::app(T::constant(b.k), t);
    return T::app(T::app(T::constant(b.s), bracket_abstract(t.left(), u, b)),
                  bracket_abstract(t.right(), u, b));
}

// λ*x0 … x(n-1).t, innermost variable abstracted first.
template <class E>
Term<E> abstract_all(Term<E> t, const std::vector<std::string>& vars, const Basis<E>& b) {
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) t = bracket_abstract(t, *it, b);
    return t;
}

template <class E>
std::string fresh_var(const std::vector<Term<E>>& avoid, const std::string& stem = "y") {
    std::set<std::string> used;
    for (const auto& t : avoid) collect_free(t, used);
    if (!used.count(stem)) return stem;
    for (int n = 0;; ++n) {
        std::string cand = stem + std::to_string(n);
        if (!used.count(cand)) return cand;
    }
}

// C t0 (λ*y.t1) (λ*y.t2) i with y fresh; C = i.
template <class E>
Term<E> strong_if(const Term<E>& t0, const Term<E>& t1, const Term<E>& t2, const Basis<E>& b) {
    using T = Term<E>;
    std::string y = fresh_var<E>({t1, t2});
    T c = T::app(T::constant(b.i), t0);
    T body = T::app(T::app(c, bracket_abstract(t1, y, b)), bracket_abstract(t2, y, b));
    return T::app(body, T::constant(b.i), true);
}

template <class E>
Term<E> substitute(const Term<E>& t, const std::unordered_map<std::string, E>& env) {
    using T = Term<E>;
    if (t.is_var()) {
        auto it = env.find(t.name());
        return it == env.end() ? t : T::constant(it->second);
    }
    if (t.is_const()) return t;
    return T::app(substitute(t.left(), env), substitute(t.right(), env), t.guard());
}

struct TermError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Strict evaluation of a closed term: t0 t1 is defined iff both parts are and the
// application is. Guarded case distinctions check their scrutinee against ⊤ and ⊥.
template <PcaModel M>
Outcome<ElementOf<M>> evaluate(const Term<ElementOf<M>>& t, const M& m, const Basis<ElementOf<M>>& b,
                               Fuel& fuel) {
    using O = Outcome<ElementOf<M>>;
    switch (t.kind()) {
        case Term<ElementOf<M>>::Kind::Var:
            throw TermError("unbound variable '" + t.name() + "'");
        case Term<ElementOf<M>>::Kind::Const:
            return O::defined(t.value());
        case Term<ElementOf<M>>::Kind::App:
            break;
    }
    if (t.guard()) {
        // ((C t0) l1) l2) i
        const auto& l2node = t.left();
        const auto& l1node = l2node.left();
        const auto& cnode = l1node.left();
        auto c = evaluate(cnode.left(), m, b, fuel);
        if (!c.is_defined()) return c;
        auto v0 = evaluate(cnode.right(), m, b, fuel);
        if (!v0.is_defined()) return v0;
        if (!(v0.value() == b.k) && !(v0.value() == b.kbar)) return O::undefined(Reason::NotABoolean);
        auto l1 = evaluate(l1node.right(), m, b, fuel);
        if (!l1.is_defined()) return l1;
        auto l2 = evaluate(l2node.right(), m, b, fuel);
        if (!l2.is_defined()) return l2;
        auto last = evaluate(t.right(), m, b, fuel);
        if (!last.is_defined()) return last;
        return apply_chain(m, c.value(), {v0.value(), l1.value(), l2.value(), last.value()}, fuel);
    }
    auto f = evaluate(t.left(), m, b, fuel);
    if (!f.is_defined()) return f;
    auto a = evaluate(t.right(), m, b, fuel);
    if (!a.is_defined()) return a;
    return m.apply(f.value(), a.value(), fuel);
}

// e with e·a1⋯an ⪯ t(ā). The abstracted term only applies k and s to fewer arguments
// than they need, so its evaluation cannot fail.
template <PcaModel M>
ElementOf<M> compile(const Term<ElementOf<M>>& t, const std::vector<std::string>& vars, const M& m,
                     const Basis<ElementOf<M>>& b) {
    if (vars.empty()) throw TermError("compile needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : vars)
        if (!seen.insert(v).second) throw TermError("duplicate variable '" + v + "'");
    for (const auto& v : free_vars(t))
        if (!seen.count(v)) throw TermError("free variable '" + v + "' is not in the variable list");
    Fuel fuel(100000000ULL);
    auto r = evaluate(abstract_all(t, vars, b), m, b, fuel);
    if (!r.is_defined()) throw TermError("abstracted term failed to evaluate");
    return r.value();
}

// Evaluates a closed term whose only variables were removed by abstraction.
template <PcaModel M>
ElementOf<M> compile_closed(const Term<ElementOf<M>>& t, const M& m, const Basis<ElementOf<M>>& b) {
    if (!free_vars(t).empty()) throw TermError("term is not closed: '" + *free_vars(t).begin() + "'");
    Fuel fuel(100000000ULL);
    auto r = evaluate(t, m, b, fuel);
    if (!r.is_defined()) throw TermError("closed term failed to evaluate");
    return r.value();
}

template <class E>
std::string print_term(const Term<E>& t, const std::function<std::string(const E&)>& print_const) {
    switch (t.kind()) {
        case Term<E>::Kind::Var: return t.name();
        case Term<E>::Kind::Const: return print_const(t.value());
        case Term<E>::Kind::App: break;
    }
    std::string r = print_term(t.right(), print_const);
    if (t.right().is_app() || (t.right().is_const() && r.find(' ') != std::string::npos)) r = "(" + r + ")";
    std::string l = print_term(t.left(), print_const);
    return l + " " + r;
}

}  // namespace pcw
