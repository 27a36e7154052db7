#pragma once

#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace pcw {

class Fuel {
public:
    explicit Fuel(std::uint64_t budget) : budget_(budget) {}

    // Consumes n steps; returns false (and pins spent at the budget) once exhausted.
    bool step(std::uint64_t n = 1) {
        if (exhausted_) return false;
        if (budget_ - spent_ < n) {
            spent_ = budget_;
            exhausted_ = true;
            return false;
        }
        spent_ += n;
        return true;
    }

    std::uint64_t budget() const { return budget_; }
    std::uint64_t spent() const { return spent_; }
    std::uint64_t remaining() const { return budget_ - spent_; }
    bool exhausted() const { return exhausted_; }

private:
    std::uint64_t budget_;
    std::uint64_t spent_ = 0;
    bool exhausted_ = false;
};

enum class Reason { NotABoolean, OracleUndefined, ModelStuck };

const char* reason_name(Reason r);

template <class E>
class Outcome {
public:
    struct Defined { E value; };
    struct Undefined { Reason reason; };
    struct Exhausted { std::uint64_t spent; };

    static Outcome defined(E v) { return Outcome(Defined{std::move(v)}); }
    static Outcome undefined(Reason r) { return Outcome(Undefined{r}); }
    static Outcome exhausted(std::uint64_t spent) { return Outcome(Exhausted{spent}); }
    static Outcome exhausted(const Fuel& f) { return Outcome(Exhausted{f.spent()}); }

    bool is_defined() const { return std::holds_alternative<Defined>(v_); }
    bool is_undefined() const { return std::holds_alternative<Undefined>(v_); }
    bool is_exhausted() const { return std::holds_alternative<Exhausted>(v_); }

    const E& value() const {
        if (!is_defined()) throw std::logic_error("Outcome::value on a non-Defined outcome");
        return std::get<Defined>(v_).value;
    }
    Reason reason() const { return std::get<Undefined>(v_).reason; }
    std::uint64_t spent() const { return std::get<Exhausted>(v_).spent; }

    template <class F>
    auto map(F&& f) const -> Outcome<std::invoke_result_t<F, const E&>> {
        using R = Outcome<std::invoke_result_t<F, const E&>>;
        if (is_defined()) return R::defined(f(value()));
        if (is_undefined()) return R::undefined(reason());
        return R::exhausted(spent());
    }

    // Re-tags a non-Defined outcome for another element type.
    template <class R>
    Outcome<R> forward() const {
        if (is_undefined()) return Outcome<R>::undefined(reason());
        if (is_exhausted()) return Outcome<R>::exhausted(spent());
        throw std::logic_error("Outcome::forward on a Defined outcome");
    }

private:
    explicit Outcome(std::variant<Defined, Undefined, Exhausted> v) : v_(std::move(v)) {}
    std::variant<Defined, Undefined, Exhausted> v_;
};

template <class M>
concept PcaModel = requires(const M& m, const typename M::Element& a, Fuel& fuel) {
    { m.apply(a, a, fuel) } -> std::same_as<Outcome<typename M::Element>>;
    { m.leq(a, a) } -> std::convertible_to<bool>;
    { m.in_filter(a) } -> std::convertible_to<bool>;
    { m.k() } -> std::convertible_to<typename M::Element>;
    { m.s() } -> std::convertible_to<typename M::Element>;
};

template <PcaModel M>
using ElementOf = typename M::Element;

// o1 ⪯ o2: whenever o2 is Defined, o1 is Defined below it. An exhausted right side
// makes no claim, so the relation holds vacuously.
template <PcaModel M>
bool kleene_leq(const Outcome<ElementOf<M>>& o1, const Outcome<ElementOf<M>>& o2, const M& m) {
    if (!o2.is_defined()) return true;
    return o1.is_defined() && m.leq(o1.value(), o2.value());
}

template <PcaModel M>
bool kleene_eq(const Outcome<ElementOf<M>>& o1, const Outcome<ElementOf<M>>& o2, const M& m) {
    return kleene_leq(o1, o2, m) && kleene_leq(o2, o1, m);
}

template <PcaModel M>
Outcome<ElementOf<M>> apply2(const M& m, const ElementOf<M>& f, const ElementOf<M>& a,
                             const ElementOf<M>& b, Fuel& fuel) {
    auto fa = m.apply(f, a, fuel);
    if (!fa.is_defined()) return fa;
    return m.apply(fa.value(), b, fuel);
}

template <PcaModel M>
Outcome<ElementOf<M>> apply_chain(const M& m, ElementOf<M> f, const std::vector<ElementOf<M>>& args,
                                  Fuel& fuel) {
    auto cur = Outcome<ElementOf<M>>::defined(std::move(f));
    for (const auto& a : args) {
        if (!cur.is_defined()) return cur;
        cur = m.apply(cur.value(), a, fuel);
    }
    return cur;
}

// A downward closed set of elements. In discrete models this is any set.
template <class E>
struct Downset {
    std::vector<E> elements;
    std::function<bool(const E&)> predicate;

    bool contains(const E& e) const {
        if (predicate) return predicate(e);
        for (const auto& x : elements)
            if (x == e) return true;
        return false;
    }
};

}  // namespace pcw
