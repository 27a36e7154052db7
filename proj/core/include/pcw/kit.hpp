#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "pcw/kernel.hpp"
#include "pcw/syntax.hpp"
#include "pcw/term.hpp"

namespace pcw {

struct KitMissing : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The derived combinators of a model, each built from k and s. Members whose
// construction runs out of fuel (large codes in the numeric model) are recorded as
// missing rather than guessed.
template <PcaModel M>
class Kit {
public:
    using E = ElementOf<M>;

    explicit Kit(const M& model, std::uint64_t build_fuel = 50000000ULL)
        : model_(model), build_fuel_(build_fuel) {
        define("k", model_.k());
        define("s", model_.s());
        define_apply("i", {"s", "k", "k"});
        define_apply("kbar", {"k", "i"});
        alias("top", "k");
        alias("bot", "kbar");
        alias("case", "i");
        define_apply("sii", {"s", "i", "i"});
        program("p", "\\x y z. z x y");
        program("p0", "\\x. x #k");
        program("p1", "\\x. x #kbar");
        program("yhalf", "\\x y. y (x x y)");
        define_apply("y", {"yhalf", "yhalf"});
        program("zhalf", "\\x y z. y (x x y) z");
        define_apply("z", {"zhalf", "zhalf"});
        alias("zero", "p0");
        program("suc", "\\x. #p #bot x");
        program("pred", "\\x. #p0 x #i (#p1 x)");
        program("rec", "#z (\\r a b n. if #zero n then a else b (#pred n) (r a b (#pred n)))");
        program("eqstep", "\\k acc n. if #zero n then #bot else acc (#pred n)");
        program("eq", "\\m n. #rec #zero #eqstep m n");
        program("add", "\\m n. #rec n (\\k acc. #suc acc) m");
        program("sub", "\\n m. #rec n (\\k acc. #pred acc) m");
        alias("lh", "p0");
        program("drop", "#z (\\d j m. if #zero m then j else d (#p1 j) (#pred m))");
        program("fst", "\\s. #p0 (#p1 s)");
        program("read", "\\s n. #p0 (#drop (#p1 s) n)");
        program("unit", "\\a. #p 1 (#p a #i)");
        program("snoc", "#z (\\f j m a. if #zero m then #p a #i else #p (#p0 j) (f (#p1 j) (#pred m) a))");
        program("ext", "\\s a. #p (#suc (#p0 s)) (#snoc (#p1 s) (#p0 s) a)");
        program("catj", "#z (\\f j m k. if #zero m then k else #p (#p0 j) (f (#p1 j) (#pred m) k))");
        program("concat", "\\s t. #p (#add (#p0 s) (#p0 t)) (#catj (#p1 s) (#p0 s) (#p1 t))");
        program("takej", "#z (\\f j m. if #zero m then #i else #p (#p0 j) (f (#p1 j) (#pred m)))");
        program("take", "\\s n. #p n (#takej (#p1 s) n)");
        program("dropseq", "\\s n. #p (#sub (#p0 s) n) (#drop (#p1 s) n)");
        program("last", "\\s. #read s (#pred (#p0 s))");
    }

    Kit(const Kit& o) : model_(o.model_), build_fuel_(o.build_fuel_), entries_(o.entries_) {
        std::lock_guard<std::mutex> lock(o.mu_);
        numerals_ = o.numerals_;
        numeral_index_ = o.numeral_index_;
    }
    Kit& operator=(const Kit&) = delete;

    const M& model() const { return model_; }

    bool has(const std::string& name) const { return entries_.count(name) && entries_.at(name).has_value(); }

    const E& get(const std::string& name) const {
        auto it = entries_.find(name);
        if (it == entries_.end()) throw KitMissing("no kit member '" + name + "'");
        if (!it->second) throw KitMissing("kit member '" + name + "' could not be built within fuel");
        return *it->second;
    }

    std::vector<std::string> names() const {
        std::vector<std::string> out;
        for (const auto& [n, _] : entries_) out.push_back(n);
        return out;
    }

    E i() const { return get("i"); }
    E kbar() const { return get("kbar"); }
    E top() const { return get("top"); }
    E bot() const { return get("bot"); }
    E p() const { return get("p"); }
    E p0() const { return get("p0"); }
    E p1() const { return get("p1"); }

    Basis<E> basis() const { return Basis<E>{get("k"), get("s"), get("i"), get("kbar")}; }

    Env<E> env() const {
        Env<E> e;
        e.basis = basis();
        e.named = [this](const std::string& n) -> std::optional<E> {
            if (!has(n)) return std::nullopt;
            return get(n);
        };
        e.numeral = [this](std::uint64_t n) { return numeral(n); };
        return e;
    }

    Term<E> parse_term(const std::string& text) const { return parse(text, env()); }

    // Compiles surface text that denotes a closed term (lambdas are already abstracted).
    E compile_text(const std::string& text) const { return compile_closed(parse_term(text), model_, basis()); }

    void define(const std::string& name, std::optional<E> value) { entries_[name] = std::move(value); }

    // Adds a program written in surface syntax; a failure to build records the member as missing.
    void program(const std::string& name, const std::string& text) {
        try {
            Term<E> t = parse_term(text);
            if (!free_vars(t).empty()) throw TermError("program '" + name + "' is not closed");
            Fuel fuel(build_fuel_);
            auto r = evaluate(t, model_, basis(), fuel);
            define(name, r.is_defined() ? std::optional<E>(r.value()) : std::nullopt);
        } catch (const KitMissing&) {
            define(name, std::nullopt);
        } catch (const TermError&) {
            define(name, std::nullopt);
        } catch (const ParseError&) {
            define(name, std::nullopt);
        }
    }

    E numeral(std::uint64_t n) const {
        std::lock_guard<std::mutex> lock(mu_);
        while (numerals_.size() <= n) {
            if (numerals_.empty()) {
                numerals_.push_back(get("i"));
            } else {
                Fuel fuel(build_fuel_);
                auto r = apply2(model_, get("p"), get("bot"), numerals_.back(), fuel);
                if (!r.is_defined()) throw KitMissing("numeral " + std::to_string(numerals_.size()) + " out of fuel");
                numerals_.push_back(r.value());
            }
            numeral_index_.emplace(numerals_.back(), numerals_.size() - 1);
        }
        return numerals_[n];
    }

    // Recognises numerals up to the given bound by structural equality.
    std::optional<std::uint64_t> numeral_value(const E& e, std::uint64_t bound = 256) const {
        try {
            numeral(bound);
        } catch (const KitMissing&) {
        }
        std::lock_guard<std::mutex> lock(mu_);
        auto it = numeral_index_.find(e);
        if (it == numeral_index_.end()) return std::nullopt;
        return it->second;
    }

    E seq_code(const std::vector<E>& elems) const {
        E tail = get("i");
        Fuel fuel(build_fuel_);
        for (auto it = elems.rbegin(); it != elems.rend(); ++it) {
            auto r = apply2(model_, get("p"), *it, tail, fuel);
            if (!r.is_defined()) throw KitMissing("sequence code out of fuel");
            tail = r.value();
        }
        auto r = apply2(model_, get("p"), numeral(elems.size()), tail, fuel);
        if (!r.is_defined()) throw KitMissing("sequence code out of fuel");
        return r.value();
    }

    // The same code built on the caller's budget.
    Outcome<E> seq_code(const std::vector<E>& elems, Fuel& fuel) const {
        E tail = get("i");
        for (auto it = elems.rbegin(); it != elems.rend(); ++it) {
            auto r = apply2(model_, get("p"), *it, tail, fuel);
            if (!r.is_defined()) return r;
            tail = r.value();
        }
        return apply2(model_, get("p"), numeral(elems.size()), tail, fuel);
    }

    bool is_boolean(const E& e) const { return e == get("top") || e == get("bot"); }

private:
    void alias(const std::string& name, const std::string& target) { entries_[name] = entries_.at(target); }

    void define_apply(const std::string& name, const std::vector<std::string>& parts) {
        for (const auto& p : parts)
            if (!has(p)) {
                define(name, std::nullopt);
                return;
            }
        Fuel fuel(build_fuel_);
        std::vector<E> rest;
        for (std::size_t j = 1; j < parts.size(); ++j) rest.push_back(get(parts[j]));
        auto r = apply_chain(model_, get(parts[0]), rest, fuel);
        define(name, r.is_defined() ? std::optional<E>(r.value()) : std::nullopt);
    }

    M model_;
    std::uint64_t build_fuel_;
    std::map<std::string, std::optional<E>> entries_;
    mutable std::mutex mu_;
    mutable std::vector<E> numerals_;
    mutable std::unordered_map<E, std::uint64_t> numeral_index_;
};

}  // namespace pcw
