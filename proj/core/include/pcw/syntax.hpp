#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pcw/term.hpp"

namespace pcw {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error("parse error at " + std::to_string(pos) + ": " + msg), position(pos) {}
};

// Untyped surface syntax, before constants are resolved in a model.
struct Syntax {
    enum class Kind { Var, Named, Numeral, App, Lambda, If };
    Kind kind;
    std::string name;             // Var, Named
    std::uint64_t number = 0;     // Numeral
    std::vector<std::string> params;  // Lambda
    std::vector<std::shared_ptr<const Syntax>> kids;
    std::size_t position = 0;
};

using SyntaxPtr = std::shared_ptr<const Syntax>;

// Grammar:
//   expr  := '\' ident+ '.' expr | 'if' expr 'then' expr 'else' expr | app
//   app   := atom+ [ '\' … | 'if' … ]
//   atom  := ident | '#' name | '#num:' n | n | 'num:' n | '(' expr ')'
SyntaxPtr parse_syntax(std::string_view text);

// Parses one expression starting at pos and advances pos past it; used by the table and
// literal readers, which embed terms inside a larger syntax.
SyntaxPtr parse_syntax_prefix(std::string_view text, std::size_t& pos);

template <class E>
struct Env {
    Basis<E> basis;
    std::function<std::optional<E>(const std::string&)> named;
    std::function<E(std::uint64_t)> numeral;
};

template <class E>
Term<E> elaborate(const SyntaxPtr& s, const Env<E>& env) {
    using T = Term<E>;
    switch (s->kind) {
        case Syntax::Kind::Var: return T::var(s->name);
        case Syntax::Kind::Named: {
            auto v = env.named ? env.named(s->name) : std::nullopt;
            if (!v) throw ParseError("unknown constant '#" + s->name + "'", s->position);
            return T::constant(*v);
        }
        case Syntax::Kind::Numeral: return T::constant(env.numeral(s->number));
        case Syntax::Kind::App: return T::app(elaborate(s->kids[0], env), elaborate(s->kids[1], env));
        case Syntax::Kind::Lambda: return abstract_all(elaborate(s->kids[0], env), s->params, env.basis);
        case Syntax::Kind::If:
            return strong_if(elaborate(s->kids[0], env), elaborate(s->kids[1], env), elaborate(s->kids[2], env),
                             env.basis);
    }
    throw ParseError("bad syntax node", s->position);
}

template <class E>
Term<E> parse(std::string_view text, const Env<E>& env) {
    return elaborate(parse_syntax(text), env);
}

}  // namespace pcw
