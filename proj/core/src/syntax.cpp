#include "pcw/syntax.hpp"

#include <cctype>

namespace pcw {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }
bool is_keyword(std::string_view w) { return w == "if" || w == "then" || w == "else"; }

class Parser {
public:
    Parser(std::string_view text, std::size_t pos) : s_(text), p_(pos) {}

    SyntaxPtr expr() {
        skip();
        if (peek() == '\\') return lambda();
        if (at_word("if")) return conditional();
        return application();
    }

    std::size_t pos() const { return p_; }

    void expect_end() {
        skip();
        if (p_ != s_.size()) fail("unexpected '" + std::string(1, s_[p_]) + "'");
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, p_); }

    char peek() const { return p_ < s_.size() ? s_[p_] : '\0'; }

    void skip() {
        while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
    }

    bool at_word(std::string_view w) const {
        if (s_.substr(p_, w.size()) != w) return false;
        std::size_t e = p_ + w.size();
        return e >= s_.size() || !ident_char(s_[e]);
    }

    std::string word() {
        std::size_t b = p_;
        while (p_ < s_.size() && ident_char(s_[p_])) ++p_;
        return std::string(s_.substr(b, p_ - b));
    }

    std::uint64_t number() {
        std::size_t b = p_;
        std::uint64_t n = 0;
        while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) {
            std::uint64_t d = static_cast<std::uint64_t>(s_[p_] - '0');
            if (n > (UINT64_MAX - d) / 10) fail("numeral too large");
            n = n * 10 + d;
            ++p_;
        }
        if (b == p_) fail("expected a number");
        return n;
    }

    static std::shared_ptr<Syntax> node(Syntax::Kind k, std::size_t pos) {
        auto n = std::make_shared<Syntax>();
        n->kind = k;
        n->position = pos;
        return n;
    }

    SyntaxPtr numeral_node(std::uint64_t n, std::size_t pos) {
        auto s = std::make_shared<Syntax>();
        s->kind = Syntax::Kind::Numeral;
        s->number = n;
        s->position = pos;
        return s;
    }

    SyntaxPtr lambda() {
        std::size_t at = p_;
        ++p_;
        auto n = std::make_shared<Syntax>();
        n->kind = Syntax::Kind::Lambda;
        n->position = at;
        for (;;) {
            skip();
            if (peek() == '.') break;
            if (!ident_start(peek())) fail("expected a parameter name");
            std::string w = word();
            if (is_keyword(w)) fail("keyword '" + w + "' used as a parameter");
            n->params.push_back(w);
        }
        if (n->params.empty()) fail("lambda without parameters");
        ++p_;
        n->kids.push_back(expr());
        return n;
    }

    SyntaxPtr conditional() {
        auto n = std::make_shared<Syntax>();
        n->kind = Syntax::Kind::If;
        n->position = p_;
        p_ += 2;
        n->kids.push_back(expr());
        skip();
        if (!at_word("then")) fail("expected 'then'");
        p_ += 4;
        n->kids.push_back(expr());
        skip();
        if (!at_word("else")) fail("expected 'else'");
        p_ += 4;
        n->kids.push_back(expr());
        return n;
    }

    bool atom_start() {
        skip();
        char c = peek();
        if (c == '(' || c == '#' || std::isdigit(static_cast<unsigned char>(c))) return true;
        if (ident_start(c)) return !(at_word("then") || at_word("else"));
        return false;
    }

    SyntaxPtr atom() {
        skip();
        std::size_t at = p_;
        char c = peek();
        if (c == '(') {
            ++p_;
            auto e = expr();
            skip();
            if (peek() != ')') fail("expected ')'");
            ++p_;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return numeral_node(number(), at);
        if (c == '#') {
            ++p_;
            if (!ident_start(peek())) fail("expected a constant name after '#'");
            std::string w = word();
            if (w == "num" && peek() == ':') {
                ++p_;
                return numeral_node(number(), at);
            }
            auto n = std::make_shared<Syntax>();
            n->kind = Syntax::Kind::Named;
            n->name = w;
            n->position = at;
            return n;
        }
        if (ident_start(c)) {
            std::string w = word();
            if (w == "if") fail("unexpected 'if'");
            if (w == "num" && peek() == ':') {
                ++p_;
                return numeral_node(number(), at);
            }
            auto n = std::make_shared<Syntax>();
            n->kind = Syntax::Kind::Var;
            n->name = w;
            n->position = at;
            return n;
        }
        if (c == '\0') fail("unexpected end of input");
        fail("unexpected '" + std::string(1, c) + "'");
    }

    SyntaxPtr application() {
        std::size_t at = p_;
        if (!atom_start()) {
            skip();
            if (peek() == '\0') fail("unexpected end of input");
            fail("unexpected '" + std::string(1, peek()) + "'");
        }
        SyntaxPtr acc = atom();
        for (;;) {
            skip();
            SyntaxPtr next;
            if (peek() == '\\') {
                next = lambda();
            } else if (at_word("if")) {
                next = conditional();
            } else if (atom_start()) {
                next = atom();
            } else {
                break;
            }
            auto app = node(Syntax::Kind::App, at);
            app->kids = {acc, next};
            acc = app;
        }
        return acc;
    }

    std::string_view s_;
    std::size_t p_;
};

}  // namespace

SyntaxPtr parse_syntax(std::string_view text) {
    Parser p(text, 0);
    auto e = p.expr();
    p.expect_end();
    return e;
}

SyntaxPtr parse_syntax_prefix(std::string_view text, std::size_t& pos) {
    Parser p(text, pos);
    auto e = p.expr();
    pos = p.pos();
    return e;
}

}  // namespace pcw
