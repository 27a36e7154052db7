#include "reference.hpp"

#include <stdexcept>
#include <vector>

namespace ref {

Tree leaf(char c) {
    auto n = std::make_shared<Node>();
    n->leaf = c;
    return n;
}

Tree app(Tree f, Tree a) {
    auto n = std::make_shared<Node>();
    n->l = std::move(f);
    n->r = std::move(a);
    return n;
}

std::string show(const Tree& t) {
    if (t->leaf) return std::string(1, t->leaf);
    std::string r = show(t->r);
    if (!t->r->leaf) r = "(" + r + ")";
    return show(t->l) + r;
}

Tree from_sk(const pcw::Sk& e) {
    switch (e.tag()) {
        case pcw::Sk::Tag::K: return leaf('K');
        case pcw::Sk::Tag::S: return leaf('S');
        case pcw::Sk::Tag::Poison: throw std::invalid_argument("poison has no reference form");
        case pcw::Sk::Tag::App: break;
    }
    return app(from_sk(e.left()), from_sk(e.right()));
}

pcw::Sk to_sk(const Tree& t) {
    if (t->leaf == 'K') return pcw::Sk::K();
    if (t->leaf == 'S') return pcw::Sk::S();
    return pcw::Sk::app(to_sk(t->l), to_sk(t->r));
}

namespace {

struct OutOfBudget {};

struct Rewriter {
    std::uint64_t budget;
    std::uint64_t steps = 0;

    void tick() {
        if (steps == budget) throw OutOfBudget{};
        ++steps;
    }

    Tree run(Tree t) {
        for (;;) {
            std::vector<Tree> args;
            Tree head = t;
            while (!head->leaf) {
                args.push_back(head->r);
                head = head->l;
            }
            std::vector<Tree> spine(args.rbegin(), args.rend());
            Tree next;
            std::size_t used = 0;
            if (head->leaf == 'K' && spine.size() >= 2) {
                tick();
                next = spine[0];
                used = 2;
            } else if (head->leaf == 'S' && spine.size() >= 3) {
                tick();
                next = app(app(spine[0], spine[2]), app(spine[1], spine[2]));
                used = 3;
            }
            if (next) {
                for (std::size_t j = used; j < spine.size(); ++j) next = app(next, spine[j]);
                t = next;
                continue;
            }
            Tree out = head;
            for (const auto& a : spine) out = app(out, run(a));
            return out;
        }
    }
};

}  // namespace

Result normalize(const Tree& t, std::uint64_t budget) {
    Rewriter rw{budget};
    Result res;
    try {
        res.value = rw.run(t);
    } catch (const OutOfBudget&) {
    }
    res.steps = rw.steps;
    return res;
}

namespace {

std::optional<u128> pair(u128 a, u128 b) {
    u128 s = a + b;
    if (s < a || s > (u128(1) << 62)) return std::nullopt;
    return s * (s + 1) / 2 + b;
}

}  // namespace

std::optional<u128> encode(const Tree& t) {
    if (t->leaf == 'K') return 0;
    if (t->leaf == 'S') return 1;
    auto a = encode(t->l);
    auto b = encode(t->r);
    if (!a || !b) return std::nullopt;
    auto p = pair(*a, *b);
    if (!p) return std::nullopt;
    return 2 + *p;
}

Tree decode(u128 n) {
    if (n == 0) return leaf('K');
    if (n == 1) return leaf('S');
    u128 m = n - 2;
    u128 lo = 0, hi = u128(1) << 32;
    while (lo < hi) {
        u128 mid = (lo + hi + 1) / 2;
        if (mid * (mid + 1) / 2 <= m)
            lo = mid;
        else
            hi = mid - 1;
    }
    u128 w = lo;
    u128 b = m - w * (w + 1) / 2;
    return app(decode(w - b), decode(b));
}

std::string to_string(u128 n) {
    if (n == 0) return "0";
    std::string s;
    while (n) {
        s.insert(s.begin(), char('0' + static_cast<int>(n % 10)));
        n /= 10;
    }
    return s;
}

}  // namespace ref
