#include "pcw/sk.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>
#include <vector>

namespace pcw {

const char* reason_name(Reason r) {
    switch (r) {
        case Reason::NotABoolean: return "not-a-boolean";
        case Reason::OracleUndefined: return "oracle";
        case Reason::ModelStuck: return "stuck";
    }
    return "?";
}

namespace {

std::size_t mix(std::size_t h) {
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    h *= 0xc4ceb9fe1a85ec53ULL;
    h ^= h >> 33;
    return h;
}

int needed(Sk::Tag head) {
    switch (head) {
        case Sk::Tag::K: return 2;
        case Sk::Tag::S: return 3;
        case Sk::Tag::Poison: return 1;
        default: return 0;
    }
}

std::shared_ptr<SkNode> make_leaf(Sk::Tag t) {
    auto n = std::make_shared<SkNode>();
    n->tag = t;
    n->head = t;
    n->args = 0;
    n->normal = true;
    n->depth = 1;
    n->size = 1;
    n->hash = mix(static_cast<std::size_t>(t) + 0x9e3779b97f4a7c15ULL);
    return n;
}

const Sk& leaf(Sk::Tag t) {
    static const Sk k{make_leaf(Sk::Tag::K)};
    static const Sk s{make_leaf(Sk::Tag::S)};
    static const Sk p{make_leaf(Sk::Tag::Poison)};
    switch (t) {
        case Sk::Tag::K: return k;
        case Sk::Tag::S: return s;
        default: return p;
    }
}

}  // namespace

Sk Sk::K() { return leaf(Tag::K); }
Sk Sk::S() { return leaf(Tag::S); }
Sk Sk::poison() { return leaf(Tag::Poison); }

Sk Sk::app(Sk f, Sk a) {
    auto n = std::make_shared<SkNode>();
    const SkNode& fn = *f.node();
    const SkNode& an = *a.node();
    n->tag = Tag::App;
    n->head = fn.head;
    n->args = static_cast<std::uint8_t>(std::min<int>(fn.args + 1, 3));
    n->normal = fn.normal && an.normal && fn.args + 1 < needed(fn.head);
    n->depth = std::max(fn.depth, an.depth) + 1;
    n->size = fn.size + an.size + 1;
    if (n->size < fn.size) n->size = UINT64_MAX;
    n->hash = mix(fn.hash * 31 + an.hash * 0x100000001b3ULL + 7);
    n->left = std::move(f);
    n->right = std::move(a);
    return Sk(std::move(n));
}

Sk::Tag Sk::tag() const { return n_->tag; }
const Sk& Sk::left() const { return n_->left; }
const Sk& Sk::right() const { return n_->right; }
std::size_t Sk::hash() const { return n_->hash; }
bool Sk::normal() const { return n_->normal; }
std::uint64_t Sk::size() const { return n_->size; }
std::uint32_t Sk::depth() const { return n_->depth; }

bool operator==(const Sk& a, const Sk& b) {
    using Pair = std::pair<const SkNode*, const SkNode*>;
    struct PairHash {
        std::size_t operator()(const Pair& p) const {
            return std::hash<const void*>{}(p.first) * 31 + std::hash<const void*>{}(p.second);
        }
    };
    std::vector<Pair> todo{{a.node(), b.node()}};
    std::unordered_set<Pair, PairHash> seen;
    std::size_t visited = 0;
    while (!todo.empty()) {
        auto [x, y] = todo.back();
        todo.pop_back();
        if (x == y) continue;
        if (x->hash != y->hash || x->size != y->size || x->tag != y->tag) return false;
        if (x->tag != Sk::Tag::App) continue;
        if (++visited > 256 && !seen.insert({x, y}).second) continue;
        todo.emplace_back(x->left.node(), y->left.node());
        todo.emplace_back(x->right.node(), y->right.node());
    }
    return true;
}

std::string sk_debug_string(const Sk& t) {
    switch (t.tag()) {
        case Sk::Tag::K: return "K";
        case Sk::Tag::S: return "S";
        case Sk::Tag::Poison: return "P";
        default: break;
    }
    std::string r = sk_debug_string(t.right());
    if (t.right().tag() == Sk::Tag::App) r = "(" + r + ")";
    return sk_debug_string(t.left()) + " " + r;
}

namespace {

struct Cell {
    enum Kind : std::uint8_t { Val, Ap, Ind };
    Kind kind;
    const SkNode* val;
    Cell* fn;  // Ind target when kind == Ind
    Cell* arg;
};

struct OutOfFuel {};

constexpr std::size_t kBlock = 1 << 14;
constexpr std::size_t kMaxCells = std::size_t{1} << 25;

class Arena {
public:
    Cell* alloc() {
        if (used_ == blocks_.size() * kBlock) {
            if (used_ >= kMaxCells) throw OutOfFuel{};
            blocks_.push_back(std::make_unique<Cell[]>(kBlock));
        }
        Cell* c = &blocks_[used_ / kBlock][used_ % kBlock];
        ++used_;
        return c;
    }
    Cell* val(const SkNode* n) {
        Cell* c = alloc();
        c->kind = Cell::Val;
        c->val = n;
        return c;
    }
    Cell* ap(Cell* f, Cell* a) {
        Cell* c = alloc();
        c->kind = Cell::Ap;
        c->fn = f;
        c->arg = a;
        return c;
    }
    const SkNode* keep(Sk s) {
        const SkNode* n = s.node();
        kept_.push_back(std::move(s));
        return n;
    }
    void reset() {
        used_ = 0;
        kept_.clear();
        if (blocks_.size() > 64) blocks_.resize(64);
    }

private:
    std::vector<std::unique_ptr<Cell[]>> blocks_;
    std::size_t used_ = 0;
    std::vector<Sk> kept_;
};

Cell* deref(Cell* c) {
    Cell* start = c;
    while (c->kind == Cell::Ind) c = c->fn;
    while (start->kind == Cell::Ind && start->fn != c) {
        Cell* next = start->fn;
        start->fn = c;
        start = next;
    }
    return c;
}

class Reducer {
public:
    Reducer(Arena& arena, Fuel& fuel) : arena_(arena), fuel_(fuel) {}

    Cell* load(const Sk& t) {
        if (t.normal()) return arena_.val(t.node());
        return arena_.ap(load(t.left()), load(t.right()));
    }

    const SkNode* normalize(Cell* root) {
        struct Frame {
            Cell* root;
            const SkNode* acc;
            Cell* spine[3];
            int n;
            int idx;
        };
        std::vector<Frame> stack;
        const SkNode* result = nullptr;

        auto start = [&](Cell* c) -> bool {
            // Returns true when c was already a value; result then holds it.
            c = deref(c);
            if (c->kind == Cell::Val) {
                result = c->val;
                return true;
            }
            stack.push_back(Frame{c, nullptr, {nullptr, nullptr, nullptr}, -1, 0});
            return false;
        };

        if (start(root)) return result;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.n < 0) {
                whnf(f.root);
                f.acc = head_;
                f.n = static_cast<int>(spine_.size());
                for (int j = 0; j < f.n; ++j) f.spine[j] = spine_[spine_.size() - 1 - j];
                f.idx = 0;
                if (f.n == 0) {
                    result = f.acc;
                    set_val(f.root, result);
                    stack.pop_back();
                    if (!deliver(stack, result, start)) continue;
                    return result;
                }
                if (start(f.spine[0]->arg)) {
                    if (!deliver(stack, result, start)) continue;
                    return result;
                }
                continue;
            }
        }
        return result;
    }

private:
    template <class Frames, class Start>
    bool deliver(Frames& stack, const SkNode*& result, Start& start) {
        // Feeds a finished argument to the frame that asked for it. Returns false while more
        // work is pending, true when the stack is empty and result is final.
        while (!stack.empty()) {
            auto& f = stack.back();
            if (f.n < 0) return false;
            Cell* sp = f.spine[f.idx];
            f.acc = arena_.keep(Sk::app(Sk(f.acc->shared_from_this()), Sk(result->shared_from_this())));
            set_val(sp, f.acc);
            ++f.idx;
            if (f.idx < f.n) {
                if (start(f.spine[f.idx]->arg)) continue;
                return false;
            }
            result = f.acc;
            set_val(f.root, result);
            stack.pop_back();
        }
        return true;
    }

    static void set_val(Cell* c, const SkNode* v) {
        c->kind = Cell::Val;
        c->val = v;
    }

    void whnf(Cell* root) {
        spine_.clear();
        Cell* cur = root;
        for (;;) {
            cur = deref(cur);
            if (cur->kind == Cell::Ap) {
                spine_.push_back(cur);
                cur = cur->fn;
                continue;
            }
            const SkNode* e = cur->val;
            int inner = e->args;
            int have = inner + static_cast<int>(spine_.size());
            int need = needed(e->head);
            if (e->head == Sk::Tag::Poison && have >= 1) throw PoisonError();
            if (have < need) {
                head_ = e;
                return;
            }
            const SkNode* in[2] = {nullptr, nullptr};
            if (inner == 1) {
                in[0] = e->right.node();
            } else if (inner == 2) {
                in[0] = e->left.node()->right.node();
                in[1] = e->right.node();
            }
            int take = need - inner;
            Cell* redex = spine_[spine_.size() - take];
            Cell* args[3];
            for (int j = 0; j < inner; ++j) args[j] = arena_.val(in[j]);
            for (int j = 0; j < take; ++j) args[inner + j] = spine_[spine_.size() - 1 - j]->arg;
            spine_.resize(spine_.size() - take);
            if (!fuel_.step()) throw OutOfFuel{};
            if (e->head == Sk::Tag::K) {
                redex->kind = Cell::Ind;
                redex->fn = args[0];
            } else {
                Cell* z = args[2];
                redex->kind = Cell::Ap;
                redex->fn = arena_.ap(args[0], z);
                redex->arg = arena_.ap(args[1], z);
            }
            cur = redex;
        }
    }

    Arena& arena_;
    Fuel& fuel_;
    std::vector<Cell*> spine_;
    const SkNode* head_ = nullptr;
};

thread_local Arena* active_arena = nullptr;

Outcome<Sk> run(const Sk& a, const Sk* b, Fuel& fuel) {
    if (fuel.exhausted()) return Outcome<Sk>::exhausted(fuel);
    thread_local Arena shared;
    Arena local;
    Arena& arena = active_arena ? local : shared;
    Arena* saved = active_arena;
    active_arena = &arena;
    struct Restore {
        Arena& arena;
        Arena* saved;
        ~Restore() {
            arena.reset();
            active_arena = saved;
        }
    } restore{arena, saved};
    try {
        Reducer r(arena, fuel);
        Cell* root = b ? arena.ap(r.load(a), r.load(*b)) : r.load(a);
        const SkNode* n = r.normalize(root);
        return Outcome<Sk>::defined(Sk(n->shared_from_this()));
    } catch (const OutOfFuel&) {
        if (!fuel.exhausted()) fuel.step(fuel.remaining() + 1);
        return Outcome<Sk>::exhausted(fuel);
    }
}

}  // namespace

Outcome<Sk> sk_apply(const Sk& a, const Sk& b, Fuel& fuel) { return run(a, &b, fuel); }

Outcome<Sk> sk_normalize(const Sk& t, Fuel& fuel) {
    if (t.normal()) return Outcome<Sk>::defined(t);
    return run(t, nullptr, fuel);
}

}  // namespace pcw
