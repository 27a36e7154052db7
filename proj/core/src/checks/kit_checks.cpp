#include "checks.hpp"

namespace pcw::checks {

namespace {

using T = Term<Sk>;

bool same(const Outcome<Sk>& o, const Sk& v) { return o.is_defined() && o.value() == v; }

Outcome<Sk> call(const Workbench& wb, const std::string& name, const std::vector<Sk>& args, std::uint64_t fuel) {
    Fuel f(fuel);
    return apply_chain(wb.sk(), wb.kit().get(name), args, f);
}

T random_term(std::mt19937_64& rng, const std::vector<std::string>& vars, const std::vector<Sk>& consts, int depth) {
    if (depth == 0 || rng() % 3 == 0) {
        if (rng() % 2 == 0) return T::var(vars[rng() % vars.size()]);
        return T::constant(consts[rng() % consts.size()]);
    }
    return T::app(random_term(rng, vars, consts, depth - 1), random_term(rng, vars, consts, depth - 1));
}

}  // namespace

CheckResult parser_examples(Workbench& wb, const SuiteConfig&) {
    CheckResult r;
    const auto& kit = wb.kit();
    auto t1 = kit.parse_term("(#k a) b");
    r.expect(t1 == T::app(T::app(T::constant(Sk::K()), T::var("a")), T::var("b")), "(#k a) b");
    r.expect(kit.compile_text("\\x. x") == kit.i(), "\\x. x compiles to i");
    r.expect(kit.parse_term("x y z") == T::app(T::app(T::var("x"), T::var("y")), T::var("z")), "left association");
    auto b = kit.basis();
    r.expect(bracket_abstract(T::var("u"), "u", b) == T::constant(kit.i()), "λ*u.u = i");
    Sk a = wb.numeral(3);
    r.expect(bracket_abstract(T::constant(a), "u", b) == T::app(T::constant(Sk::K()), T::constant(a)), "λ*u.a = k a");
    r.expect(bracket_abstract(T::app(T::var("u"), T::var("u")), "u", b) ==
                 T::app(T::app(T::constant(Sk::S()), T::constant(kit.i())), T::constant(kit.i())),
             "λ*u.uu = s i i");
    auto rng = rng_for(SuiteConfig{}, "parser");
    Sk uu = compile(T::app(T::var("u"), T::var("u")), {"u"}, wb.sk(), b);
    for (int j = 0; j < 20; ++j) {
        Sk x = wb.random_element(rng);
        Fuel f1(10000), f2(10000);
        auto lhs = wb.sk().apply(uu, x, f1);
        auto rhs = wb.sk().apply(x, x, f2);
        if (lhs.is_exhausted() || rhs.is_exhausted())
            r.unknown();
        else
            r.expect(kleene_eq(lhs, rhs, wb.sk()), "(λ*u.uu) a ≠ a a");
    }
    Sk app = compile(T::app(T::var("x"), T::var("y")), {"x", "y"}, wb.sk(), b);
    Fuel f(1000);
    r.expect(same(apply_chain(wb.sk(), app, {Sk::K(), Sk::S()}, f), Sk::app(Sk::K(), Sk::S())), "applicator");
    Sk cst = compile(T::constant(a), {"x"}, wb.sk(), b);
    r.expect(same(wb.sk().apply(cst, Sk::S(), f), a), "constant function");
    for (const char* bad : {"(#k", "#nosuch", "\\. x", "x )", "if #k then #s", ""}) {
        bool threw = false;
        try {
            kit.parse_term(bad);
        } catch (const ParseError&) {
            threw = true;
        }
        r.expect(threw, std::string("no parse error for '") + bad + "'");
    }
    bool threw = false;
    try {
        compile(T::app(T::var("x"), T::var("y")), {"x"}, wb.sk(), b);
    } catch (const TermError&) {
        threw = true;
    }
    r.expect(threw, "compile must reject a missing variable");
    // printer round trip, term level and element level
    std::vector<Sk> leaves = {Sk::K(), Sk::S(), wb.numeral(0), wb.numeral(4)};
    auto show = [&](const Sk& e) { return wb.show(e); };
    for (int j = 0; j < 50; ++j) {
        T t = random_term(rng, {"x", "y"}, leaves, 4);
        r.expect(kit.parse_term(print_term<Sk>(t, show)) == t, "term printer round trip");
        Sk e = wb.random_element(rng, 12);
        r.expect(kit.compile_text(wb.show(e)) == e, "element printer round trip");
    }
    return r;
}

CheckResult compiler_correctness(Workbench& wb, const SuiteConfig& cfg) {
    CheckResult r;
    auto rng = rng_for(cfg, "compiler");
    const auto& kit = wb.kit();
    std::vector<Sk> consts = {Sk::K(), Sk::S(), kit.i(), kit.kbar(), kit.p(), kit.get("zero"), kit.get("suc"),
                              kit.get("pred"), wb.numeral(1), wb.numeral(2)};
    for (int j = 0; j < 4; ++j) consts.push_back(wb.random_element(rng));
    const std::vector<std::string> all = {"x", "y", "z"};
    int terms = 0;
    while (terms < 240) {
        std::size_t nv = 1 + rng() % 3;
        std::vector<std::string> vars(all.begin(), all.begin() + nv);
        T t = random_term(rng, vars, consts, 1 + rng() % 6);
        ++terms;
        Sk e = compile(t, vars, wb.sk(), kit.basis());
        r.expect(wb.sk().in_filter(e), "compiled element outside the filter");
        for (int probe = 0; probe < 3; ++probe) {
            std::vector<Sk> args;
            std::unordered_map<std::string, Sk> env;
            for (const auto& v : vars) {
                args.push_back(rng() % 3 ? wb.random_element(rng) : wb.numeral(rng() % 4));
                env.emplace(v, args.back());
            }
            Fuel fp(cfg.fuel);
            std::vector<Sk> prefix(args.begin(), args.end() - 1);
            auto pre = apply_chain(wb.sk(), e, prefix, fp);
            if (!pre.is_exhausted()) r.expect(pre.is_defined(), "prefix application undefined");
            Fuel f1(cfg.fuel), f2(cfg.fuel);
            auto lhs = apply_chain(wb.sk(), e, args, f1);
            auto rhs = evaluate(substitute(t, env), wb.sk(), kit.basis(), f2);
            if (lhs.is_exhausted() || rhs.is_exhausted()) {
                r.unknown();
                continue;
            }
            r.expect(kleene_eq(lhs, rhs, wb.sk()), "compiled and direct evaluation disagree on " +
                                                        print_term<Sk>(t, [&](const Sk& c) { return wb.show(c); }));
        }
    }
    return r;
}

CheckResult kit_laws_sk(Workbench& wb, const SuiteConfig& cfg) {
    CheckResult r;
    auto rng = rng_for(cfg, "kit-laws");
    const auto& kit = wb.kit();
    const std::uint64_t F = cfg.fuel;
    r.expect(kit.i() == Sk::app(Sk::app(Sk::S(), Sk::K()), Sk::K()), "i = s k k");
    r.expect(kit.kbar() == Sk::app(Sk::K(), kit.i()), "kbar = k i");
    r.expect(kit.top() == Sk::K() && kit.bot() == kit.kbar() && kit.get("case") == kit.i(), "booleans and case");
    r.expect(!(kit.top() == kit.bot()), "⊤ and ⊥ are distinct normal forms");
    for (const auto& n : kit.names()) r.expect(!kit.has(n) || wb.sk().in_filter(kit.get(n)), "kit member outside filter");
    for (int j = 0; j < 100; ++j) {
        Sk a = wb.random_element(rng), b = wb.random_element(rng);
        r.expect(same(call(wb, "i", {a}, F), a), "i a = a");
        r.expect(same(call(wb, "kbar", {a, b}, F), b), "kbar a b = b");
        r.expect(same(call(wb, "top", {a, b}, F), a), "⊤ a b = a");
        r.expect(same(call(wb, "bot", {a, b}, F), b), "⊥ a b = b");
        auto pab = call(wb, "p", {a, b}, F);
        r.expect(pab.is_defined(), "p a b defined");
        if (!pab.is_defined()) continue;
        r.expect(same(call(wb, "p0", {pab.value()}, F), a), "p0 (p a b) = a");
        r.expect(same(call(wb, "p1", {pab.value()}, F), b), "p1 (p a b) = b");
    }
    // z a b ≃ a (z a) b
    std::vector<Sk> zfuns = {kit.compile_text("\\x y. y"), kit.compile_text("\\f n. if #zero n then 0 else f (#pred n)"),
                             kit.compile_text("\\f n. #p n n")};
    for (const auto& a : zfuns)
        for (int j = 0; j < 10; ++j) {
            Sk b = j % 2 ? wb.numeral(rng() % 6) : wb.random_element(rng);
            auto za = call(wb, "z", {a}, F);
            r.expect(za.is_defined(), "z a defined");
            if (!za.is_defined()) continue;
            auto lhs = call(wb, "z", {a, b}, F);
            Fuel f(F);
            auto rhs = apply_chain(wb.sk(), a, {za.value(), b}, f);
            if (lhs.is_exhausted() || rhs.is_exhausted())
                r.unknown();
            else
                r.expect(kleene_eq(lhs, rhs, wb.sk()), "z a b ≄ a (z a) b");
        }
    {
        Sk b = wb.random_element(rng);
        r.expect(same(call(wb, "z", {zfuns[0], b}, F), b), "z (λxy.y) b = b");
    }
    // numerals, zero/suc/pred
    r.expect(wb.numeral(0) == kit.i(), "0 = i");
    for (std::uint64_t n = 0; n <= 20; ++n) {
        r.expect(same(call(wb, "zero", {wb.numeral(n)}, F), n == 0 ? kit.top() : kit.bot()), "zero test");
        r.expect(same(call(wb, "suc", {wb.numeral(n)}, F), wb.numeral(n + 1)), "suc");
        r.expect(same(call(wb, "pred", {wb.numeral(n + 1)}, F), wb.numeral(n)), "pred (n+1) = n");
    }
    r.expect(same(call(wb, "pred", {wb.numeral(0)}, F), wb.numeral(0)), "pred 0 = 0");
    for (std::uint64_t a = 0; a < 64; ++a)
        for (std::uint64_t b = a + 1; b < 64; ++b)
            if (wb.numeral(a) == wb.numeral(b)) r.fail("numerals not injective");
    r.pass();
    // rec a b 0 = a, rec a b (n+1) ≃ b n (rec a b n)
    std::vector<Sk> steps = {kit.compile_text("\\k acc. #suc acc"), kit.compile_text("\\k acc. #p k acc"),
                             kit.compile_text("\\k acc. k")};
    for (const auto& b : steps)
        for (int rep = 0; rep < 2; ++rep) {
            Sk a = rep ? wb.random_element(rng) : wb.numeral(rng() % 5);
            r.expect(same(call(wb, "rec", {a, b, wb.numeral(0)}, F), a), "rec a b 0 = a");
            for (std::uint64_t n = 0; n < 20; ++n) {
                auto prev = call(wb, "rec", {a, b, wb.numeral(n)}, F * 10);
                auto next = call(wb, "rec", {a, b, wb.numeral(n + 1)}, F * 10);
                if (!prev.is_defined() || next.is_exhausted()) {
                    r.unknown();
                    continue;
                }
                Fuel f(F * 10);
                auto rhs = apply_chain(wb.sk(), b, {wb.numeral(n), prev.value()}, f);
                r.expect(kleene_eq(next, rhs, wb.sk()), "rec a b (n+1) ≄ b n (rec a b n)");
            }
        }
    // arithmetic helpers used by the sequence code
    for (int j = 0; j < 20; ++j) {
        std::uint64_t m = rng() % 12, n = rng() % 12;
        r.expect(same(call(wb, "add", {wb.numeral(m), wb.numeral(n)}, F), wb.numeral(m + n)), "add");
        r.expect(same(call(wb, "sub", {wb.numeral(m + n), wb.numeral(n)}, F), wb.numeral(m)), "sub");
        r.expect(same(call(wb, "eq", {wb.numeral(m), wb.numeral(n)}, F), m == n ? kit.top() : kit.bot()), "eq");
    }
    r.expect(kit.has("y"), "y is provided");
    return r;
}

CheckResult strong_if_poison(Workbench& wb, const SuiteConfig& cfg) {
    CheckResult r;
    const auto& kit = wb.kit();
    auto b = kit.basis();
    Sk a = wb.numeral(4), c = wb.numeral(6);
    T poison = T::app(T::constant(Sk::poison()), T::constant(Sk::K()));
    T divergent = T::app(T::constant(kit.get("sii")), T::constant(kit.get("sii")));
    auto eval = [&](const T& t) {
        Fuel f(cfg.fuel);
        return evaluate(t, wb.sk(), b, f);
    };
    try {
        r.expect(same(eval(strong_if(T::constant(kit.top()), T::constant(a), divergent, b)), a), "⊤ branch");
        r.expect(same(eval(strong_if(T::constant(kit.bot()), divergent, T::constant(c), b)), c), "⊥ branch");
        r.expect(same(eval(strong_if(T::constant(kit.top()), T::constant(a), poison, b)), a), "poison in dead ⊥ branch");
        r.expect(same(eval(strong_if(T::constant(kit.bot()), poison, T::constant(c), b)), c), "poison in dead ⊤ branch");
        auto nb = eval(strong_if(T::app(T::constant(Sk::K()), T::constant(Sk::K())), T::constant(a), T::constant(c), b));
        r.expect(nb.is_undefined() && nb.reason() == Reason::NotABoolean, "non-boolean scrutinee");
        // compiled: λx. if x then a else poison k
        T body = strong_if(T::var("x"), T::constant(a), poison, b);
        Sk e = compile(body, {"x"}, wb.sk(), b);
        Fuel f(cfg.fuel);
        r.expect(same(wb.sk().apply(e, kit.top(), f), a), "compiled ⊤ branch with poison");
        T body2 = strong_if(T::var("x"), poison, T::constant(c), b);
        Sk e2 = compile(body2, {"x"}, wb.sk(), b);
        r.expect(same(wb.sk().apply(e2, kit.bot(), f), c), "compiled ⊥ branch with poison");
    } catch (const PoisonError&) {
        r.fail("a dead branch was evaluated");
    }
    bool fired = false;
    try {
        T body = strong_if(T::var("x"), T::constant(a), poison, b);
        Sk e = compile(body, {"x"}, wb.sk(), b);
        Fuel f(cfg.fuel);
        wb.sk().apply(e, kit.bot(), f);
    } catch (const PoisonError&) {
        fired = true;
    }
    r.expect(fired, "poison in the taken branch should fire");
    return r;
}

CheckResult sequence_laws(Workbench& wb, const SuiteConfig& cfg) {
    CheckResult r;
    auto rng = rng_for(cfg, "sequences");
    const auto& kit = wb.kit();
    const std::uint64_t F = cfg.fuel * 4;
    auto seq = [&](const std::vector<Sk>& v) { return kit.seq_code(v); };
    for (int n = 0; n <= 8; ++n)
        for (int rep = 0; rep < 3; ++rep) {
            std::vector<Sk> xs;
            for (int j = 0; j < n; ++j) xs.push_back(rng() % 3 ? wb.random_element(rng) : wb.numeral(rng() % 9));
            Sk s = seq(xs);
            r.expect(same(call(wb, "lh", {s}, F), wb.numeral(n)), "lh");
            Sk a = wb.random_element(rng);
            auto ys = xs;
            ys.push_back(a);
            r.expect(same(call(wb, "ext", {s, a}, F), seq(ys)), "ext");
            r.expect(same(call(wb, "unit", {a}, F), seq({a})), "unit");
            int m = static_cast<int>(rng() % 9);
            std::vector<Sk> zs;
            for (int j = 0; j < m; ++j) zs.push_back(wb.random_element(rng));
            auto cat = xs;
            cat.insert(cat.end(), zs.begin(), zs.end());
            r.expect(same(call(wb, "concat", {s, seq(zs)}, F), seq(cat)), "concat");
            if (n >= 1) {
                r.expect(same(call(wb, "fst", {s}, F), xs[0]), "fst");
                for (int j = 0; j < n; ++j) r.expect(same(call(wb, "read", {s, wb.numeral(j)}, F), xs[j]), "read");
                r.expect(same(call(wb, "last", {s}, F), xs.back()), "last");
            }
            int cut = n ? static_cast<int>(rng() % (n + 1)) : 0;
            std::vector<Sk> head(xs.begin(), xs.begin() + cut), tail(xs.begin() + cut, xs.end());
            r.expect(same(call(wb, "take", {s, wb.numeral(cut)}, F), seq(head)), "take");
            r.expect(same(call(wb, "dropseq", {s, wb.numeral(cut)}, F), seq(tail)), "dropseq");
        }
    auto two = call(wb, "read", {seq({Sk::K(), Sk::S()}), wb.numeral(1)}, F);
    r.expect(same(two, Sk::S()), "read [a,b] 1 = b");
    auto cc = call(wb, "concat", {seq({Sk::K()}), seq({Sk::S()})}, F);
    r.expect(same(cc, seq({Sk::K(), Sk::S()})), "concat [a] [b] = [a,b]");
    return r;
}

CheckResult kit_laws_num(Workbench& wb, const SuiteConfig& cfg) {
    CheckResult r;
    const auto& kit = wb.num_kit();
    const NumModel& m = wb.num();
    const std::uint64_t F = cfg.fuel * 10;
    auto has = [&](std::initializer_list<const char*> names) {
        for (auto n : names)
            if (!kit.has(n)) return false;
        return true;
    };
    std::vector<Natural> elems = {0, 1, godel_encode(wb.kit().i()), godel_encode(wb.kit().kbar())};
    auto rng = rng_for(cfg, "num-laws");
    for (int j = 0; j < 3; ++j) elems.push_back(godel_encode(wb.random_element(rng, 5)));
    auto run = [&](const Natural& f, std::vector<Natural> args) {
        Fuel fuel(F);
        return apply_chain(m, f, args, fuel);
    };
    auto check = [&](const Outcome<Natural>& o, const Natural& v, const std::string& what) {
        if (o.is_exhausted())
            r.unknown();
        else
            r.expect(o.is_defined() && o.value() == v, what);
    };
    r.expect(kit.has("i") && kit.i() == godel_encode(wb.kit().i()), "i agrees with the SK kit");
    if (has({"i", "kbar", "p", "p0", "p1"})) {
        for (const auto& a : elems)
            for (const auto& b : elems) {
                check(run(kit.i(), {a}), a, "i a = a");
                check(run(kit.kbar(), {a, b}), b, "kbar a b = b");
                auto pab = run(kit.p(), {a, b});
                if (!pab.is_defined()) {
                    r.unknown();
                    continue;
                }
                check(run(kit.p0(), {pab.value()}), a, "p0 (p a b) = a");
                check(run(kit.p1(), {pab.value()}), b, "p1 (p a b) = b");
            }
    } else {
        r.unknown();
    }
    for (const auto& n : kit.names())
        if (!kit.has(n)) r.unknown();
    for (std::uint64_t n = 0; n < 4; ++n) {
        Natural num;
        try {
            num = kit.numeral(n);
        } catch (const KitMissing&) {
            r.unknown();
            continue;
        }
        r.expect(num == godel_encode(wb.numeral(n)), "numerals agree with the SK kit");
        if (has({"zero", "top", "bot"})) check(run(kit.get("zero"), {num}), n == 0 ? kit.top() : kit.bot(), "zero");
        if (has({"suc"})) {
            try {
                check(run(kit.get("suc"), {num}), kit.numeral(n + 1), "suc");
            } catch (const KitMissing&) {
                r.unknown();
            }
        }
    }
    return r;
}

CheckResult table_code(Workbench& wb, const SuiteConfig& cfg) {
    CheckResult r;
    const auto& kit = wb.kit();
    auto N = [&](std::uint64_t n) { return wb.numeral(n); };
    const std::uint64_t F = cfg.fuel * 10;
    {
        OracleTable<Sk> t;
        t.set_default(N(5));
        Sk code = table_to_code(t, kit);
        for (std::uint64_t n = 0; n <= 20; ++n) {
            Fuel f(F);
            r.expect(same(wb.sk().apply(code, N(n), f), N(5)), "constant table");
        }
    }
    {
        OracleTable<Sk> t;
        t.set(N(3), N(7));
        Sk code = table_to_code(t, kit);
        Fuel f(F);
        r.expect(same(wb.sk().apply(code, N(3), f), N(7)), "{3↦7} at 3");
        Fuel g(F);
        r.expect(!wb.sk().apply(code, N(4), g).is_defined(), "{3↦7} at 4 must not be Defined");
    }
    {
        OracleTable<Sk> t;
        t.set(N(0), N(0));
        t.set(N(1), N(1));
        t.set_default(N(0));
        Sk code = table_to_code(t, kit);
        for (std::uint64_t n = 0; n <= 20; ++n) {
            Fuel f(F);
            r.expect(same(wb.sk().apply(code, N(n), f), n == 1 ? N(1) : N(0)), "{0↦0,1↦1} default 0");
        }
    }
    auto rng = rng_for(cfg, "table-code");
    for (int j = 0; j < 10; ++j) {
        auto t = wb.random_table(rng);
        Sk code = table_to_code(t, kit);
        for (std::uint64_t n = 0; n < 12; ++n) {
            auto want = t.lookup(N(n));
            Fuel f(want ? F : cfg.fuel);
            auto got = wb.sk().apply(code, N(n), f);
            if (want)
                r.expect(same(got, *want), "random table code");
            else
                r.expect(!got.is_defined(), "random table code defined off its domain");
        }
    }
    bool threw = false;
    try {
        OracleTable<Sk> t;
        t.set(Sk::S(), N(1));
        table_to_code(t, kit);
    } catch (const NotANumeral&) {
        threw = true;
    }
    r.expect(threw, "non-numeral keys are rejected");
    // table file round trip
    for (int j = 0; j < 10; ++j) {
        auto t = wb.random_table(rng);
        std::function<std::string(const Sk&)> show = [&](const Sk& e) { return wb.show(e); };
        std::string text = print_table(t, show);
        std::function<Sk(const Term<Sk>&)> close = [&](const Term<Sk>& term) {
            return compile_closed(term, wb.sk(), kit.basis());
        };
        auto back = parse_table<Sk>("# generated\n" + text, kit.env(), close);
        r.expect(back == t && print_table(back, show) == text, "table file round trip");
    }
    return r;
}

}  // namespace pcw::checks
