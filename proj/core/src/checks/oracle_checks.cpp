#include "checks.hpp"

namespace pcw::checks {

namespace {

using Fn = PartialFn<SkModel>;

bool same(const Outcome<Sk>& o, const Sk& v) { return o.is_defined() && o.value() == v; }

Outcome<Sk> ap(const Workbench& wb, const Sk& a, const Sk& b, const Fn& f, Fuel& fuel) {
    return oracle_apply(wb.kit(), a, b, f, fuel).outcome;
}

Outcome<Sk> ap_chain(const Workbench& wb, const Sk& head, const std::vector<Sk>& args, const Fn& f, Fuel& fuel) {
    auto cur = Outcome<Sk>::defined(head);
    for (const auto& a : args) {
        if (!cur.is_defined()) return cur;
        cur = ap(wb, cur.value(), a, f, fuel);
    }
    return cur;
}

Fn random_oracle(const Workbench& wb, std::mt19937_64& rng) { return Fn::table(wb.random_table(rng)); }

std::vector<Sk> argument_pool(const Workbench& wb, std::mt19937_64& rng, const std::vector<Sk>& interrogators) {
    std::vector<Sk> out = interrogators;
    for (int n = 0; n < 10; ++n) out.push_back(wb.numeral(n));
    for (int j = 0; j < 6; ++j) out.push_back(wb.random_element(rng));
    return out;
}

// Host reading of S x y u, following the same prefix scan over a host-side sequence.
Outcome<Sk> host_S(const Workbench& wb, const Sk& x, const Sk& y, const std::vector<Sk>& u, Fuel& fuel) {
    const auto& kit = wb.kit();
    const SkModel& m = wb.sk();
    auto seq = [&](const std::vector<Sk>& v) { return kit.seq_code(v, fuel); };
    auto split = [&](const Sk& r, Sk& tag, Sk& part) -> std::optional<Outcome<Sk>> {
        auto t = m.apply(kit.p0(), r, fuel);
        if (!t.is_defined()) return t;
        auto p = m.apply(kit.p1(), r, fuel);
        if (!p.is_defined()) return p;
        tag = t.value();
        part = p.value();
        return std::nullopt;
    };
    for (std::size_t L = 1;; ++L) {
        auto code = seq(std::vector<Sk>(u.begin(), u.begin() + std::min(L, u.size())));
        if (!code.is_defined()) return code;
        auto r = m.apply(x, code.value(), fuel);
        if (!r.is_defined()) return r;
        Sk tag, e;
        if (auto bad = split(r.value(), tag, e)) return *bad;
        if (tag == kit.top()) {
            std::vector<Sk> R(u.begin() + std::min(L, u.size()), u.end());
            for (std::size_t mm = 0;; ++mm) {
                std::vector<Sk> probe{u[0]};
                probe.insert(probe.end(), R.begin(), R.begin() + std::min(mm, R.size()));
                auto pc = seq(probe);
                if (!pc.is_defined()) return pc;
                auto v = m.apply(y, pc.value(), fuel);
                if (!v.is_defined()) return v;
                Sk vt, vp;
                if (auto bad = split(v.value(), vt, vp)) return *bad;
                if (vt == kit.top()) {
                    std::vector<Sk> rest{vp};
                    rest.insert(rest.end(), R.begin() + std::min(mm, R.size()), R.end());
                    auto rc = seq(rest);
                    if (!rc.is_defined()) return rc;
                    return m.apply(e, rc.value(), fuel);
                }
                if (!(vt == kit.bot())) return Outcome<Sk>::undefined(Reason::NotABoolean);
                if (mm >= R.size()) return v;
            }
        }
        if (!(tag == kit.bot())) return Outcome<Sk>::undefined(Reason::NotABoolean);
        if (L >= u.size()) return r;
    }
}

// Byte comparison of the rendered traces, falling back to structure when a value is too
// large to print.
bool same_trace(const Trace<Sk>& a, const Trace<Sk>& b, const std::function<std::string(const Sk&)>& show) {
    std::uint64_t volume = 0;
    for (const auto& [q, v] : a.steps) volume += q.size() + v.size();
    if (a.verdict && a.verdict->is_defined()) volume += a.verdict->value().size();
    if (volume < 20000) return a.render(show) == b.render(show);
    if (a.steps != b.steps || a.verdict.has_value() != b.verdict.has_value()) return false;
    if (!a.verdict) return true;
    if (a.verdict->is_defined() != b.verdict->is_defined()) return false;
    if (a.verdict->is_defined()) return a.verdict->value() == b.verdict->value();
    return a.verdict->is_exhausted() == b.verdict->is_exhausted();
}

template <class Model>
void oracle_axiom_triple(CheckResult& r, const Model& om, const Sk& a, const Sk& b, const Sk& c, std::uint64_t budget) {
    Fuel f1(budget);
    auto kab = apply2(om, om.k(), a, b, f1);
    if (kab.is_exhausted())
        r.unknown();
    else
        r.expect(same(kab, a), "k_f a b ≠ a");
    Fuel f2(budget);
    auto sab = apply2(om, om.s(), a, b, f2);
    if (sab.is_exhausted()) {
        r.unknown();
        return;
    }
    r.expect(sab.is_defined(), "s_f a b undefined");
    if (!sab.is_defined()) return;
    Fuel f3(budget);
    auto ac = om.apply(a, c, f3);
    auto bc = ac.is_defined() ? om.apply(b, c, f3) : ac;
    auto rhs = bc.is_defined() ? om.apply(ac.value(), bc.value(), f3) : bc;
    if (!rhs.is_defined()) {
        r.unknown();
        return;
    }
    Fuel f4(budget * 10);
    auto lhs = om.apply(sab.value(), c, f4);
    if (lhs.is_exhausted())
        r.unknown();
    else
        r.expect(same(lhs, rhs.value()), "s_f a b c differs from a c (b c)");
}

}  // namespace

std::vector<Sk> interrogator_pool(const Workbench& wb, std::mt19937_64& rng) {
    const auto& kit = wb.kit();
    std::vector<Sk> pool = {kit.get("kf"), kit.get("tf"), kit.get("rf"), kit.get("sf")};
    pool.push_back(kit.compile_text(
        "\\x. if #zero (#pred (#lh x)) then #p #bot (#fst x) else "
        "if #zero (#pred (#pred (#lh x))) then #p #bot (#read x 1) else #p #top (#read x 2)"));
    pool.push_back(kit.compile_text("\\x. #p #top 3"));
    pool.push_back(kit.compile_text("\\x. #p #top (#fst x)"));
    Fn none = Fn::empty();
    Fuel fuel(10000000);
    Sk d = wb.random_element(rng);
    auto kd = oracle_apply(kit, kit.get("kf"), d, none, fuel).outcome;
    if (kd.is_defined()) pool.push_back(kd.value());
    auto skk = ap_chain(wb, kit.get("sf"), {kit.get("kf"), kit.get("kf")}, none, fuel);
    if (skk.is_defined()) pool.push_back(skk.value());
    auto srr = ap_chain(wb, kit.get("sf"), {kit.get("kf"), kit.get("rf")}, none, fuel);
    if (srr.is_defined()) pool.push_back(srr.value());
    return pool;
}

CheckResult kf_law(Workbench& wb, const SuiteConfig& cfg) {
    CheckResult r;
    auto rng = rng_for(cfg, "kf");
    auto pool = argument_pool(wb, rng, interrogator_pool(wb, rng));
    for (int o = 0; o < 10; ++o) {
        Fn f = random_oracle(wb, rng);
        for (int j = 0; j < 50; ++j) {
            const Sk& a = pool[rng() % pool.size()];
            const Sk& b = pool[rng() % pool.size()];
            Fuel fuel(cfg.fuel);
            auto res = ap_chain(wb, wb.kit().get("kf"), {a, b}, f, fuel);
            r.expect(same(res, a), "k_f ⊙ a ⊙ b ≠ a");
            Fuel g(cfg.fuel);
            auto first = oracle_apply(wb.kit(), wb.kit().get("kf"), a, f, g);
            r.expect(first.trace.steps.empty(), "k_f asked the oracle");
        }
    }
    return r;
}

CheckResult sf_law(Workbench& wb, const SuiteConfig& cfg) {
    CheckResult r;
    auto rng = rng_for(cfg, "sf");
    auto inter = interrogator_pool(wb, rng);
    auto pool = argument_pool(wb, rng, inter);
    const Sk sf = wb.kit().get("sf");
    int convergent = 0;
    Fn f = random_oracle(wb, rng);
    for (int j = 0; j < 500; ++j) {
        if (j % 50 == 0) f = random_oracle(wb, rng);
        const Sk& a = inter[rng() % inter.size()];
        const Sk& b = inter[rng() % inter.size()];
        const Sk& c = pool[rng() % pool.size()];
        Fuel f0(cfg.fuel);
        auto sab = ap_chain(wb, sf, {a, b}, f, f0);
        r.expect(sab.is_defined(), "s_f ⊙ a ⊙ b undefined");
        if (!sab.is_defined()) continue;
        Fuel f1(cfg.fuel);
        auto ac = ap(wb, a, c, f, f1);
        auto bc = ac.is_defined() ? ap(wb, b, c, f, f1) : ac;
        auto rhs = bc.is_defined() ? ap(wb, ac.value(), bc.value(), f, f1) : bc;
        if (!rhs.is_defined()) {
            r.unknown();
            continue;
        }
        ++convergent;
        Fuel f2(cfg.fuel * 20);
        auto lhs = ap(wb, sab.value(), c, f, f2);
        if (lhs.is_exhausted())
            r.unknown();
        else
            r.expect(same(lhs, rhs.value()), "s_f ⊙ a ⊙ b ⊙ c ≠ (a ⊙ c) ⊙ (b ⊙ c)");
    }
    r.expect(convergent >= 100, "too few convergent s_f instances");
    return r;
}

CheckResult tf_law(Workbench& wb, const SuiteConfig& cfg) {
    CheckResult r;
    auto rng = rng_for(cfg, "tf");
    const Sk tf = wb.kit().get("tf");
    for (int j = 0; j < 200; ++j) {
        Fn f = random_oracle(wb, rng);
        Sk a = wb.random_element(rng), b = j % 3 ? wb.random_element(rng) : wb.numeral(rng() % 5);
        Fuel f1(cfg.fuel);
        auto direct = wb.sk().apply(a, b, f1);
        if (!direct.is_defined()) {
            r.unknown();
            continue;
        }
        Fuel f2(cfg.fuel * 4);
        auto tracked = ap_chain(wb, tf, {a, b}, f, f2);
        r.expect(same(tracked, direct.value()), "t_f ⊙ a ⊙ b ≠ a · b");
    }
    return r;
}

CheckResult rf_trace(Workbench& wb, const SuiteConfig& cfg) {
    CheckResult r;
    auto rng = rng_for(cfg, "rf");
    const Sk rf = wb.kit().get("rf");
    std::function<std::string(const Sk&)> show = [&](const Sk& e) { return wb.show(e); };
    for (int j = 0; j < 30; ++j) {
        auto t = wb.random_table(rng);
        Fn f = Fn::table(t);
        for (std::uint64_t n = 0; n < 10; ++n) {
            Fuel fuel(cfg.fuel);
            auto res = oracle_apply(wb.kit(), rf, wb.numeral(n), f, fuel);
            auto want = t.lookup(wb.numeral(n));
            if (want) {
                r.expect(same(res.outcome, *want), "r_f ⊙ n ≠ f(n)");
                r.expect(res.trace.steps.size() == 1 && res.trace.steps[0].first == wb.numeral(n),
                         "r_f asks exactly f(n)");
                r.expect(res.trace.render(show) == "? " + std::to_string(n) + " => " + wb.show(*want) + "\n= " +
                                                       wb.show(*want) + "\n",
                         "r_f trace text");
            } else {
                r.expect(res.outcome.is_undefined() && res.outcome.reason() == Reason::OracleUndefined,
                         "r_f ⊙ n off the table");
                r.expect(res.trace.pending_query && *res.trace.pending_query == wb.numeral(n), "pending query");
            }
        }
    }
    return r;
}

CheckResult trace_determinism(Workbench& wb, const SuiteConfig& cfg) {
    CheckResult r;
    auto rng = rng_for(cfg, "trace-determinism");
    auto inter = interrogator_pool(wb, rng);
    std::function<std::string(const Sk&)> show = [&](const Sk& e) { return wb.show(e); };
    for (int j = 0; j < 60; ++j) {
        auto t = wb.random_table(rng);
        Fn f = Fn::host(
            [t](const Sk& a, Fuel& fuel) {
                if (!fuel.step(3)) return Outcome<Sk>::exhausted(fuel);
                auto v = t.lookup(a);
                return v ? Outcome<Sk>::defined(*v) : Outcome<Sk>::undefined(Reason::OracleUndefined);
            },
            "table-host");
        const Sk& a = inter[rng() % inter.size()];
        Sk b = wb.numeral(rng() % 10);
        Fuel f1(cfg.fuel), f2(cfg.fuel);
        auto x = oracle_apply(wb.kit(), a, b, f, f1);
        auto y = oracle_apply(wb.kit(), a, b, f, f2);
        r.expect(same_trace(x.trace, y.trace, show) && f1.spent() == f2.spent(), "trace not reproducible");
        if (x.outcome.is_exhausted()) {
            r.unknown();
            continue;
        }
        Fuel exact(f1.spent());
        auto z = oracle_apply(wb.kit(), a, b, f, exact);
        r.expect(same_trace(z.trace, x.trace, show), "exact budget changes the outcome");
        if (f1.spent() > 0) {
            Fuel tight(f1.spent() - 1);
            auto w = oracle_apply(wb.kit(), a, b, f, tight);
            r.expect(w.outcome.is_exhausted(), "one step less must exhaust");
        }
    }
    return r;
}

CheckResult s_clauses(Workbench& wb, const SuiteConfig& cfg) {
    CheckResult r;
    auto rng = rng_for(cfg, "S-clauses");
    const auto& kit = wb.kit();
    std::vector<Sk> inter = interrogator_pool(wb, rng);
    std::vector<Sk> values;
    Fn none = Fn::empty();
    for (const auto& a : inter) {
        Fuel fuel(cfg.fuel);
        auto v = oracle_apply(kit, kit.get("kf"), a, none, fuel).outcome;
        if (v.is_defined()) values.push_back(v.value());
    }
    values.insert(values.end(), inter.begin(), inter.end());
    for (int j = 0; j < 120; ++j) {
        const Sk& x = values[rng() % values.size()];
        const Sk& y = values[rng() % values.size()];
        std::vector<Sk> u;
        int n = 1 + rng() % 4;
        for (int i = 0; i < n; ++i) u.push_back(rng() % 4 ? wb.numeral(rng() % 8) : values[rng() % values.size()]);
        Fuel f1(cfg.fuel * 10), f2(cfg.fuel * 10);
        auto coded = apply_chain(wb.sk(), kit.get("S"), {x, y, kit.seq_code(u)}, f1);
        auto host = host_S(wb, x, y, u, f2);
        if (coded.is_exhausted() || host.is_exhausted())
            r.unknown();
        else
            r.expect(kleene_eq(coded, host, wb.sk()), "S x y u disagrees with the host scan");
    }
    return r;
}

CheckResult oracle_examples(Workbench& wb, const SuiteConfig& cfg) {
    CheckResult r;
    const auto& kit = wb.kit();
    auto N = [&](std::uint64_t n) { return wb.numeral(n); };
    std::function<std::string(const Sk&)> show = [&](const Sk& e) { return wb.show(e); };
    Fn f = Fn::table(OracleTable<Sk>{{N(5), N(7)}});
    {
        Fuel fuel(cfg.fuel);
        auto res = oracle_apply(kit, kit.get("rf"), N(5), f, fuel);
        r.expect(res.trace.render(show) == "? 5 => 7\n= 7\n", "r_f ⊙ 5 trace");
    }
    {
        Fuel fuel(cfg.fuel);
        auto res = oracle_apply(kit, kit.get("rf"), N(3), f, fuel);
        r.expect(res.trace.render(show) == "! undefined(oracle)\n", "r_f ⊙ 3 trace");
    }
    {
        Fuel fuel(cfg.fuel);
        auto res = ap_chain(wb, kit.get("sf"), {kit.get("kf"), kit.get("kf"), N(3)}, f, fuel);
        r.expect(same(res, N(3)), "s_f k_f k_f 3 = 3");
    }
    {
        Sk nonbool = kit.compile_text("\\x. #p (#k #k) x");
        Fuel fuel(cfg.fuel);
        auto res = oracle_apply(kit, nonbool, N(1), f, fuel);
        r.expect(res.trace.render(show) == "! undefined(not-a-boolean)\n", "non-boolean verdict trace");
    }
    {
        Sk looping = kit.compile_text("\\x. #p #bot (#last x)");
        Fn id = Fn::host([](const Sk& a, Fuel&) { return Outcome<Sk>::defined(a); }, "id");
        Fuel fuel(20000);
        auto res = oracle_apply(kit, looping, N(2), id, fuel);
        r.expect(res.outcome.is_exhausted() && res.trace.render(show).ends_with("! fuel\n") &&
                     !res.trace.steps.empty(),
                 "endless interrogation exhausts fuel");
    }
    {
        // adjoining an element: r_f with f the constant function r
        Sk elem = kit.get("s");
        Fuel fuel(cfg.fuel);
        auto res = oracle_apply(kit, kit.get("rf"), N(0), adjoin_element<SkModel>(elem), fuel);
        r.expect(same(res.outcome, elem), "r_f ⊙ 0 under a constant oracle");
    }
    return r;
}

CheckResult af_axioms(Workbench& wb, const SuiteConfig& cfg) {
    CheckResult r;
    auto rng = rng_for(cfg, "af-axioms");
    auto inter = interrogator_pool(wb, rng);
    auto pool = argument_pool(wb, rng, inter);
    for (int j = 0; j < 150; ++j) {
        OracleModel<SkModel> om(wb.kit(), random_oracle(wb, rng));
        const Sk& a = j % 2 ? inter[rng() % inter.size()] : pool[rng() % pool.size()];
        const Sk& b = inter[rng() % inter.size()];
        const Sk& c = pool[rng() % pool.size()];
        oracle_axiom_triple(r, om, a, b, c, cfg.fuel);
    }
    return r;
}

CheckResult af_filter(Workbench& wb, const SuiteConfig& cfg) {
    CheckResult r;
    const auto& kit = wb.kit();
    auto N = [&](std::uint64_t n) { return wb.numeral(n); };
    Fn f = Fn::table(OracleTable<Sk>{{N(5), N(7)}, {N(7), N(2)}});
    auto w1 = af_filter_member(kit, N(7), f, {N(5)}, 3, cfg.fuel);
    r.expect(w1 && w1->term == "f(x0)", "f(5) = 7 is in the generated filter");
    auto w2 = af_filter_member(kit, N(2), f, {N(5)}, 3, cfg.fuel);
    r.expect(w2 && w2->term == "f(f(x0))", "f(f(5)) = 2 is in the generated filter");
    Fuel fuel(cfg.fuel);
    auto target = oracle_apply(kit, kit.get("kf"), Sk::S(), f, fuel).outcome;
    auto w3 = af_filter_member(kit, target.value(), f, {kit.get("kf"), Sk::S()}, 3, cfg.fuel);
    r.expect(w3 && w3->term == "(x0 ⊙ x1)", "k_f ⊙ s found through ⊙_f");
    auto w4 = af_filter_member(kit, Sk::S(), Fn::empty(), {Sk::K()}, 4, cfg.fuel);
    r.expect(!w4, "s is not generated from k alone");
    auto w5 = af_filter_member(kit, Sk::app(Sk::K(), Sk::K()), Fn::empty(), {Sk::K()}, 3, cfg.fuel);
    r.expect(w5 && w5->term == "(x0 x0)", "k k generated by application");
    return r;
}

CheckResult universal_tracker_check(Workbench& wb, const SuiteConfig& cfg) {
    CheckResult r;
    auto rng = rng_for(cfg, "universal-tracker");
    const auto& kit = wb.kit();
    auto inter = interrogator_pool(wb, rng);
    for (int o = 0; o < 5; ++o) {
        auto t = wb.random_table(rng, 8, true);
        Fn f = Fn::table(t);
        auto tc = universal_tracker(identity_pack(kit, table_to_code(t, kit)), kit);
        int convergent = 0;
        for (int j = 0; j < 600 && convergent < 50; ++j) {
            const Sk& a = inter[rng() % inter.size()];
            Sk b = wb.numeral(rng() % 10);
            Fuel f1(cfg.fuel);
            auto direct = oracle_apply(kit, a, b, f, f1).outcome;
            if (direct.is_exhausted()) {
                r.unknown();
                continue;
            }
            if (direct.is_defined()) {
                ++convergent;
                Fuel f2(cfg.fuel * 100);
                auto tracked = apply2(wb.sk(), tc.tracker, a, b, f2);
                if (tracked.is_exhausted())
                    r.unknown();
                else
                    r.expect(same(tracked, direct.value()), "tracker · a · b ≠ a ⊙_f b");
            } else {
                Fuel f2(cfg.fuel);
                auto tracked = apply2(wb.sk(), tc.tracker, a, b, f2);
                r.expect(!tracked.is_defined(), "tracker defined where a ⊙_f b is not");
            }
        }
        r.expect(convergent >= 50, "too few convergent tracker cases");
    }
    return r;
}

}  // namespace pcw::checks
