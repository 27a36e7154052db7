#include "checks.hpp"

namespace pcw::checks {

namespace {

using B = BElem<SkModel>;

bool same(const Outcome<Sk>& o, const Sk& v) { return o.is_defined() && o.value() == v; }

B numeric_table(const Workbench& wb, std::mt19937_64& rng, bool with_default) {
    auto t = wb.random_table(rng, 6, false);
    if (with_default) t.set_default(wb.numeral(rng() % 10));
    return B::table(std::move(t));
}

// Interrogators for σ instances: each answers ⊤ or asks its oracle at a numeral.
std::vector<B> sigma_pool(const Workbench& wb, std::mt19937_64& rng) {
    const auto& kit = wb.kit();
    std::vector<B> out = {build_kappa(kit), B::coded(kit.get("rf"), wb.sk())};
    for (int n = 0; n < 3; ++n) {
        Fuel fuel(100000);
        auto inner = apply2(wb.sk(), kit.p(), kit.top(), wb.numeral(n), fuel).value();
        out.push_back(B::constant(apply2(wb.sk(), kit.p(), kit.top(), inner, fuel).value()));
        auto ask = apply2(wb.sk(), kit.p(), kit.bot(), wb.numeral(n), fuel).value();
        out.push_back(B::constant(apply2(wb.sk(), kit.p(), kit.top(), ask, fuel).value()));
    }
    out.push_back(b_compose(kit, build_kappa(kit), numeric_table(wb, rng, true)));
    out.push_back(B::coded(kit.compile_text("\\x. #p #top (#p #top (#fst x))"), wb.sk()));
    return out;
}

struct SigmaInstance {
    B alpha, beta, gamma;
    Sk a;
    Sk expected;
};

std::vector<SigmaInstance> sigma_instances(const Workbench& wb, const SuiteConfig& cfg, std::mt19937_64& rng,
                                           int wanted, CheckResult& r) {
    const auto& kit = wb.kit();
    auto pool = sigma_pool(wb, rng);
    std::vector<SigmaInstance> out;
    for (int j = 0; j < 400 && static_cast<int>(out.size()) < wanted; ++j) {
        const B& alpha = pool[rng() % pool.size()];
        const B& beta = pool[rng() % pool.size()];
        B gamma = rng() % 4 ? numeric_table(wb, rng, rng() % 3 != 0) : embed_i<SkModel>(wb.numeral(rng() % 10));
        Sk a = wb.numeral(rng() % 10);
        Fuel fuel(cfg.fuel * 2);
        auto rhs = b_apply(kit, b_compose(kit, alpha, gamma), b_compose(kit, beta, gamma), a, fuel).outcome;
        if (!rhs.is_defined()) {
            r.unknown();
            continue;
        }
        out.push_back(SigmaInstance{alpha, beta, gamma, a, rhs.value()});
    }
    return out;
}

Outcome<Sk> run_sigma(const Workbench& wb, const B& sigma, const SigmaInstance& in, std::uint64_t fuel_budget) {
    Fuel fuel(fuel_budget);
    return b_apply_chain(wb.kit(), sigma, {in.alpha, in.beta, in.gamma}, in.a, fuel);
}

std::vector<Sk> representer_pool(const Workbench& wb, std::mt19937_64& rng) {
    const auto& kit = wb.kit();
    std::vector<Sk> out = interrogator_pool(wb, rng);
    out.push_back(kit.compile_text("\\x. #p #top (#suc (#fst x))"));
    return out;
}

std::vector<Sk> oracle_codes(const Workbench& wb, std::mt19937_64& rng) {
    const auto& kit = wb.kit();
    std::vector<Sk> out;
    for (int j = 0; j < 4; ++j) out.push_back(table_to_code(wb.random_table(rng, 8, true), kit));
    out.push_back(kit.get("suc"));
    out.push_back(kit.compile_text("\\n. 4"));
    return out;
}

}  // namespace

CheckResult kappa_law(Workbench& wb, const SuiteConfig& cfg) {
    CheckResult r;
    auto rng = rng_for(cfg, "kappa");
    const auto& kit = wb.kit();
    B kap = build_kappa(kit);
    auto pool = sigma_pool(wb, rng);
    for (int j = 0; j < 150; ++j) {
        B alpha = j % 2 ? numeric_table(wb, rng, rng() % 2) : pool[rng() % pool.size()];
        B beta = j % 3 ? numeric_table(wb, rng, true) : pool[rng() % pool.size()];
        Sk a = j % 5 ? wb.numeral(rng() % 10) : wb.random_element(rng);
        Fuel f1(cfg.fuel);
        auto want = alpha(a, f1);
        Fuel f2(cfg.fuel * 4);
        auto got = b_apply_chain(kit, kap, {alpha, beta}, a, f2);
        if (want.is_exhausted() || got.is_exhausted())
            r.unknown();
        else
            r.expect(kleene_eq(got, want, wb.sk()), "(κ α β)(a) ≄ α(a)");
    }
    return r;
}

CheckResult sigma_law(Workbench& wb, const SuiteConfig& cfg) {
    CheckResult r;
    auto rng = rng_for(cfg, "sigma");
    B sig = build_sigma(wb.kit());
    auto instances = sigma_instances(wb, cfg, rng, 30, r);
    r.expect(instances.size() >= 30, "too few convergent σ instances");
    for (const auto& in : instances) {
        auto got = run_sigma(wb, sig, in, cfg.fuel * 2000);
        if (got.is_exhausted())
            r.unknown();
        else
            r.expect(same(got, in.expected), "(σ α β γ)(a) ≠ ((αγ)(βγ))(a)");
    }
    // (σ α) β on an input sequence [a]: a query, never a stuck state
    for (int j = 0; j < 10; ++j) {
        auto pool = sigma_pool(wb, rng);
        Fuel fuel(cfg.fuel * 100);
        Sk z = wb.sk().apply(wb.kit().get("unit"), wb.numeral(rng() % 5), fuel).value();
        auto partial = b_apply(wb.kit(), b_compose(wb.kit(), sig, pool[rng() % pool.size()]), B::empty(), z, fuel);
        r.expect(!(partial.outcome.is_undefined() && partial.outcome.reason() != Reason::OracleUndefined),
                 "σ α stuck on an empty oracle");
    }
    return r;
}

CheckResult sigma_native_agrees(Workbench& wb, const SuiteConfig& cfg) {
    CheckResult r;
    auto rng = rng_for(cfg, "sigma-native");
    B coded = build_sigma(wb.kit());
    B native = build_sigma_native(wb.kit());
    auto instances = sigma_instances(wb, cfg, rng, 100, r);
    for (std::size_t j = 0; j < instances.size(); ++j) {
        const auto& in = instances[j];
        auto n = run_sigma(wb, native, in, cfg.fuel * 200);
        if (n.is_exhausted())
            r.unknown();
        else
            r.expect(same(n, in.expected), "native σ ≠ ((αγ)(βγ))(a)");
        if (j < 10) {
            auto c = run_sigma(wb, coded, in, cfg.fuel * 2000);
            if (c.is_exhausted() || n.is_exhausted())
                r.unknown();
            else
                r.expect(kleene_eq(c, n, wb.sk()), "native and coded σ disagree");
        }
    }
    return r;
}

CheckResult tau_nu_rho(Workbench& wb, const SuiteConfig& cfg) {
    CheckResult r;
    auto rng = rng_for(cfg, "tau-nu-rho");
    const auto& kit = wb.kit();
    B tau = build_tau(kit), nu = build_nu(kit), rho = build_rho(kit);
    for (int j = 0; j < 100; ++j) {
        Sk a = wb.random_element(rng), b = j % 2 ? wb.random_element(rng) : wb.numeral(rng() % 6);
        Sk x = wb.numeral(rng() % 10);
        Fuel f0(cfg.fuel);
        auto ab = wb.sk().apply(a, b, f0);
        if (!ab.is_defined()) {
            r.unknown();
        } else {
            Fuel f1(cfg.fuel * 4);
            auto got = b_apply_chain(kit, tau, {embed_i<SkModel>(a), embed_i<SkModel>(b)}, x, f1);
            r.expect(same(got, ab.value()), "(τ â b̂)(x) ≠ a·b");
        }
        Fuel g0(cfg.fuel);
        auto ax = wb.sk().apply(a, x, g0);
        if (!ax.is_defined()) {
            r.unknown();
        } else {
            Fuel g1(cfg.fuel * 4);
            auto got = b_apply_chain(kit, nu, {embed_i<SkModel>(a)}, x, g1);
            r.expect(same(got, ax.value()), "(ν â)(x) ≠ a·x");
        }
        B alpha = numeric_table(wb, rng, rng() % 2);
        Sk c = wb.numeral(rng() % 10);
        Fuel h0(cfg.fuel);
        auto ac = alpha(c, h0);
        Fuel h1(cfg.fuel * 4);
        auto got = b_apply_chain(kit, rho, {alpha, embed_i<SkModel>(c)}, x, h1);
        if (got.is_exhausted())
            r.unknown();
        else
            r.expect(kleene_eq(got, ac, wb.sk()), "(ρ α ĉ)(x) ≄ α(c)");
    }
    return r;
}

CheckResult composition_closure(Workbench& wb, const SuiteConfig& cfg) {
    CheckResult r;
    auto rng = rng_for(cfg, "composition");
    const auto& kit = wb.kit();
    auto reps = representer_pool(wb, rng);
    auto codes = oracle_codes(wb, rng);
    for (int j = 0; j < 120; ++j) {
        const Sk& x = reps[rng() % reps.size()];
        const Sk& y = codes[rng() % codes.size()];
        Sk a = wb.numeral(rng() % 10);
        Fuel f1(cfg.fuel * 4);
        auto want = b_apply(kit, B::coded(x, wb.sk()), B::coded(y, wb.sk()), a, f1).outcome;
        if (!want.is_defined()) {
            r.unknown();
            continue;
        }
        Sk c = compose_representers(kit, x, y);
        Fuel f2(cfg.fuel * 40);
        auto got = wb.sk().apply(c, a, f2);
        if (got.is_exhausted())
            r.unknown();
        else
            r.expect(same(got, want.value()), "composed representer ≠ r̂ŝ");
    }
    return r;
}

CheckResult extension_tracker_check(Workbench& wb, const SuiteConfig& cfg) {
    CheckResult r;
    auto rng = rng_for(cfg, "extension-tracker");
    const auto& kit = wb.kit();
    auto reps = representer_pool(wb, rng);
    auto codes = oracle_codes(wb, rng);
    auto ut = extension_tracker(identity_pack(kit, kit.i()), kit);
    for (int j = 0; j < 120; ++j) {
        const Sk& x = reps[rng() % reps.size()];
        const Sk& y = codes[rng() % codes.size()];
        Sk a = wb.numeral(rng() % 10);
        Fuel f1(cfg.fuel * 4);
        auto want = b_apply(kit, B::coded(x, wb.sk()), B::coded(y, wb.sk()), a, f1).outcome;
        Fuel f2(want.is_defined() ? cfg.fuel * 40 : cfg.fuel);
        auto got = apply_chain(wb.sk(), ut.tracker, {x, y, a}, f2);
        if (want.is_exhausted()) {
            r.unknown();
        } else if (want.is_defined()) {
            if (got.is_exhausted())
                r.unknown();
            else
                r.expect(same(got, want.value()), "U x y [a] ≠ (x̂ ŷ)(a)");
        } else {
            r.expect(!got.is_defined(), "U defined where x̂ ŷ is not");
        }
    }
    return r;
}

CheckResult interchange_check(Workbench& wb, const SuiteConfig& cfg) {
    CheckResult r;
    auto rng = rng_for(cfg, "interchange");
    const auto& kit = wb.kit();
    B inter = interchange_rho(kit), rho = build_rho(kit);
    for (int j = 0; j < 60; ++j) {
        B alpha = numeric_table(wb, rng, true);
        Sk a = wb.numeral(rng() % 10);
        Fuel f1(cfg.fuel);
        auto want = alpha(a, f1);
        Fuel f2(cfg.fuel * 40);
        auto got = b_apply(kit, inter, b_compose(kit, rho, alpha), a, f2).outcome;
        if (got.is_exhausted())
            r.unknown();
        else
            r.expect(kleene_eq(got, want, wb.sk()), "interchange (ρ α) at a ≄ α(a)");
    }
    return r;
}

CheckResult chain_meets(Workbench& wb, const SuiteConfig& cfg) {
    CheckResult r;
    auto rng = rng_for(cfg, "chain-meet");
    using Tab = OracleTable<Sk>;
    auto N = [&](std::uint64_t n) { return wb.numeral(n); };
    // all partial functions {0,1,2} ⇀ {0,1}
    std::vector<Tab> all;
    for (int code = 0; code < 27; ++code) {
        Tab t;
        int c = code;
        for (int k = 0; k < 3; ++k, c /= 3)
            if (c % 3) t.set(N(k), N(c % 3 - 1));
        all.push_back(t);
    }
    for (int j = 0; j < 200; ++j) {
        // a random chain: start from a random function and extend it step by step
        std::vector<Tab> chain{all[rng() % all.size()]};
        int len = 1 + rng() % 3;
        for (int s = 0; s < len; ++s) {
            std::vector<Tab> bigger;
            for (const auto& t : all)
                if (table_extends(t, chain.back())) bigger.push_back(t);
            chain.push_back(bigger[rng() % bigger.size()]);
        }
        std::shuffle(chain.begin(), chain.end(), rng);
        Tab meet = chain_meet(chain);
        bool lower = true;
        for (const auto& t : chain) lower = lower && table_extends(meet, t);
        r.expect(lower, "meet does not lie below the chain");
        for (const auto& t : all) {
            bool below = true;
            for (const auto& c : chain) below = below && table_extends(t, c);
            if (below && !table_extends(t, meet)) r.fail("meet is not the greatest lower bound");
        }
        r.pass();
    }
    bool threw = false;
    try {
        chain_meet<Sk>({Tab{{N(0), N(0)}}, Tab{{N(0), N(1)}}});
    } catch (const ChainError&) {
        threw = true;
    }
    r.expect(threw, "incomparable inputs are rejected");
    {
        Tab withdef;
        withdef.set(N(1), N(4));
        withdef.set_default(N(0));
        Tab small{{N(1), N(4)}, {N(2), N(0)}};
        Tab m = chain_meet<Sk>({small, withdef});
        r.expect(m == withdef, "a total function absorbs its restrictions");
    }
    return r;
}

CheckResult ba_examples(Workbench& wb, const SuiteConfig& cfg) {
    CheckResult r;
    const auto& kit = wb.kit();
    auto N = [&](std::uint64_t n) { return wb.numeral(n); };
    OracleTable<Sk> ta{{N(1), N(2)}, {N(2), N(3)}};
    ta.set_default(N(9));
    B alpha = B::table(ta);
    B kap = build_kappa(kit);
    {
        Fuel f(cfg.fuel);
        r.expect(same(b_apply_chain(kit, kap, {alpha, B::empty()}, N(1), f), N(2)), "(κ α ∅)(1) = 2");
    }
    {
        Fuel f(cfg.fuel * 100);
        r.expect(same(b_apply_chain(kit, build_sigma(kit), {kap, kap, alpha}, N(1), f), N(2)), "(σ κ κ α)(1) = 2");
    }
    {
        Fuel f(cfg.fuel);
        r.expect(same(b_apply_chain(kit, build_nu(kit), {embed_i<SkModel>(kit.get("suc"))}, N(4), f), N(5)),
                 "(ν suc)(4) = 5");
    }
    {
        Fuel f(cfg.fuel);
        r.expect(same(b_apply_chain(kit, build_rho(kit), {alpha, embed_i<SkModel>(N(2))}, N(4), f), N(3)),
                 "(ρ α 2̂)(4) = 3");
    }
    {
        Fuel f(cfg.fuel * 10);
        auto beta = b_compose(kit, build_rho(kit), alpha);
        r.expect(same(b_apply(kit, interchange_rho(kit), beta, N(1), f).outcome, N(2)), "interchange example");
    }
    {
        auto code = table_to_code(ta, kit);
        Fuel f(cfg.fuel * 10);
        r.expect(same(wb.sk().apply(compose_representers(kit, kit.get("rf"), code), N(2), f), N(3)),
                 "composed representer example");
    }
    {
        B parsed = parse_belem("table{1->2, 2->3; default 9}", kit);
        r.expect(parsed.is_table() && parsed.as_table() == ta, "table literal");
        B cod = parse_belem("coded(\\x. #p #top (#fst x))", kit);
        Fuel f(cfg.fuel);
        r.expect(cod.is_coded() && same(b_apply(kit, cod, alpha, N(6), f).outcome, N(6)), "coded literal");
        bool threw = false;
        try {
            parse_belem("tabel{1->2}", kit);
        } catch (const ParseError&) {
            threw = true;
        }
        r.expect(threw, "bad literal rejected");
    }
    {
        BaModel<SkModel> ba(kit);
        Fuel f(10);
        auto ka = ba.apply(ba.k(), alpha, f);
        r.expect(ka.is_defined() && f.spent() == 1, "BA application costs one step");
        r.expect(ba.in_filter(ba.k()) && ba.in_filter(ba.s()) && !ba.in_filter(alpha), "BA filter membership");
        r.expect(ba.leq(alpha, alpha) && !ba.leq(alpha, B::table(ta)), "BA elements compared by identity");
    }
    return r;
}

}  // namespace pcw::checks
