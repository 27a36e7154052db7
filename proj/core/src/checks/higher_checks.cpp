#include "checks.hpp"

namespace pcw::checks {

namespace {

using B = BElem<SkModel>;
using F2 = Functional2<SkModel>;

bool same(const Outcome<Sk>& o, const Sk& v) { return o.is_defined() && o.value() == v; }

std::vector<std::string> functional_names() {
    return {"const:0", "const:1", "const:2", "const:3", "const:4", "eval0",
            "eval:1",  "eval:2",  "eval:3",  "eval:4",  "kleeneE"};
}

std::optional<Sk> decided(const F2& F, const B& alpha) {
    Fuel fuel(1000000);
    auto o = F(alpha, fuel);
    if (o.is_defined()) return o.value();
    return std::nullopt;
}

struct Expected {
    std::optional<Sk> value;
    int first = 0;
};

// The value of the least fixed point at each probe, computed from the probe structure.
std::vector<Expected> expected_values(const F2& F, const ProbeSet& ps) {
    std::vector<Expected> out(ps.probes.size());
    for (std::size_t j = 0; j < ps.probes.size(); ++j) {
        if (ps.parent[j] < 0) {
            out[j] = Expected{decided(F, B::table(ps.tables[j])), 1};
            continue;
        }
        const Expected& par = out[ps.parent[j]];
        auto v = decided(F, par.value ? B::constant(*par.value) : B::empty());
        bool early = !par.value || decided(F, B::empty()).has_value();
        out[j] = Expected{v, early ? 1 : par.first + 1};
    }
    return out;
}

OracleTable<Sk> extend(const Workbench& wb, std::mt19937_64& rng, const OracleTable<Sk>& t) {
    OracleTable<Sk> out = t;
    int extra = rng() % 4;
    for (int j = 0; j < extra; ++j) {
        Sk key = wb.numeral(rng() % 10);
        if (out.has_key(key)) continue;
        out.set(key, t.default_value() ? *t.default_value() : wb.numeral(rng() % 10));
    }
    if (!t.default_value() && rng() % 3 == 0) out.set_default(wb.numeral(rng() % 10));
    return out;
}

}  // namespace

ProbeSet standard_probes(const Workbench& wb, ProbeBook<SkModel>& book, bool constant_only) {
    ProbeSet ps;
    auto add = [&](const Sk& p, const std::string& kind, int parent, OracleTable<Sk> t) {
        ps.probes.push_back(p);
        ps.kinds.push_back(kind);
        ps.parent.push_back(parent);
        ps.tables.push_back(std::move(t));
        return static_cast<int>(ps.probes.size()) - 1;
    };
    auto family = [&](const OracleTable<Sk>& t, const std::string& text, bool deep) {
        int l = add(book.lift(t, "lift(" + text + ")"), "lift", -1, t);
        int a = add(book.ask(ps.probes[l], "ask(lift(" + text + "))"), "ask", l, {});
        if (deep) add(book.ask(ps.probes[a], "ask(ask(lift(" + text + ")))"), "ask2", a, {});
    };
    for (std::uint64_t c = 0; c < 10; ++c) {
        OracleTable<Sk> t;
        t.set_default(wb.numeral(c));
        family(t, "table{; default " + std::to_string(c) + "}", c < 4);
    }
    if (constant_only) return ps;
    auto N = [&](std::uint64_t n) { return wb.numeral(n); };
    OracleTable<Sk> a{{N(0), N(4)}};
    a.set_default(N(0));
    OracleTable<Sk> b{{N(1), N(3)}};
    b.set_default(N(2));
    OracleTable<Sk> c{{N(0), N(1)}, {N(1), N(2)}, {N(2), N(3)}};
    OracleTable<Sk> d{{N(3), N(0)}};
    OracleTable<Sk> e{{N(0), N(0)}};
    e.set_default(N(5));
    family(a, "table{0->4; default 0}", true);
    family(b, "table{1->3; default 2}", false);
    family(c, "table{0->1, 1->2, 2->3}", true);
    family(d, "table{3->0}", false);
    family(e, "table{0->0; default 5}", false);
    return ps;
}

CheckResult functional_examples(Workbench& wb, const SuiteConfig& cfg) {
    CheckResult r;
    const auto& kit = wb.kit();
    auto N = [&](std::uint64_t n) { return wb.numeral(n); };
    OracleTable<Sk> t{{N(0), N(4)}, {N(2), N(0)}};
    t.set_default(N(0));
    B tab = B::table(t);
    B zeros = B::constant(N(0));
    B partial = B::table(OracleTable<Sk>{{N(1), N(1)}});
    for (std::uint64_t k = 0; k < 5; ++k) {
        auto F = functional_by_name(kit, "const:" + std::to_string(k));
        r.expect(F.name == "const:" + std::to_string(k), "const name");
        for (const B& a : {tab, zeros, partial, B::empty()}) r.expect(decided(F, a) == N(k), "const value");
    }
    r.expect(functional_by_name(kit, "eval0").name == "eval0", "eval0 name");
    r.expect(decided(functional_by_name(kit, "eval0"), tab) == N(4), "eval0 on table");
    r.expect(decided(functional_by_name(kit, "eval:2"), tab) == N(0), "eval:2 on table");
    r.expect(decided(functional_by_name(kit, "eval:5"), tab) == N(0), "eval:5 reads the default");
    r.expect(!decided(functional_by_name(kit, "eval:0"), partial), "eval:0 off the domain");
    {
        Fuel fuel(100);
        auto o = functional_by_name(kit, "eval:0")(partial, fuel);
        r.expect(o.is_undefined() && o.reason() == Reason::OracleUndefined, "eval off the domain is undefined");
    }
    auto E = functional_by_name(kit, "kleeneE");
    r.expect(decided(E, tab) == N(1), "E sees a positive value");
    r.expect(decided(E, zeros) == N(0), "E on the zero function");
    r.expect(!decided(E, partial), "E undecided on a partial table");
    r.expect(!decided(E, B::coded(kit.compile_text("\\n. 0"), wb.sk())), "E undecided without a certificate");
    r.expect(decided(E, B::coded(kit.compile_text("\\n. 0"), wb.sk()).with_table_view([&](Fuel&) {
                 return std::optional<OracleTable<Sk>>(OracleTable<Sk>{{N(3), N(2)}});
             })) == std::nullopt,
             "E needs a total certificate");
    for (const char* bad : {"const:", "evalx", "eval:-1", "kleene", "const:a"}) {
        bool threw = false;
        try {
            functional_by_name(kit, bad);
        } catch (const UnknownFunctional&) {
            threw = true;
        }
        r.expect(threw, std::string("accepted '") + bad + "'");
    }
    r.expect(functional3_by_name(kit, "phi-const:3").name == "phi-const:3", "phi-const name");
    r.expect(functional3_by_name(kit, "phi-eval-id").name == "phi-eval-id", "phi-eval-id name");
    {
        Fuel fuel(1000);
        r.expect(same(phi_eval_id<SkModel>()(functional_by_name(kit, "eval:3"), fuel), N(3)), "Φ(eval:3) = id(3)");
    }
    // probe certificates
    ProbeBook<SkModel> book(kit);
    Sk lt = book.lift(t, "lift(t)");
    Sk ak = book.ask(lt, "ask(lift(t))");
    r.expect(book.find(lt) && book.find(lt)->text == "lift(t)" && book.find(ak) && !book.find(N(3)), "probe registry");
    Fuel fuel(cfg.fuel);
    auto cl = book.certificate(lt, B::empty(), fuel);
    r.expect(cl && *cl == t, "lift certificate");
    OracleTable<Sk> at{{lt, N(6)}};
    auto ca = book.certificate(ak, B::table(at), fuel);
    r.expect(ca && !ca->size() && ca->default_value() == N(6), "ask certificate");
    for (std::uint64_t x = 0; x < 5; ++x) {
        Fuel f1(1000000), f2(1000000);
        r.expect(kleene_eq(oracle_apply(kit, lt, N(x), B::empty(), f1).outcome,
                           Outcome<Sk>::defined(*t.lookup(N(x))), wb.sk()),
                 "lift probe computes its table");
        r.expect(same(oracle_apply(kit, ak, N(x), B::table(at), f2).outcome, N(6)), "ask probe computes α(P)");
    }
    return r;
}

CheckResult functional_monotonicity(Workbench& wb, const SuiteConfig& cfg) {
    CheckResult r;
    auto rng = rng_for(cfg, "monotonicity");
    for (const auto& name : functional_names()) {
        auto F = functional_by_name(wb.kit(), name);
        for (int j = 0; j < 60; ++j) {
            auto t = wb.random_table(rng);
            auto big = extend(wb, rng, t);
            if (!table_extends(big, t)) {
                r.fail("extension generator broke the order");
                continue;
            }
            auto small = decided(F, B::table(t));
            if (!small) {
                r.unknown();
                continue;
            }
            r.expect(decided(F, B::table(big)) == small, name + " is not monotone");
        }
    }
    return r;
}

CheckResult fixpoint_stages_check(Workbench& wb, const SuiteConfig& cfg) {
    CheckResult r;
    ProbeBook<SkModel> book(wb.kit());
    auto ps = standard_probes(wb, book, false);
    int n = std::max(cfg.stages, 4);
    for (const auto& name : functional_names()) {
        auto F = functional_by_name(wb.kit(), name);
        auto rep = fixpoint_stage(wb.kit(), F, n, ps.probes, cfg.fuel * 10, &book);
        r.expect(rep.monotone, name + ": stages are not monotone");
        auto want = expected_values(F, ps);
        for (std::size_t j = 0; j < ps.probes.size(); ++j) {
            const auto& got = rep.probes[j];
            if (want[j].value) {
                r.expect(got.value == want[j].value && got.first_defined == want[j].first,
                         name + ": wrong stage value at probe " + std::to_string(j));
            } else {
                r.expect(!got.first_defined, name + ": defined at a probe outside the fixed point");
            }
        }
    }
    // stage 0 is empty and stage objects are reused
    FixpointStages<SkModel> fs(wb.kit(), functional_by_name(wb.kit(), "const:2"), &book);
    Fuel fuel(100);
    r.expect(fs.stage(0)(ps.probes[0], fuel).is_undefined(), "stage 0 is the empty function");
    r.expect(fs.stage(3).same(fs.stage(3)), "stages are memoized");
    return r;
}

CheckResult z_representers(Workbench& wb, const SuiteConfig& cfg) {
    CheckResult r;
    ProbeBook<SkModel> book(wb.kit());
    auto all = standard_probes(wb, book, false);
    auto constant = standard_probes(wb, book, true);
    for (const auto& name : functional_names()) {
        auto F = functional_by_name(wb.kit(), name);
        const auto& ps = name == "kleeneE" ? constant : all;
        auto rep = fixpoint_stage(wb.kit(), F, std::max(cfg.stages, 4), ps.probes, cfg.fuel * 10, &book);
        auto zc = z_representer_check(wb.kit(), functional_representer(wb.kit(), name), rep, cfg.fuel * 100);
        for (int j = 0; j < zc.agree; ++j) r.pass();
        for (const auto& f : zc.failures) r.fail(name + ": z·r disagrees at " + f);
        for (int j = 0; j < zc.inconclusive; ++j) r.unknown();
        r.expect(zc.agree >= 20, name + ": fewer than 20 agreeing probes");
    }
    return r;
}

CheckResult phi_coherence(Workbench& wb, const SuiteConfig& cfg) {
    CheckResult r;
    const auto& kit = wb.kit();
    for (const char* phi : {"phi-const:0", "phi-const:1", "phi-const:2", "phi-eval-id"}) {
        auto P = functional3_by_name(kit, phi);
        for (const auto& name : functional_names()) {
            auto F = functional_by_name(kit, name);
            Fuel g(cfg.fuel);
            auto direct = P(F, g);
            B lifted = tilde_Phi(kit, P, hat(F));
            for (std::uint64_t a = 0; a < 4; ++a) {
                Fuel f(cfg.fuel);
                auto via = lifted(wb.numeral(a), f);
                if (direct.is_exhausted() || via.is_exhausted())
                    r.unknown();
                else
                    r.expect(kleene_eq(via, direct, wb.sk()), std::string(phi) + " on " + name + ": Φ̃(F̂) ≄ Φ(F)");
            }
        }
    }
    return r;
}

CheckResult type3_tau_check(Workbench& wb, const SuiteConfig& cfg) {
    CheckResult r;
    const auto& kit = wb.kit();
    BaModel<SkModel> ba(kit, BaModel<SkModel>::Sigma::Native);
    for (const char* phi : {"phi-const:3", "phi-eval-id"}) {
        auto P = functional3_by_name(kit, phi);
        B tau = type3_tau(type3_rho(kit, phi), build_rho(kit), ba);
        int agreeing = 0;
        for (std::uint64_t n = 0; n < 5; ++n) {
            Fuel g(cfg.fuel);
            auto want = P(functional_by_name(kit, n == 0 ? "eval0" : "eval:" + std::to_string(n)), g);
            for (std::uint64_t a : {0, 7}) {
                Fuel f(cfg.fuel * 4000);
                auto got = b_apply(kit, tau, eval_representer(kit, n), wb.numeral(a), f).outcome;
                if (got.is_exhausted()) {
                    r.unknown();
                    continue;
                }
                bool ok = want.is_defined() && same(got, want.value());
                r.expect(ok, std::string(phi) + ": τ ⊙ β at n=" + std::to_string(n));
                agreeing += ok;
            }
        }
        r.expect(agreeing >= 10, std::string(phi) + ": fewer than 10 agreeing probes");
    }
    return r;
}

CheckResult type3_t_check(Workbench& wb, const SuiteConfig& cfg) {
    CheckResult r;
    auto rng = rng_for(cfg, "type3-t");
    const auto& kit = wb.kit();
    Sk s = kit.compile_text("\\b. b #i");
    for (std::uint64_t jv = 0; jv < 3; ++jv) {
        Sk t = type3_t(kit, s, wb.numeral(jv));
        for (std::uint64_t n = 0; n < 6; ++n) {
            Kit<SkModel> local = kit;
            local.define("N", wb.numeral(n));
            Sk first = local.compile_text("\\y x. y #N");
            Sk second = local.compile_text("\\y x. x");
            Sk c = rng() % 2 ? wb.random_element(rng) : wb.numeral(rng() % 10);
            Fuel f1(cfg.fuel), f2(cfg.fuel);
            r.expect(same(apply_chain(wb.sk(), t, {first, c}, f1), wb.numeral(n)), "t · b · c = n");
            r.expect(same(apply_chain(wb.sk(), t, {second, c}, f2), wb.numeral(jv)), "t · b' · c = j");
            Fuel f3(cfg.fuel);
            auto tb = wb.sk().apply(t, first, f3);
            r.expect(tb.is_defined(), "t · b defined");
        }
    }
    return r;
}

}  // namespace pcw::checks
