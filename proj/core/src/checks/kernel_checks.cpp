#include "checks.hpp"

#include "pcw/filter.hpp"

namespace pcw::checks {

std::mt19937_64 rng_for(const SuiteConfig& cfg, const std::string& name) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : name) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
    return std::mt19937_64(cfg.seed ^ h);
}

namespace {

template <PcaModel M>
void axiom_triple(CheckResult& r, const M& m, const ElementOf<M>& a, const ElementOf<M>& b, const ElementOf<M>& c,
                  std::uint64_t budget, const std::string& where) {
    Fuel f1(budget);
    auto kab = apply2(m, m.k(), a, b, f1);
    if (kab.is_exhausted())
        r.unknown();
    else
        r.expect(kab.is_defined() && kab.value() == a, "(D) k a b != a " + where);

    Fuel f2(budget);
    auto sab = apply2(m, m.s(), a, b, f2);
    if (sab.is_exhausted())
        r.unknown();
    else
        r.expect(sab.is_defined(), "(E) s a b undefined " + where);

    Fuel f3(budget);
    auto ac = m.apply(a, c, f3);
    auto bc = ac.is_defined() ? m.apply(b, c, f3) : ac;
    auto rhs = bc.is_defined() ? m.apply(ac.value(), bc.value(), f3) : bc;
    Fuel f4(budget);
    auto lhs = sab.is_defined() ? m.apply(sab.value(), c, f4) : sab;
    if (!rhs.is_defined()) {
        r.unknown();
        return;
    }
    if (lhs.is_exhausted()) {
        r.unknown();
        return;
    }
    r.expect(lhs.is_defined() && m.leq(lhs.value(), rhs.value()), "(F) s a b c differs from a c (b c) " + where);
}

}  // namespace

CheckResult pca_axioms(Workbench& wb, const SuiteConfig& cfg, bool numeric, int triples) {
    CheckResult r;
    auto rng = rng_for(cfg, numeric ? "pca-num" : "pca-sk");
    for (int t = 0; t < triples; ++t) {
        Sk a = wb.random_element(rng), b = wb.random_element(rng), c = wb.random_element(rng);
        std::string where = "at triple " + std::to_string(t);
        if (numeric)
            axiom_triple(r, wb.num(), godel_encode(a), godel_encode(b), godel_encode(c), cfg.fuel, where);
        else
            axiom_triple(r, wb.sk(), a, b, c, cfg.fuel, where);
    }
    return r;
}

CheckResult fuel_monotonicity(Workbench& wb, const SuiteConfig& cfg) {
    CheckResult r;
    auto rng = rng_for(cfg, "fuel-monotonicity");
    for (int t = 0; t < 1000; ++t) {
        Sk a = wb.random_element(rng, 10), b = wb.random_element(rng, 10);
        std::uint64_t n = 1 + rng() % 300;
        std::uint64_t m = n + 1 + rng() % 5000;
        Fuel fn(n), fm(m);
        auto on = wb.sk().apply(a, b, fn);
        auto om = wb.sk().apply(a, b, fm);
        if (on.is_defined())
            r.expect(om.is_defined() && om.value() == on.value(), "Defined result changed with more fuel");
        else if (on.is_undefined())
            r.expect(om.is_undefined() && om.reason() == on.reason(), "undefined verdict changed with more fuel");
        else
            r.unknown();
        // the same probe through the numeric model
        Fuel gn(n * 4 + 50), gm(m * 4 + 50);
        auto pn = wb.num().apply(godel_encode(a), godel_encode(b), gn);
        auto pm = wb.num().apply(godel_encode(a), godel_encode(b), gm);
        if (pn.is_defined())
            r.expect(pm.is_defined() && pm.value() == pn.value(), "numeric Defined result changed with more fuel");
        else
            r.unknown();
    }
    return r;
}

CheckResult kleene_relations(Workbench& wb, const SuiteConfig&) {
    CheckResult r;
    using O = Outcome<Sk>;
    const SkModel& m = wb.sk();
    Sk a = Sk::K(), b = Sk::S();
    r.expect(kleene_leq(O::defined(a), O::undefined(Reason::OracleUndefined), m), "Defined ⪯ undefined");
    r.expect(kleene_leq(O::defined(a), O::defined(a), m), "reflexivity on Defined");
    r.expect(!kleene_leq(O::undefined(Reason::ModelStuck), O::defined(a), m), "undefined ⪯ Defined must fail");
    r.expect(kleene_eq(O::defined(a), O::defined(a), m), "≃ on equal values");
    r.expect(kleene_eq(O::undefined(Reason::OracleUndefined), O::undefined(Reason::NotABoolean), m), "≃ on undefined");
    r.expect(!kleene_eq(O::defined(a), O::defined(b), m), "≃ on distinct values");
    r.expect(kleene_leq(O::undefined(Reason::ModelStuck), O::exhausted(10), m), "exhausted right side is vacuous");
    std::vector<O> pool = {O::defined(a), O::defined(b), O::undefined(Reason::OracleUndefined),
                           O::undefined(Reason::NotABoolean)};
    for (const auto& x : pool) {
        r.expect(kleene_leq(x, x, m), "⪯ not reflexive");
        for (const auto& y : pool)
            for (const auto& z : pool)
                if (kleene_leq(x, y, m) && kleene_leq(y, z, m)) r.expect(kleene_leq(x, z, m), "⪯ not transitive");
    }
    return r;
}

CheckResult num_coherence(Workbench& wb, const SuiteConfig& cfg) {
    CheckResult r;
    for (int m = 0; m < 200; ++m)
        for (int n = 0; n < 200; ++n) {
            Fuel f1(cfg.fuel), f2(cfg.fuel);
            auto lhs = wb.num().apply(Natural(m), Natural(n), f1);
            auto rhs = sk_apply(godel_decode(Natural(m)), godel_decode(Natural(n)), f2);
            if (rhs.is_defined()) {
                if (lhs.is_exhausted()) {
                    r.unknown();
                    continue;
                }
                r.expect(lhs.is_defined() && lhs.value() == godel_encode(rhs.value()),
                         "num(" + std::to_string(m) + "," + std::to_string(n) + ") differs");
            } else if (rhs.is_undefined()) {
                r.expect(lhs.is_undefined() && lhs.reason() == rhs.reason(), "undefined verdicts differ");
            } else {
                r.expect(!lhs.is_defined(), "numeric model defined where SK exhausted");
            }
        }
    return r;
}

CheckResult godel_roundtrip(Workbench&, const SuiteConfig&) {
    CheckResult r;
    r.expect(godel_encode(Sk::K()) == 0 && godel_decode(0) == Sk::K(), "K ↦ 0");
    r.expect(godel_encode(Sk::S()) == 1 && godel_decode(1) == Sk::S(), "S ↦ 1");
    for (int n = 0; n < 10000; ++n)
        if (godel_encode(godel_decode(Natural(n))) != n) r.fail("round trip fails at " + std::to_string(n));
    r.pass();
    for (int a = 0; a < 60; ++a)
        for (int b = 0; b < 60; ++b) {
            auto [x, y] = cantor_unpair(cantor_pair(a, b));
            if (x != a || y != b) r.fail("pairing is not invertible");
        }
    r.pass();
    return r;
}

CheckResult filter_generation(Workbench& wb, const SuiteConfig&) {
    CheckResult r;
    Sk k = Sk::K(), s = Sk::S();
    auto w1 = filter_generate(wb.sk(), {k}, k, 3, 1000);
    r.expect(w1.term && *w1.term == "x0", "generator k is its own witness");
    auto w2 = filter_generate(wb.sk(), {k, s}, wb.kit().i(), 3, 1000);
    r.expect(w2.term && *w2.term == "x1 x0 x0", "i = s k k should be found as x1 x0 x0");
    auto w3 = filter_generate(wb.sk(), {k}, s, 6, 1000);
    r.expect(!w3.term, "s is not generated by k");
    return r;
}

CheckResult reduction_examples(Workbench& wb, const SuiteConfig&) {
    CheckResult r;
    Sk k = Sk::K(), s = Sk::S();
    Fuel f(100);
    auto ks = sk_apply(k, s, f);
    r.expect(ks.is_defined() && ks.value() == Sk::app(k, s), "K S is normal");
    auto back = sk_apply(ks.value(), k, f);
    r.expect(back.is_defined() && back.value() == s, "K S K = S");
    for (std::uint64_t budget : {1000ULL, 10000ULL, 100000ULL}) {
        Fuel g(budget);
        auto w = sk_apply(wb.kit().get("sii"), wb.kit().get("sii"), g);
        r.expect(w.is_exhausted(), "SII(SII) must exhaust fuel");
    }
    return r;
}

}  // namespace pcw::checks
