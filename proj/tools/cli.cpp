#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pcw/print.hpp"
#include "pcw/suites.hpp"

namespace pcw::cli {

namespace {

struct Config {
    std::string model = "sk";
    std::uint64_t fuel = 100000;
    int stages = 8;
    std::string oracle_path;
    std::string probes;
    bool machine = false;
    std::uint64_t seed = SuiteConfig{}.seed;
};

std::string raw_sk(const Sk& e) {
    switch (e.tag()) {
        case Sk::Tag::K: return "#k";
        case Sk::Tag::S: return "#s";
        case Sk::Tag::Poison: return "#poison";
        case Sk::Tag::App: break;
    }
    std::string a = raw_sk(e.right());
    if (!e.right().is_leaf()) a = "(" + a + ")";
    return raw_sk(e.left()) + " " + a;
}

int verdict_code(bool defined, bool exhausted) {
    if (defined) return Ok;
    return exhausted ? FuelInconclusive : Undefined;
}

template <class E>
int print_outcome(const Outcome<E>& o, const std::function<std::string(const E&)>& show, std::ostream& out,
                  bool machine) {
    if (o.is_defined())
        out << (machine ? "= " : "") << show(o.value()) << "\n";
    else if (o.is_undefined())
        out << "! undefined(" << reason_name(o.reason()) << ")\n";
    else
        out << "! fuel\n";
    return verdict_code(o.is_defined(), o.is_exhausted());
}

int cmd_eval(const std::string& text, const Config& cfg, Workbench& wb, std::ostream& out) {
    if (cfg.model == "num") {
        const auto& kit = wb.num_kit();
        auto term = kit.parse_term(text);
        Fuel fuel(cfg.fuel);
        auto o = evaluate(term, wb.num(), kit.basis(), fuel);
        std::function<std::string(const Natural&)> show = [&](const Natural& n) {
            return print_num(n, wb.kit(), cfg.machine);
        };
        return print_outcome(o, show, out, cfg.machine);
    }
    auto term = wb.kit().parse_term(text);
    Fuel fuel(cfg.fuel);
    auto o = evaluate(term, wb.sk(), wb.kit().basis(), fuel);
    std::function<std::string(const Sk&)> show = [&](const Sk& e) { return print_sk(e, wb.kit(), cfg.machine); };
    return print_outcome(o, show, out, cfg.machine);
}

int cmd_compile(const std::string& text, const Config& cfg, Workbench& wb, std::ostream& out) {
    if (cfg.model == "num") {
        Natural e = wb.num_kit().compile_text(text);
        out << (cfg.machine ? "= " : "") << e.str() << "\n";
        return Ok;
    }
    Sk e = wb.kit().compile_text(text);
    out << (cfg.machine ? "= " : "") << raw_sk(e) << "\n";
    return Ok;
}

OracleTable<Sk> read_oracle(const std::string& path, Workbench& wb) {
    std::ifstream in(path);
    if (!in) throw TableFormatError("cannot open oracle file '" + path + "'", 0);
    std::stringstream ss;
    ss << in.rdbuf();
    std::function<Sk(const Term<Sk>&)> close = [&](const Term<Sk>& t) {
        return compile_closed(t, wb.sk(), wb.kit().basis());
    };
    return parse_table<Sk>(ss.str(), wb.kit().env(), close);
}

int cmd_oracle(const std::string& interrogator, const std::string& input, const Config& cfg, Workbench& wb,
               std::ostream& out) {
    if (cfg.model != "sk") throw ParseError("the oracle command runs in the sk model", 0);
    const auto& kit = wb.kit();
    Sk a = kit.compile_text(interrogator);
    Sk b = kit.compile_text(input);
    PartialFn<SkModel> f = cfg.oracle_path.empty() ? PartialFn<SkModel>::empty()
                                                   : PartialFn<SkModel>::table(read_oracle(cfg.oracle_path, wb));
    Fuel fuel(cfg.fuel);
    auto res = oracle_apply(kit, a, b, f, fuel);
    std::function<std::string(const Sk&)> show = [&](const Sk& e) { return print_sk(e, kit, cfg.machine); };
    out << res.trace.render(show);
    return verdict_code(res.outcome.is_defined(), res.outcome.is_exhausted());
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

// lift(table{...}), ask(<probe>), or a closed term.
Sk parse_probe(const std::string& text, ProbeBook<SkModel>& book, Workbench& wb) {
    std::string t = trim(text);
    auto wrapped = [&](const std::string& head) {
        return t.size() > head.size() + 1 && t.rfind(head + "(", 0) == 0 && t.back() == ')';
    };
    if (wrapped("lift")) {
        auto inner = t.substr(5, t.size() - 6);
        auto e = parse_belem(inner, wb.kit());
        if (!e.is_table()) throw ParseError("lift expects a table literal", 5);
        return book.lift(e.as_table(), t);
    }
    if (wrapped("ask")) return book.ask(parse_probe(t.substr(4, t.size() - 5), book, wb), t);
    return wb.kit().compile_text(t);
}

int cmd_fix(const std::string& name, const Config& cfg, Workbench& wb, std::ostream& out) {
    if (cfg.model != "sk") throw ParseError("the fix command runs in the sk model", 0);
    auto F = functional_by_name(wb.kit(), name);
    ProbeBook<SkModel> book(wb.kit());
    std::vector<std::string> texts = split_probes(cfg.probes);
    std::vector<Sk> probes;
    for (const auto& p : texts) probes.push_back(parse_probe(p, book, wb));
    auto rep = fixpoint_stage(wb.kit(), F, cfg.stages, probes, cfg.fuel, &book);
    if (!cfg.machine) out << "functional " << F.name << ", " << cfg.stages << " stages\n";
    for (std::size_t j = 0; j < rep.probes.size(); ++j) {
        const auto& ps = rep.probes[j];
        std::string label = trim(texts[j]);
        if (cfg.machine) {
            out << "probe " << label << " stage ";
            if (ps.first_defined)
                out << *ps.first_defined << " value " << print_sk(*ps.value, wb.kit(), true) << "\n";
            else
                out << ">" << cfg.stages << "\n";
        } else {
            out << label << "\t";
            if (ps.first_defined)
                out << "stage " << *ps.first_defined << "\t" << print_sk(*ps.value, wb.kit()) << "\n";
            else
                out << ">" << cfg.stages << "\n";
        }
    }
    out << (cfg.machine ? "monotone " : "monotone: ") << (rep.monotone ? "yes" : "no") << "\n";
    return Ok;
}

int cmd_suite(const std::string& name, const Config& cfg, Workbench& wb, std::ostream& out) {
    auto names = suite_names();
    if (std::find(names.begin(), names.end(), name) == names.end())
        throw ParseError("unknown suite '" + name + "'", 0);
    SuiteConfig sc;
    sc.fuel = cfg.fuel;
    sc.stages = cfg.stages;
    sc.seed = cfg.seed;
    SuiteReport rep;
    rep.suite = name;
    for (const auto& d : all_checks()) {
        if (name != "all" && d.suite != name) continue;
        auto r = run_check(d.name, wb, sc);
        if (cfg.machine)
            out << "check " << r.name << " passed " << r.passed << " failed " << r.failed << " inconclusive "
                << r.inconclusive << "\n";
        else
            out << format_check(r) << "\n";
        out.flush();
        rep.checks.push_back(std::move(r));
    }
    int passed = 0;
    for (const auto& c : rep.checks) passed += c.passed;
    out << (cfg.machine ? "suite " : "suite: ") << name << " checks " << rep.checks.size() << " passed " << passed
        << " failed " << rep.failures() << " inconclusive " << rep.inconclusive() << "\n";
    return rep.ok() ? Ok : SuiteFailure;
}

}  // namespace

std::vector<std::string> split_probes(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(' || c == '{') ++depth;
        if (c == ')' || c == '}') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty() || !out.empty()) out.push_back(cur);
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"pcw: partial combinatory algebras, oracles and fixpoint stages"};
    app.require_subcommand(1);
    Config cfg;
    auto flags = [&](CLI::App* sub) {
        sub->add_option("--model", cfg.model, "sk or num")->check(CLI::IsMember({"sk", "num"}));
        sub->add_option("--fuel", cfg.fuel, "reduction step budget")->check(CLI::PositiveNumber);
        sub->add_option("--stages", cfg.stages, "fixpoint stage bound")->check(CLI::PositiveNumber);
        sub->add_option("--oracle", cfg.oracle_path, "oracle table file");
        sub->add_option("--probes", cfg.probes, "comma-separated probe list");
        sub->add_flag("--machine", cfg.machine, "one self-delimiting line per result");
        sub->add_option("--seed", cfg.seed, "suite seed");
    };
    std::string term, input, name;
    auto* eval = app.add_subcommand("eval", "evaluate a closed term");
    eval->add_option("term", term)->required();
    auto* comp = app.add_subcommand("compile", "compile a closed λ-term to a combinator");
    comp->add_option("term", term)->required();
    auto* orc = app.add_subcommand("oracle", "run an oracle computation and print its trace");
    orc->add_option("interrogator", term)->required();
    orc->add_option("input", input)->required();
    auto* fix = app.add_subcommand("fix", "iterate the fixpoint stages of a functional");
    fix->add_option("functional", name)->required();
    auto* suite = app.add_subcommand("suite", "run an invariant suite");
    suite->add_option("name", name)->required();
    for (auto* s : {eval, comp, orc, fix, suite}) flags(s);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return ParseFailure;
    }

    try {
        Workbench wb;
        if (*eval) return cmd_eval(term, cfg, wb, out);
        if (*comp) return cmd_compile(term, cfg, wb, out);
        if (*orc) return cmd_oracle(term, input, cfg, wb, out);
        if (*fix) return cmd_fix(name, cfg, wb, out);
        if (*suite) return cmd_suite(name, cfg, wb, out);
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return ParseFailure;
    } catch (const TableFormatError& e) {
        err << "oracle file: " << e.what() << "\n";
        return ParseFailure;
    } catch (const TermError& e) {
        err << e.what() << "\n";
        return ParseFailure;
    } catch (const UnknownFunctional& e) {
        err << e.what() << "\n";
        return ParseFailure;
    } catch (const NotANumeral& e) {
        err << e.what() << "\n";
        return ParseFailure;
    } catch (const KitMissing& e) {
        err << e.what() << "\n";
        return ParseFailure;
    }
    return ParseFailure;
}

}  // namespace pcw::cli
