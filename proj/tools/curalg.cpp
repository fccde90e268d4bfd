// curalg: build current-algebra modules and run the verification suites.
//
// Exit status: 0 when every requested check passes, 1 when a check fails,
// 2 for usage errors and unsupported inputs.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "curalg/cache.hpp"
#include "curalg/models.hpp"
#include "curalg/presolve.hpp"
#include "curalg/serialize.hpp"
#include "curalg/suites.hpp"
#include "curalg/uea.hpp"

namespace {

using namespace curalg;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw UsageError("cannot write " + out);
    f << text;
}

/// Materialized module for a spec, through the on-disk cache when enabled.
CurrentModule load_or_build(const AlgebraPtr& g, const ModelSpec& spec) {
    const ModuleCache cache = ModuleCache::from_env();
    const std::string key = spec.str();
    if (auto hit = cache.load(g->type_label(), key)) return *hit;
    CurrentModule m = build_model(g, spec).materialize();
    cache.store(g->type_label(), key, m);
    return m;
}

std::string character_text(const GradedCharacter& ch) {
    std::string out;
    for (const auto& [grade, dim] : ch.grade_dims()) {
        out += "q^" + std::to_string(grade) + " (" + std::to_string(dim) + "):";
        for (const auto& [key, mult] : ch.entries())
            if (key.first == grade) out += " " + weight_string(key.second) + "x" + std::to_string(mult);
        out += "\n";
    }
    out += "total " + std::to_string(ch.total()) + "\n";
    return out;
}

std::string vector_text(const CurrentModule& m, const SparseVector& v) {
    if (v.is_zero()) return "0\n";
    std::string out;
    for (const auto& [i, c] : v.entries()) {
        std::string coef = to_string(c);
        if (!out.empty()) out += coef[0] == '-' ? " - " : " + ";
        else if (coef[0] == '-') out += "-";
        if (coef[0] == '-') coef.erase(0, 1);
        out += (coef == "1" ? "" : coef + " ") + m.basis()[i].label;
    }
    return out + "\n";
}

void check_format(const std::string& f, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (f == a) return;
    throw UsageError("unknown format " + f);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graded current-algebra modules with exact rational arithmetic"};
    app.require_subcommand(1);

    std::string algebra = "A1", format = "md", char_format = "text", out, model, element, suite, presentation;
    SuiteOptions sopt;
    std::optional<int> k_max, mn_max, m, n;
    std::uint64_t seed = sopt.seed;
    int trials = sopt.trials;
    SolveConfig solve;

    auto add_algebra = [&](CLI::App* c) { c->add_option("--algebra", algebra, "Cartan type, e.g. A1, A2, B2, G2"); };

    auto* check = app.add_subcommand("check", "run one verification suite");
    check->add_option("suite", suite, "suite name")->required();
    add_algebra(check);
    check->add_option("--k-max", k_max, "largest k");
    check->add_option("--mn-max", mn_max, "largest m+n for fusion-iso");
    check->add_option("--trials", trials, "parameter tuples for params");
    check->add_option("--seed", seed, "seed for randomized parameters");
    check->add_option("--m", m, "number of D(1,theta) factors for params");
    check->add_option("--n", n, "number of ev0 V(theta) factors for params");
    check->add_option("--format", format, "md or json");

    auto* build = app.add_subcommand("build", "build a model and write its JSON");
    build->add_option("spec", model, "model spec, e.g. Fusion:m=1,n=1")->required();
    add_algebra(build);
    build->add_option("--out", out, "output file (default stdout)");

    auto* chr = app.add_subcommand("char", "print the graded character of a model");
    chr->add_option("spec", model, "model spec")->required();
    add_algebra(chr);
    chr->add_option("--format", char_format, "text or json");

    auto* pre = app.add_subcommand("presolve", "build a module from a presentation");
    pre->add_option("--presentation", presentation, "e.g. weyl:k=1, vik:i=1,k=2, cv:xi=unit,k=1")->required();
    add_algebra(pre);
    pre->add_option("--grade-cutoff", solve.grade_cutoff, "largest grade examined");
    pre->add_option("--t-cutoff", solve.t_cutoff, "largest t-power in spanning monomials");
    pre->add_option("--window", solve.stabilization_window, "zero grades needed for completion");
    pre->add_option("--out", out, "output file (default stdout)");

    auto* rep = app.add_subcommand("report", "run the full acceptance battery");
    rep->add_option("--format", format, "md or json");
    rep->add_option("--out", out, "output file (default stdout)");

    auto* app_cmd = app.add_subcommand("apply", "apply an element of U(g[t]) to a model generator");
    app_cmd->add_option("element", element, "e.g. \"F[theta]@t^2 ^(3)\"")->required();
    app_cmd->add_option("spec", model, "model spec")->required();
    add_algebra(app_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*check) {
            check_format(format, {"md", "json"});
            sopt.algebra = algebra;
            sopt.k_max = k_max;
            sopt.mn_max = mn_max;
            sopt.trials = trials;
            sopt.seed = seed;
            sopt.m = m;
            sopt.n = n;
            const SuiteReport r = run_suite(suite, sopt);
            emit(format == "json" ? suite_json(r).dump(2) + "\n" : suite_markdown(r), "");
            return r.pass() ? 0 : 1;
        }
        if (*build || *chr || *app_cmd) {
            const AlgebraPtr g = chevalley_constants(algebra);
            const ModelSpec spec = ModelSpec::parse(model);
            const CurrentModule mod = load_or_build(g, spec);
            if (*build) {
                emit(module_json(mod).dump() + "\n", out);
            } else if (*chr) {
                check_format(char_format, {"text", "json"});
                const GradedCharacter ch = graded_character(mod);
                emit(char_format == "json" ? character_json(ch).dump() + "\n" : character_text(ch), "");
            } else {
                const UElement u = parse_uelement(element, *g);
                emit(vector_text(mod, curalg::apply(u, mod, *mod.generator())), "");
            }
            return 0;
        }
        if (*pre) {
            const AlgebraPtr g = chevalley_constants(algebra);
            const Presentation p = parse_presentation(*g, presentation);
            const PresolveResult res = module_from_presentation(g, p, solve);
            Json j = module_json(res.module);
            j["presentation"] = presentation_json(*g, p);
            j["character"] = character_json(graded_character(res.module));
            j["certificate"] = certificate_json(res.certificate);
            emit(j.dump(2) + "\n", out);
            return res.certificate.certified ? 0 : 1;
        }
        if (*rep) {
            check_format(format, {"md", "json"});
            const auto cs = run_acceptance();
            emit(format == "json" ? criteria_json(cs).dump(2) + "\n" : criteria_markdown(cs), out);
            for (const auto& c : cs)
                if (!c.pass()) return 1;
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failed: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
