#include "curalg/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "curalg/finrep.hpp"
#include "curalg/fusion.hpp"
#include "curalg/models.hpp"
#include "curalg/presolve.hpp"
#include "curalg/uea.hpp"

namespace curalg {

bool SuiteReport::pass() const {
    return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
}

bool Criterion::pass() const {
    return !suites.empty() && std::all_of(suites.begin(), suites.end(), [](const SuiteReport& s) { return s.pass(); });
}

namespace {

int default_k_max(const std::string& label) {
    if (label == "A1") return 3;
    if (label == "A2") return 2;
    return 1;
}

int default_mn_max(const std::string& label) {
    if (label == "A1") return 4;
    if (label == "A2") return 3;
    return 2;
}

std::string spec(const std::string& kind, std::initializer_list<std::pair<const char*, int>> kv) {
    ModelSpec s{kind, {}};
    for (const auto& [k, v] : kv) s.params[k] = v;
    return s.str();
}

/// Collects cases; an exception inside a case fails that case only.
class Recorder {
  public:
    explicit Recorder(SuiteReport& r) : r_(r) {}

    void check(const std::string& name, const std::function<std::string()>& body) {
        CaseResult c{name, false, {}, {}, {}};
        try {
            c.detail = body();
            c.pass = c.detail.empty();
        } catch (const std::exception& e) {
            c.detail = std::string("exception: ") + e.what();
        }
        r_.cases.push_back(std::move(c));
    }

    void compare(const std::string& name, const std::function<std::pair<GradedCharacter, GradedCharacter>()>& body) {
        CaseResult c{name, false, {}, {}, {}};
        try {
            auto [a, b] = body();
            c.pass = a == b;
            if (!c.pass) c.detail = "lhs " + a.str() + " != rhs " + b.str();
            c.lhs = std::move(a);
            c.rhs = std::move(b);
        } catch (const std::exception& e) {
            c.detail = std::string("exception: ") + e.what();
        }
        r_.cases.push_back(std::move(c));
    }

    void note(const std::string& name, const std::string& detail) { r_.cases.push_back({name, true, detail, {}, {}}); }

  private:
    SuiteReport& r_;
};

std::string expect_dim(long long got, long long want) {
    if (got == want) return {};
    return "dim " + std::to_string(got) + ", expected " + std::to_string(want);
}

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

/// Relations and highest-weight conditions only; cyclicity is not required.
std::string relations_hold(const ModelView& v, const Presentation& p) {
    const PresentationReport rep = check_presentation(v, p);
    if (!rep.highest_weight_ok) return "highest weight: " + rep.highest_weight_failure;
    for (const auto& rc : rep.relations)
        if (!rc.pass) return "relation " + rc.name + " fails";
    return {};
}

std::string presentation_holds(const ModelView& v, const Presentation& p) {
    const PresentationReport rep = check_presentation(v, p);
    return rep.pass() ? std::string() : rep.str();
}

void require_simply_laced(const ChevalleyAlgebra& g, const std::string& suite) {
    if (!g.roots().simply_laced())
        throw std::domain_error("suite " + suite + " needs a simply-laced algebra, got " + g.type_label());
}

SparseVector act(const CurrentModule& m, int x, int s, const SparseVector& v) { return m.apply(x, s, v); }

SolveConfig oracle_config(const GradedCharacter& expected) {
    SolveConfig c;
    c.grade_cutoff = 2 * expected.max_grade() + 2;
    c.t_cutoff = c.grade_cutoff;
    c.stabilization_window = 2;
    return c;
}

/// Pairwise-distinct integers in [lo, hi] by a partial Fisher-Yates shuffle on
/// raw engine output, so the draw is the same on every standard library.
std::vector<Rational> distinct_ints(std::mt19937_64& rng, int count, int lo, int hi) {
    std::vector<int> pool;
    for (int v = lo; v <= hi; ++v) pool.push_back(v);
    if (count > static_cast<int>(pool.size())) throw std::invalid_argument("parameter range too small");
    std::vector<Rational> out;
    for (int j = 0; j < count; ++j) {
        const std::size_t span = pool.size() - j;
        std::swap(pool[j], pool[j + rng() % span]);
        out.emplace_back(pool[j]);
    }
    return out;
}

std::string rationals_str(const std::vector<Rational>& z) {
    std::string s = "(";
    for (std::size_t j = 0; j < z.size(); ++j) s += (j ? "," : "") + to_string(z[j]);
    return s + ")";
}

// ---------------------------------------------------------------------------

void suite_jacobi(const AlgebraPtr& g, Recorder& rec) {
    rec.check("root system", [&] { return root_system_scan(g->roots()); });
    rec.check("jacobi identity", [&] { return jacobi_scan(*g); });
    rec.check("antisymmetry", [&] { return antisymmetry_scan(*g); });
    rec.check("cartan matrix recovered", [&] { return cartan_recovery_scan(*g); });
    rec.check("integral structure constants", [&] { return integrality_scan(*g); });
}

void suite_demazure(const AlgebraPtr& g, int k_max, Recorder& rec) {
    const auto& rs = g->roots();
    const CurrentModule d = demazure_one_theta(g);
    rec.check("dim D(1,theta) = dim g + 1", [&] { return expect_dim(d.dim(), g->dim() + 1); });
    rec.check("D(1,theta) is a g[t]-module", [&] { return bracket_scan(d); });
    rec.check("D(1,theta) presentation", [&] {
        return presentation_holds(view_of(d), demazure_presentation(*g, rs.multiple_of_theta(1)));
    });
    for (int k = 2; k <= k_max; ++k) {
        const std::string s = spec("D1", {{"k", k}});
        rec.check(s + " presentation", [&] {
            return presentation_holds(build_model(g, s), demazure_presentation(*g, rs.multiple_of_theta(k)));
        });
    }
}

void suite_ses(const AlgebraPtr& g, int k_max, Recorder& rec) {
    const int f = g->f(g->theta_index());
    for (int k = 1; k <= k_max; ++k)
        for (int i = 0; i <= k; ++i) {
            const std::string tag = " (k=" + std::to_string(k) + ", i=" + std::to_string(i) + ")";
            const int sh = 2 * k + 1 - i;
            auto small = [&] { return build_model(g, spec("Vik", {{"i", i}, {"k", k}})); };
            auto mid = [&] { return build_model(g, spec("Vik", {{"i", i}, {"k", k + 1}})); };
            auto big = [&] { return build_model(g, spec("Vik", {{"i", i + 1}, {"k", k + 1}})); };
            rec.compare("ch V(i,k+1) = q^(2k+1-i) ch V(i,k) + ch V(i+1,k+1)" + tag, [&] {
                return std::pair{mid().character(), small().character().shifted(sh) + big().character()};
            });
            // V(i,k+1) = D/<a>, and the kernel of V(i,k+1) -> V(i+1,k+1) is <a, b>/<a>.
            rec.compare("ch ker phi+ = q^(2k+1-i) ch V(i,k)" + tag, [&] {
                const ModelView d = build_model(g, spec("D1", {{"k", k + 1}}));
                const SparseVector a = act(d.ambient, f, sh + 1, d.generator);
                const SparseVector b = act(d.ambient, f, sh, d.generator);
                const Submodule s1 = submodule_generated(d.ambient, a);
                const Submodule s2 = submodule_generated(d.ambient, std::vector<SparseVector>{a, b});
                return std::pair{graded_character(s2) - graded_character(s1), small().character().shifted(sh)};
            });
            rec.check("phi- : V(i,k) relations hold on the kernel generator" + tag, [&] {
                const ModelView d = build_model(g, spec("D1", {{"k", k + 1}}));
                const SparseVector a = act(d.ambient, f, sh + 1, d.generator);
                ModelView ker{d.ambient, submodule_generated(d.ambient, a), act(d.ambient, f, sh, d.generator)};
                return relations_hold(ker, vik_presentation(*g, i, k));
            });
            rec.check("phi+ : V(i,k+1) relations hold in V(i+1,k+1)" + tag,
                      [&] { return presentation_holds(big(), vik_presentation(*g, i, k + 1)); });
        }
}

void suite_fusion_iso(const AlgebraPtr& g, int mn_max, Recorder& rec) {
    for (int total = 1; total <= mn_max; ++total)
        for (int m = 0; m <= total; ++m) {
            const int n = total - m;
            const std::string s = spec("Fusion", {{"m", m}, {"n", n}});
            rec.check("dim " + s, [&] {
                return expect_dim(build_model(g, s).dim(), ipow(g->dim() + 1, m) * ipow(g->dim(), n));
            });
            rec.compare("ch " + s + " = ch D1((m+n)theta)/<x-(theta) t^(2m+n) w>", [&] {
                return std::pair{build_model(g, s).character(), theta_quotient(g, m + n, 2 * m + n).character()};
            });
            rec.check(s + " satisfies the V(n,m+n) presentation",
                      [&] { return presentation_holds(build_model(g, s), vik_presentation(*g, n, m + n)); });
        }
}

void suite_ev_power(const AlgebraPtr& g, int k_max, Recorder& rec) {
    for (int k = 1; k <= k_max; ++k) {
        const std::string s = spec("Ev", {{"k", k}});
        rec.check("dim " + s, [&] { return expect_dim(build_model(g, s).dim(), ipow(g->dim(), k)); });
        rec.compare("ch " + s + " = ch D1(k theta)/<x-(theta) t^k w>",
                    [&] { return std::pair{build_model(g, s).character(), theta_quotient(g, k, k).character()}; });
    }
}

void garland_on(const AlgebraPtr& g, const std::string& name, const CurrentModule& m, Recorder& rec) {
    const auto& rs = g->roots();
    for (int a = 0; a < rs.num_positive(); ++a)
        rec.check(name + ", alpha=" + rs.root_name(rs.positive_roots[a]), [&]() -> std::string {
            for (int r = 0; r <= 6; ++r)
                for (int s = 0; r + s <= 6; ++s)
                    if (!garland_congruence_check(m, a, r, s))
                        return "fails at (r,s)=(" + std::to_string(r) + "," + std::to_string(s) + ")";
            return {};
        });
}

void suite_garland(const AlgebraPtr& g, int k_max, Recorder& rec) {
    for (int k = 1; k <= k_max; ++k) {
        const std::string s = spec("D1", {{"k", k}});
        garland_on(g, s, build_model(g, s).ambient, rec);
    }
    garland_on(g, "ev0 V(theta)", ev0(adjoint_module(g)), rec);
}

void suite_lemmas(const AlgebraPtr& g, int k_max, std::uint64_t seed, Recorder& rec) {
    const auto& rs = g->roots();
    const int th = g->theta_index();
    const int f = g->f(th);
    std::vector<int> long_neighbours;  // alpha with (theta|alpha) = 1
    for (int a = 0; a < rs.num_positive(); ++a)
        if (rs.inner(rs.theta(), rs.positive_roots[a]) == 1) long_neighbours.push_back(a);

    for (int k = 1; k <= k_max; ++k) {
        const std::string ds = spec("D1", {{"k", k + 1}});
        const ModelView d = build_model(g, ds);
        const CurrentModule& M = d.ambient;
        const SparseVector& w = d.generator;
        const std::string tk = " (k=" + std::to_string(k);
        auto fth = [&](int s, int b = 1) { return UElement::generator(f, s, b); };

        if (rs.simply_laced()) {
            for (int i = 0; i <= k; ++i)
                rec.check("W: (x-theta)^(2k+1) (x-theta t^(2k+1-i)) w = 0" + tk + ", i=" + std::to_string(i) + ")",
                          [&]() -> std::string {
                              const UElement u = fth(0, 2 * k + 1) * fth(2 * k + 1 - i);
                              return apply(u, M, w).is_zero() ? "" : "nonzero";
                          });
            const int top = M.max_grade();
            for (int m = k; m <= top + 1; ++m)
                rec.check("W: (x-theta t^m)(x-theta t^(m+1)) w in <x-theta t^(m+2) w>" + tk + ", m=" +
                              std::to_string(m) + ")",
                          [&]() -> std::string {
                              const SparseVector v = apply(fth(m) * fth(m + 1), M, w);
                              return membership_check(d, v, apply(fth(m + 2), M, w)) ? "" : "not a member";
                          });
        } else {
            rec.note("W relations" + tk + ")", "skipped: W((k+1)theta) = D1((k+1)theta) needs a simply-laced algebra");
        }

        for (int i = 0; i <= k; ++i) {
            const std::string ti = tk + ", i=" + std::to_string(i) + ")";
            const SparseVector seed_vec = apply(fth(2 * k + 2 - i), M, w);
            for (int a : long_neighbours) {
                const std::string an = rs.root_name(rs.positive_roots[a]);
                rec.check("D: (x-alpha)^(k d+1) (x-theta t^(2k+1-i)) w = 0, alpha=" + an + ti, [&]() -> std::string {
                    const UElement u = UElement::generator(g->f(a), 0, k * rs.d_alpha[a] + 1) * fth(2 * k + 1 - i);
                    return apply(u, M, w).is_zero() ? "" : "nonzero";
                });
                const std::string name = "D: (x-alpha t^k)(x-theta t^(2k+1-i)) w in <x-theta t^(2k+2-i) w>, alpha=";
                rec.check(name + an + ti, [&]() -> std::string {
                    const SparseVector v = apply(UElement::generator(g->f(a), k) * fth(2 * k + 1 - i), M, w);
                    return membership_check(d, v, seed_vec) ? "" : "not a member";
                });
            }
            if (long_neighbours.empty())
                rec.note("D: x-alpha relations" + ti, "vacuous: no alpha with (theta|alpha) = 1");
            const std::string name = "D: (x-theta t^(2k-i))(x-theta t^(2k+1-i)) w in <x-theta t^(2k+2-i) w>";
            rec.check(name + ti, [&]() -> std::string {
                const SparseVector v = apply(fth(2 * k - i) * fth(2 * k + 1 - i), M, w);
                return membership_check(d, v, seed_vec) ? "" : "not a member";
            });
        }
    }

    // Filtration maps on D(1,theta)^z1 (x) ev0 V(theta)^z2.
    std::mt19937_64 rng(seed);
    const CurrentModule d1 = demazure_one_theta(g);
    const CurrentModule e0 = ev0(adjoint_module(g));
    {
        const auto z = distinct_ints(rng, 2, -10, 10);
        const Filtration filt = filtration(tensor_current({eval_shift(d1, z[0]), eval_shift(e0, z[1])}));
        for (int s = 1; s <= 3; ++s) {
            const auto a = distinct_ints(rng, s, -10, 10);
            const std::string name = "layer maps of x t^s and x (t-a1)...(t-as) agree, z=" + rationals_str(z) +
                                     " a=" + rationals_str(a);
            rec.check(name, [&]() -> std::string {
                for (int x = 0; x < g->dim(); ++x) {
                    const std::string err = induced_map_check(filt, x, a);
                    if (!err.empty()) return g->element(x).label + ": " + err;
                }
                return {};
            });
        }
    }

    for (int m = 0; m <= 2; ++m) {
        const int n = 2 - m;
        std::vector<const CurrentModule*> factors;
        for (int j = 0; j < 2; ++j) factors.push_back(j < m ? &d1 : &e0);
        const std::string fs = spec("Fusion", {{"m", m}, {"n", n}});
        rec.check("sum of factor annihilator exponents kills the " + fs + " generator", [&]() -> std::string {
            const CurrentModule fu = fusion_model(g, m, n, {Rational(0), Rational(1)});
            for (int x = 0; x < g->dim(); ++x) {
                int total = 0;
                for (const CurrentModule* fac : factors) {
                    int s = 0;
                    while (s <= effective_t_bound(*fac) && !fac->apply(x, s, *fac->generator()).is_zero()) ++s;
                    total += s;
                }
                if (!fu.apply(x, total, *fu.generator()).is_zero())
                    return g->element(x).label + " (x) t^" + std::to_string(total) + " does not kill the generator";
            }
            return {};
        });
    }
}

void suite_cv(const AlgebraPtr& g, int k_max, std::uint64_t seed, Recorder& rec) {
    require_simply_laced(*g, "cv");
    const auto& rs = g->roots();
    std::mt19937_64 rng(seed);
    for (int k = 1; k <= k_max; ++k)
        for (int i = 0; i <= k; ++i) {
            const std::string tag = " (k=" + std::to_string(k) + ", i=" + std::to_string(i) + ")";
            const std::string mid = spec("Vik", {{"i", i}, {"k", k + 1}});
            const std::string minus = spec("Vik", {{"i", i}, {"k", k}});
            const std::string plus = spec("Vik", {{"i", i + 1}, {"k", k + 1}});
            for (const auto& [kind, model] : {std::pair{"minus", minus}, {"mid", mid}, {"plus", plus}}) {
                const std::string kd = kind;
                const std::string md = model;
                rec.check("cv relations xi_" + kd + " on " + md + tag, [&]() -> std::string {
                    const PartitionTuple xi = xi_tuple(rs, kd, i, k);
                    const ModelView v = build_model(g, md);
                    if (auto err = presentation_holds(v, cv_relations(*g, xi)); !err.empty()) return err;
                    const auto bad = cv_sample_check(v, xi, rng, 8);
                    if (!bad.empty())
                        return "sampled triple fails: alpha=" + rs.root_name(rs.positive_roots[bad[0].alpha]) +
                               " r=" + std::to_string(bad[0].r) + " s=" + std::to_string(bad[0].s);
                    return {};
                });
            }
            rec.compare("ch V(xi) = q^(2k+1-i) ch V(xi-) + ch V(xi+)" + tag, [&] {
                return std::pair{build_model(g, mid).character(),
                                 build_model(g, minus).character().shifted(2 * k + 1 - i) +
                                     build_model(g, plus).character()};
            });
        }

    const Weight th = rs.multiple_of_theta(1);
    auto via_presolve = [&](const Presentation& p, const std::string& model) {
        const GradedCharacter want = build_model(g, model).character();
        const PresolveResult res = module_from_presentation(g, p, oracle_config(want));
        if (!res.certificate.certified) throw std::runtime_error("presolve not certified: " + res.certificate.note);
        return std::pair{graded_character(res.module), want};
    };
    rec.compare("V({theta}) = ev0 V(theta)",
                [&] { return via_presolve(cv_relations(*g, braces_tuple(rs, th)), "Ev:k=1"); });
    rec.compare("V(xi(theta)) = W(theta)",
                [&] { return via_presolve(cv_relations(*g, unit_tuple(rs, th)), "Weyl:k=1"); });
}

void suite_truncated(const AlgebraPtr& g, int k_max, Recorder& rec) {
    require_simply_laced(*g, "truncated");
    for (int k = 1; k <= k_max; ++k)
        for (int n = k; n <= 2 * k + 1; ++n) {
            const std::string t = spec("Trunc", {{"k", k}, {"n", n}});
            const std::string other =
                n < 2 * k ? spec("Fusion", {{"m", n - k}, {"n", 2 * k - n}}) : spec("Weyl", {{"k", k}});
            rec.compare("ch " + t + " = ch " + other,
                        [&] { return std::pair{build_model(g, t).character(), build_model(g, other).character()}; });
            rec.check(t + " presentation",
                      [&] { return presentation_holds(build_model(g, t), truncated_presentation(*g, k, n)); });
        }
}

void suite_params(const AlgebraPtr& g, int m, int n, int trials, std::uint64_t seed, Recorder& rec) {
    if (trials < 2) throw std::invalid_argument("parameter independence needs at least 2 trials");
    if (m < 0 || n < 0 || m + n < 1) throw std::invalid_argument("parameter independence needs m + n >= 1");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<Rational>> zs;
    for (int t = 0; t < trials; ++t) zs.push_back(distinct_ints(rng, m + n, -10, 10));
    const GradedCharacter first = graded_character(fusion_model(g, m, n, zs[0]));
    const std::string s = spec("Fusion", {{"m", m}, {"n", n}});
    for (int t = 1; t < trials; ++t)
        rec.compare(s + " z=" + rationals_str(zs[t]) + " vs z=" + rationals_str(zs[0]),
                    [&] { return std::pair{graded_character(fusion_model(g, m, n, zs[t])), first}; });
}

void suite_oracle(const AlgebraPtr& g, int k_max, Recorder& rec) {
    require_simply_laced(*g, "oracle");
    const auto& rs = g->roots();
    std::vector<std::pair<Presentation, std::string>> items;
    for (int k = 1; k <= std::min(k_max, 2); ++k)
        items.emplace_back(weyl_presentation(*g, rs.multiple_of_theta(k)), spec("Weyl", {{"k", k}}));
    items.emplace_back(cv_relations(*g, braces_tuple(rs, rs.multiple_of_theta(1))), "Ev:k=1");
    items.emplace_back(cv_relations(*g, unit_tuple(rs, rs.multiple_of_theta(1))), "Weyl:k=1");
    for (int k = 1; k <= k_max; ++k)
        for (int i = 0; i <= k; ++i) items.emplace_back(vik_presentation(*g, i, k), spec("Vik", {{"i", i}, {"k", k}}));

    for (const auto& [p, model] : items) {
        const std::string name = p.kind + " vs " + model;
        std::optional<PresolveResult> res;
        rec.compare(name, [&] {
            const GradedCharacter want = build_model(g, model).character();
            res = module_from_presentation(g, p, oracle_config(want));
            if (!res->certificate.certified) throw std::runtime_error("not certified: " + res->certificate.note);
            return std::pair{graded_character(res->module), want};
        });
        if (!res) continue;
        rec.check(name + ": presolved module satisfies its presentation",
                  [&] { return presentation_holds(view_of(res->module), p); });
        rec.compare(name + ": reversed relation order", [&] {
            Presentation q = p;
            std::reverse(q.relations.begin(), q.relations.end());
            const PresolveResult r2 = module_from_presentation(g, q, res->certificate.config);
            if (r2.certificate.grade_dims != res->certificate.grade_dims)
                throw std::runtime_error("grade dimensions differ");
            return std::pair{graded_character(r2.module), graded_character(res->module)};
        });
    }
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"jacobi", "demazure", "ses",    "fusion-iso", "ev-power", "garland",
                                                "lemmas", "cv",       "truncated", "params",  "oracle"};
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
    if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
        throw std::invalid_argument("unknown suite " + name);
    const AlgebraPtr g = chevalley_constants(opt.algebra);
    const int k_max = opt.k_max.value_or(default_k_max(g->type_label()));
    const int mn_max = opt.mn_max.value_or(default_mn_max(g->type_label()));
    const bool uses_k = name != "jacobi" && name != "fusion-iso" && name != "params";
    if (uses_k && k_max < (name == "garland" || name == "demazure" ? 0 : 1))
        throw std::invalid_argument("k-max too small for suite " + name);
    if (name == "fusion-iso" && mn_max < 1) throw std::invalid_argument("mn-max must be >= 1");

    SuiteReport r;
    r.suite = name;
    r.algebra = g->type_label();
    Recorder rec(r);
    const auto start = std::chrono::steady_clock::now();
    if (uses_k) r.params["k_max"] = k_max;
    if (name == "jacobi") suite_jacobi(g, rec);
    if (name == "demazure") suite_demazure(g, k_max, rec);
    if (name == "ses") suite_ses(g, k_max, rec);
    if (name == "fusion-iso") {
        r.params["mn_max"] = mn_max;
        suite_fusion_iso(g, mn_max, rec);
    }
    if (name == "ev-power") suite_ev_power(g, k_max, rec);
    if (name == "garland") suite_garland(g, k_max, rec);
    if (name == "lemmas") {
        r.seed = opt.seed;
        suite_lemmas(g, k_max, opt.seed, rec);
    }
    if (name == "cv") {
        r.seed = opt.seed;
        suite_cv(g, k_max, opt.seed, rec);
    }
    if (name == "truncated") suite_truncated(g, k_max, rec);
    if (name == "params") {
        const int m = opt.m.value_or(g->type_label() == "A1" ? 2 : 1), n = opt.n.value_or(1);
        r.params = {{"m", m}, {"n", n}, {"trials", opt.trials}};
        r.seed = opt.seed;
        suite_params(g, m, n, opt.trials, opt.seed, rec);
    }
    if (name == "oracle") suite_oracle(g, k_max, rec);
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

// ---------------------------------------------------------------------------

namespace {

SuiteReport with(const std::string& suite, const std::string& algebra, std::optional<int> k_max = {},
                 std::optional<int> mn_max = {}) {
    SuiteOptions o;
    o.algebra = algebra;
    o.k_max = k_max;
    o.mn_max = mn_max;
    return run_suite(suite, o);
}

}  // namespace

Criterion run_criterion(int number) {
    Criterion c{number, {}, {}};
    switch (number) {
        case 1:
            c.title = "structure constants: Jacobi scans for A1, A2, A3, B2, G2";
            for (const char* a : {"A1", "A2", "A3", "B2", "G2"}) c.suites.push_back(with("jacobi", a));
            break;
        case 2:
            c.title = "dim D(1,theta) = dim g + 1 with certified presentation";
            for (const char* a : {"A1", "A2", "B2", "G2"}) c.suites.push_back(with("demazure", a, 1));
            break;
        case 3:
            c.title = "Fusion(m,n) = D1((m+n)theta)/<x-(theta) t^(2m+n)>: A1 m+n<=4, A2 m+n<=3";
            c.suites.push_back(with("fusion-iso", "A1", {}, 4));
            c.suites.push_back(with("fusion-iso", "A2", {}, 3));
            break;
        case 4:
            c.title = "short exact sequences with kernel characters: A1 k<=3, A2 k<=2";
            c.suites.push_back(with("ses", "A1", 3));
            c.suites.push_back(with("ses", "A2", 2));
            break;
        case 5:
            c.title = "ev0 V(theta)^{*k} = D1(k theta)/<x-(theta) t^k>: A1 k<=4, A2 k<=3";
            c.suites.push_back(with("ev-power", "A1", 4));
            c.suites.push_back(with("ev-power", "A2", 3));
            break;
        case 6:
            c.title = "Garland congruence, r+s<=6: D1 models (A1 k<=3, A2 k<=2) and ev0 (A1, A2, B2, G2)";
            c.suites.push_back(with("garland", "A1", 3));
            c.suites.push_back(with("garland", "A2", 2));
            c.suites.push_back(with("garland", "B2", 0));
            c.suites.push_back(with("garland", "G2", 0));
            break;
        case 7:
            c.title = "annihilation and membership lemmas on D1((k+1)theta): A1 k<=2, A2 k=1";
            c.suites.push_back(with("lemmas", "A1", 2));
            c.suites.push_back(with("lemmas", "A2", 1));
            break;
        case 8: {
            c.title = "parameter independence: A1 Fusion(2,1), A2 Fusion(1,1), 3 seeded trials";
            for (auto [a, m] : {std::pair{"A1", 2}, {"A2", 1}}) {
                SuiteOptions o;
                o.algebra = a;
                o.m = m;
                o.n = 1;
                o.trials = 3;
                c.suites.push_back(run_suite("params", o));
            }
            break;
        }
        case 9:
            c.title = "simply-laced CV modules: A1 k<=3, A2 k<=2, plus V({theta}) and V(xi(theta))";
            c.suites.push_back(with("cv", "A1", 3));
            c.suites.push_back(with("cv", "A2", 2));
            break;
        case 10:
            c.title = "truncated Weyl modules: A1 k<=3, A2 k<=2, k<=n<=2k+1";
            c.suites.push_back(with("truncated", "A1", 3));
            c.suites.push_back(with("truncated", "A2", 2));
            break;
        case 11:
            c.title = "presolve oracle reproduces A1 characters with certificates";
            c.suites.push_back(with("oracle", "A1", 2));
            break;
        default:
            throw std::invalid_argument("no criterion " + std::to_string(number));
    }
    return c;
}

std::vector<Criterion> run_acceptance() {
    std::vector<Criterion> out;
    for (int n = 1; n <= kCriteria; ++n) out.push_back(run_criterion(n));
    return out;
}

// ---------------------------------------------------------------------------

Json suite_json(const SuiteReport& r) {
    Json params = Json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    Json cases = Json::array();
    for (const auto& c : r.cases) {
        Json j{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
        j["lhs"] = c.lhs ? character_json(*c.lhs) : Json(nullptr);
        j["rhs"] = c.rhs ? character_json(*c.rhs) : Json(nullptr);
        cases.push_back(std::move(j));
    }
    return {{"suite", r.suite},
            {"algebra", r.algebra},
            {"params", params},
            {"seed", r.seed ? Json(*r.seed) : Json(nullptr)},
            {"pass", r.pass()},
            {"wall_seconds", r.wall_seconds},
            {"cases", cases}};
}

std::string suite_markdown(const SuiteReport& r) {
    std::ostringstream out;
    out << "### " << r.suite << " (" << r.algebra << "): " << (r.pass() ? "PASS" : "FAIL") << "\n\n";
    out << "params:";
    for (const auto& [k, v] : r.params) out << ' ' << k << '=' << v;
    if (r.seed) out << "; seed " << *r.seed;
    out << "; " << std::fixed << std::setprecision(3) << r.wall_seconds << " s\n\n";
    out << "| case | verdict | detail |\n|---|---|---|\n";
    for (const auto& c : r.cases) {
        std::string detail = c.detail;
        if (c.pass && c.lhs) detail = "dim " + std::to_string(c.lhs->total());
        std::replace(detail.begin(), detail.end(), '|', '/');
        std::replace(detail.begin(), detail.end(), '\n', ' ');
        out << "| " << c.name << " | " << (c.pass ? "pass" : "FAIL") << " | " << detail << " |\n";
    }
    return out.str();
}

Json criteria_json(const std::vector<Criterion>& cs) {
    Json arr = Json::array();
    bool all = true;
    for (const auto& c : cs) {
        Json suites = Json::array();
        for (const auto& s : c.suites) suites.push_back(suite_json(s));
        arr.push_back({{"criterion", c.number}, {"title", c.title}, {"pass", c.pass()}, {"suites", suites}});
        all = all && c.pass();
    }
    return {{"schema_version", kSchemaVersion}, {"pass", all}, {"criteria", arr}};
}

std::string criteria_markdown(const std::vector<Criterion>& cs) {
    std::ostringstream out;
    out << "# Acceptance report\n\n| # | criterion | verdict |\n|---|---|---|\n";
    for (const auto& c : cs)
        out << "| " << c.number << " | " << c.title << " | " << (c.pass() ? "PASS" : "FAIL") << " |\n";
    for (const auto& c : cs) {
        out << "\n## " << c.number << ". " << c.title << "\n\n";
        for (const auto& s : c.suites) out << suite_markdown(s) << '\n';
    }
    return out.str();
}

}  // namespace curalg
