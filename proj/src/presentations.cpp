#include "curalg/presentations.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace curalg {

std::string PartitionTuple::validate(const RootSystem& rs) const {
    if (static_cast<int>(lambda.size()) != rs.rank) return "weight has the wrong rank";
    if (static_cast<int>(parts.size()) != rs.num_positive()) return "need one partition per positive root";
    for (int a = 0; a < rs.num_positive(); ++a) {
        const auto& p = parts[a];
        int total = 0;
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (p[j] < 0) return "negative part";
            if (j > 0 && p[j] > p[j - 1]) return "parts are not weakly decreasing";
            total += p[j];
        }
        if (total != rs.pairing(lambda, rs.positive_roots[a]))
            return "partition for " + rs.root_name(rs.positive_roots[a]) + " has the wrong size";
    }
    return {};
}

std::string PartitionTuple::str(const RootSystem& rs) const {
    std::string out;
    for (int a = 0; a < static_cast<int>(parts.size()); ++a) {
        if (a) out += " ";
        out += rs.root_name(rs.positive_roots[a]) + ":(";
        for (std::size_t j = 0; j < parts[a].size(); ++j) out += (j ? "," : "") + std::to_string(parts[a][j]);
        out += ")";
    }
    return out;
}

PartitionTuple braces_tuple(const RootSystem& rs, const Weight& lambda) {
    PartitionTuple t{lambda, {}};
    for (const auto& a : rs.positive_roots) {
        int p = rs.pairing(lambda, a);
        t.parts.push_back(p > 0 ? std::vector<int>{p} : std::vector<int>{});
    }
    return t;
}

PartitionTuple unit_tuple(const RootSystem& rs, const Weight& lambda) {
    PartitionTuple t{lambda, {}};
    for (const auto& a : rs.positive_roots) t.parts.emplace_back(rs.pairing(lambda, a), 1);
    return t;
}

PartitionTuple xi_tuple(const RootSystem& rs, const std::string& kind, int i, int k) {
    if (!rs.simply_laced()) throw std::domain_error("xi tuples are defined for simply-laced types only");
    if (k < 1 || i < 0 || i > k) throw std::invalid_argument("xi tuple needs k >= 1 and 0 <= i <= k");
    int level, twos, ones;
    if (kind == "minus") {
        level = k, twos = i, ones = 2 * (k - i);
    } else if (kind == "mid") {
        level = k + 1, twos = i, ones = 2 * (k + 1 - i);
    } else if (kind == "plus") {
        level = k + 1, twos = i + 1, ones = 2 * (k - i);
    } else {
        throw std::invalid_argument("unknown xi tuple kind: " + kind);
    }
    PartitionTuple t = unit_tuple(rs, rs.multiple_of_theta(level));
    std::vector<int> th(twos, 2);
    th.insert(th.end(), ones, 1);
    t.parts[rs.highest_root] = std::move(th);
    return t;
}

namespace {

void require_dominant(const RootSystem& rs, const Weight& lambda) {
    if (static_cast<int>(lambda.size()) != rs.rank || !rs.is_dominant(lambda))
        throw std::invalid_argument("weight is not dominant: " + weight_string(lambda));
}

Relation power_relation(const ChevalleyAlgebra& g, int x, int s, int b, bool derived = false) {
    UElement u = UElement::generator(x, s, b);
    return {u.str(g), u, derived};
}

void add_unique(Presentation& p, Relation r) {
    for (const auto& q : p.relations)
        if (q.element == r.element) return;
    p.relations.push_back(std::move(r));
}

}  // namespace

Presentation weyl_presentation(const ChevalleyAlgebra& g, const Weight& lambda) {
    const auto& rs = g.roots();
    require_dominant(rs, lambda);
    Presentation p{"weyl", lambda, {}, true};
    for (int a = 0; a < rs.num_positive(); ++a) {
        int n = rs.pairing(lambda, rs.positive_roots[a]);
        p.relations.push_back(power_relation(g, g.f(a), 0, n + 1));
    }
    for (int a = 0; a < rs.num_positive(); ++a) {
        int n = rs.pairing(lambda, rs.positive_roots[a]);
        if (n > 0) p.relations.push_back(power_relation(g, g.f(a), n, 1, true));
    }
    return p;
}

std::pair<int, int> demazure_sm(const RootSystem& rs, const Weight& lambda, int alpha) {
    const int n = rs.pairing(lambda, rs.positive_roots[alpha]);
    if (n == 0) return {0, 0};
    const int d = rs.d_alpha[alpha];
    const int s = (n - 1) / d + 1;
    return {s, n - (s - 1) * d};
}

Presentation demazure_presentation(const ChevalleyAlgebra& g, const Weight& lambda) {
    const auto& rs = g.roots();
    Presentation p = weyl_presentation(g, lambda);
    p.kind = "demazure";
    for (int a = 0; a < rs.num_positive(); ++a) {
        auto [s, m] = demazure_sm(rs, lambda, a);
        if (s == 0 || rs.d_alpha[a] == 1) continue;
        add_unique(p, power_relation(g, g.f(a), s, 1));
        if (rs.d_alpha[a] == 3 && m == 1) add_unique(p, power_relation(g, g.f(a), s - 1, 2));
    }
    return p;
}

Presentation vik_presentation(const ChevalleyAlgebra& g, int i, int k) {
    if (k < 1 || i < 0 || i > k) throw std::invalid_argument("V_{i,k} needs k >= 1 and 0 <= i <= k");
    const auto& rs = g.roots();
    Presentation p{"vik", rs.multiple_of_theta(k), {}, true};
    for (int a = 0; a < rs.num_positive(); ++a) {
        if (a == rs.highest_root) continue;
        const Rational ip = rs.inner(rs.theta(), rs.positive_roots[a]);
        if (ip == 0) {
            p.relations.push_back(power_relation(g, g.f(a), 0, 1));
        } else {
            p.relations.push_back(power_relation(g, g.f(a), 0, k * rs.d_alpha[a] + 1));
            p.relations.push_back(power_relation(g, g.f(a), k, 1));
        }
    }
    const int th = rs.highest_root;
    p.relations.push_back(power_relation(g, g.f(th), 0, 2 * k + 1));
    p.relations.push_back(power_relation(g, g.f(th), 2 * k - i, 1));
    return p;
}

Presentation truncated_presentation(const ChevalleyAlgebra& g, int k, int n) {
    if (k < 1 || n < 1) throw std::invalid_argument("truncated Weyl module needs k, n >= 1");
    Presentation p = weyl_presentation(g, g.roots().multiple_of_theta(k));
    p.kind = "truncated";
    add_unique(p, power_relation(g, g.f(g.theta_index()), n, 1));
    return p;
}

std::vector<CvTriple> cv_minimal_triples(const PartitionTuple& xi) {
    std::vector<CvTriple> out;
    for (int a = 0; a < static_cast<int>(xi.parts.size()); ++a) {
        std::vector<int> p;
        for (int v : xi.parts[a])
            if (v > 0) p.push_back(v);
        if (p.empty()) continue;
        const int len = static_cast<int>(p.size());
        for (int r = 1; r < p[0]; ++r)
            for (int k = 1; k <= len; ++k) {
                int tail = 0;
                for (int j = k; j < len; ++j) tail += p[j];
                out.push_back({a, r, k, std::max(1, 1 + r * k + tail - r)});
            }
    }
    return out;
}

Presentation cv_relations(const ChevalleyAlgebra& g, const PartitionTuple& xi) {
    const auto& rs = g.roots();
    if (auto why = xi.validate(rs); !why.empty()) throw std::invalid_argument("incompatible tuple: " + why);
    Presentation p = weyl_presentation(g, xi.lambda);
    p.kind = "cv";
    std::set<std::tuple<int, int, int>> seen;
    for (const auto& t : cv_minimal_triples(xi)) {
        if (!seen.insert({t.alpha, t.r, t.s}).second) continue;
        UElement u = garland_element(g, t.alpha, t.r, t.s);
        std::string name = "x-[" + rs.root_name(rs.positive_roots[t.alpha]) + "](" + std::to_string(t.r) +
                           "," + std::to_string(t.s) + ")";
        add_unique(p, {name, u, false});
    }
    return p;
}

int ModelView::dim() const { return killed ? ambient.dim() - killed->dim() : ambient.dim(); }

bool ModelView::is_zero(const SparseVector& v) const { return killed ? is_member(*killed, v) : v.is_zero(); }

GradedCharacter ModelView::character() const {
    return killed ? quotient_character(*killed) : graded_character(ambient);
}

CurrentModule ModelView::materialize() const {
    if (!killed) return ambient;
    return quotient(*killed);
}

ModelView view_of(const CurrentModule& m) {
    if (!m.generator()) throw std::invalid_argument("module has no generator");
    return {m, std::nullopt, *m.generator()};
}

bool PresentationReport::pass() const {
    if (!highest_weight_ok || !cyclic) return false;
    return std::all_of(relations.begin(), relations.end(), [](const auto& r) { return r.pass; });
}

std::string PresentationReport::str() const {
    std::string out = kind + ": highest-weight " + (highest_weight_ok ? "ok" : "FAIL " + highest_weight_failure);
    out += ", cyclic " + std::string(cyclic ? "yes" : "no");
    for (const auto& r : relations)
        out += "\n  " + std::string(r.pass ? "ok   " : "FAIL ") + r.name + (r.derived ? " (derived)" : "");
    return out;
}

namespace {

std::optional<Weight> generator_weight(const CurrentModule& m, const SparseVector& v) {
    std::optional<Weight> w;
    for (const auto& [i, c] : v.entries()) {
        const Weight& wi = m.basis()[i].weight;
        if (w && *w != wi) return std::nullopt;
        w = wi;
    }
    return w;
}

}  // namespace

PresentationReport check_presentation(const ModelView& model, const Presentation& p) {
    const CurrentModule& m = model.ambient;
    const auto& g = m.algebra();
    const SparseVector& w = model.generator;
    PresentationReport rep;
    rep.kind = p.kind;
    auto hw_fail = [&](std::string why) {
        if (rep.highest_weight_ok) rep.highest_weight_failure = std::move(why);
        rep.highest_weight_ok = false;
    };
    auto wt = generator_weight(m, w);
    if (!wt || *wt != p.lambda) hw_fail("generator weight differs from " + weight_string(p.lambda));
    if (p.highest_weight) {
        const int top = effective_t_bound(m);
        for (int s = 0; s <= top && rep.highest_weight_ok; ++s) {
            for (int k = 0; k < g.num_positive(); ++k)
                if (!model.is_zero(m.apply(g.e(k), s, w)))
                    hw_fail(g.element(g.e(k)).label + "@t^" + std::to_string(s) + " does not kill w");
            for (int i = 0; i < g.rank(); ++i) {
                SparseVector v = m.apply(g.h(i), s, w);
                if (s == 0 && i < static_cast<int>(p.lambda.size())) v.add_scaled(w, -p.lambda[i]);
                if (!model.is_zero(v)) hw_fail(g.element(g.h(i)).label + "@t^" + std::to_string(s) + " is wrong on w");
            }
        }
    }
    for (const auto& r : p.relations)
        rep.relations.push_back({r.name, r.derived, model.is_zero(apply(r.element, m, w))});
    if (model.killed) {
        BlockedSubspace space = *model.killed->space;
        auto ops = m.generating_operators();
        close_under(space, {w}, ops);
        rep.cyclic = space.dim() == m.dim();
    } else {
        rep.cyclic = submodule_generated(m, w).dim() == m.dim();
    }
    return rep;
}

bool membership_check(const ModelView& model, const SparseVector& v, const SparseVector& seed) {
    if (model.killed) {
        BlockedSubspace space = *model.killed->space;
        auto ops = model.ambient.generating_operators();
        close_under(space, {seed}, ops);
        return space.contains(v);
    }
    return is_member(submodule_generated(model.ambient, seed), v);
}

std::vector<CvTriple> cv_sample_check(const ModelView& model, const PartitionTuple& xi, std::mt19937_64& rng,
                                      int samples) {
    const auto& g = model.algebra();
    std::vector<CvTriple> failures;
    std::vector<int> alphas;
    for (int a = 0; a < static_cast<int>(xi.parts.size()); ++a)
        if (!xi.parts[a].empty() && xi.parts[a][0] > 0) alphas.push_back(a);
    if (alphas.empty()) return failures;
    for (int n = 0; n < samples; ++n) {
        const int a = alphas[std::uniform_int_distribution<int>(0, static_cast<int>(alphas.size()) - 1)(rng)];
        std::vector<int> p;
        for (int v : xi.parts[a])
            if (v > 0) p.push_back(v);
        const int len = static_cast<int>(p.size());
        const int r = std::uniform_int_distribution<int>(1, p[0] + 1)(rng);
        const int k = std::uniform_int_distribution<int>(1, len + 1)(rng);
        int tail = 0;
        for (int j = k; j < len; ++j) tail += p[j];
        const int s = std::max(1, 1 + r * k + tail - r) + std::uniform_int_distribution<int>(0, 2)(rng);
        if (!model.is_zero(apply(garland_element(g, a, r, s), model.ambient, model.generator)))
            failures.push_back({a, r, k, s});
    }
    return failures;
}

}  // namespace curalg
