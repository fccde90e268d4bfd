#include <doctest.h>

#include <random>

#include "curalg/finrep.hpp"
#include "curalg/fusion.hpp"
#include "curalg/models.hpp"
#include "curalg/presentations.hpp"
#include "curalg/uea.hpp"

using namespace curalg;

namespace {

UElement random_element(const ChevalleyAlgebra& g, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> x(0, g.dim() - 1), s(0, 2), b(1, 2), len(0, 3), c(-3, 3);
    UElement u;
    for (int t = 0; t < 3; ++t) {
        Monomial m;
        for (int j = len(rng); j > 0; --j) m.push_back({x(rng), s(rng), b(rng)});
        u.add_term(m, c(rng));
    }
    return u;
}

}  // namespace

TEST_CASE("element syntax round trips") {
    auto g = chevalley_constants("A2");
    UElement u = parse_uelement("F[theta]@t^2 ^(3)", *g);
    CHECK(u == UElement::generator(g->f(g->theta_index()), 2, 3));
    CHECK(u.str(*g) == "F[a1+a2]@t^2^(3)");
    CHECK(parse_uelement(u.str(*g), *g) == u);

    UElement v = parse_uelement("2*E[a1]@t H[a2] - 1/2 F[a1]^(2) + 3", *g);
    CHECK(v.terms().size() == 3);
    CHECK(parse_uelement(v.str(*g), *g) == v);
    CHECK(parse_uelement("F[a1] * F[a2]@t", *g) == UElement::monomial({{g->f(0), 0, 1}, {g->f(1), 1, 1}}));
    CHECK_THROWS_AS(parse_uelement("Q[a1]", *g), std::invalid_argument);
    CHECK_THROWS_AS(parse_uelement("F[a1]^(0)", *g), std::invalid_argument);
    CHECK_THROWS_AS(parse_uelement("", *g), std::invalid_argument);
}

TEST_CASE("garland elements") {
    auto g = chevalley_constants("A1");
    const int f = g->f(0);
    CHECK(garland_element(*g, 0, 0, 1).is_zero());
    CHECK(garland_element(*g, 0, 0, 0) == UElement::one());
    CHECK(garland_element(*g, 0, 1, 1) == UElement::generator(f, 1));
    UElement expect = UElement::monomial({{f, 1, 1}, {f, 2, 1}}) + UElement::monomial({{f, 0, 1}, {f, 3, 1}});
    CHECK(garland_element(*g, 0, 2, 3) == expect);
    // sum b_p = 3, sum p b_p = 4: b = (0,2,1), (1,0,2), (1,1,0,1), (2,0,0,0,1)
    UElement e34 = UElement::monomial({{f, 1, 2}, {f, 2, 1}}) + UElement::monomial({{f, 0, 1}, {f, 2, 2}}) +
                   UElement::monomial({{f, 0, 1}, {f, 1, 1}, {f, 3, 1}}) + UElement::monomial({{f, 0, 2}, {f, 4, 1}});
    CHECK(garland_element(*g, 0, 3, 4) == e34);

    auto a2 = chevalley_constants("A2");
    for (int a = 0; a < a2->num_positive(); ++a)
        for (int r = 0; r <= 4; ++r)
            for (int s = 0; s <= 4; ++s) {
                UElement u = garland_element(*a2, a, r, s);
                if (u.is_zero()) continue;
                CHECK(u.grade() == s);
                CHECK(u.weight(*a2) == scaled(a2->roots().root_weight(a2->roots().positive_roots[a]), -r));
            }
}

TEST_CASE("apply") {
    auto g = chevalley_constants("A1");
    CurrentModule d = demazure_one_theta(g);
    const SparseVector& w = *d.generator();
    CHECK(apply(UElement::one(), d, w) == w);
    CHECK(apply(UElement::generator(g->e(0)), d, w).is_zero());
    CHECK(apply(UElement::generator(g->f(0), 0, 3), d, w).is_zero());
    SparseVector sq = d.apply(g->f(0), 0, d.apply(g->f(0), 0, w));
    CHECK(apply(UElement::generator(g->f(0), 0, 2), d, w) == sq.scaled(Rational(1, 2)));
    CHECK(apply(UElement::generator(g->f(0), 1), d, w) == SparseVector::unit(d.dim() - 1));
}

TEST_CASE("pbw normal form") {
    auto g = chevalley_constants("A1");
    const int e = g->e(0), f = g->f(0), h = g->h(0);
    UElement ordered = UElement::monomial({{f, 0, 2}, {h, 1, 1}, {e, 1, 1}});
    CHECK(pbw_normal_form(ordered, *g) == ordered);
    UElement ef = UElement::monomial({{e, 1, 1}, {f, 0, 1}});
    UElement expect = UElement::monomial({{f, 0, 1}, {e, 1, 1}}) + UElement::generator(h, 1);
    CHECK(pbw_normal_form(ef, *g) == expect);
    // plain powers merge into divided powers: f f = 2 f^(2)
    CHECK(pbw_normal_form(UElement::monomial({{f, 0, 1}, {f, 0, 1}}), *g) ==
          UElement::generator(f, 0, 2).scaled(2));

    std::mt19937_64 rng(7);
    for (const char* label : {"A2", "B2"}) {
        auto a = chevalley_constants(label);
        CurrentModule m = fusion_product(std::vector<CurrentModule>{demazure_one_theta(a), ev0(adjoint_module(a))});
        std::uniform_int_distribution<int> pick(0, m.dim() - 1);
        for (int trial = 0; trial < 10; ++trial) {
            UElement u = random_element(*a, rng);
            UElement n = pbw_normal_form(u, *a);
            CHECK(pbw_normal_form(n, *a) == n);
            CHECK(n.grade() == u.grade());
            SparseVector v = SparseVector::unit(pick(rng), 1) + SparseVector::unit(pick(rng), 2);
            CHECK(apply(u, m, v) == apply(n, m, v));
        }
    }
}

TEST_CASE("garland congruence") {
    auto g = chevalley_constants("A1");
    CurrentModule d2 = build_model(g, "D1:k=2").ambient;
    // (e(x)t) f^2 w = f (h(x)t) w + (h(x)t) f w = -2 (f(x)t) w, halved by the divided power
    const SparseVector& w = *d2.generator();
    SparseVector lhs = apply(UElement::monomial({{g->e(0), 1, 1}, {g->f(0), 0, 2}}), d2, w);
    CHECK_FALSE(lhs.is_zero());
    CHECK(lhs == d2.apply(g->f(0), 1, w).scaled(-1));
    CHECK(garland_congruence_check(d2, 0, 1, 1));
    CHECK(garland_congruence_check(d2, 0, 0, 1));
    for (int r = 0; r <= 6; ++r)
        for (int s = 0; r + s <= 6; ++s) CHECK(garland_congruence_check(d2, 0, r, s));

    for (const char* label : {"B2", "G2"}) {
        auto a = chevalley_constants(label);
        CurrentModule e = ev0(adjoint_module(a));
        for (int al = 0; al < a->num_positive(); ++al)
            for (int r = 0; r <= 6; ++r)
                for (int s = 0; r + s <= 6; ++s) CHECK(garland_congruence_check(e, al, r, s));
    }
    // a generator that is not highest weight is rejected
    CurrentModule bad = demazure_one_theta(g);
    bad.set_generator(SparseVector::unit(g->f(0)));
    CHECK_THROWS_AS(garland_congruence_check(bad, 0, 1, 1), std::invalid_argument);
}

TEST_CASE("weyl and demazure presentations") {
    auto g = chevalley_constants("A1");
    Presentation w = weyl_presentation(*g, g->roots().multiple_of_theta(1));
    REQUIRE(w.relations.size() == 2);
    CHECK(w.relations[0].element == UElement::generator(g->f(0), 0, 3));
    CHECK_FALSE(w.relations[0].derived);
    // derived relation (x-_theta (x) t^{<theta, theta^vee>})
    CHECK(w.relations[1].element == UElement::generator(g->f(0), 2));
    CHECK(w.relations[1].derived);
    CHECK_THROWS_AS(weyl_presentation(*g, Weight{-1}), std::invalid_argument);
    Presentation zero = weyl_presentation(*g, Weight{0});
    CHECK(zero.relations.size() == 1);
    CHECK(zero.relations[0].element == UElement::generator(g->f(0)));

    auto a2 = chevalley_constants("A2");
    Presentation wa = weyl_presentation(*a2, a2->roots().multiple_of_theta(1));
    std::vector<int> exps;
    for (const auto& r : wa.relations)
        if (!r.derived) exps.push_back(r.element.terms().begin()->first[0].b);
    CHECK(exps == std::vector<int>{2, 2, 3});
    CHECK(demazure_presentation(*a2, a2->roots().multiple_of_theta(2)).relations.size() ==
          weyl_presentation(*a2, a2->roots().multiple_of_theta(2)).relations.size());

    auto b2 = chevalley_constants("B2");
    const auto& rs = b2->roots();
    for (int k = 1; k <= 3; ++k) {
        Weight lam = rs.multiple_of_theta(k);
        Presentation d = demazure_presentation(*b2, lam);
        std::vector<UElement> extra;
        for (std::size_t j = weyl_presentation(*b2, lam).relations.size(); j < d.relations.size(); ++j)
            extra.push_back(d.relations[j].element);
        std::vector<UElement> expect;
        for (int a = 0; a < rs.num_positive(); ++a)
            if (rs.d_alpha[a] > 1 && rs.inner(rs.theta(), rs.positive_roots[a]) == 1) {
                CHECK(demazure_sm(rs, lam, a) == std::pair{k, 2});
                expect.push_back(UElement::generator(b2->f(a), k));
            }
        CHECK(extra == expect);
    }

    auto g2 = chevalley_constants("G2");
    // omega_1 pairs to 1 with the short simple root
    Presentation dg = demazure_presentation(*g2, Weight{1, 0});
    CHECK(demazure_sm(g2->roots(), Weight{1, 0}, 0) == std::pair{1, 1});
    bool found = false;
    for (const auto& r : dg.relations) found |= r.element == UElement::generator(g2->f(0), 0, 2);
    CHECK(found);
}

TEST_CASE("vik and truncated presentations") {
    auto g = chevalley_constants("A1");
    Presentation p = vik_presentation(*g, 1, 1);
    REQUIRE(p.relations.size() == 2);
    CHECK(p.relations[0].element == UElement::generator(g->f(0), 0, 3));
    CHECK(p.relations[1].element == UElement::generator(g->f(0), 1));
    for (int k = 1; k <= 3; ++k) {
        CHECK(vik_presentation(*g, k, k).relations.back().element == UElement::generator(g->f(0), k));
        CHECK(vik_presentation(*g, 0, k).relations.back().element == UElement::generator(g->f(0), 2 * k));
    }
    CHECK_THROWS_AS(vik_presentation(*g, 3, 2), std::invalid_argument);
    Presentation t = truncated_presentation(*g, 2, 3);
    CHECK(t.relations.back().element == UElement::generator(g->f(0), 3));
    auto a2 = chevalley_constants("A2");
    // alpha with (theta|alpha) = 1 get two relations each, theta two more
    CHECK(vik_presentation(*a2, 0, 2).relations.size() == 6);
}

TEST_CASE("cv relation sets") {
    auto g = chevalley_constants("A2");
    const auto& rs = g->roots();
    for (int k = 1; k <= 2; ++k) {
        Weight lam = rs.multiple_of_theta(k);
        CHECK(cv_relations(*g, unit_tuple(rs, lam)).relations.size() == weyl_presentation(*g, lam).relations.size());
        Presentation b = cv_relations(*g, braces_tuple(rs, lam));
        Presentation w = weyl_presentation(*g, lam);
        for (int a = 0; a < rs.num_positive(); ++a) {
            UElement x11 = garland_element(*g, a, 1, 1);
            bool present = false, implied = false;
            for (const auto& r : b.relations) present |= r.element == x11;
            for (const auto& r : w.relations)
                implied |= r.element == x11 || r.element == UElement::generator(g->f(a), 0, 1);
            CHECK((present || implied));
        }
    }

    // A1, xi_theta = (2,1,1): brute-force the inequality
    auto a1 = chevalley_constants("A1");
    PartitionTuple xi{a1->roots().multiple_of_theta(2), {{2, 1, 1}}};
    CHECK(xi.validate(a1->roots()).empty());
    int best = 100;
    const std::vector<int> parts{2, 1, 1};
    for (int kk = 1; kk <= 6; ++kk) {
        int tail = 0;
        for (int j = kk; j < 3; ++j) tail += parts[j];
        for (int s = 1; s < 20; ++s)
            if (s + 1 >= 1 + kk + tail) best = std::min(best, s);
    }
    auto triples = cv_minimal_triples(xi);
    REQUIRE_FALSE(triples.empty());
    int got = 100;
    for (const auto& t : triples) {
        CHECK(t.r == 1);
        got = std::min(got, t.s);
    }
    CHECK(got == best);
    Presentation p = cv_relations(*a1, xi);
    CHECK(p.relations.back().element == UElement::generator(a1->f(0), best));

    CHECK_THROWS_AS(cv_relations(*a1, PartitionTuple{Weight{4}, {{1, 2, 1}}}), std::invalid_argument);
    CHECK_THROWS_AS(cv_relations(*a1, PartitionTuple{Weight{4}, {{2, 1}}}), std::invalid_argument);
}

TEST_CASE("special tuples") {
    auto g = chevalley_constants("A2");
    const auto& rs = g->roots();
    const int th = rs.highest_root;
    for (int k = 1; k <= 3; ++k) {
        CHECK(xi_tuple(rs, "mid", 0, k).parts[th] == std::vector<int>(2 * k + 2, 1));
        CHECK(xi_tuple(rs, "plus", k, k).parts[th] == std::vector<int>(k + 1, 2));
        for (int i = 0; i <= k; ++i)
            for (const char* kind : {"minus", "mid", "plus"}) CHECK(xi_tuple(rs, kind, i, k).validate(rs).empty());
    }
    CHECK(xi_tuple(rs, "minus", 1, 2).parts[0] == std::vector<int>{1, 1});
    CHECK_THROWS_AS(xi_tuple(rs, "mid", 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(xi_tuple(chevalley_constants("B2")->roots(), "mid", 0, 1), std::domain_error);
    CHECK(braces_tuple(rs, rs.multiple_of_theta(1)).parts[th] == std::vector<int>{2});
}

TEST_CASE("check presentation") {
    for (const char* label : {"A1", "A2", "B2", "G2"}) {
        auto g = chevalley_constants(label);
        CurrentModule d = demazure_one_theta(g);
        CHECK(d.dim() == g->dim() + 1);
        auto rep = check_presentation(d, demazure_presentation(*g, g->roots().multiple_of_theta(1)));
        INFO(rep.str());
        CHECK(rep.pass());
        auto ev = check_presentation(ev0(adjoint_module(g)), weyl_presentation(*g, g->roots().multiple_of_theta(1)));
        CHECK(ev.pass());
        // D(1,theta) is not killed by x-_theta (x) t
        CHECK_FALSE(check_presentation(d, vik_presentation(*g, 1, 1)).pass());
    }
    auto g = chevalley_constants("A1");
    ModelView e = build_model(g, "Ev:k=2");
    CHECK(check_presentation(e, vik_presentation(*g, 2, 2)).pass());
    ModelView v = build_model(g, "Vik:i=1,k=2");
    CHECK(v.dim() == 12);
    CHECK(check_presentation(v, vik_presentation(*g, 1, 2)).pass());
    CHECK_FALSE(check_presentation(v, vik_presentation(*g, 2, 2)).pass());
}

TEST_CASE("membership") {
    auto g = chevalley_constants("A1");
    ModelView d = build_model(g, "D1:k=2");
    const SparseVector& w = d.generator;
    const int f = g->f(0);
    CHECK(membership_check(d, SparseVector{}, w));
    CHECK(membership_check(d, w, w));
    SparseVector t4 = d.ambient.apply(f, 4, w);
    SparseVector prod = d.ambient.apply(f, 2, d.ambient.apply(f, 3, w));
    CHECK(membership_check(d, prod, t4));
    // f(x)t is not in the submodule generated by the top vector
    CHECK_FALSE(membership_check(d, d.ambient.apply(f, 1, w), t4));
}

TEST_CASE("model factory") {
    auto g = chevalley_constants("A1");
    CHECK(build_model(g, "D1:k=2").dim() == 16);
    CHECK(build_model(g, "Trunc:k=2,n=3").dim() == 12);
    CHECK(build_model(g, "Fusion:m=1,n=1").dim() == 12);
    for (int k = 1; k <= 3; ++k) {
        const std::string kk = std::to_string(k);
        CHECK(build_model(g, "Vik:i=" + kk + ",k=" + kk).character() == build_model(g, "Ev:k=" + kk).character());
    }
    CHECK(ModelSpec::parse("Vik:k=2,i=1").str() == "Vik:i=1,k=2");
    CHECK_THROWS_AS(ModelSpec::parse("Vik:i=1"), std::invalid_argument);
    CHECK_THROWS_AS(ModelSpec::parse("Foo:k=1"), std::invalid_argument);
    CHECK_THROWS_AS(ModelSpec::parse("D1:k=x"), std::invalid_argument);
    CHECK_THROWS_AS(ModelSpec::parse("D1:k=1,j=2"), std::invalid_argument);
    auto b2 = chevalley_constants("B2");
    CHECK_THROWS_AS(build_model(b2, "Weyl:k=1"), std::domain_error);
    CHECK_THROWS_AS(build_model(b2, "Trunc:k=1,n=1"), std::domain_error);
    CHECK(build_model(b2, "D1:k=1").dim() == 11);
}
