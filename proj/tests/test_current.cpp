#include "doctest.h"

#include "curalg/current_module.hpp"
#include "curalg/fusion.hpp"

using namespace curalg;

TEST_CASE("adjoint and tensor modules") {
    auto g = chevalley_constants("A2");
    auto ad = adjoint_module(g);
    CHECK(ad.dim() == 8);
    int zero = 0;
    for (auto& w : ad.weights) zero += is_zero_weight(w);
    CHECK(zero == 2);
    CHECK(weight_scan(ad).empty());
    CHECK(bracket_scan(ad).empty());
    auto a1 = adjoint_module(chevalley_constants("A1"));
    auto t = tensor(a1, a1);
    CHECK(t.dim() == 9);
    CHECK(bracket_scan(t).empty());
    CHECK(cyclic_span(t, *t.highest_vector).dim() == 5);
    CHECK(cyclic_span(t, SparseVector{}).dim() == 0);
    CHECK(adjoint_module(chevalley_constants("B2")).dim() == 10);
}

TEST_CASE("ev0 and grade shift") {
    auto g = chevalley_constants("A1");
    auto m = ev0(adjoint_module(g));
    CHECK(m.dim() == 3);
    CHECK(m.action(g->f(0), 1).is_zero());
    auto sh = grade_shift(grade_shift(m, 3), -3);
    CHECK(graded_character(sh) == graded_character(m));
    CHECK(graded_character(grade_shift(m, 2)) == graded_character(m).shifted(2));
}

TEST_CASE("D(1,theta) model") {
    for (std::string t : {"A1", "A2", "B2", "G2"}) {
        auto g = chevalley_constants(t);
        auto d = demazure_one_theta(g);
        CHECK(d.dim() == g->dim() + 1);
        CHECK_MESSAGE(grading_scan(d).empty(), t);
        CHECK_MESSAGE(weight_scan(d).empty(), t);
        CHECK_MESSAGE(bracket_scan(d).empty(), t);
        CHECK(is_cyclic(d));
    }
    auto g = chevalley_constants("A1");
    auto d = demazure_one_theta(g);
    auto sub = submodule_generated(d, d.apply(g->f(0), 1, *d.generator()));
    CHECK(sub.dim() == 1);
    auto q = quotient(sub);
    CHECK(q.dim() == 3);
    CHECK(graded_character(q) == graded_character(ev0(adjoint_module(g))));
    CHECK(quotient_character(sub) == graded_character(q));
}

TEST_CASE("eval shift") {
    auto g = chevalley_constants("A1");
    auto d = demazure_one_theta(g);
    auto z = eval_shift(d, 1);
    CHECK(bracket_scan(z, 3).empty());
    auto e = eval_shift(ev0(adjoint_module(g)), 3);
    CHECK(e.action(g->e(0), 2) == e.action(g->e(0), 0).scaled(9));
}

TEST_CASE("fusion products over A1") {
    auto g = chevalley_constants("A1");
    auto ev = ev0(adjoint_module(g));
    auto d = demazure_one_theta(g);
    auto f = fusion_product(std::vector<CurrentModule>{ev, ev});
    CHECK(f.dim() == 9);
    auto dd = fusion_product(std::vector<CurrentModule>{d, d});
    CHECK(dd.dim() == 16);
    CHECK(grading_scan(dd).empty());
    CHECK(weight_scan(dd).empty());
    CHECK(bracket_scan(dd).empty());
    CHECK(is_cyclic(dd));
    MESSAGE(graded_character(dd).str());
    auto single = fusion_product(std::vector<CurrentModule>{d});
    CHECK(graded_character(single) == graded_character(d));
}
