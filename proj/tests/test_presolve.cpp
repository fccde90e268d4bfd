#include "doctest.h"

#include <algorithm>

#include "curalg/models.hpp"
#include "curalg/presolve.hpp"

using namespace curalg;

namespace {

PresolveResult solve(const AlgebraPtr& g, const Presentation& p, int cutoff = 12) {
    SolveConfig c;
    c.grade_cutoff = cutoff;
    c.t_cutoff = cutoff;
    return module_from_presentation(g, p, c);
}

}  // namespace

TEST_CASE("presolve reproduces small A1 modules") {
    auto g = chevalley_constants("A1");
    const auto& rs = g->roots();

    auto w1 = solve(g, weyl_presentation(*g, rs.multiple_of_theta(1)));
    CHECK(w1.certificate.certified);
    CHECK(w1.module.dim() == 4);
    CHECK(w1.certificate.last_nonzero_grade == 1);
    CHECK(graded_character(w1.module) == build_model(g, "D1:k=1").character());
    CHECK(is_cyclic(w1.module));
    CHECK(bracket_scan(w1.module).empty());

    auto w2 = solve(g, weyl_presentation(*g, rs.multiple_of_theta(2)));
    CHECK(w2.certificate.certified);
    CHECK(w2.module.dim() == 16);
    CHECK(graded_character(w2.module) == build_model(g, "D1:k=2").character());

    // ev0 V(theta): the braces tuple kills x-(theta) (x) t
    auto ev = solve(g, cv_relations(*g, braces_tuple(rs, rs.multiple_of_theta(1))));
    CHECK(ev.module.dim() == 3);
    CHECK(ev.certificate.grade_dims == std::vector<long long>{3, 0, 0});

    for (auto [i, k, dim] : {std::tuple{0, 1, 4}, {1, 1, 3}, {0, 2, 16}, {1, 2, 12}, {2, 2, 9}}) {
        auto r = solve(g, vik_presentation(*g, i, k));
        CHECK(r.certificate.certified);
        CHECK(r.module.dim() == dim);
        CHECK(check_presentation(r.module, vik_presentation(*g, i, k)).pass());
    }
}

TEST_CASE("presolve on A2") {
    auto g = chevalley_constants("A2");
    const auto& rs = g->roots();
    auto w = solve(g, weyl_presentation(*g, rs.multiple_of_theta(1)));
    CHECK(w.certificate.certified);
    CHECK(w.module.dim() == 9);
    auto ev = solve(g, cv_relations(*g, braces_tuple(rs, rs.multiple_of_theta(1))));
    CHECK(ev.module.dim() == 8);
}

TEST_CASE("presolve is independent of relation order") {
    auto g = chevalley_constants("A1");
    Presentation p = vik_presentation(*g, 1, 2);
    auto a = solve(g, p);
    std::reverse(p.relations.begin(), p.relations.end());
    auto b = solve(g, p);
    CHECK(a.certificate.grade_dims == b.certificate.grade_dims);
    CHECK(graded_character(a.module) == graded_character(b.module));
}

TEST_CASE("degenerate presentations") {
    auto g = chevalley_constants("A1");
    const auto& rs = g->roots();
    // lambda = 0: the trivial module
    auto triv = solve(g, weyl_presentation(*g, rs.multiple_of_theta(0)));
    CHECK(triv.module.dim() == 1);
    CHECK(triv.certificate.certified);

    // a relation killing w
    Presentation p = weyl_presentation(*g, rs.multiple_of_theta(1));
    p.relations.push_back({"w", UElement::one(), false});
    auto zero = solve(g, p);
    CHECK(zero.module.dim() == 0);

    CHECK_THROWS_AS(solve(g, weyl_presentation(*g, Weight{-1})), std::invalid_argument);
    SolveConfig bad;
    bad.stabilization_window = 0;
    CHECK_THROWS_AS(module_from_presentation(g, weyl_presentation(*g, rs.multiple_of_theta(1)), bad),
                    std::invalid_argument);

    // too small a cutoff cannot certify
    auto early = solve(g, weyl_presentation(*g, rs.multiple_of_theta(2)), 2);
    CHECK_FALSE(early.certificate.certified);
    CHECK_FALSE(early.certificate.note.empty());
}

TEST_CASE("presentation specs") {
    auto g = chevalley_constants("A1");
    CHECK(parse_presentation(*g, "weyl:k=2").lambda == Weight{4});
    CHECK(parse_presentation(*g, "vik:i=1,k=2").relations.size() == vik_presentation(*g, 1, 2).relations.size());
    CHECK(parse_presentation(*g, "cv:xi=mid,i=0,k=1").lambda == Weight{4});
    CHECK(parse_presentation(*g, "cv:xi=braces,k=1").lambda == Weight{2});
    for (const char* bad : {"weyl", "weyl:k=x", "weyl:k=1,n=2", "cv:xi=odd,k=1", "vik:i=3,k=1", "nope:k=1", "weyl:k"})
        CHECK_THROWS_AS(parse_presentation(*g, bad), std::invalid_argument);
}
