#include "doctest.h"

#include "curalg/lie.hpp"

using namespace curalg;

TEST_CASE("positive root counts") {
    std::vector<std::pair<std::string, int>> cases = {
        {"A1", 1}, {"A2", 3}, {"A3", 6}, {"B2", 4}, {"G2", 6}, {"B3", 9},
        {"C3", 9}, {"D4", 12}, {"F4", 24}, {"E6", 36}};
    for (auto& [t, n] : cases) {
        auto rs = build_root_system(t);
        CHECK_MESSAGE(rs.num_positive() == n, t);
        CHECK_MESSAGE(root_system_scan(rs).empty(), t);
    }
}

TEST_CASE("short root lengths") {
    auto b2 = build_root_system("B2");
    int shorts = 0;
    for (int d : b2.d_alpha) shorts += d == 2;
    CHECK(shorts == 2);
    auto g2 = build_root_system("G2");
    int threes = 0;
    for (int d : g2.d_alpha) threes += d == 3;
    CHECK(threes == 3);
    CHECK(g2.d_alpha[g2.highest_root] == 1);
    CHECK(!g2.simply_laced());
    CHECK(build_root_system("A3").simply_laced());
}

TEST_CASE("unknown types are rejected") {
    CHECK_THROWS_AS(build_root_system("XX"), std::invalid_argument);
    CHECK_THROWS_AS(build_root_system("E9"), std::invalid_argument);
    CHECK_THROWS_AS(build_root_system("A0"), std::invalid_argument);
}

TEST_CASE("root names round trip") {
    auto rs = build_root_system("G2");
    for (const auto& r : rs.positive_roots) CHECK(rs.parse_root(rs.root_name(r)) == r);
    CHECK(rs.parse_root("theta") == rs.theta());
    CHECK(rs.root_name(rs.theta()) == "3a1+2a2");
}

TEST_CASE("Chevalley basis scans") {
    for (std::string t : {"A1", "A2", "A3", "B2", "G2", "C3", "B3"}) {
        auto g = chevalley_constants(t);
        CHECK_MESSAGE(g->dim() == 2 * g->num_positive() + g->rank(), t);
        CHECK_MESSAGE(jacobi_scan(*g) == "", t);
        CHECK_MESSAGE(antisymmetry_scan(*g) == "", t);
        CHECK_MESSAGE(cartan_recovery_scan(*g) == "", t);
        CHECK_MESSAGE(integrality_scan(*g) == "", t);
    }
    CHECK(chevalley_constants("G2")->dim() == 14);
    CHECK(chevalley_constants("A2")->dim() == 8);
}

TEST_CASE("A2 constants and magnitudes") {
    auto g = chevalley_constants("A2");
    const auto& rs = g->roots();
    Weight a1{1, 0}, a2{0, 1};
    int n = g->structure_constant(a1, a2);
    CHECK((n == 1 || n == -1));
    // |N_{r,s}| = p+1
    for (const auto& r : rs.positive_roots)
        for (const auto& s : rs.positive_roots) {
            if (!rs.is_root(r + s)) continue;
            int p = 0;
            for (Weight w = s - r; rs.is_root(w); w = w - r) ++p;
            CHECK(std::abs(g->structure_constant(r, s)) == p + 1);
        }
}

TEST_CASE("G2 structure constant magnitudes") {
    auto g = chevalley_constants("G2");
    const auto& rs = g->roots();
    std::vector<Weight> all;
    for (const auto& r : rs.positive_roots) {
        all.push_back(r);
        all.push_back(-r);
    }
    for (const auto& r : all)
        for (const auto& s : all) {
            Weight t = r + s;
            if (is_zero_weight(t) || !rs.is_root(t)) continue;
            int p = 0;
            for (Weight w = s - r; rs.is_root(w); w = w - r) ++p;
            CHECK(std::abs(g->structure_constant(r, s)) == p + 1);
        }
}

TEST_CASE("invariant form") {
    for (std::string t : {"A2", "B2", "G2"}) {
        auto g = chevalley_constants(t);
        const int D = g->dim();
        for (int a = 0; a < D; ++a)
            for (int b = 0; b < D; ++b)
                for (int c = 0; c < D; ++c) {
                    // ([a,b]|c) = (a|[b,c])
                    Rational lhs = 0, rhs = 0;
                    for (auto& [i, x] : g->bracket(a, b).entries()) lhs += x * g->form(i, c);
                    for (auto& [i, x] : g->bracket(b, c).entries()) rhs += x * g->form(a, i);
                    CHECK(lhs == rhs);
                }
        CHECK(g->form(g->e(g->theta_index()), g->f(g->theta_index())) == 1);
    }
}

TEST_CASE("pairings") {
    auto rs = build_root_system("A2");
    Weight th = rs.multiple_of_theta(1);
    CHECK(th == Weight{1, 1});
    std::vector<int> p;
    for (auto& r : rs.positive_roots) p.push_back(rs.pairing(th, r) + 1);
    std::sort(p.begin(), p.end());
    CHECK(p == std::vector<int>{2, 2, 3});
    auto b2 = build_root_system("B2");
    auto c = b2.to_root_coordinates(b2.multiple_of_theta(1));
    CHECK(c[0] == b2.theta()[0]);
    CHECK(c[1] == b2.theta()[1]);
}
