#include "doctest.h"

#include "curalg/suites.hpp"

using namespace curalg;

namespace {

SuiteOptions opts(const std::string& algebra, std::optional<int> k_max = {}) {
    SuiteOptions o;
    o.algebra = algebra;
    o.k_max = k_max;
    return o;
}

Json without_time(const SuiteReport& r) {
    Json j = suite_json(r);
    j.erase("wall_seconds");
    return j;
}

}  // namespace

TEST_CASE("ses suite on A1") {
    const SuiteReport r = run_suite("ses", opts("A1", 1));
    CHECK(r.pass());
    CHECK(r.cases.size() == 8);
    // 16 = 4 + 12 and 12 = 3 + 9
    CHECK(r.cases[0].lhs->total() == 16);
    CHECK(r.cases[4].lhs->total() == 12);
    CHECK(r.cases[5].rhs->total() == 3);
}

TEST_CASE("suite errors") {
    CHECK_THROWS_AS(run_suite("nope", opts("A1")), std::invalid_argument);
    CHECK_THROWS_AS(run_suite("ses", opts("XX")), std::invalid_argument);
    CHECK_THROWS_AS(run_suite("cv", opts("B2")), std::domain_error);
    CHECK_THROWS_AS(run_suite("truncated", opts("G2")), std::domain_error);
    CHECK_THROWS_AS(run_suite("ses", opts("A1", 0)), std::invalid_argument);
    SuiteOptions one = opts("A1");
    one.trials = 1;
    CHECK_THROWS_AS(run_suite("params", one), std::invalid_argument);
}

TEST_CASE("reports are reproducible") {
    SuiteOptions o = opts("A1");
    o.m = 1;
    o.n = 1;
    o.seed = 7;
    const SuiteReport a = run_suite("params", o), b = run_suite("params", o);
    CHECK(a.pass());
    CHECK(without_time(a).dump() == without_time(b).dump());
    o.seed = 8;
    CHECK(without_time(run_suite("params", o)).dump() != without_time(a).dump());

    const Json j = suite_json(a);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"suite", "algebra", "params", "seed", "pass", "wall_seconds", "cases"});
    CHECK(suite_markdown(a).find("PASS") != std::string::npos);
}

TEST_CASE("B2 and G2 small suites") {
    for (const char* t : {"B2", "G2"}) {
        CHECK(run_suite("jacobi", opts(t)).pass());
        CHECK(run_suite("demazure", opts(t)).pass());
        CHECK(run_suite("garland", opts(t, 1)).pass());
    }
    CHECK(run_suite("ses", opts("B2", 1)).pass());
    CHECK(run_suite("lemmas", opts("B2", 1)).pass());
}
