#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "curalg/cache.hpp"
#include "curalg/models.hpp"
#include "curalg/serialize.hpp"

using namespace curalg;
namespace fs = std::filesystem;

TEST_CASE("character arithmetic") {
    GradedCharacter a, b;
    a.add(0, {2});
    a.add(0, {0});
    a.add(1, {0}, 2);
    b.add(1, {0});
    CHECK(a.total() == 4);
    CHECK((a + b).at(1, {0}) == 3);
    CHECK((a - b).at(1, {0}) == 1);
    CHECK((a - b) + b == a);
    CHECK_THROWS_AS(b - a, std::logic_error);
    CHECK(a.shifted(3).at(4, {0}) == 2);
    CHECK(a.shifted(3).shifted(-3) == a);
    CHECK(a.grade_dims() == std::map<int, long long>{{0, 2}, {1, 2}});
    CHECK(a.at_q1() == std::map<Weight, long long>{{{0}, 3}, {{2}, 1}});
    CHECK(a.min_grade() == 0);
    CHECK(a.max_grade() == 1);
    // (a - b) + b = a;  q-shift distributes over sums
    CHECK((a + b).shifted(2) == a.shifted(2) + b.shifted(2));
    CHECK(GradedCharacter{}.total() == 0);
}

TEST_CASE("module JSON round trip") {
    auto g = chevalley_constants("A1");
    for (const char* s : {"D1:k=1", "Fusion:m=1,n=1", "Vik:i=1,k=2"}) {
        const CurrentModule m = build_model(g, s).materialize();
        const Json j = module_json(m);
        const CurrentModule back = module_from_json(Json::parse(j.dump()));
        CHECK(back.dim() == m.dim());
        CHECK(graded_character(back) == graded_character(m));
        CHECK(module_json(back).dump() == j.dump());
        CHECK(bracket_scan(back).empty());
    }
    Json j = module_json(build_model(g, "D1:k=1").materialize());
    j["schema_version"] = kSchemaVersion + 1;
    CHECK_THROWS_AS(module_from_json(j), std::invalid_argument);
    CHECK_THROWS_AS(module_from_json(Json::parse("{\"schema_version\": 1}")), std::invalid_argument);
}

TEST_CASE("on-disk cache") {
    const fs::path dir = fs::temp_directory_path() / "curalg-test-cache";
    fs::remove_all(dir);
    const ModuleCache cache(dir);
    auto g = chevalley_constants("A1");
    const CurrentModule m = build_model(g, "Ev:k=2").materialize();

    CHECK_FALSE(cache.load("A1", "Ev:k=2"));
    cache.store("A1", "Ev:k=2", m);
    auto hit = cache.load("A1", "Ev:k=2");
    REQUIRE(hit);
    CHECK(graded_character(*hit) == graded_character(m));
    CHECK_FALSE(cache.load("A2", "Ev:k=2"));
    int files = 0;
    for (const auto& e : fs::directory_iterator(dir)) {
        ++files;
        CHECK(e.path().extension() == ".json");
    }
    CHECK(files == 1);

    // stale schema and garbage are both misses
    const fs::path p = cache.path_for("A1", "Ev:k=2");
    Json j = Json::parse(std::ifstream(p));
    j["schema_version"] = 0;
    std::ofstream(p) << j.dump();
    CHECK_FALSE(cache.load("A1", "Ev:k=2"));
    std::ofstream(p) << "{not json";
    CHECK_FALSE(cache.load("A1", "Ev:k=2"));

    const ModuleCache off{fs::path()};
    CHECK_FALSE(off.enabled());
    off.store("A1", "Ev:k=2", m);
    CHECK_FALSE(off.load("A1", "Ev:k=2"));
    fs::remove_all(dir);
}
