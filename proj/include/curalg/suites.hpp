#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curalg/current_module.hpp"
#include "curalg/serialize.hpp"

namespace curalg {

struct CaseResult {
    std::string name;
    bool pass = false;
    std::string detail;
    /// The compared characters, for character-equality cases.
    std::optional<GradedCharacter> lhs, rhs;
};

struct SuiteReport {
    std::string suite;
    std::string algebra;
    std::map<std::string, int> params;
    std::optional<std::uint64_t> seed;
    std::vector<CaseResult> cases;
    double wall_seconds = 0;
    bool pass() const;
};

/// Unset values fall back to the desk-scale defaults of the algebra.
struct SuiteOptions {
    std::string algebra = "A1";
    std::optional<int> k_max;
    std::optional<int> mn_max;
    int trials = 3;
    std::uint64_t seed = 20240601;
    /// Fusion(m, n) for the parameter-independence suite.
    std::optional<int> m, n;
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for unknown suites, algebras or bad parameters,
/// std::domain_error when the suite does not apply to the algebra.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);

struct Criterion {
    int number;
    std::string title;
    std::vector<SuiteReport> suites;
    bool pass() const;
};

inline constexpr int kCriteria = 11;
Criterion run_criterion(int number);
std::vector<Criterion> run_acceptance();

Json suite_json(const SuiteReport& r);
std::string suite_markdown(const SuiteReport& r);
Json criteria_json(const std::vector<Criterion>& cs);
std::string criteria_markdown(const std::vector<Criterion>& cs);

}  // namespace curalg
