#pragma once

#include <string>
#include <vector>

#include "curalg/current_module.hpp"
#include "curalg/presentations.hpp"

namespace curalg {

struct SolveConfig {
    /// Largest grade examined.
    int grade_cutoff = 12;
    /// Largest t-power used in spanning monomials.
    int t_cutoff = 12;
    /// Consecutive zero grades needed to declare completion.
    int stabilization_window = 2;
};

struct PresolveCertificate {
    bool certified = false;
    bool stabilized = false;
    int last_nonzero_grade = -1;
    int grades_examined = 0;
    /// Some spanning monomial needed a t-power above t_cutoff.
    bool t_truncated = false;
    /// Weights outside the saturated set of lambda vanished where examined.
    bool weights_saturated = true;
    std::vector<long long> grade_dims;
    SolveConfig config;
    std::string note;
};

struct PresolveResult {
    CurrentModule module;
    PresolveCertificate certificate;
};

/// Builds U(g[t]) w / (relations) grade by grade inside U(n-[t]) w.
///
/// Grade d of the relation submodule is U(n-[t]) U(b[t]) R w in grade d (PBW
/// order), computed exactly; stabilization is certified because the module is
/// generated by g (x) 1 and g (x) t, so one zero grade forces all higher ones to
/// vanish. Presentations must include the Weyl relations.
PresolveResult module_from_presentation(const AlgebraPtr& g, const Presentation& p, const SolveConfig& config = {});

}  // namespace curalg
