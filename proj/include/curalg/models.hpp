#pragma once

#include <map>
#include <string>
#include <vector>

#include "curalg/fusion.hpp"
#include "curalg/presentations.hpp"

namespace curalg {

/// "D1:k=2", "Vik:i=1,k=2", "Fusion:m=2,n=1", "Ev:k=3", "Trunc:k=2,n=3", "Weyl:k=2".
struct ModelSpec {
    std::string kind;
    std::map<std::string, int> params;

    static ModelSpec parse(const std::string& text);
    int get(const std::string& key) const;
    std::string str() const;
};

/// Builds the module for a spec, memoized per (algebra, spec); safe to call
/// from several threads. Weyl and Trunc need a simply-laced algebra
/// (std::domain_error otherwise).
ModelView build_model(const AlgebraPtr& g, const ModelSpec& spec);
inline ModelView build_model(const AlgebraPtr& g, const std::string& spec) {
    return build_model(g, ModelSpec::parse(spec));
}

/// D(1,theta)^{*m} * ev0 V(theta)^{*n} with explicit parameters (m + n of them).
CurrentModule fusion_model(const AlgebraPtr& g, int m, int n, const std::vector<Rational>& z);

/// D(1, k theta) / <(x-_theta (x) t^s) w>, as a view.
ModelView theta_quotient(const AlgebraPtr& g, int k, int s);

/// The presentation a spec is expected to satisfy.
Presentation expected_presentation(const ChevalleyAlgebra& g, const ModelSpec& spec);

/// "weyl:k=2", "demazure:k=1", "vik:i=1,k=2", "trunc:k=2,n=3",
/// "cv:xi=braces,k=1" (also xi=unit) and "cv:xi=minus,i=0,k=1" (also mid, plus).
/// Throws std::invalid_argument for malformed text.
Presentation parse_presentation(const ChevalleyAlgebra& g, const std::string& text);

void clear_model_cache();

}  // namespace curalg
