#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "curalg/current_module.hpp"
#include "curalg/uea.hpp"

namespace curalg {

/// One partition per positive root (indexed like RootSystem::positive_roots).
struct PartitionTuple {
    Weight lambda;
    std::vector<std::vector<int>> parts;

    /// Empty string when every partition is weakly decreasing, nonnegative and
    /// of size <lambda, alpha^vee>.
    std::string validate(const RootSystem& rs) const;
    std::string str(const RootSystem& rs) const;
};

/// ({<lambda, alpha^vee>})_alpha: one part each.
PartitionTuple braces_tuple(const RootSystem& rs, const Weight& lambda);
/// (1^{<lambda, alpha^vee>})_alpha.
PartitionTuple unit_tuple(const RootSystem& rs, const Weight& lambda);
/// kind is "minus", "mid" or "plus"; theta-part (2^i, 1^{2(k-i)}),
/// (2^i, 1^{2(k+1-i)}) and (2^{i+1}, 1^{2(k-i)}), unit parts elsewhere.
/// Simply-laced only (std::domain_error otherwise).
PartitionTuple xi_tuple(const RootSystem& rs, const std::string& kind, int i, int k);

struct Relation {
    std::string name;
    UElement element;
    /// Consequence of the defining relations, kept as a cross-check.
    bool derived = false;
};

/// Cyclic module on w with n+[t] w = 0, (h (x) t^s) w = <lambda, h> delta_{s,0} w
/// and the listed relations.
struct Presentation {
    std::string kind;
    Weight lambda;
    std::vector<Relation> relations;
    bool highest_weight = true;
};

Presentation weyl_presentation(const ChevalleyAlgebra& g, const Weight& lambda);
/// (s_alpha, m_alpha) with <lambda, alpha^vee> = (s-1) d_alpha + m, 0 < m <= d_alpha.
std::pair<int, int> demazure_sm(const RootSystem& rs, const Weight& lambda, int alpha);
Presentation demazure_presentation(const ChevalleyAlgebra& g, const Weight& lambda);
Presentation vik_presentation(const ChevalleyAlgebra& g, int i, int k);
Presentation truncated_presentation(const ChevalleyAlgebra& g, int k, int n);

struct CvTriple {
    int alpha;
    int r;
    int k;
    int s;
};
/// Minimal s for each (alpha, r, k) with 1 <= r < xi(alpha)_1, 1 <= k <= len.
std::vector<CvTriple> cv_minimal_triples(const PartitionTuple& xi);
/// Weyl relations plus x^-_alpha(r, s) for the minimal triples (deduplicated).
Presentation cv_relations(const ChevalleyAlgebra& g, const PartitionTuple& xi);

/// A module with a generator, possibly viewed modulo a submodule.
struct ModelView {
    CurrentModule ambient;
    std::optional<Submodule> killed;
    SparseVector generator;

    int dim() const;
    bool is_zero(const SparseVector& v) const;
    GradedCharacter character() const;
    /// The quotient as a module of its own (or the ambient when nothing is killed).
    CurrentModule materialize() const;
    const ChevalleyAlgebra& algebra() const { return ambient.algebra(); }
};
ModelView view_of(const CurrentModule& m);

struct RelationCheck {
    std::string name;
    bool derived = false;
    bool pass = false;
};

struct PresentationReport {
    std::string kind;
    bool highest_weight_ok = true;
    std::string highest_weight_failure;
    std::vector<RelationCheck> relations;
    bool cyclic = false;
    bool pass() const;
    std::string str() const;
};

PresentationReport check_presentation(const ModelView& model, const Presentation& p);
inline PresentationReport check_presentation(const CurrentModule& m, const Presentation& p) {
    return check_presentation(view_of(m), p);
}

/// v in U(g[t]) seed (modulo the killed part of the view).
bool membership_check(const ModelView& model, const SparseVector& v, const SparseVector& seed);

/// Draws random (alpha, r, k, s) satisfying the defining inequality with
/// r in [1, max part + 1] and s up to two above the minimum, and returns the
/// ones whose element does not annihilate the generator (empty = pass).
std::vector<CvTriple> cv_sample_check(const ModelView& model, const PartitionTuple& xi,
                                      std::mt19937_64& rng, int samples);

}  // namespace curalg
