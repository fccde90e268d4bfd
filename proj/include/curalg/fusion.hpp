#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "curalg/current_module.hpp"

namespace curalg {

/// F^0 <= F^1 <= ... of a cyclic module, F^r = sum_{s<=r} U(g[t])[s] v.
/// Stored as one echelon basis whose rows are tagged by the layer r in which
/// they first appear.
struct Filtration {
    CurrentModule ambient;
    SparseVector generator;
    std::shared_ptr<BlockedSubspace> space;
    /// layer_dims[r] = dim F^r
    std::vector<int> layer_dims;
    int top_index() const { return static_cast<int>(layer_dims.size()) - 1; }
};

/// Uses F^r = F^{r-1} + U(g)(x+_theta (x) t) C_{r-1}, where C_{r-1} spans a
/// complement of F^{r-2} in F^{r-1}. Throws std::invalid_argument if the
/// generator does not generate.
Filtration filtration(const CurrentModule& ambient);
Filtration filtration(const CurrentModule& ambient, const SparseVector& generator);

/// gr V with basis the rows of the filtration; grade = layer.
CurrentModule associated_graded(const Filtration& f);

/// Checks that x(x)t^s and x(x)(t-a_1)...(t-a_s) induce the same map
/// F^r/F^{r-1} -> F^{r+s}/F^{r+s-1} for all r. Empty string on success.
std::string induced_map_check(const Filtration& f, int x, const std::vector<Rational>& a);

struct FusionFactor {
    CurrentModule module;
    Rational z;
};

/// gr of the tensor product of the shifted factors; parameters must be distinct.
CurrentModule fusion_product(const std::vector<FusionFactor>& factors);
/// Same with the default parameters 0, 1, 2, ...
CurrentModule fusion_product(const std::vector<CurrentModule>& factors);

/// g (+) C c: grade 0 adjoint, grade 1 spanned by c, (y(x)t) x = (y|x) c.
CurrentModule demazure_one_theta(AlgebraPtr g);

}  // namespace curalg
