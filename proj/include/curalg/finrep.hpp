#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curalg/lie.hpp"
#include "curalg/linalg.hpp"

namespace curalg {

/// Finite-dimensional g-module on a weight basis.
struct GModule {
    AlgebraPtr algebra;
    std::vector<std::string> labels;
    std::vector<Weight> weights;
    /// One matrix per Chevalley basis element.
    std::vector<SparseMatrix> action;
    std::optional<SparseVector> highest_vector;

    int dim() const { return static_cast<int>(labels.size()); }
    std::shared_ptr<const BlockLayout> weight_layout() const;
};

GModule adjoint_module(AlgebraPtr g);
/// Coproduct a -> a(x)1 + 1(x)a. Throws std::invalid_argument on algebra mismatch.
GModule tensor(const GModule& a, const GModule& b);
/// Smallest g-stable subspace containing v, with the induced action.
GModule cyclic_span(const GModule& m, const SparseVector& v);
/// V(k theta) inside the k-fold tensor power of the adjoint module.
GModule irreducible_ktheta(AlgebraPtr g, int k);

/// Empty string when the scan passes.
std::string weight_scan(const GModule& m);
std::string bracket_scan(const GModule& m);
/// The highest-weight relations of V(lambda) on m.highest_vector.
std::string highest_weight_relations_scan(const GModule& m, const Weight& lambda);

/// Matrices of e_i, f_i on m, i.e. a generating set for the g-action.
std::vector<const SparseMatrix*> simple_operators(const GModule& m);

/// Matrix of op restricted to the subspace, in the basis of its rows.
/// Throws std::invalid_argument when the subspace is not op-stable.
SparseMatrix restrict_to(const BlockedSubspace& sub, const SparseMatrix& op);

}  // namespace curalg
