#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "curalg/linalg.hpp"
#include "curalg/rational.hpp"
#include "curalg/weight.hpp"

namespace curalg {

/// Finite root system. Roots in simple-root coordinates, weights in
/// fundamental-weight coordinates. cartan[i][j] = <alpha_j, alpha_i^vee>.
struct RootSystem {
    std::string type_label;
    int rank = 0;
    std::vector<std::vector<int>> cartan;
    /// Sorted by height, then reverse lexicographically.
    std::vector<Weight> positive_roots;
    int highest_root = -1;
    /// (alpha_i | alpha_j), normalized so long roots have square length 2.
    std::vector<std::vector<Rational>> form;
    /// 2 / (alpha|alpha) for each positive root.
    std::vector<int> d_alpha;

    int num_positive() const { return static_cast<int>(positive_roots.size()); }
    const Weight& theta() const { return positive_roots[highest_root]; }
    std::optional<int> find_positive(const Weight& root) const;
    bool is_root(const Weight& root) const;

    Rational inner(const Weight& a, const Weight& b) const;
    /// alpha^vee = sum k_i alpha_i^vee
    Weight coroot_coefficients(const Weight& root) const;
    /// Weight of a root in fundamental coordinates.
    Weight root_weight(const Weight& root) const;
    /// <lambda, alpha^vee>
    int pairing(const Weight& lambda, const Weight& root) const;
    /// (lambda | alpha)
    Rational weight_root_inner(const Weight& lambda, const Weight& root) const;
    /// Weight of k * theta.
    Weight multiple_of_theta(int k) const;
    /// Fundamental to simple-root coordinates (rational in general).
    std::vector<Rational> to_root_coordinates(const Weight& lambda) const;
    bool simply_laced() const;
    bool is_dominant(const Weight& lambda) const;
    int height(const Weight& root) const;
    /// "a1", "a1+2a2", "-a1-a2"
    std::string root_name(const Weight& root) const;
    /// Accepts "theta", "a2", "a1+2a2", "-a1".
    Weight parse_root(const std::string& name) const;
};

/// "A2", "B3", "G2", ... Throws std::invalid_argument for unknown labels.
RootSystem build_root_system(const std::string& type_label);
std::vector<std::vector<int>> cartan_matrix(const std::string& type_label);

enum class BasisKind { Lowering, Cartan, Raising };

struct BasisElement {
    BasisKind kind;
    /// Positive-root index for x^+/x^-, simple index for coroots.
    int index;
    std::string label;
    /// Signed root in simple coordinates (zero for coroots).
    Weight root;
    /// Fundamental coordinates.
    Weight weight;
};

/// Chevalley basis of g: x^-_alpha, then alpha_i^vee, then x^+_alpha, with
/// [x^+_alpha, x^-_alpha] = alpha^vee and integer structure constants.
class ChevalleyAlgebra {
  public:
    explicit ChevalleyAlgebra(RootSystem roots);

    const RootSystem& roots() const { return roots_; }
    const std::string& type_label() const { return roots_.type_label; }
    int dim() const { return static_cast<int>(basis_.size()); }
    int rank() const { return roots_.rank; }
    int num_positive() const { return roots_.num_positive(); }

    /// Positive-root index i < rank is the simple root alpha_{i+1}.
    int f(int k) const { return k; }
    int h(int i) const { return num_positive() + i; }
    int e(int k) const { return num_positive() + rank() + k; }
    int theta_index() const { return roots_.highest_root; }
    /// Basis index of the root vector of a signed root.
    int root_vector(const Weight& signed_root) const;
    const BasisElement& element(int a) const { return basis_[a]; }
    const std::vector<BasisElement>& basis() const { return basis_; }
    /// "E[a1+a2]", "F[theta]", "H[a1]"
    std::optional<int> find_label(const std::string& label) const;

    const SparseVector& bracket(int a, int b) const { return table_[a * dim() + b]; }
    SparseVector bracket(const SparseVector& x, const SparseVector& y) const;
    /// Normalized invariant form: (x^+_alpha | x^-_alpha) = d_alpha.
    Rational form(int a, int b) const;
    /// Structure constant N_{r,s} for signed roots (0 when r+s is not a root).
    int structure_constant(const Weight& r, const Weight& s) const;
    std::string sign_convention() const { return "extraspecial-positive"; }

  private:
    int pos_pair(int a, int b) const { return pos_n_[a * num_positive() + b]; }

    RootSystem roots_;
    std::vector<BasisElement> basis_;
    std::vector<int> pos_n_;
    std::vector<SparseVector> table_;
};

using AlgebraPtr = std::shared_ptr<const ChevalleyAlgebra>;

/// Root system plus Chevalley basis; shared instances are cached per label.
AlgebraPtr chevalley_constants(const std::string& type_label);
ChevalleyAlgebra chevalley_constants(const RootSystem& roots);

/// First failing triple as a message, or empty.
std::string jacobi_scan(const ChevalleyAlgebra& g);
std::string antisymmetry_scan(const ChevalleyAlgebra& g);
/// Checks [H_i, E_j] = cartan[i][j] E_j.
std::string cartan_recovery_scan(const ChevalleyAlgebra& g);
std::string integrality_scan(const ChevalleyAlgebra& g);
std::string root_system_scan(const RootSystem& rs);

}  // namespace curalg
