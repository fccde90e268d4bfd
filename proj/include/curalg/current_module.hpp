#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "curalg/finrep.hpp"
#include "curalg/lie.hpp"
#include "curalg/linalg.hpp"

namespace curalg {

struct BasisLabel {
    std::string label;
    int grade = 0;
    Weight weight;
};

/// Multiplicity table (grade, weight) -> dimension.
class GradedCharacter {
  public:
    using Key = std::pair<int, Weight>;

    void add(int grade, const Weight& weight, long long mult = 1);
    long long at(int grade, const Weight& weight) const;
    long long total() const;
    const std::map<Key, long long>& entries() const { return mult_; }
    GradedCharacter shifted(int r) const;
    /// Forget the grading.
    std::map<Weight, long long> at_q1() const;
    /// Dimension per grade.
    std::map<int, long long> grade_dims() const;
    int min_grade() const;
    int max_grade() const;

    friend GradedCharacter operator+(const GradedCharacter& a, const GradedCharacter& b);
    /// Throws std::logic_error if a multiplicity would go negative.
    friend GradedCharacter operator-(const GradedCharacter& a, const GradedCharacter& b);
    friend bool operator==(const GradedCharacter& a, const GradedCharacter& b) = default;

    /// "q^0:[2]x1 [0]x1 ... | q^1:[0]x1"
    std::string str() const;

  private:
    std::map<Key, long long> mult_;
};

/// Finite-dimensional g[t]-module: a (grade, weight)-labelled basis and the
/// matrices of x(x)t^s. Actions are produced on demand and cached; the cache
/// is shared between copies, so copies are cheap and the object is immutable.
class CurrentModule {
  public:
    using ActionFn = std::function<SparseMatrix(const CurrentModule&, int x, int s)>;

    /// t_cutoff: x(x)t^s is zero for s > t_cutoff; -1 means no bound is known.
    CurrentModule(AlgebraPtr g, std::vector<BasisLabel> basis, bool graded, int t_cutoff, ActionFn fn);
    /// table[s][x] for 0 <= s <= table.size()-1; higher powers act as zero.
    static CurrentModule from_table(AlgebraPtr g, std::vector<BasisLabel> basis, bool graded,
                                    std::vector<std::vector<SparseMatrix>> table);

    const ChevalleyAlgebra& algebra() const { return *g_; }
    AlgebraPtr algebra_ptr() const { return g_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<BasisLabel>& basis() const { return basis_; }
    bool graded() const { return graded_; }
    int t_cutoff() const { return t_cutoff_; }
    int min_grade() const;
    int max_grade() const;

    const SparseMatrix& action(int x, int s) const;
    SparseVector apply(int x, int s, const SparseVector& v) const { return action(x, s).apply(v); }

    const std::optional<SparseVector>& generator() const { return generator_; }
    void set_generator(std::optional<SparseVector> v) { generator_ = std::move(v); }

    /// (grade, weight) blocks; grade is 0 throughout for ungraded modules.
    std::shared_ptr<const BlockLayout> layout() const;

    /// e_i, f_i at t^0 and x+_theta at t^1: these generate U(g[t]).
    std::vector<const SparseMatrix*> generating_operators() const;

  private:
    struct Shared {
        std::mutex mu;
        std::map<std::pair<int, int>, std::unique_ptr<SparseMatrix>> cache;
        std::shared_ptr<const BlockLayout> layout;
        SparseMatrix zero;
    };

    AlgebraPtr g_;
    std::vector<BasisLabel> basis_;
    bool graded_;
    int t_cutoff_;
    ActionFn fn_;
    std::optional<SparseVector> generator_;
    std::shared_ptr<Shared> shared_;
};

/// Action built from (e_i,0), (f_i,0) and (x+_theta,1) only; every other
/// x(x)t^s is obtained through brackets [a(x)t^r, b(x)t^s] = [a,b](x)t^{r+s}.
/// Valid whenever the base operators come from a g[t]-module.
using BaseActionFn = std::function<SparseMatrix(const CurrentModule&, int x, int s)>;
CurrentModule::ActionFn derived_action(BaseActionFn base);

CurrentModule ev0(const GModule& m);
CurrentModule grade_shift(const CurrentModule& m, int r);
/// (x(x)t^s) acts as x(x)(t+z)^s. The grading is forgotten.
CurrentModule eval_shift(const CurrentModule& m, const Rational& z);
/// Coproduct action on the tensor product; generator is the tensor of generators.
CurrentModule tensor_current(const std::vector<CurrentModule>& factors);

/// A g[t]-stable subspace of a module.
struct Submodule {
    CurrentModule parent;
    std::shared_ptr<BlockedSubspace> space;
    int dim() const { return space->dim(); }
};

Submodule submodule_generated(const CurrentModule& m, const std::vector<SparseVector>& seeds);
inline Submodule submodule_generated(const CurrentModule& m, const SparseVector& seed) {
    return submodule_generated(m, std::vector<SparseVector>{seed});
}
Submodule zero_submodule(const CurrentModule& m);
/// Checks g[t]-stability of an arbitrary subspace; throws std::invalid_argument if not stable.
Submodule as_submodule(const CurrentModule& m, std::shared_ptr<BlockedSubspace> space);
bool is_member(const Submodule& sub, const SparseVector& v);
/// Submodule as a module in its own right, basis = its echelon rows.
CurrentModule submodule_module(const Submodule& sub);
/// Quotient with basis the non-pivot coordinates; the generator image is tracked.
CurrentModule quotient(const Submodule& sub);
/// Image of v in the quotient basis.
SparseVector project_to_quotient(const Submodule& sub, const SparseVector& v);

GradedCharacter graded_character(const CurrentModule& m);
GradedCharacter graded_character(const Submodule& sub);
/// ch(parent) - ch(sub) without materializing the quotient.
GradedCharacter quotient_character(const Submodule& sub);

/// Empty string on success. s_max bounds the t-powers examined (-1: up to t_cutoff).
std::string grading_scan(const CurrentModule& m, int s_max = -1);
std::string weight_scan(const CurrentModule& m, int s_max = -1);
std::string bracket_scan(const CurrentModule& m, int s_max = -1);
bool is_cyclic(const CurrentModule& m);

}  // namespace curalg
