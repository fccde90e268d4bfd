#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curalg/current_module.hpp"
#include "curalg/lie.hpp"

namespace curalg {

/// (x (x) t^s)^{(b)} with x a basis index of g.
struct Factor {
    int x = 0;
    int s = 0;
    int b = 1;
    auto operator<=>(const Factor&) const = default;
};

/// Leftmost factor first; acts right to left.
using Monomial = std::vector<Factor>;

/// Element of U(g[t]) as a finite sum of monomials in divided powers.
class UElement {
  public:
    UElement() = default;
    static UElement one();
    static UElement generator(int x, int s = 0, int b = 1);
    static UElement monomial(Monomial m, const Rational& c = 1);

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Monomial& m, const Rational& c);

    UElement scaled(const Rational& c) const;
    friend UElement operator+(const UElement& a, const UElement& b);
    friend UElement operator-(const UElement& a, const UElement& b);
    /// Concatenation of monomials.
    friend UElement operator*(const UElement& a, const UElement& b);
    friend bool operator==(const UElement& a, const UElement& b) = default;

    /// sum s*b; nullopt if zero or not homogeneous.
    std::optional<int> grade() const;
    std::optional<Weight> weight(const ChevalleyAlgebra& g) const;

    /// "F[theta]@t^2^(3) - 1/2 E[a1]@t H[a1]"
    std::string str(const ChevalleyAlgebra& g) const;

  private:
    std::map<Monomial, Rational> terms_;
};

int monomial_grade(const Monomial& m);
Weight monomial_weight(const ChevalleyAlgebra& g, const Monomial& m);
std::string monomial_str(const ChevalleyAlgebra& g, const Monomial& m);

/// Inverse of str(); also accepts spaces before ^(b), '*' separators and
/// root names such as F[theta]. Throws std::invalid_argument.
UElement parse_uelement(const std::string& text, const ChevalleyAlgebra& g);

SparseVector apply(const UElement& u, const CurrentModule& m, const SparseVector& v);

/// x^-_alpha(r,s): sum over S(r,s) of prod_p (x^-_alpha (x) t^p)^{(b_p)}, p increasing.
UElement garland_element(const ChevalleyAlgebra& g, int alpha, int r, int s);

/// Lowering < Cartan < raising, then t-power, then basis index; equal
/// neighbours are merged back into divided powers.
UElement pbw_normal_form(const UElement& u, const ChevalleyAlgebra& g);

/// Largest t-power that can act nontrivially on m.
int effective_t_bound(const CurrentModule& m);

/// (x+_alpha (x) t)^{(s)} (x-_alpha)^{(s+r)} w == (-1)^s x^-_alpha(r,s) w for
/// the generator w. Throws std::invalid_argument if w is not killed by
/// n+[t] and h (x) t C[t].
bool garland_congruence_check(const CurrentModule& m, int alpha, int r, int s);

}  // namespace curalg
