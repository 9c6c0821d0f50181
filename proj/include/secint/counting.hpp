#pragma once

// Enumerative counts for intersections of two incidence varieties Gamma_e(l1), Gamma_e(l2)
// inside the symmetric product C_e. The generating-function coefficient is the primary
// count; closed forms and products of x, theta classes serve as independent cross-checks.

#include "secint/bn_core.hpp"
#include "secint/numeric.hpp"

#include <map>
#include <optional>
#include <utility>

namespace secint {

// Exponents of x^a theta^b.
struct Monomial {
    unsigned long x = 0;
    unsigned long theta = 0;

    unsigned long degree() const { return x + theta; }
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Finite Q-linear combination of monomials x^a theta^b. Coefficients are kept
// canonical and nonzero, so structural equality is equality of classes.
class ChowClass {
  public:
    using Terms = std::map<Monomial, Rational>;

    ChowClass() = default;
    static ChowClass unit();

    void add(Monomial m, const Rational& coefficient);
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Common degree of all terms; nullopt for the zero class.
    // Throws NonHomogeneous when terms have different degrees.
    std::optional<unsigned long> degree() const;

    friend ChowClass operator*(const ChowClass& a, const ChowClass& b);
    friend bool operator==(const ChowClass&, const ChowClass&) = default;

  private:
    Terms terms_;
};

// Both series live on the same genus-g curve and e = r1 + r2 <= min(d1, d2).
class CountInputs {
  public:
    static CountInputs make(Integer g, SeriesParams l1, SeriesParams l2, Integer e);
    // e defaults to r1 + r2.
    static CountInputs make(Integer g, SeriesParams l1, SeriesParams l2);

    const Integer& g() const { return g_; }
    const SeriesParams& l1() const { return l1_; }
    const SeriesParams& l2() const { return l2_; }
    const Integer& e() const { return e_; }

  private:
    CountInputs(Integer g, SeriesParams l1, SeriesParams l2, Integer e)
        : g_(std::move(g)), l1_(std::move(l1)), l2_(std::move(l2)), e_(std::move(e)) {}
    Integer g_;
    SeriesParams l1_, l2_;
    Integer e_;
};

// n(n-1)...(n-k+1)/k!, for any integer n.
Integer gen_binomial(const Integer& n, unsigned long k);

// Coefficient of t1^p t2^q in (1+t1+t2)^g; zero outside the simplex.
Integer trinomial_coefficient(unsigned long g, const Integer& p, const Integer& q);

// Coefficient of t1^(e-r1) t2^(e-r2) in (1+t1)^(d1-g-r1) (1+t2)^(d2-g-r2) (1+t1+t2)^g.
Integer incidence_count(const CountInputs& c);

// Double points of a genus-g curve of bidegree (d1, d2) on P^1 x P^1.
Integer adjunction_nodes(const Integer& g, const Integer& d1, const Integer& d2);

// Divisors of degree r1+1 common to a g^r1_d1 and a pencil of degree d2.
Integer severi_count(const Integer& g, const Integer& r1, const Integer& d1, const Integer& d2);

// Class of Gamma_e(l) for l = g^r_d: sum_j binom(d-g-r, j) x^j theta^(e-r-j) / (e-r-j)!.
ChowClass gamma_class(const Integer& g, const Integer& r, const Integer& d, const Integer& e);

// Degree of c1*c2 on C_e using  x^(e-b) theta^b  |->  g!/(g-b)!  (zero when b > g).
Integer chow_product_evaluate(const ChowClass& c1, const ChowClass& c2, const Integer& g, const Integer& e);

} // namespace secint
