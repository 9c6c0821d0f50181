#pragma once

#include "secint/numeric.hpp"

#include <vector>

namespace secint {

// Univariate polynomial over Q. Coefficients run in increasing degree with no trailing zeros.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    static Polynomial constant(const Rational& c);
    static Polynomial monomial(unsigned long degree, const Rational& c = 1);

    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(unsigned long i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    const Rational& leading() const { return coeffs_.back(); }

    Rational operator()(const Rational& t) const;
    Polynomial derivative() const;
    // s^(k)(p) / k!
    Rational taylor_coefficient(unsigned long k, const Rational& p) const;
    // Multiplicity of p as a root (0 when p is not a root). The zero polynomial is rejected.
    unsigned long order_at(const Rational& p) const;
    // t^d s(1/t); requires d >= degree().
    Polynomial reversed(unsigned long d) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    struct DivMod;
    DivMod divmod(const Polynomial& divisor) const;
    // Throws InternalError if the division leaves a remainder.
    Polynomial exact_div(const Polynomial& divisor) const;

  private:
    void trim();
    std::vector<Rational> coeffs_;
};

struct Polynomial::DivMod {
    Polynomial quotient;
    Polynomial remainder;
};

} // namespace secint
