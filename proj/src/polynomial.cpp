#include "secint/polynomial.hpp"

#include "secint/errors.hpp"

namespace secint {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    for (auto& c : coeffs_)
        c.canonicalize();
    trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(unsigned long degree, const Rational& c) {
    std::vector<Rational> coeffs(degree + 1, Rational(0));
    coeffs[degree] = c;
    return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1)
        return {};
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return Polynomial(std::move(out));
}

Rational Polynomial::taylor_coefficient(unsigned long k, const Rational& p) const {
    // sum_i c_i binom(i, k) p^(i-k)
    Rational acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > k;) {
        Integer b;
        mpz_bin_uiui(b.get_mpz_t(), i, k);
        acc = acc * p + coeffs_[i] * Rational(b);
    }
    acc.canonicalize();
    return acc;
}

unsigned long Polynomial::order_at(const Rational& p) const {
    if (is_zero())
        throw InvalidArgument("order of vanishing of the zero polynomial is undefined");
    unsigned long k = 0;
    while (taylor_coefficient(k, p) == 0)
        ++k;
    return k;
}

Polynomial Polynomial::reversed(unsigned long d) const {
    if (degree() > static_cast<long>(d))
        throw InvalidArgument("reversal degree is below the polynomial degree");
    std::vector<Rational> out(d + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out[d - i] = coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    for (auto& x : coeffs_)
        x *= c;
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial::DivMod Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero())
        throw InvalidArgument("polynomial division by zero");
    Polynomial rem = *this;
    if (rem.degree() < divisor.degree())
        return {{}, rem};
    std::vector<Rational> quot(static_cast<std::size_t>(rem.degree() - divisor.degree() + 1), Rational(0));
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        auto shift = static_cast<unsigned long>(rem.degree() - divisor.degree());
        Rational c = rem.leading() / divisor.leading();
        quot[shift] = c;
        rem -= divisor * Polynomial::monomial(shift, c);
    }
    return {Polynomial(std::move(quot)), rem};
}

Polynomial Polynomial::exact_div(const Polynomial& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero())
        throw InternalError("inexact polynomial division");
    return q;
}

} // namespace secint
