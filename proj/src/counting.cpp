#include "secint/counting.hpp"

#include "secint/errors.hpp"

#include <algorithm>

namespace secint {

ChowClass ChowClass::unit() {
    ChowClass c;
    c.add({0, 0}, Rational(1));
    return c;
}

void ChowClass::add(Monomial m, const Rational& coefficient) {
    auto [it, inserted] = terms_.try_emplace(m, coefficient);
    if (!inserted)
        it->second += coefficient;
    it->second.canonicalize();
    if (it->second == 0)
        terms_.erase(it);
}

std::optional<unsigned long> ChowClass::degree() const {
    if (terms_.empty())
        return std::nullopt;
    unsigned long deg = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != deg)
            throw NonHomogeneous("class mixes degrees " + std::to_string(deg) + " and " +
                                 std::to_string(m.degree()));
    return deg;
}

ChowClass operator*(const ChowClass& a, const ChowClass& b) {
    ChowClass out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out.add({ma.x + mb.x, ma.theta + mb.theta}, ca * cb);
    return out;
}

CountInputs CountInputs::make(Integer g, SeriesParams l1, SeriesParams l2, Integer e) {
    if (l1.g() != g || l2.g() != g)
        throw InvalidArgument("both series must live on the genus-" + g.get_str() + " curve");
    if (e != l1.r() + l2.r())
        throw InvalidArgument("finite count needs e = r1 + r2, got e=" + e.get_str());
    if (e > l1.d() || e > l2.d())
        throw InvalidArgument("need e <= min(d1, d2), got e=" + e.get_str());
    return CountInputs(std::move(g), std::move(l1), std::move(l2), std::move(e));
}

CountInputs CountInputs::make(Integer g, SeriesParams l1, SeriesParams l2) {
    Integer e = l1.r() + l2.r();
    return make(std::move(g), std::move(l1), std::move(l2), std::move(e));
}

Integer gen_binomial(const Integer& n, unsigned long k) {
    if (sgn(n) >= 0 && n.fits_ulong_p()) {
        Integer out;
        mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
        return out;
    }
    Integer falling = 1;
    for (unsigned long i = 0; i < k; ++i)
        falling *= n - i;
    Integer out = falling / factorial(k);
    return out;
}

Integer trinomial_coefficient(unsigned long g, const Integer& p, const Integer& q) {
    if (sgn(p) < 0 || sgn(q) < 0 || p + q > g)
        return 0;
    unsigned long pp = p.get_ui(), qq = q.get_ui();
    return Integer(factorial(g) / (factorial(pp) * factorial(qq) * factorial(g - pp - qq)));
}

Integer incidence_count(const CountInputs& c) {
    unsigned long g = to_ulong(c.g(), "genus");
    unsigned long a = to_ulong(c.e() - c.l1().r(), "e - r1");
    unsigned long b = to_ulong(c.e() - c.l2().r(), "e - r2");
    Integer n1 = c.l1().d() - c.g() - c.l1().r();
    Integer n2 = c.l2().d() - c.g() - c.l2().r();
    Integer total = 0;
    for (unsigned long p = 0; p <= std::min(a, g); ++p)
        for (unsigned long q = 0; q <= b && p + q <= g; ++q)
            total += trinomial_coefficient(g, p, q) * gen_binomial(n1, a - p) * gen_binomial(n2, b - q);
    return total;
}

Integer adjunction_nodes(const Integer& g, const Integer& d1, const Integer& d2) {
    return Integer((d1 - 1) * (d2 - 1) - g);
}

Integer severi_count(const Integer& g, const Integer& r1, const Integer& d1, const Integer& d2) {
    unsigned long k = to_ulong(r1, "r1");
    if (k == 0)
        throw PreconditionError("Severi count needs r1 >= 1");
    return Integer((d1 - r1) * gen_binomial(d2 - 1, k) - g * gen_binomial(d2 - 2, k - 1));
}

ChowClass gamma_class(const Integer& g, const Integer& r, const Integer& d, const Integer& e) {
    if (sgn(r) < 0 || r > e)
        throw PreconditionError("gamma class needs 0 <= r <= e, got r=" + r.get_str() + " e=" + e.get_str());
    unsigned long codim = to_ulong(e - r, "e - r");
    Integer n = d - g - r;
    ChowClass out;
    for (unsigned long j = 0; j <= codim; ++j) {
        Rational coefficient(gen_binomial(n, j), factorial(codim - j));
        out.add({j, codim - j}, coefficient);
    }
    return out;
}

Integer chow_product_evaluate(const ChowClass& c1, const ChowClass& c2, const Integer& g, const Integer& e) {
    auto deg1 = c1.degree();
    auto deg2 = c2.degree();
    unsigned long top = to_ulong(e, "e");
    unsigned long genus = to_ulong(g, "genus");
    if (!deg1 || !deg2)
        return 0;
    if (*deg1 + *deg2 != top)
        throw DegreeMismatch("class degrees " + std::to_string(*deg1) + " + " + std::to_string(*deg2) +
                             " do not add up to e = " + std::to_string(top));
    Rational total = 0;
    const ChowClass product = c1 * c2;
    for (const auto& [m, c] : product.terms()) {
        if (m.theta > genus)
            continue;
        total += c * Rational(factorial(genus) / factorial(genus - m.theta));
    }
    total.canonicalize();
    if (total.get_den() != 1)
        throw InternalNonInteger("intersection number is not integral: " + to_string(total));
    return total.get_num();
}

} // namespace secint
