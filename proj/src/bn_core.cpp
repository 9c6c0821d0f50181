#include "secint/bn_core.hpp"

#include "secint/errors.hpp"

namespace secint {

SeriesParams SeriesParams::make(Integer g, Integer r, Integer d) {
    if (sgn(g) < 0 || sgn(r) < 0 || sgn(d) < 0)
        throw InvalidArgument("series parameters must be nonnegative: g=" + g.get_str() + " r=" + r.get_str() +
                              " d=" + d.get_str());
    if (r > d)
        throw InvalidArgument("a g^r_d needs r <= d, got r=" + r.get_str() + " d=" + d.get_str());
    return SeriesParams(std::move(g), std::move(r), std::move(d));
}

Integer SeriesParams::rho() const { return secint::rho(g_, r_, d_); }

Integer SeriesParams::speciality() const { return Integer(g_ - d_ + r_); }

SecantParams SecantParams::make(Integer e, Integer f) {
    if (sgn(f) < 0 || f >= e)
        throw InvalidArgument("secant parameters need 0 <= f < e, got e=" + e.get_str() + " f=" + f.get_str());
    return SecantParams(std::move(e), std::move(f));
}

Integer rho(const Integer& g, const Integer& r, const Integer& d) { return Integer(g - (r + 1) * (g - d + r)); }

SeriesParams residual(const SeriesParams& l) {
    Integer r2 = l.g() - l.d() + l.r() - 1;
    Integer d2 = 2 * l.g() - 2 - l.d();
    if (sgn(r2) < 0 || sgn(d2) < 0 || r2 > d2)
        throw ResidualNotEffective("residual of g^" + l.r().get_str() + "_" + l.d().get_str() + " in genus " +
                                   l.g().get_str() + " is not effective (r2=" + r2.get_str() +
                                   ", d2=" + d2.get_str() + ")");
    return SeriesParams::make(l.g(), std::move(r2), std::move(d2));
}

Integer expected_dim_secant(const Integer& e, const Integer& f, const Integer& r) {
    return Integer(e - f * (r + 1 - e + f));
}

Integer incidence_dim(const Integer& r) {
    if (sgn(r) < 0)
        throw InvalidArgument("incidence dimension needs r >= 0");
    return r;
}

bool emptiness_condition_holds(const Integer& g, const Integer& r1, const Integer& d1, const Integer& e,
                               const Integer& f) {
    auto l1 = SeriesParams::make(g, r1, d1);
    Integer rho1 = l1.rho();
    if (sgn(rho1) < 0)
        throw PreconditionError("emptiness condition needs rho(g,r1,d1) >= 0, got " + rho1.get_str());
    auto l2 = residual(l1);
    return f * (l2.r() + 1 - e + f) >= r1 + 1 + rho1;
}

} // namespace secint
