#pragma once

// Parameter algebra for linear series g^r_d on a curve of genus g.

#include "secint/numeric.hpp"

namespace secint {

// Numeric type (g, r, d) of a linear series. Carries no geometry.
class SeriesParams {
  public:
    // Throws InvalidArgument unless 0 <= r <= d and g >= 0.
    static SeriesParams make(Integer g, Integer r, Integer d);

    const Integer& g() const { return g_; }
    const Integer& r() const { return r_; }
    const Integer& d() const { return d_; }

    Integer rho() const;
    // Index of speciality g - d + r.
    Integer speciality() const;

    friend bool operator==(const SeriesParams&, const SeriesParams&) = default;

  private:
    SeriesParams(Integer g, Integer r, Integer d) : g_(std::move(g)), r_(std::move(r)), d_(std::move(d)) {}
    Integer g_, r_, d_;
};

// Degree e of a divisor and failure index f, with 0 <= f < e.
class SecantParams {
  public:
    static SecantParams make(Integer e, Integer f);

    const Integer& e() const { return e_; }
    const Integer& f() const { return f_; }

  private:
    SecantParams(Integer e, Integer f) : e_(std::move(e)), f_(std::move(f)) {}
    Integer e_, f_;
};

// Brill-Noether number g - (r+1)(g-d+r). Accepts any integers.
Integer rho(const Integer& g, const Integer& r, const Integer& d);

// Residual series K - l of type (g, g-d+r-1, 2g-2-d), via Riemann-Roch.
// Throws ResidualNotEffective when the residual dimension or degree is negative.
SeriesParams residual(const SeriesParams& l);

// Expected dimension e - f(r+1-e+f) of the secant variety V_e^{e-f}(l). May be negative.
Integer expected_dim_secant(const Integer& e, const Integer& f, const Integer& r);

// Dimension of the incidence variety of a g^r_d; always r.
Integer incidence_dim(const Integer& r);

// f (r2+1-e+f) >= r1+1+rho(g,r1,d1), with r2 the residual dimension.
// Propagates ResidualNotEffective; throws PreconditionError when rho < 0.
bool emptiness_condition_holds(const Integer& g, const Integer& r1, const Integer& d1, const Integer& e,
                               const Integer& f);

} // namespace secint
