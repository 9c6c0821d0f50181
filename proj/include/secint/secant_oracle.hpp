#pragma once

// Genus-0 model of secant varieties: a g^r_d on P^1 is an (r+1)-dimensional space of
// polynomials of degree <= d, and D imposes at most e-f conditions on it exactly when
// the matrix of Taylor coefficients of a basis along D has rank <= e-f.

#include "secint/exact_matrix.hpp"
#include "secint/numeric.hpp"
#include "secint/polynomial.hpp"

#include <vector>

namespace secint {

class RationalSeries {
  public:
    // Throws InvalidArgument unless the basis is independent and fits in degree d.
    static RationalSeries make(unsigned long d, std::vector<Polynomial> basis);
    // span{1, t, ..., t^d}
    static RationalSeries complete(unsigned long d);

    unsigned long d() const { return d_; }
    unsigned long r() const { return static_cast<unsigned long>(basis_.size() - 1); }
    const std::vector<Polynomial>& basis() const { return basis_; }

  private:
    RationalSeries(unsigned long d, std::vector<Polynomial> basis) : d_(d), basis_(std::move(basis)) {}
    unsigned long d_;
    std::vector<Polynomial> basis_;
};

// Effective divisor sum a_i p_i with distinct finite points.
class MultiDivisor {
  public:
    static MultiDivisor make(std::vector<Rational> points, std::vector<unsigned long> multiplicities);

    const std::vector<Rational>& points() const { return points_; }
    const std::vector<unsigned long>& multiplicities() const { return multiplicities_; }
    unsigned long degree() const;

  private:
    MultiDivisor(std::vector<Rational> points, std::vector<unsigned long> multiplicities)
        : points_(std::move(points)), multiplicities_(std::move(multiplicities)) {}
    std::vector<Rational> points_;
    std::vector<unsigned long> multiplicities_;
};

// e x (r+1) matrix; the block for p_i has rows s_j^(k)(p_i)/k!, k < a_i.
RationalMatrix secant_matrix(const RationalSeries& l, const MultiDivisor& D);

// rank(secant_matrix) <= e - f. Requires 0 <= f < e.
bool is_secant_divisor(const RationalSeries& l, const MultiDivisor& D, unsigned long f);

// The series in the coordinate s = 1/t: each basis element s(t) becomes t^d s(1/t),
// so the point at infinity moves to 0.
RationalSeries flip_at_infinity(const RationalSeries& l);

// Vanishing orders of the series at a finite point, increasing.
std::vector<unsigned long> vanishing_orders_at(const RationalSeries& l, const Rational& p);
// Vanishing orders at infinity: d minus the distinct degrees of an echelonized basis.
std::vector<unsigned long> vanishing_orders_at_infinity(const RationalSeries& l);

Polynomial wronskian(const RationalSeries& l);

// Ramification weight at infinity from the echelonized degree sequence.
unsigned long ramification_weight_at_infinity(const RationalSeries& l);

// deg(Wronskian) (finite ramification, counted with multiplicity over the algebraic
// closure) plus the weight at infinity.
unsigned long ramification_weight_total(const RationalSeries& l);

} // namespace secint
