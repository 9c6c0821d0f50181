#include "secint/secant_oracle.hpp"

#include "secint/errors.hpp"

#include <algorithm>
#include <numeric>

namespace secint {

namespace {

RationalMatrix coefficient_matrix(const std::vector<Polynomial>& basis, unsigned long d) {
    RationalMatrix m;
    for (const auto& s : basis) {
        std::vector<Rational> row(d + 1, Rational(0));
        for (unsigned long i = 0; i <= d; ++i)
            row[i] = s.coefficient(i);
        m.push_back(std::move(row));
    }
    return m;
}

unsigned long weight_of(const std::vector<unsigned long>& orders) {
    unsigned long sum = std::accumulate(orders.begin(), orders.end(), 0UL);
    unsigned long r = orders.size() - 1;
    return sum - r * (r + 1) / 2;
}

} // namespace

RationalSeries RationalSeries::make(unsigned long d, std::vector<Polynomial> basis) {
    if (basis.empty())
        throw InvalidArgument("a linear series needs at least one section");
    for (const auto& s : basis)
        if (s.degree() > static_cast<long>(d))
            throw InvalidArgument("basis element of degree " + std::to_string(s.degree()) + " exceeds d = " +
                                  std::to_string(d));
    if (exact_rank(coefficient_matrix(basis, d)) != basis.size())
        throw InvalidArgument("basis is linearly dependent");
    return RationalSeries(d, std::move(basis));
}

RationalSeries RationalSeries::complete(unsigned long d) {
    std::vector<Polynomial> basis;
    for (unsigned long i = 0; i <= d; ++i)
        basis.push_back(Polynomial::monomial(i));
    return make(d, std::move(basis));
}

MultiDivisor MultiDivisor::make(std::vector<Rational> points, std::vector<unsigned long> multiplicities) {
    if (points.size() != multiplicities.size())
        throw InvalidArgument("points and multiplicities differ in length");
    if (points.empty())
        throw InvalidArgument("divisor must have at least one point");
    for (auto& p : points)
        p.canonicalize();
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (multiplicities[i] == 0)
            throw InvalidArgument("multiplicities must be positive");
        for (std::size_t j = 0; j < i; ++j)
            if (points[i] == points[j])
                throw InvalidArgument("divisor points must be distinct: " + to_string(points[i]));
    }
    return MultiDivisor(std::move(points), std::move(multiplicities));
}

unsigned long MultiDivisor::degree() const {
    return std::accumulate(multiplicities_.begin(), multiplicities_.end(), 0UL);
}

RationalMatrix secant_matrix(const RationalSeries& l, const MultiDivisor& D) {
    RationalMatrix m;
    for (std::size_t i = 0; i < D.points().size(); ++i)
        for (unsigned long k = 0; k < D.multiplicities()[i]; ++k) {
            std::vector<Rational> row;
            row.reserve(l.basis().size());
            for (const auto& s : l.basis())
                row.push_back(s.taylor_coefficient(k, D.points()[i]));
            m.push_back(std::move(row));
        }
    return m;
}

bool is_secant_divisor(const RationalSeries& l, const MultiDivisor& D, unsigned long f) {
    unsigned long e = D.degree();
    if (f >= e)
        throw PreconditionError("secant membership needs 0 <= f < e");
    return exact_rank(secant_matrix(l, D)) <= e - f;
}

RationalSeries flip_at_infinity(const RationalSeries& l) {
    std::vector<Polynomial> basis;
    for (const auto& s : l.basis())
        basis.push_back(s.reversed(l.d()));
    return RationalSeries::make(l.d(), std::move(basis));
}

std::vector<unsigned long> vanishing_orders_at(const RationalSeries& l, const Rational& p) {
    // Columns are Taylor orders 0..d at p; pivots of the echelon form are the orders.
    RationalMatrix m;
    for (const auto& s : l.basis()) {
        std::vector<Rational> row;
        for (unsigned long k = 0; k <= l.d(); ++k)
            row.push_back(s.taylor_coefficient(k, p));
        m.push_back(std::move(row));
    }
    auto pivots = row_reduce(m);
    return {pivots.begin(), pivots.end()};
}

std::vector<unsigned long> vanishing_orders_at_infinity(const RationalSeries& l) {
    // Columns ordered by degree d, d-1, ..., 0 so a pivot in column c is a section of degree d-c.
    RationalMatrix m;
    for (const auto& s : l.basis()) {
        std::vector<Rational> row;
        for (unsigned long c = 0; c <= l.d(); ++c)
            row.push_back(s.coefficient(l.d() - c));
        m.push_back(std::move(row));
    }
    auto pivots = row_reduce(m);
    std::vector<unsigned long> orders(pivots.begin(), pivots.end());
    std::sort(orders.begin(), orders.end());
    return orders;
}

Polynomial wronskian(const RationalSeries& l) {
    const std::size_t n = l.basis().size();
    PolynomialMatrix w(n, std::vector<Polynomial>(n));
    for (std::size_t j = 0; j < n; ++j) {
        Polynomial s = l.basis()[j];
        for (std::size_t i = 0; i < n; ++i) {
            w[i][j] = s;
            s = s.derivative();
        }
    }
    return determinant(std::move(w));
}

unsigned long ramification_weight_at_infinity(const RationalSeries& l) {
    return weight_of(vanishing_orders_at_infinity(l));
}

unsigned long ramification_weight_total(const RationalSeries& l) {
    Polynomial w = wronskian(l);
    if (w.is_zero())
        throw InternalError("Wronskian of an independent basis vanished");
    return static_cast<unsigned long>(w.degree()) + ramification_weight_at_infinity(l);
}

} // namespace secint
