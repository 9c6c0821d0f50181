#pragma once

// Exact linear algebra over Q and Q[t].

#include "secint/numeric.hpp"
#include "secint/polynomial.hpp"

#include <cstddef>
#include <vector>

namespace secint {

using RationalMatrix = std::vector<std::vector<Rational>>;
using PolynomialMatrix = std::vector<std::vector<Polynomial>>;

// Rank by fraction-free (Bareiss) elimination after clearing row denominators.
std::size_t exact_rank(const RationalMatrix& m);

// Basis of { v : m v = 0 } from the reduced row echelon form.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m, std::size_t columns);

// Reduced row echelon form; returns pivot columns in increasing order.
std::vector<std::size_t> row_reduce(RationalMatrix& m);

// Determinant of a square matrix over Q[t], Bareiss with exact polynomial division.
Polynomial determinant(PolynomialMatrix m);

} // namespace secint
