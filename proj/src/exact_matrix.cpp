#include "secint/exact_matrix.hpp"

#include "secint/errors.hpp"

#include <utility>

namespace secint {

namespace {

using IntegerMatrix = std::vector<std::vector<Integer>>;

IntegerMatrix clear_denominators(const RationalMatrix& m) {
    IntegerMatrix out;
    out.reserve(m.size());
    for (const auto& row : m) {
        Integer l = 1;
        for (const auto& x : row)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        std::vector<Integer> scaled;
        scaled.reserve(row.size());
        for (const auto& x : row)
            scaled.emplace_back(x.get_num() * (l / x.get_den()));
        out.push_back(std::move(scaled));
    }
    return out;
}

} // namespace

std::size_t exact_rank(const RationalMatrix& m) {
    IntegerMatrix a = clear_denominators(m);
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a.front().size();
    std::size_t rank = 0;
    Integer prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                Integer v = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
                mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

std::vector<std::size_t> row_reduce(RationalMatrix& m) {
    std::vector<std::size_t> pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m.front().size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t p = r;
        while (p < rows && m[p][col] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[r]);
        Rational inv = 1 / m[r][col];
        for (auto& x : m[r])
            x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][col] == 0)
                continue;
            Rational factor = m[i][col];
            for (std::size_t j = col; j < cols; ++j)
                m[i][j] -= factor * m[r][j];
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m, std::size_t columns) {
    RationalMatrix a = m;
    for (const auto& row : a)
        if (row.size() != columns)
            throw InvalidArgument("ragged matrix");
    auto pivots = row_reduce(a);
    std::vector<bool> is_pivot(columns, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < columns; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rational> v(columns, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -a[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

Polynomial determinant(PolynomialMatrix m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw InvalidArgument("determinant of a non-square matrix");
    if (n == 0)
        return Polynomial::constant(1);
    Polynomial prev = Polynomial::constant(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k].is_zero())
            ++p;
        if (p == n)
            return {};
        if (p != k) {
            std::swap(m[p], m[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).exact_div(prev);
        prev = m[k][k];
    }
    Polynomial det = m[n - 1][n - 1];
    return negate ? det * Rational(-1) : det;
}

} // namespace secint
