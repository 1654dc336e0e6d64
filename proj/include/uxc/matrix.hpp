#pragma once

#include <cstddef>
#include <vector>

#include "uxc/errors.hpp"
#include "uxc/prime_field.hpp"
#include "uxc/rational.hpp"

namespace uxc {

// Dense matrix over one exact backend (Rational or Fp). Immutable use is the
// norm; all algorithms below copy their input.
template <typename S>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  static Matrix from_rows(const std::vector<std::vector<S>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.front().size() : 0;
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw InvalidInputError("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  S& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const S& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

 private:
  std::size_t rows_, cols_;
  std::vector<S> e_;
};

namespace detail {

// Clears denominators row by row and divides out the content, so Bareiss runs
// on a primitive integer matrix with the same rank.
inline std::vector<std::vector<BigInt>> integer_rows(const Matrix<Rational>& m) {
  std::vector<std::vector<BigInt>> rows(m.rows(), std::vector<BigInt>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, denominator(m.at(i, j)));
    BigInt g = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      rows[i][j] = numerator(m.at(i, j)) * (l / denominator(m.at(i, j)));
      g = gcd(g, rows[i][j]);
    }
    if (g > 1) {
      for (auto& x : rows[i]) x /= g;
    }
  }
  return rows;
}

}  // namespace detail

// Rank of an integer matrix by one-step fraction-free (Bareiss) elimination:
// every intermediate entry is a minor of the input, so divisions are exact and
// no rounding can occur. Row swaps and zero-column skips are allowed.
inline std::size_t bareiss_rank(std::vector<std::vector<BigInt>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a.front().size() : 0;
  std::size_t r = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

inline std::size_t rank(const Matrix<Rational>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return bareiss_rank(detail::integer_rows(m));
}

// Rank over F_p by ordinary Gaussian elimination (division is exact in a field).
inline std::size_t rank(const Matrix<Fp>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Matrix<Fp> a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && is_zero(a.at(piv, c))) ++piv;
    if (piv == rows) continue;
    for (std::size_t j = c; j < cols; ++j) std::swap(a.at(piv, j), a.at(r, j));
    Fp inv = a.at(r, c).inverse();
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (is_zero(a.at(i, c))) continue;
      Fp f = a.at(i, c) * inv;
      for (std::size_t j = c; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
    }
    ++r;
  }
  return r;
}

// Basis of the right null space: reduce to RREF, then one basis vector per free
// column. m * v = 0 holds exactly for every returned v, and the count equals
// cols - rank by construction.
template <typename S>
std::vector<std::vector<S>> kernel_basis(const Matrix<S>& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  Matrix<S> a = m;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && is_zero(a.at(piv, c))) ++piv;
    if (piv == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(piv, j), a.at(r, j));
    S inv = one_like(a.at(r, c)) / a.at(r, c);
    for (std::size_t j = c; j < cols; ++j) a.at(r, j) = a.at(r, j) * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(a.at(i, c))) continue;
      S f = a.at(i, c);
      for (std::size_t j = c; j < cols; ++j) a.at(i, j) = a.at(i, j) - f * a.at(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  S zero = rows && cols ? zero_like(m.at(0, 0)) : S(0);
  S one = rows && cols ? one_like(m.at(0, 0)) : S(1);
  std::vector<std::vector<S>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<S> v(cols, zero);
    v[f] = one;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a.at(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace uxc
