#include "hermite/exact_linear.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "hermite/errors.hpp"

namespace hermite {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool RationalMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

bool RationalMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (r != c && (*this)(r, c) != 0) return false;
    }
  }
  return true;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product of incompatible shapes");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += x * b(k, c);
    }
  }
  return out;
}

namespace {

// Row echelon form in place; returns (rank, sign of the row permutation).
std::pair<std::size_t, int> eliminate(RationalMatrix& m) {
  std::size_t row = 0;
  int sign = 1;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
      sign = -sign;
    }
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      if (m(r, col) == 0) continue;
      const Rational f = m(r, col) / m(row, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    ++row;
  }
  return {row, sign};
}

}  // namespace

Rational determinant(RationalMatrix m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const auto [r, sign] = eliminate(m);
  if (r < m.rows()) return 0;
  Rational det = sign;
  for (std::size_t i = 0; i < m.rows(); ++i) det *= m(i, i);
  return det;
}

std::size_t rank(RationalMatrix m) { return eliminate(m).first; }

SymmetricRationalMatrix::SymmetricRationalMatrix(RationalMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) {
    throw AsymmetricMatrix("matrix is not square (" + std::to_string(m_.rows()) + "x" +
                           std::to_string(m_.cols()) + ")");
  }
  for (std::size_t r = 0; r < m_.rows(); ++r) {
    for (std::size_t c = r + 1; c < m_.cols(); ++c) {
      if (m_(r, c) != m_(c, r)) {
        throw AsymmetricMatrix("matrix is not symmetric at (" + std::to_string(r) + ", " +
                               std::to_string(c) + ")");
      }
    }
  }
}

SymmetricRationalMatrix SymmetricRationalMatrix::diagonal(const std::vector<Rational>& values) {
  RationalMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return SymmetricRationalMatrix(std::move(m));
}

namespace {

// Working state for congruence: a = P^T M P is maintained throughout.
struct Congruence {
  RationalMatrix a;
  RationalMatrix p;

  std::size_t n() const { return a.rows(); }

  void swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n(); ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t r = 0; r < n(); ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < n(); ++r) std::swap(p(r, i), p(r, j));
  }

  // row_i += f*row_j, col_i += f*col_j
  void add(std::size_t i, std::size_t j, const Rational& f) {
    for (std::size_t c = 0; c < n(); ++c) a(i, c) += f * a(j, c);
    for (std::size_t r = 0; r < n(); ++r) a(r, i) += f * a(r, j);
    for (std::size_t r = 0; r < n(); ++r) p(r, i) += f * p(r, j);
  }
};

}  // namespace

CongruenceDiagonalization congruence_diagonalize(const SymmetricRationalMatrix& m) {
  const std::size_t n = m.dimension();
  Congruence state{m.matrix(), RationalMatrix::identity(n)};
  RationalMatrix& a = state.a;

  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t diag = k + 1;
      while (diag < n && a(diag, diag) == 0) ++diag;
      if (diag < n) {
        state.swap(k, diag);
      } else {
        // Whole remaining diagonal is zero: look for an off-diagonal entry.
        std::size_t oi = n;
        std::size_t oj = n;
        for (std::size_t i = k; i < n && oi == n; ++i) {
          for (std::size_t j = i + 1; j < n; ++j) {
            if (a(i, j) != 0) {
              oi = i;
              oj = j;
              break;
            }
          }
        }
        if (oi == n) break;  // remaining block is zero
        state.add(oi, oj, 1);
        state.swap(k, oi);
      }
    }
    const Rational pivot = a(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a(r, k) == 0) continue;
      state.add(r, k, -a(r, k) / pivot);
    }
  }

  CongruenceDiagonalization out;
  out.diagonal.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.diagonal.push_back(a(i, i));
  out.transform = std::move(state.p);
  return out;
}

InertiaResult inertia(const SymmetricRationalMatrix& m) {
  InertiaResult result;
  for (const auto& d : congruence_diagonalize(m).diagonal) {
    switch (sign(d)) {
      case 1: ++result.positive; break;
      case -1: ++result.negative; break;
      default: ++result.zero; break;
    }
  }
  return result;
}

UnivariatePolynomial characteristic_polynomial(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  // Coefficients of det(tI - A_r), highest degree first, for the leading r x r block.
  std::vector<Rational> poly{1};
  for (std::size_t r = 0; r < n; ++r) {
    // Toeplitz column: 1, -a_rr, -R S, -R A S, ..., -R A^{r-1} S
    std::vector<Rational> toeplitz(r + 2);
    toeplitz[0] = 1;
    toeplitz[1] = -m(r, r);
    std::vector<Rational> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Rational dot = 0;
      for (std::size_t i = 0; i < r; ++i) dot += m(r, i) * v[i];
      toeplitz[k + 2] = -dot;
      if (k + 1 == r) break;
      std::vector<Rational> next(r);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) next[i] += m(i, j) * v[j];
      }
      v = std::move(next);
    }
    std::vector<Rational> next(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, r); ++j) next[i] += toeplitz[i - j] * poly[j];
    }
    poly = std::move(next);
  }
  std::reverse(poly.begin(), poly.end());
  return UnivariatePolynomial(std::move(poly));
}

InertiaResult inertia_via_charpoly(const SymmetricRationalMatrix& m) {
  const auto p = characteristic_polynomial(m);
  const auto c = p.coefficients();
  InertiaResult result;
  std::size_t z = 0;
  while (z < c.size() && c[z] == 0) ++z;
  result.zero = z;
  int last = 0;
  for (std::size_t i = z; i < c.size(); ++i) {
    const int s = sign(c[i]);
    if (s == 0) continue;
    if (last != 0 && s != last) ++result.positive;
    last = s;
  }
  result.negative = m.dimension() - result.zero - result.positive;
  return result;
}

}  // namespace hermite
