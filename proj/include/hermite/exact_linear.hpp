#pragma once

#include <cstddef>
#include <vector>

#include "hermite/rational.hpp"
#include "hermite/upoly.hpp"

namespace hermite {

// Dense row-major matrix of rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  bool is_symmetric() const;
  bool is_diagonal() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Fraction-based Gaussian elimination.
Rational determinant(RationalMatrix m);
std::size_t rank(RationalMatrix m);

class SymmetricRationalMatrix {
 public:
  SymmetricRationalMatrix() = default;
  // Throws AsymmetricMatrix unless m is square and symmetric.
  explicit SymmetricRationalMatrix(RationalMatrix m);

  static SymmetricRationalMatrix diagonal(const std::vector<Rational>& values);

  std::size_t dimension() const noexcept { return m_.rows(); }
  const Rational& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
  const RationalMatrix& matrix() const noexcept { return m_; }

  friend bool operator==(const SymmetricRationalMatrix&, const SymmetricRationalMatrix&) = default;

 private:
  RationalMatrix m_;
};

struct InertiaResult {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  std::size_t dimension() const noexcept { return positive + negative + zero; }
  std::size_t rank() const noexcept { return positive + negative; }
  long signature() const noexcept {
    return static_cast<long>(positive) - static_cast<long>(negative);
  }

  friend bool operator==(const InertiaResult&, const InertiaResult&) = default;
};

struct CongruenceDiagonalization {
  std::vector<Rational> diagonal;
  // transform^T * M * transform == diag(diagonal)
  RationalMatrix transform;
};

// Symmetric Gaussian elimination by congruence. A zero pivot block with a
// nonzero off-diagonal entry (i, j) is rescued by adding row/column j to
// row/column i, which puts 2*M[i][j] on the diagonal.
CongruenceDiagonalization congruence_diagonalize(const SymmetricRationalMatrix& m);

InertiaResult inertia(const SymmetricRationalMatrix& m);

// det(t*I - M) by Berkowitz's division-free recurrence.
UnivariatePolynomial characteristic_polynomial(const RationalMatrix& m);
inline UnivariatePolynomial characteristic_polynomial(const SymmetricRationalMatrix& m) {
  return characteristic_polynomial(m.matrix());
}

// Inertia from the characteristic polynomial: zero count is the multiplicity of
// the root 0 and the positive count is the number of sign changes of the
// remaining coefficients (Descartes' rule is exact when every root is real).
InertiaResult inertia_via_charpoly(const SymmetricRationalMatrix& m);

}  // namespace hermite
