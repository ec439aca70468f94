#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hermite/exact_linear.hpp"
#include "hermite/groebner.hpp"
#include "hermite/polynomial.hpp"

namespace hermite {

// Coordinates of a normal form over the basis. Throws BasisMismatch when the
// support leaves the basis.
std::vector<Rational> coordinates(const Polynomial& normal_form, const QuotientBasis& basis);

struct MultiplicationMatrix {
  RationalMatrix entries;  // column k = coordinates of NF(element * b_k)
  Polynomial element;      // multiplier in normal form
  QuotientBasis basis;
};

MultiplicationMatrix multiplication_matrix(const Polynomial& g, const GroebnerBasis& basis,
                                           const QuotientBasis& quotient);

// Normal forms of all pairwise basis products b_i * b_j, stored for i <= j.
class ProductTable {
 public:
  // Rows are filled by `threads` workers; the result does not depend on it.
  ProductTable(const GroebnerBasis& basis, const QuotientBasis& quotient, unsigned threads = 1);

  std::size_t dimension() const noexcept { return dimension_; }
  const Polynomial& product(std::size_t i, std::size_t j) const;

 private:
  std::size_t dimension_;
  std::vector<Polynomial> products_;  // packed upper triangle
};

// The linear map g -> tr(phi_g) on A, stored by its values on the basis.
class TraceFunctional {
 public:
  TraceFunctional(QuotientBasis quotient, std::vector<Rational> values)
      : quotient_(std::move(quotient)), values_(std::move(values)) {}

  const QuotientBasis& basis() const noexcept { return quotient_; }
  std::span<const Rational> values() const noexcept { return values_; }
  const Rational& at(std::size_t basis_index) const { return values_[basis_index]; }
  // Trace of multiplication by a normal form.
  Rational operator()(const Polynomial& normal_form) const;

 private:
  QuotientBasis quotient_;
  std::vector<Rational> values_;
};

TraceFunctional trace_functional(const GroebnerBasis& basis, const QuotientBasis& quotient);
TraceFunctional trace_functional(const ProductTable& table, const QuotientBasis& quotient);

struct HermiteForm {
  SymmetricRationalMatrix entries;
  QuotientBasis basis;
};

HermiteForm hermite_form(const GroebnerBasis& basis, const QuotientBasis& quotient,
                         unsigned threads = 1);

struct HermiteReport {
  HermiteForm form;
  InertiaResult inertia;
  std::size_t quotient_dimension = 0;

  std::size_t rank() const noexcept { return inertia.rank(); }
  long signature() const noexcept { return inertia.signature(); }
  std::size_t complex_count() const noexcept { return inertia.rank(); }
  std::size_t real_count() const noexcept { return static_cast<std::size_t>(inertia.signature()); }
};

// Throws NotZeroDimensional for positive-dimensional ideals.
HermiteReport hermite_report(const GroebnerBasis& basis, unsigned threads = 1);

// Groebner basis under `order`, then hermite_report.
HermiteReport hermite_report(std::span<const Polynomial> system, OrderKind order = OrderKind::GrevLex);

}  // namespace hermite
