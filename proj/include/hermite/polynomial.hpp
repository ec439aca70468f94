#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hermite/monomial.hpp"
#include "hermite/rational.hpp"

namespace hermite {

struct Term {
  Monomial monomial;
  Rational coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

// Sparse polynomial over the rationals. Terms are kept strictly descending
// under the polynomial's order with no zero coefficients, so the leading term
// is always terms().front().
class Polynomial {
 public:
  explicit Polynomial(MonomialOrder order) : order_(order) {}

  // Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(MonomialOrder order, std::vector<Term> terms);
  static Polynomial constant(MonomialOrder order, const Rational& value);
  static Polynomial term(MonomialOrder order, Monomial monomial, const Rational& coefficient = 1);
  // x_index
  static Polynomial variable(MonomialOrder order, std::size_t index);

  const MonomialOrder& order() const noexcept { return order_; }
  std::size_t variable_count() const noexcept { return order_.variable_count(); }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;

  // Undefined on the zero polynomial.
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Rational& leading_coefficient() const { return terms_.front().coefficient; }

  // Highest total degree among the terms; 0 for the zero polynomial.
  std::uint64_t total_degree() const noexcept;

  // Coefficient of m, zero when absent.
  Rational coefficient(const Monomial& m) const;

  Polynomial monic() const;
  Polynomial scaled(const Rational& factor) const;
  Polynomial multiplied_by(const Monomial& m, const Rational& coefficient = 1) const;
  Polynomial pow(unsigned exponent) const;
  Polynomial with_order(MonomialOrder order) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);

  // Same ring and same terms; the order must match too.
  friend bool operator==(const Polynomial& p, const Polynomial& q);

 private:
  MonomialOrder order_;
  std::vector<Term> terms_;
};

}  // namespace hermite
