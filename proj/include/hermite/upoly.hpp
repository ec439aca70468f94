#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hermite/rational.hpp"

namespace hermite {

// Dense univariate polynomial, coefficients in ascending degree. Trailing
// zeros are stripped so the last coefficient is the leading one.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<Rational> ascending);
  UnivariatePolynomial(std::initializer_list<Rational> ascending)
      : UnivariatePolynomial(std::vector<Rational>(ascending)) {}

  // (t - root)
  static UnivariatePolynomial linear_factor(const Rational& root);

  std::span<const Rational> coefficients() const noexcept { return coefficients_; }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const noexcept { return coefficients_.empty(); }
  Rational coefficient(int power) const;
  const Rational& leading_coefficient() const { return coefficients_.back(); }

  Rational evaluate(const Rational& t) const;
  // Sign of f(t) as t -> +inf (positive) or -inf (negative direction).
  int sign_at_infinity(bool positive) const;

  UnivariatePolynomial derivative() const;
  UnivariatePolynomial monic() const;
  UnivariatePolynomial operator-() const;

  friend UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  friend UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

 private:
  void strip();
  std::vector<Rational> coefficients_;
};

// Quotient and remainder; throws std::domain_error on a zero divisor.
std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(const UnivariatePolynomial& a,
                                                             const UnivariatePolynomial& b);

// Monic gcd; gcd(0, 0) = 0.
UnivariatePolynomial gcd(const UnivariatePolynomial& a, const UnivariatePolynomial& b);

std::string to_string(const UnivariatePolynomial& f, const std::string& variable = "t");

}  // namespace hermite
