#include "hermite/univariate.hpp"

#include <algorithm>
#include <stdexcept>

#include "hermite/errors.hpp"

namespace hermite {

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> ascending)
    : coefficients_(std::move(ascending)) {
  strip();
}

void UnivariatePolynomial::strip() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

UnivariatePolynomial UnivariatePolynomial::linear_factor(const Rational& root) {
  return UnivariatePolynomial({Rational(-root), Rational(1)});
}

Rational UnivariatePolynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coefficients_[static_cast<std::size_t>(power)];
}

Rational UnivariatePolynomial::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

int UnivariatePolynomial::sign_at_infinity(bool positive) const {
  if (is_zero()) return 0;
  const int s = sign(leading_coefficient());
  return (positive || degree() % 2 == 0) ? s : -s;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < coefficients_.size(); ++i) {
    d.push_back(coefficients_[i] * static_cast<long>(i));
  }
  return UnivariatePolynomial(std::move(d));
}

UnivariatePolynomial UnivariatePolynomial::monic() const {
  if (is_zero()) return *this;
  UnivariatePolynomial out(*this);
  const Rational lead = leading_coefficient();
  for (auto& c : out.coefficients_) c /= lead;
  return out;
}

UnivariatePolynomial UnivariatePolynomial::operator-() const {
  UnivariatePolynomial out(*this);
  for (auto& c : out.coefficients_) c = -c;
  return out;
}

UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  std::vector<Rational> c(std::max(a.coefficients_.size(), b.coefficients_.size()));
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) c[i] += a.coefficients_[i];
  for (std::size_t i = 0; i < b.coefficients_.size(); ++i) c[i] += b.coefficients_[i];
  return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  return a + (-b);
}

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      c[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return UnivariatePolynomial(std::move(c));
}

std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(const UnivariatePolynomial& a,
                                                             const UnivariatePolynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.degree() < b.degree()) return {UnivariatePolynomial{}, a};
  std::vector<Rational> rem(a.coefficients().begin(), a.coefficients().end());
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const auto bc = b.coefficients();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational q = rem[k + db] / bc[db];
    quot[k] = q;
    if (q == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) rem[k + i] -= q * bc[i];
  }
  return {UnivariatePolynomial(std::move(quot)), UnivariatePolynomial(std::move(rem))};
}

UnivariatePolynomial gcd(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  UnivariatePolynomial x = a;
  UnivariatePolynomial y = b;
  while (!y.is_zero()) {
    auto r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::string to_string(const UnivariatePolynomial& f, const std::string& variable) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int k = f.degree(); k >= 0; --k) {
    const Rational c = f.coefficient(k);
    if (c == 0) continue;
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const Rational mag = abs(c);
    if (k == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += variable;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

NewtonSums newton_sums(const UnivariatePolynomial& f, std::size_t count) {
  if (f.degree() < 1) throw std::invalid_argument("Newton sums need degree >= 1");
  if (f.leading_coefficient() != 1) throw std::invalid_argument("Newton sums need a monic polynomial");
  const std::size_t n = static_cast<std::size_t>(f.degree());
  // a(j) is the coefficient of t^j; zero for j < 0.
  auto a = [&](long j) { return f.coefficient(static_cast<int>(j)); };
  NewtonSums sums;
  sums.values.reserve(count);
  for (std::size_t r = 0; r < count; ++r) {
    if (r == 0) {
      sums.values.emplace_back(static_cast<long>(n));
      continue;
    }
    // p_r = -(a_{n-1} p_{r-1} + ... + a_{n-r+1} p_1) - r a_{n-r}
    Rational p = 0;
    for (std::size_t i = 1; i < r && i <= n; ++i) {
      p -= a(static_cast<long>(n) - static_cast<long>(i)) * sums.values[r - i];
    }
    if (r <= n) p -= static_cast<long>(r) * a(static_cast<long>(n) - static_cast<long>(r));
    sums.values.push_back(std::move(p));
  }
  return sums;
}

SymmetricRationalMatrix classic_hermite_matrix(const UnivariatePolynomial& f) {
  if (f.degree() < 1) throw std::invalid_argument("Hermite matrix needs degree >= 1");
  const UnivariatePolynomial g = f.monic();
  const std::size_t n = static_cast<std::size_t>(g.degree());
  const auto sums = newton_sums(g, 2 * n - 1);
  RationalMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) h(i, j) = sums.values[i + j];
  }
  return SymmetricRationalMatrix(std::move(h));
}

UnivariatePolynomial squarefree_part(const UnivariatePolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree part of the zero polynomial");
  return divmod(f, gcd(f, f.derivative())).first.monic();
}

std::size_t sturm_count(const UnivariatePolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("Sturm count of the zero polynomial");
  if (f.degree() == 0) return 0;
  std::vector<UnivariatePolynomial> chain{f, f.derivative()};
  while (true) {
    auto r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  auto variations = [&](bool positive) {
    std::size_t v = 0;
    int last = 0;
    for (const auto& p : chain) {
      const int s = p.sign_at_infinity(positive);
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  };
  return variations(false) - variations(true);
}

UnivariatePolynomial to_univariate(const Polynomial& p) {
  if (p.variable_count() != 1) throw DimensionMismatch("expected a one-variable polynomial");
  std::vector<Rational> c;
  for (const auto& [m, coeff] : p.terms()) {
    const std::size_t k = m[0];
    if (c.size() <= k) c.resize(k + 1);
    c[k] += coeff;
  }
  return UnivariatePolynomial(std::move(c));
}

Polynomial from_univariate(const UnivariatePolynomial& f, MonomialOrder order) {
  if (order.variable_count() != 1) throw DimensionMismatch("expected a one-variable order");
  std::vector<Term> terms;
  const auto c = f.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] != 0) terms.push_back({Monomial(std::vector<Exponent>{static_cast<Exponent>(k)}), c[k]});
  }
  return Polynomial::from_terms(order, std::move(terms));
}

}  // namespace hermite
