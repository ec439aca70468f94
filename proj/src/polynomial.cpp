#include "hermite/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "hermite/errors.hpp"

namespace hermite {

namespace {

void require_same_ring(const Polynomial& p, const Polynomial& q) {
  if (p.order() != q.order()) {
    throw DimensionMismatch("polynomials live in different rings (variable count or order differ)");
  }
}

// Merges two descending term sequences, q scaled by sign.
std::vector<Term> merge(std::span<const Term> a, std::span<const Term> b, const MonomialOrder& order,
                        bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const auto c = order.compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(subtract ? Term{b[j].monomial, -b[j].coefficient} : b[j]);
      ++j;
    } else {
      Rational sum = subtract ? Rational(a[i].coefficient - b[j].coefficient)
                              : Rational(a[i].coefficient + b[j].coefficient);
      if (sum != 0) out.push_back({a[i].monomial, std::move(sum)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(subtract ? Term{b[j].monomial, -b[j].coefficient} : b[j]);
  }
  return out;
}

}  // namespace

Polynomial Polynomial::from_terms(MonomialOrder order, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.monomial.variable_count() != order.variable_count()) {
      throw DimensionMismatch("term has the wrong number of variables");
    }
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.monomial, b.monomial) > 0;
  });
  Polynomial p(order);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient += t.coefficient;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coefficient == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coefficient == 0) p.terms_.pop_back();
  return p;
}

Polynomial Polynomial::constant(MonomialOrder order, const Rational& value) {
  return term(order, Monomial::one(order.variable_count()), value);
}

Polynomial Polynomial::term(MonomialOrder order, Monomial monomial, const Rational& coefficient) {
  if (monomial.variable_count() != order.variable_count()) {
    throw DimensionMismatch("term has the wrong number of variables");
  }
  Polynomial p(order);
  if (coefficient != 0) p.terms_.push_back({std::move(monomial), coefficient});
  return p;
}

Polynomial Polynomial::variable(MonomialOrder order, std::size_t index) {
  return term(order, Monomial::variable(order.variable_count(), index));
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

std::uint64_t Polynomial::total_degree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [&](const Term& t, const Monomial& key) {
    return order_.compare(t.monomial, key) > 0;
  });
  if (it != terms_.end() && it->monomial == m) return it->coefficient;
  return 0;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(1 / leading_coefficient());
}

Polynomial Polynomial::scaled(const Rational& factor) const {
  Polynomial out(order_);
  if (factor == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.monomial, t.coefficient * factor});
  return out;
}

Polynomial Polynomial::multiplied_by(const Monomial& m, const Rational& coefficient) const {
  Polynomial out(order_);
  if (coefficient == 0) return out;
  out.terms_.reserve(terms_.size());
  // Term orders are compatible with multiplication, so the order is preserved.
  for (const auto& t : terms_) out.terms_.push_back({t.monomial * m, t.coefficient * coefficient});
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(order_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::with_order(MonomialOrder order) const {
  if (order.variable_count() != variable_count()) {
    throw DimensionMismatch("cannot change the variable count of a polynomial");
  }
  return from_terms(order, terms_);
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  require_same_ring(p, q);
  Polynomial out(p.order_);
  out.terms_ = merge(p.terms_, q.terms_, p.order_, false);
  return out;
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
  require_same_ring(p, q);
  Polynomial out(p.order_);
  out.terms_ = merge(p.terms_, q.terms_, p.order_, true);
  return out;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  require_same_ring(p, q);
  if (p.is_zero() || q.is_zero()) return Polynomial(p.order_);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(p.size() * q.size());
  for (const auto& a : p.terms_) {
    for (const auto& b : q.terms_) {
      acc[a.monomial * b.monomial] += a.coefficient * b.coefficient;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) terms.push_back({m, std::move(c)});
  }
  return Polynomial::from_terms(p.order_, std::move(terms));
}

bool operator==(const Polynomial& p, const Polynomial& q) {
  return p.order_ == q.order_ && p.terms_ == q.terms_;
}

}  // namespace hermite
