#include "hermite/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hermite/errors.hpp"

namespace hermite {

namespace {

void require_same_length(const Monomial& a, const Monomial& b) {
  if (a.variable_count() != b.variable_count()) {
    throw DimensionMismatch("monomials over " + std::to_string(a.variable_count()) + " and " +
                            std::to_string(b.variable_count()) + " variables");
  }
}

}  // namespace

Monomial Monomial::variable(std::size_t variable_count, std::size_t index, Exponent power) {
  if (index >= variable_count) {
    throw std::out_of_range("variable index " + std::to_string(index) + " out of range");
  }
  Monomial m = one(variable_count);
  m.exponents_[index] = power;
  return m;
}

std::uint64_t Monomial::degree() const noexcept {
  return std::accumulate(exponents_.begin(), exponents_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exponents_.begin(), exponents_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  require_same_length(*this, other);
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

std::optional<std::size_t> Monomial::pure_power_variable() const noexcept {
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (found) return std::nullopt;
    found = i;
  }
  return found;
}

Monomial Monomial::operator*(const Monomial& other) const {
  require_same_length(*this, other);
  Monomial out(*this);
  for (std::size_t i = 0; i < exponents_.size(); ++i) out.exponents_[i] += other.exponents_[i];
  return out;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw std::domain_error("monomial is not divisible");
  Monomial out(*this);
  for (std::size_t i = 0; i < exponents_.size(); ++i) out.exponents_[i] -= divisor.exponents_[i];
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_length(a, b);
  std::vector<Exponent> e(a.variable_count());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

bool coprime(const Monomial& a, const Monomial& b) {
  require_same_length(a, b);
  for (std::size_t i = 0; i < a.variable_count(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Exponent e : m.exponents()) {
    h ^= e;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string_view to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::Lex: return "lex";
    case OrderKind::GrLex: return "grlex";
    case OrderKind::GrevLex: return "grevlex";
  }
  return "?";
}

std::optional<OrderKind> parse_order_kind(std::string_view name) {
  if (name == "lex") return OrderKind::Lex;
  if (name == "grlex") return OrderKind::GrLex;
  if (name == "grevlex") return OrderKind::GrevLex;
  return std::nullopt;
}

MonomialOrder::MonomialOrder(std::size_t variable_count, OrderKind kind)
    : variable_count_(variable_count), kind_(kind) {
  if (variable_count == 0) throw std::invalid_argument("monomial order needs at least one variable");
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.variable_count() != variable_count_ || b.variable_count() != variable_count_) {
    throw DimensionMismatch("monomial does not match the order's " +
                            std::to_string(variable_count_) + " variables");
  }
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  if (kind_ != OrderKind::Lex) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  }
  if (kind_ == OrderKind::GrevLex) {
    for (std::size_t i = variable_count_; i-- > 0;) {
      if (ea[i] != eb[i]) return eb[i] <=> ea[i];
    }
    return std::strong_ordering::equal;
  }
  for (std::size_t i = 0; i < variable_count_; ++i) {
    if (ea[i] != eb[i]) return ea[i] <=> eb[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace hermite
