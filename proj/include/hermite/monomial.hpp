#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace hermite {

using Exponent = std::uint32_t;

// Exponent vector over a fixed number of variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents) : exponents_(std::move(exponents)) {}

  // The monomial 1.
  static Monomial one(std::size_t variable_count) {
    return Monomial(std::vector<Exponent>(variable_count, 0));
  }

  // x_index^power in a ring with variable_count variables.
  static Monomial variable(std::size_t variable_count, std::size_t index, Exponent power = 1);

  std::size_t variable_count() const noexcept { return exponents_.size(); }
  std::span<const Exponent> exponents() const noexcept { return exponents_; }
  Exponent operator[](std::size_t i) const { return exponents_[i]; }

  std::uint64_t degree() const noexcept;
  bool is_one() const noexcept;

  // True iff this monomial divides other.
  bool divides(const Monomial& other) const;

  // Index of the single variable when this is x_i^m with m > 0.
  std::optional<std::size_t> pure_power_variable() const noexcept;

  Monomial operator*(const Monomial& other) const;
  // Exact quotient; requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exponents_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

enum class OrderKind { Lex, GrLex, GrevLex };

std::string_view to_string(OrderKind kind);
std::optional<OrderKind> parse_order_kind(std::string_view name);

// Term order on exponent vectors of a fixed length. Variables are ranked
// x_1 > x_2 > ... > x_n in every kind.
class MonomialOrder {
 public:
  explicit MonomialOrder(std::size_t variable_count, OrderKind kind = OrderKind::GrevLex);

  OrderKind kind() const noexcept { return kind_; }
  std::size_t variable_count() const noexcept { return variable_count_; }

  // Throws DimensionMismatch when either operand has the wrong length.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  std::size_t variable_count_;
  OrderKind kind_;
};

}  // namespace hermite
