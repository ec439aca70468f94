#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "hermite/monomial.hpp"
#include "hermite/polynomial.hpp"

namespace hermite {

// Reduced Groebner basis: monic, inter-reduced, generators sorted ascending by
// leading monomial. Unique for a given ideal and order.
class GroebnerBasis {
 public:
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  const std::vector<Polynomial>& original_generators() const noexcept { return originals_; }
  const MonomialOrder& order() const noexcept { return order_; }
  std::size_t variable_count() const noexcept { return order_.variable_count(); }

  // The basis {1}.
  bool is_unit_ideal() const noexcept;

 private:
  friend GroebnerBasis buchberger(std::span<const Polynomial>, MonomialOrder);
  GroebnerBasis(MonomialOrder order, std::vector<Polynomial> generators,
                std::vector<Polynomial> originals)
      : order_(order), generators_(std::move(generators)), originals_(std::move(originals)) {}

  MonomialOrder order_;
  std::vector<Polynomial> generators_;
  std::vector<Polynomial> originals_;
};

// Standard monomials of a zero-dimensional ideal, ascending under the order.
class QuotientBasis {
 public:
  QuotientBasis(MonomialOrder order, std::vector<Monomial> monomials);

  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
  std::size_t dimension() const noexcept { return monomials_.size(); }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
  const MonomialOrder& order() const noexcept { return order_; }

  std::optional<std::size_t> index_of(const Monomial& m) const;

 private:
  MonomialOrder order_;
  std::vector<Monomial> monomials_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

// Remainder of multivariate division of p by divisors. Divisors are tried in
// the given order for each leading term; zero divisors are skipped.
Polynomial reduce(const Polynomial& p, std::span<const Polynomial> divisors);

// Unique remainder modulo the ideal; p is converted to the basis' order first.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis);

// (L/lt(f))*f - (L/lt(g))*g with L = lcm of the leading monomials.
// Throws std::invalid_argument on a zero operand.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// Reduced Groebner basis of the ideal generated by generators, under order.
// Zero generators are dropped; throws NotZeroDimensional when nothing is left
// (the zero ideal).
GroebnerBasis buchberger(std::span<const Polynomial> generators, MonomialOrder order);

bool is_zero_dimensional(const GroebnerBasis& basis);

// Throws NotZeroDimensional when the staircase is infinite.
QuotientBasis standard_monomials(const GroebnerBasis& basis);

// Post-construction checks of the reduced-basis invariants.
struct GroebnerAudit {
  bool monic = true;
  bool reduced = true;
  bool contains_originals = true;
  bool s_pairs_reduce_to_zero = true;

  bool ok() const noexcept { return monic && reduced && contains_originals && s_pairs_reduce_to_zero; }
};

GroebnerAudit audit(const GroebnerBasis& basis);

}  // namespace hermite
