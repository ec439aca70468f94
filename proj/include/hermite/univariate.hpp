#pragma once

#include <cstddef>
#include <vector>

#include "hermite/exact_linear.hpp"
#include "hermite/polynomial.hpp"
#include "hermite/upoly.hpp"

namespace hermite {

// Power sums p_0, p_1, ... of the roots of a monic polynomial.
struct NewtonSums {
  std::vector<Rational> values;
};

// First `count` power sums via Newton's identities. Throws
// std::invalid_argument for non-monic input or degree < 1.
NewtonSums newton_sums(const UnivariatePolynomial& monic_f, std::size_t count);

// n x n Hankel matrix (p_{i+j}), 0-based, so the corner entry is p_0 = n.
// Non-monic input is normalized first.
SymmetricRationalMatrix classic_hermite_matrix(const UnivariatePolynomial& f);

// f / gcd(f, f'), monic. Its degree counts the distinct complex roots.
UnivariatePolynomial squarefree_part(const UnivariatePolynomial& f);

// Distinct real roots, from sign changes of the Sturm chain at -inf and +inf.
std::size_t sturm_count(const UnivariatePolynomial& f);

// Conversions to and from one-variable sparse polynomials.
UnivariatePolynomial to_univariate(const Polynomial& p);
Polynomial from_univariate(const UnivariatePolynomial& f, MonomialOrder order);

}  // namespace hermite
