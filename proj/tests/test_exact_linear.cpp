#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "hermite/errors.hpp"
#include "hermite/exact_linear.hpp"

using namespace hermite;
using hermite::testing::Rng;

namespace {

SymmetricRationalMatrix sym(std::initializer_list<std::initializer_list<Rational>> rows) {
  return SymmetricRationalMatrix(RationalMatrix(rows));
}

InertiaResult counts(std::size_t p, std::size_t n, std::size_t z) { return {p, n, z}; }

// Congruence must be exact: P^T M P diagonal, P invertible, diagonal as reported.
void check_congruence(const SymmetricRationalMatrix& m) {
  const auto d = congruence_diagonalize(m);
  const RationalMatrix product = d.transform.transpose() * m.matrix() * d.transform;
  CHECK(product.is_diagonal());
  REQUIRE(d.diagonal.size() == m.dimension());
  for (std::size_t i = 0; i < m.dimension(); ++i) CHECK(product(i, i) == d.diagonal[i]);
  CHECK(determinant(d.transform) != 0);
}

}  // namespace

TEST_CASE("congruence_diagonalize examples") {
  const auto a = sym({{2, 0}, {0, 0}});
  const auto d = congruence_diagonalize(a);
  CHECK(d.diagonal == std::vector<Rational>{2, 0});
  CHECK(inertia(a) == counts(1, 0, 1));
  check_congruence(a);

  const auto hyperbolic = sym({{0, 1}, {1, 0}});
  CHECK(inertia(hyperbolic) == counts(1, 1, 0));
  CHECK(inertia(hyperbolic).rank() == 2);
  CHECK(inertia(hyperbolic).signature() == 0);
  check_congruence(hyperbolic);

  CHECK(inertia(SymmetricRationalMatrix(RationalMatrix::identity(3))) == counts(3, 0, 0));
}

TEST_CASE("inertia examples") {
  const auto printed = sym({{4, 0, -2, 0}, {0, 0, 4, 6}, {-2, 4, 4, 0}, {0, 6, 0, -4}});
  const auto i = inertia(printed);
  CHECK(i.rank() == 4);
  CHECK(i.signature() == 2);
  check_congruence(printed);

  CHECK(inertia(SymmetricRationalMatrix(RationalMatrix(5, 5))) == counts(0, 0, 5));
  CHECK(inertia(SymmetricRationalMatrix()) == counts(0, 0, 0));

  for (std::size_t r = 0; r <= 4; ++r) {
    for (std::size_t s = 0; r + 2 * s <= 8; ++s) {
      std::vector<Rational> diag(r, 1);
      diag.insert(diag.end(), s, 2);
      diag.insert(diag.end(), s, -2);
      const auto m = SymmetricRationalMatrix::diagonal(diag);
      CHECK(inertia(m).rank() == r + 2 * s);
      CHECK(inertia(m).signature() == static_cast<long>(r));
    }
  }
}

TEST_CASE("asymmetric input is rejected") {
  CHECK_THROWS_AS(sym({{1, 2}, {3, 4}}), AsymmetricMatrix);
  CHECK_THROWS_AS(SymmetricRationalMatrix(RationalMatrix(2, 3)), AsymmetricMatrix);
}

TEST_CASE("off-diagonal rescue pivots") {
  // every diagonal entry zero, including after the first elimination step
  const auto m = sym({{0, 1, 2, 0}, {1, 0, 0, 3}, {2, 0, 0, 1}, {0, 3, 1, 0}});
  check_congruence(m);
  CHECK(inertia(m) == inertia_via_charpoly(m));
  const auto partial = sym({{0, 0, 0}, {0, 0, 5}, {0, 5, 0}});
  check_congruence(partial);
  CHECK(inertia(partial) == counts(1, 1, 1));
}

TEST_CASE("characteristic_polynomial examples") {
  CHECK(characteristic_polynomial(sym({{2, 0}, {0, 0}})) == UnivariatePolynomial({0, -2, 1}));
  CHECK(characteristic_polynomial(RationalMatrix::identity(2)) == UnivariatePolynomial({1, -2, 1}));
  CHECK(characteristic_polynomial(sym({{0, 1}, {1, 0}})) == UnivariatePolynomial({-1, 0, 1}));
  CHECK(characteristic_polynomial(RationalMatrix()) == UnivariatePolynomial({1}));
}

TEST_CASE("characteristic_polynomial matches det(tI - M) at sample points") {
  Rng rng(31337);
  for (int iter = 0; iter < 40; ++iter) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 7));
    const RationalMatrix m = testing::random_matrix(rng, n, n);  // not necessarily symmetric
    const auto p = characteristic_polynomial(m);
    CHECK(p.degree() == static_cast<int>(n));
    CHECK(p.leading_coefficient() == 1);
    for (long t = -static_cast<long>(n); t <= static_cast<long>(n); ++t) {
      RationalMatrix shifted(n, n);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) shifted(r, c) = (r == c ? Rational(t) : Rational(0)) - m(r, c);
      }
      CHECK(p.evaluate(t) == determinant(shifted));
    }
  }
}

TEST_CASE("inertia_via_charpoly examples") {
  CHECK(inertia_via_charpoly(sym({{2, 0}, {0, 0}})) == counts(1, 0, 1));
  CHECK(inertia_via_charpoly(sym({{0, 1}, {1, 0}})) == counts(1, 1, 0));
  CHECK(inertia_via_charpoly(SymmetricRationalMatrix(RationalMatrix(2, 2))) == counts(0, 0, 2));
}

TEST_CASE("determinant and rank by elimination") {
  CHECK(determinant(RationalMatrix{{1, 2}, {3, 4}}) == -2);
  CHECK(determinant(RationalMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(RationalMatrix{{1, 2}, {2, 4}}) == 0);
  CHECK(rank(RationalMatrix{{1, 2}, {2, 4}}) == 1);
  CHECK(rank(RationalMatrix(3, 4)) == 0);
  CHECK_THROWS_AS(determinant(RationalMatrix(2, 3)), DimensionMismatch);
}

TEST_CASE("oracle agreement on random symmetric matrices") {
  Rng rng(2024);
  for (int iter = 0; iter < 200; ++iter) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 0, 12));
    const auto m = testing::random_symmetric(rng, n);
    const auto primary = inertia(m);
    CHECK(primary == inertia_via_charpoly(m));
    CHECK(primary.dimension() == n);
    CHECK(primary.rank() == rank(m.matrix()));
    check_congruence(m);
  }
}

TEST_CASE("Sylvester stability under random congruences") {
  Rng rng(11);
  for (int iter = 0; iter < 60; ++iter) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 8));
    const auto m = testing::random_symmetric(rng, n);
    const RationalMatrix p = testing::random_invertible(rng, n);
    const SymmetricRationalMatrix moved(p.transpose() * m.matrix() * p);
    CHECK(inertia(moved) == inertia(m));
  }
}
