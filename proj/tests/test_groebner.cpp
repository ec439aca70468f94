#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "generators.hpp"
#include "hermite/errors.hpp"
#include "hermite/groebner.hpp"
#include "hermite/parser.hpp"

using namespace hermite;
using hermite::testing::Rng;

namespace {

const std::vector<std::string> xs{"x1", "x2"};

Polynomial P(std::string_view text, OrderKind kind = OrderKind::GrevLex) {
  return parse_polynomial(text, xs, kind);
}

GroebnerBasis gb(std::vector<std::string> texts, OrderKind kind = OrderKind::GrevLex) {
  const auto sys = parse_system(SystemSource{{}, texts}, kind);
  return buchberger(sys.polynomials, MonomialOrder(sys.variables.size(), kind));
}

std::vector<std::string> formatted(const GroebnerBasis& g, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& p : g.generators()) out.push_back(format_polynomial(p, names));
  return out;
}

}  // namespace

TEST_CASE("normal_form examples") {
  const auto g = gb({"x1-1", "x2^2"});
  CHECK(normal_form(P("x1^2 + x2^2 - 1"), g).is_zero());
  const Polynomial standard = P("3*x2 - 1/2");
  CHECK(normal_form(standard, g) == standard);
  CHECK(normal_form(P("x1*x2"), g) == P("x2"));
}

TEST_CASE("normal_form converts to the basis order and rejects other rings") {
  const auto g = gb({"x1-1", "x2^2"}, OrderKind::Lex);
  CHECK(normal_form(P("x1*x2"), g) == P("x2", OrderKind::Lex));
  CHECK_THROWS_AS(normal_form(Polynomial::variable(MonomialOrder(3), 0), g), DimensionMismatch);
}

TEST_CASE("s_polynomial examples") {
  const auto f = P("x1^2+x2^2-1");
  CHECK(s_polynomial(f, f).is_zero());
  // lcm = x1*x2^2: x2^2*(x1-1) - x1*x2^2 = -x2^2
  const auto s = s_polynomial(P("x1-1"), P("x2^2"));
  CHECK(s == P("-x2^2"));
  CHECK(reduce(s, std::vector{P("x1-1"), P("x2^2")}).is_zero());
  // lcm = x1^2: (x1^2+x2^2-1) - x1*(x1-1) = x2^2 + x1 - 1
  const auto s2 = s_polynomial(P("x1^2+x2^2-1"), P("x1-1"));
  CHECK(s2 == P("x2^2+x1-1"));
  CHECK(reduce(s2, std::vector{P("x1-1")}) == P("x2^2"));
  CHECK_THROWS_AS(s_polynomial(P("0"), f), std::invalid_argument);
}

TEST_CASE("buchberger examples") {
  auto g = gb({"x1-1", "x1^2+x2^2-1"});
  CHECK(formatted(g, xs) == std::vector<std::string>{"x1-1", "x2^2"});

  g = gb({"3*x1^2 - 6*x2"});
  CHECK(formatted(g, xs) == std::vector<std::string>{"x1^2-2*x2"});

  g = gb({"x1", "x1+1"});
  CHECK(g.is_unit_ideal());
  CHECK(formatted(g, {"x1"}) == std::vector<std::string>{"1"});

  CHECK_THROWS_AS(gb({"0", "0*x1"}), NotZeroDimensional);
  // zero generators are dropped, not fatal
  CHECK(formatted(gb({"0", "x1-1", "x2"}), xs) == std::vector<std::string>{"x2", "x1-1"});
}

TEST_CASE("is_zero_dimensional examples") {
  CHECK(is_zero_dimensional(gb({"x1-1", "x2^2"})));
  CHECK_FALSE(is_zero_dimensional(gb({"x1-x2"})));
  CHECK(is_zero_dimensional(gb({"x1", "x1+1"})));
  CHECK_FALSE(is_zero_dimensional(gb({"x1*x2"})));
  CHECK_FALSE(is_zero_dimensional(gb({"x1^2", "x1*x2"})));
}

TEST_CASE("standard_monomials examples") {
  auto q = standard_monomials(gb({"x1-1", "x2^2"}));
  REQUIRE(q.dimension() == 2);
  CHECK(q[0] == Monomial({0, 0}));
  CHECK(q[1] == Monomial({0, 1}));

  CHECK(standard_monomials(gb({"x1", "x1+1"})).dimension() == 0);

  q = standard_monomials(gb({"x1*x2+x2-1", "x1^2+x2^2-1"}));
  CHECK(q.dimension() == 4);
  CHECK(q[0].is_one());
  CHECK(q.index_of(Monomial({0, 0})) == 0u);
  CHECK_FALSE(q.index_of(Monomial({5, 5})).has_value());

  CHECK_THROWS_AS(standard_monomials(gb({"x1-x2"})), NotZeroDimensional);
}

TEST_CASE("lex staircase can exceed the generators' degree") {
  // Under lex the basis of this ideal is 1, x2, x2^2, x2^3: degree 3 > 2.
  const auto q = standard_monomials(gb({"x1*x2+x2-1", "x1^2+x2^2-1"}, OrderKind::Lex));
  REQUIRE(q.dimension() == 4);
  CHECK(q[3] == Monomial({0, 3}));
}

TEST_CASE("fixture bases pass the audit and count the quotient dimension") {
  for (const auto& fx : testing::fixtures()) {
    for (auto kind : {OrderKind::Lex, OrderKind::GrLex, OrderKind::GrevLex}) {
      CAPTURE(fx.name);
      CAPTURE(to_string(kind));
      const auto g = gb(fx.polynomials, kind);
      const auto a = audit(g);
      CHECK(a.monic);
      CHECK(a.reduced);
      CHECK(a.contains_originals);
      CHECK(a.s_pairs_reduce_to_zero);
      REQUIRE(is_zero_dimensional(g));
      const auto q = standard_monomials(g);
      CHECK(q.dimension() == fx.dimension);
      CHECK(std::is_sorted(q.monomials().begin(), q.monomials().end(),
                           [&](const Monomial& a, const Monomial& b) { return g.order().less(a, b); }));
      for (const auto& m : q.monomials()) {
        for (const auto& p : g.generators()) CHECK_FALSE(p.leading_monomial().divides(m));
      }
    }
  }
}

TEST_CASE("canonicity: permuting generators gives the identical basis") {
  for (const auto& fx : testing::fixtures()) {
    auto texts = fx.polynomials;
    std::sort(texts.begin(), texts.end());
    const auto sys = parse_system(SystemSource{{}, texts});
    const MonomialOrder order(sys.variables.size());
    const auto reference = buchberger(sys.polynomials, order).generators();
    auto polys = sys.polynomials;
    std::sort(polys.begin(), polys.end(), [](const Polynomial& a, const Polynomial& b) {
      return a.size() < b.size();
    });
    do {
      CHECK(buchberger(polys, order).generators() == reference);
    } while (std::next_permutation(polys.begin(), polys.end(), [](const Polynomial& a, const Polynomial& b) {
      return a.size() < b.size();
    }));
    // redundant generators change nothing either
    polys.push_back(polys.front() * polys.back());
    CHECK(buchberger(polys, order).generators() == reference);
  }
}

TEST_CASE("normal form properties on random instances") {
  Rng rng(99);
  const std::vector<std::vector<std::string>> systems{
      {"x1*x2+x2-1", "x1^2+x2^2-1"}, {"x1^2-2", "x2^2-x1", "x3-x1*x2"}, {"x1^3-x1", "x2^2+1"}};
  for (const auto& texts : systems) {
    for (auto kind : {OrderKind::Lex, OrderKind::GrevLex}) {
      const auto g = gb(texts, kind);
      for (int i = 0; i < 25; ++i) {
        const auto p = testing::random_polynomial(rng, g.order(), 5, 4, 20);
        const auto q = testing::random_polynomial(rng, g.order(), 5, 4, 20);
        const Rational a = testing::random_rational(rng, 9);
        const Rational b = testing::random_rational(rng, 9);
        const auto np = normal_form(p, g);
        // linear
        CHECK(normal_form(p.scaled(a) + q.scaled(b), g) == np.scaled(a) + normal_form(q, g).scaled(b));
        // idempotent
        CHECK(normal_form(np, g) == np);
        // p - NF(p) lies in the ideal
        CHECK(normal_form(p - np, g).is_zero());
        // ideal elements vanish
        for (const auto& f : g.original_generators()) CHECK(normal_form(f * q, g).is_zero());
      }
    }
  }
}

TEST_CASE("dimension is order independent on random zero-dimensional systems") {
  Rng rng(5);
  int checked = 0;
  for (int iter = 0; iter < 40; ++iter) {
    // x_i^{d_i} + (lower-degree noise) per variable guarantees zero-dimensionality
    // under graded orders; lex may reorganize but the dimension cannot change.
    const std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
    const MonomialOrder grevlex(n);
    std::vector<Polynomial> system;
    for (std::size_t v = 0; v < n; ++v) {
      const auto d = static_cast<Exponent>(testing::uniform(rng, 1, 3));
      Polynomial p = Polynomial::term(grevlex, Monomial::variable(n, v, d));
      for (int k = 0; k < 2; ++k) {
        auto m = testing::random_monomial(rng, n, 1);
        if (m.degree() < d) p = p + Polynomial::term(grevlex, m, testing::uniform(rng, -3, 3));
      }
      system.push_back(p);
    }
    std::vector<std::size_t> dims;
    for (auto kind : {OrderKind::Lex, OrderKind::GrLex, OrderKind::GrevLex}) {
      const auto g = buchberger(system, MonomialOrder(n, kind));
      REQUIRE(is_zero_dimensional(g));
      CHECK(audit(g).ok());
      dims.push_back(standard_monomials(g).dimension());
    }
    CHECK(dims[0] == dims[1]);
    CHECK(dims[1] == dims[2]);
    ++checked;
  }
  CHECK(checked == 40);
}
