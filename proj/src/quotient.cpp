#include "hermite/quotient.hpp"

#include <algorithm>
#include <thread>

#include "hermite/errors.hpp"

namespace hermite {

namespace {

std::size_t packed_index(std::size_t i, std::size_t j, std::size_t n) {
  // rows 0..i-1 of the upper triangle hold n + (n-1) + ... + (n-i+1) entries
  return i * (2 * n - i + 1) / 2 + (j - i);
}

void require_compatible(const GroebnerBasis& basis, const QuotientBasis& quotient) {
  if (basis.order() != quotient.order()) {
    throw BasisMismatch("quotient basis and Groebner basis use different rings");
  }
}

}  // namespace

std::vector<Rational> coordinates(const Polynomial& normal_form, const QuotientBasis& basis) {
  std::vector<Rational> out(basis.dimension());
  for (const auto& [m, c] : normal_form.terms()) {
    const auto idx = basis.index_of(m);
    if (!idx) throw BasisMismatch("normal form has support outside the quotient basis");
    out[*idx] = c;
  }
  return out;
}

MultiplicationMatrix multiplication_matrix(const Polynomial& g, const GroebnerBasis& basis,
                                           const QuotientBasis& quotient) {
  require_compatible(basis, quotient);
  const std::size_t n = quotient.dimension();
  Polynomial element = normal_form(g, basis);
  RationalMatrix entries(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto col = coordinates(normal_form(element.multiplied_by(quotient[k]), basis), quotient);
    for (std::size_t r = 0; r < n; ++r) entries(r, k) = col[r];
  }
  return {std::move(entries), std::move(element), quotient};
}

ProductTable::ProductTable(const GroebnerBasis& basis, const QuotientBasis& quotient,
                           unsigned threads)
    : dimension_(quotient.dimension()) {
  require_compatible(basis, quotient);
  const std::size_t n = dimension_;
  products_.assign(n * (n + 1) / 2, Polynomial(basis.order()));
  auto fill_row = [&](std::size_t i) {
    for (std::size_t j = i; j < n; ++j) {
      const Polynomial product = Polynomial::term(basis.order(), quotient[i] * quotient[j]);
      products_[packed_index(i, j, n)] = normal_form(product, basis);
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fill_row(i);
    return;
  }
  // Each worker owns rows w, w + workers, ...; slots are disjoint.
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) fill_row(i);
    });
  }
}

const Polynomial& ProductTable::product(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  return products_.at(packed_index(i, j, dimension_));
}

Rational TraceFunctional::operator()(const Polynomial& normal_form) const {
  Rational trace = 0;
  for (const auto& [m, c] : normal_form.terms()) {
    const auto idx = quotient_.index_of(m);
    if (!idx) throw BasisMismatch("trace of an element outside the quotient basis span");
    trace += c * values_[*idx];
  }
  return trace;
}

TraceFunctional trace_functional(const ProductTable& table, const QuotientBasis& quotient) {
  const std::size_t n = quotient.dimension();
  std::vector<Rational> values(n);
  // tr(phi_{b_m}) = sum over k of the b_k-coordinate of NF(b_m * b_k)
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t k = 0; k < n; ++k) values[m] += table.product(m, k).coefficient(quotient[k]);
  }
  return TraceFunctional(quotient, std::move(values));
}

TraceFunctional trace_functional(const GroebnerBasis& basis, const QuotientBasis& quotient) {
  return trace_functional(ProductTable(basis, quotient), quotient);
}

HermiteForm hermite_form(const GroebnerBasis& basis, const QuotientBasis& quotient,
                         unsigned threads) {
  const ProductTable table(basis, quotient, threads);
  const TraceFunctional trace = trace_functional(table, quotient);
  const std::size_t n = quotient.dimension();
  RationalMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      h(i, j) = trace(table.product(i, j));
      h(j, i) = h(i, j);
    }
  }
  return {SymmetricRationalMatrix(std::move(h)), quotient};
}

HermiteReport hermite_report(const GroebnerBasis& basis, unsigned threads) {
  QuotientBasis quotient = standard_monomials(basis);
  HermiteReport report{hermite_form(basis, quotient, threads), {}, quotient.dimension()};
  report.inertia = inertia(report.form.entries);
  return report;
}

HermiteReport hermite_report(std::span<const Polynomial> system, OrderKind order) {
  if (system.empty()) throw std::invalid_argument("empty polynomial system");
  const MonomialOrder mo(system.front().variable_count(), order);
  return hermite_report(buchberger(system, mo));
}

}  // namespace hermite
