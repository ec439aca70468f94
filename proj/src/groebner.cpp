#include "hermite/groebner.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hermite/errors.hpp"

namespace hermite {

bool GroebnerBasis::is_unit_ideal() const noexcept {
  return generators_.size() == 1 && generators_.front().is_constant();
}

QuotientBasis::QuotientBasis(MonomialOrder order, std::vector<Monomial> monomials)
    : order_(order), monomials_(std::move(monomials)) {
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    if (monomials_[i].variable_count() != order_.variable_count()) {
      throw DimensionMismatch("basis monomial has the wrong number of variables");
    }
    if (!index_.emplace(monomials_[i], i).second) {
      throw std::invalid_argument("duplicate monomial in quotient basis");
    }
  }
}

std::optional<std::size_t> QuotientBasis::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Polynomial reduce(const Polynomial& p, std::span<const Polynomial> divisors) {
  const MonomialOrder& order = p.order();
  for (const auto& d : divisors) {
    if (d.order() != order) throw DimensionMismatch("divisor lives in a different ring");
  }
  auto descending = [&order](const Monomial& a, const Monomial& b) { return order.compare(a, b) > 0; };
  std::map<Monomial, Rational, decltype(descending)> work(descending);
  for (const auto& t : p.terms()) work.emplace(t.monomial, t.coefficient);

  std::vector<Term> remainder;
  while (!work.empty()) {
    auto lead = work.begin();
    const Polynomial* divisor = nullptr;
    for (const auto& d : divisors) {
      if (!d.is_zero() && d.leading_monomial().divides(lead->first)) {
        divisor = &d;
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.push_back({lead->first, lead->second});
      work.erase(lead);
      continue;
    }
    const Rational factor = lead->second / divisor->leading_coefficient();
    const Monomial shift = lead->first / divisor->leading_monomial();
    work.erase(lead);
    const auto terms = divisor->terms();
    for (std::size_t k = 1; k < terms.size(); ++k) {
      auto [it, inserted] = work.try_emplace(terms[k].monomial * shift, 0);
      it->second -= factor * terms[k].coefficient;
      if (it->second == 0) work.erase(it);
    }
  }
  return Polynomial::from_terms(order, std::move(remainder));
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis) {
  if (p.variable_count() != basis.variable_count()) {
    throw DimensionMismatch("polynomial and basis have different variable counts");
  }
  const Polynomial q = p.order() == basis.order() ? p : p.with_order(basis.order());
  return reduce(q, basis.generators());
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("S-polynomial of a zero polynomial");
  if (f.order() != g.order()) throw DimensionMismatch("S-polynomial operands differ in ring");
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  return f.multiplied_by(l / f.leading_monomial(), 1 / f.leading_coefficient()) -
         g.multiplied_by(l / g.leading_monomial(), 1 / g.leading_coefficient());
}

namespace {

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

std::vector<Polynomial> interreduce(std::vector<Polynomial> basis, const MonomialOrder& order) {
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.less(a.leading_monomial(), b.leading_monomial());
  });
  std::vector<Polynomial> minimal;
  for (const auto& g : basis) {
    // Ascending order: any divisor of LM(g) other than g itself is already kept.
    const bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& h) {
      return h.leading_monomial().divides(g.leading_monomial());
    });
    if (!redundant) minimal.push_back(g);
  }
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t m = 0; m < minimal.size(); ++m) {
      if (m != k) others.push_back(minimal[m]);
    }
    minimal[k] = reduce(minimal[k], others).monic();
  }
  return minimal;
}

}  // namespace

GroebnerBasis buchberger(std::span<const Polynomial> generators, MonomialOrder order) {
  std::vector<Polynomial> originals;
  originals.reserve(generators.size());
  for (const auto& g : generators) {
    if (g.variable_count() != order.variable_count()) {
      throw DimensionMismatch("generator has the wrong number of variables");
    }
    originals.push_back(g.order() == order ? g : g.with_order(order));
  }

  std::vector<Polynomial> basis;
  for (const auto& g : originals) {
    if (!g.is_zero()) basis.push_back(g.monic());
  }
  if (basis.empty()) throw NotZeroDimensional("the zero ideal is not zero-dimensional");

  auto unit_ideal = [&] {
    return GroebnerBasis(order, {Polynomial::constant(order, 1)}, originals);
  };
  if (std::any_of(basis.begin(), basis.end(), [](const Polynomial& g) { return g.is_constant(); })) {
    return unit_ideal();
  }

  std::vector<CriticalPair> pairs;
  auto add_pairs_for = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      const Monomial& a = basis[i].leading_monomial();
      const Monomial& b = basis[k].leading_monomial();
      // Coprime leading monomials: the S-polynomial reduces to zero.
      if (coprime(a, b)) continue;
      pairs.push_back({i, k, lcm(a, b)});
    }
  };
  for (std::size_t k = 1; k < basis.size(); ++k) add_pairs_for(k);

  // Normal strategy: smallest lcm first, ties broken by index for determinism.
  auto before = [&order](const CriticalPair& a, const CriticalPair& b) {
    if (auto c = order.compare(a.lcm, b.lcm); c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  };

  while (!pairs.empty()) {
    auto next = std::min_element(pairs.begin(), pairs.end(), before);
    const CriticalPair pair = *next;
    pairs.erase(next);

    Polynomial r = reduce(s_polynomial(basis[pair.i], basis[pair.j]), basis);
    if (r.is_zero()) continue;
    r = r.monic();
    if (r.is_constant()) return unit_ideal();
    basis.push_back(std::move(r));
    add_pairs_for(basis.size() - 1);
  }

  return GroebnerBasis(order, interreduce(std::move(basis), order), std::move(originals));
}

bool is_zero_dimensional(const GroebnerBasis& basis) {
  if (basis.is_unit_ideal()) return true;
  std::vector<bool> bounded(basis.variable_count(), false);
  for (const auto& g : basis.generators()) {
    if (auto v = g.leading_monomial().pure_power_variable()) bounded[*v] = true;
  }
  return std::all_of(bounded.begin(), bounded.end(), [](bool b) { return b; });
}

QuotientBasis standard_monomials(const GroebnerBasis& basis) {
  if (!is_zero_dimensional(basis)) throw NotZeroDimensional();
  const MonomialOrder& order = basis.order();
  if (basis.is_unit_ideal()) return QuotientBasis(order, {});

  const std::size_t n = basis.variable_count();
  std::vector<Exponent> caps(n, 0);
  for (const auto& g : basis.generators()) {
    const Monomial& lm = g.leading_monomial();
    if (auto v = lm.pure_power_variable()) {
      caps[*v] = caps[*v] == 0 ? lm[*v] : std::min(caps[*v], lm[*v]);
    }
  }

  std::vector<Monomial> staircase;
  std::vector<Exponent> e(n, 0);
  while (true) {
    Monomial m(e);
    const bool standard = std::none_of(
        basis.generators().begin(), basis.generators().end(),
        [&](const Polynomial& g) { return g.leading_monomial().divides(m); });
    if (standard) staircase.push_back(std::move(m));
    std::size_t i = 0;
    while (i < n && ++e[i] == caps[i]) e[i++] = 0;
    if (i == n) break;
  }
  std::sort(staircase.begin(), staircase.end(),
            [&](const Monomial& a, const Monomial& b) { return order.less(a, b); });
  return QuotientBasis(order, std::move(staircase));
}

GroebnerAudit audit(const GroebnerBasis& basis) {
  GroebnerAudit result;
  const auto& gens = basis.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].leading_coefficient() != 1) result.monic = false;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : gens[i].terms()) {
        if (gens[j].leading_monomial().divides(t.monomial)) result.reduced = false;
      }
    }
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!reduce(s_polynomial(gens[i], gens[j]), gens).is_zero()) {
        result.s_pairs_reduce_to_zero = false;
      }
    }
  }
  for (const auto& f : basis.original_generators()) {
    if (!reduce(f, gens).is_zero()) result.contains_originals = false;
  }
  return result;
}

}  // namespace hermite
