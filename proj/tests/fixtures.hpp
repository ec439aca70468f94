#pragma once

// Zero-dimensional systems with known solution counts.

#include <string>
#include <vector>

namespace hermite::testing {

struct Fixture {
  std::string name;
  std::vector<std::string> polynomials;
  std::size_t dimension;  // dim of the quotient ring
  std::size_t complex_count;
  std::size_t real_count;
};

inline const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all{
      // Printed examples: 4 complex / 2 real and 1 / 1.
      {"paper A", {"x1*x2+x2-1", "x1^2+x2^2-1"}, 4, 4, 2},
      {"paper B", {"x1-1", "x1^2+x2^2-1"}, 2, 1, 1},
      // x^2 + 1/x^2 = 4: x^2 = 2 +- sqrt(3), both positive, so four real points.
      {"hyperbola-circle", {"x1^2+x2^2-4", "x1*x2-1"}, 4, 4, 4},
      // three real x times two conjugate y values: nothing real.
      {"product", {"x1^3-x1", "x2^2+1"}, 6, 6, 0},
      // double point (1, 1)
      {"double point", {"x1^2-2*x1+1", "x2-x1"}, 2, 1, 1},
      {"univariate x^2+1", {"x1^2+1"}, 2, 2, 0},
      // x1 = x2 and x1^3 = x1: three real points on the diagonal.
      {"degree d=3", {"x1-x2", "x1^3-x2"}, 3, 3, 3},
      // x1 = 1, x2 = x3 = 0 with multiplicity: one real point, dim 4.
      {"sphere n=3", {"x1-1", "x1^2+x2^2-1", "x1^2+x2^2+x3^2-1"}, 4, 1, 1},
      // x1^2 = 2, x2^2 = x1, x3 = x1*x2: x2 real only for x1 = sqrt(2).
      {"tower", {"x1^2-2", "x2^2-x1", "x3-x1*x2"}, 4, 4, 2},
      // empty variety
      {"unit ideal", {"x1*x2-1", "x1", "x2+1"}, 0, 0, 0},
  };
  return all;
}

}  // namespace hermite::testing

#include <algorithm>
#include <numeric>

#include "hermite/exact_linear.hpp"

namespace hermite::testing {

// True iff some permutation p gives a(p[i], p[j]) == b(i, j) for all i, j.
inline bool permutation_equivalent(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) return false;
  std::vector<std::size_t> p(a.rows());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool same = true;
    for (std::size_t i = 0; i < p.size() && same; ++i) {
      for (std::size_t j = 0; j < p.size() && same; ++j) same = a(p[i], p[j]) == b(i, j);
    }
    if (same) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace hermite::testing
