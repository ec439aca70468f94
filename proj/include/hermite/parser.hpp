#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hermite/monomial.hpp"
#include "hermite/polynomial.hpp"

namespace hermite {

// Raw system before parsing: optional variable declaration plus one text per
// polynomial. An empty variable list means "auto-collect x<digits> names".
struct SystemSource {
  std::vector<std::string> variables;
  std::vector<std::string> polynomials;
};

struct ParsedSystem {
  std::vector<std::string> variables;
  std::vector<Polynomial> polynomials;
};

// System file: optional "vars: a, b, c" line, then one polynomial per line.
// '#' comments and blank lines are ignored. Without a vars line, identifiers
// of the form x<digits> are declared in numeric order; a system mentioning
// no variable at all gets the single variable x1.
// Throws ParseError carrying a 1-based line and column.
ParsedSystem parse_system(std::string_view text, OrderKind order = OrderKind::GrevLex);
ParsedSystem parse_system(const SystemSource& source, OrderKind order = OrderKind::GrevLex);

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables,
                            OrderKind order = OrderKind::GrevLex);

// Explicit '*' and signs, e.g. "-1/2*x1^2*x2+3". Parses back to p.
std::string format_polynomial(const Polynomial& p, const std::vector<std::string>& variables);
std::string format_monomial(const Monomial& m, const std::vector<std::string>& variables);

}  // namespace hermite
