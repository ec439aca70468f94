#include "hermite/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>

#include "hermite/errors.hpp"

namespace hermite {

namespace {

constexpr unsigned long kMaxExponent = 10000;

enum class Tok { Ident, Integer, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, Colon, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

struct SourceLine {
  std::string_view text;
  std::size_t line;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

// Tokens of one line; '#' ends the line. Always terminated by an End token.
std::vector<Token> tokenize(SourceLine src) {
  std::vector<Token> out;
  const auto text = src.text;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    const std::size_t col = i + 1;
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), src.line, col});
      i = j;
      continue;
    }
    if (digit(c)) {
      std::size_t j = i;
      while (j < text.size() && digit(text[j])) ++j;
      out.push_back({Tok::Integer, std::string(text.substr(i, j - i)), src.line, col});
      i = j;
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      case ':': kind = Tok::Colon; break;
      default: {
        std::string shown = std::isprint(static_cast<unsigned char>(c))
                                ? std::string("'") + c + "'"
                                : "byte 0x" + std::to_string(static_cast<unsigned char>(c));
        throw ParseError("unknown character " + shown, src.line, col);
      }
    }
    out.push_back({kind, std::string(1, c), src.line, col});
    ++i;
  }
  out.push_back({Tok::End, "", src.line, text.size() + 1});
  return out;
}

std::string describe(const Token& t) {
  return t.kind == Tok::End ? std::string("end of line") : "'" + t.text + "'";
}

class ExpressionParser {
 public:
  ExpressionParser(const std::vector<Token>& tokens, const std::map<std::string, std::size_t>& index,
                   MonomialOrder order)
      : tokens_(tokens), index_(index), order_(order) {}

  Polynomial parse_line() {
    Polynomial p = polynomial();
    if (peek().kind != Tok::End) throw error("unexpected " + describe(peek()));
    return p;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }
  ParseError error(const std::string& message) const {
    return ParseError(message, peek().line, peek().column);
  }

  Polynomial polynomial() {
    Polynomial acc = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool minus = advance().kind == Tok::Minus;
      Polynomial rhs = term();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (peek().kind == Tok::Star) {
      advance();
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial factor() {
    if (peek().kind == Tok::Minus) {
      advance();
      return -factor();
    }
    Polynomial base = primary();
    if (peek().kind == Tok::Caret) {
      advance();
      return base.pow(natural("exponent must be a non-negative integer literal"));
    }
    return base;
  }

  Polynomial primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Integer: {
        advance();
        Integer numerator(t.text, 10);
        Integer denominator = 1;
        if (peek().kind == Tok::Slash) {
          advance();
          if (peek().kind != Tok::Integer) throw error("malformed rational: expected a denominator");
          denominator = Integer(advance().text, 10);
          if (denominator == 0) {
            const Token& d = tokens_[pos_ - 1];
            throw ParseError("malformed rational: zero denominator", d.line, d.column);
          }
        }
        return Polynomial::constant(order_, make_rational(numerator, denominator));
      }
      case Tok::Ident: {
        auto it = index_.find(t.text);
        if (it == index_.end()) throw error("undeclared identifier '" + t.text + "'");
        advance();
        return Polynomial::variable(order_, it->second);
      }
      case Tok::LParen: {
        advance();
        Polynomial inner = polynomial();
        if (peek().kind != Tok::RParen) throw error("expected ')' but found " + describe(peek()));
        advance();
        return inner;
      }
      default:
        throw error("expected a number, identifier or '(' but found " + describe(t));
    }
  }

  unsigned natural(const char* what) {
    if (peek().kind != Tok::Integer) throw error(what);
    const Token& t = peek();
    if (t.text.size() > 6 || std::stoul(t.text) > kMaxExponent) {
      throw error("exponent exceeds " + std::to_string(kMaxExponent));
    }
    advance();
    return static_cast<unsigned>(std::stoul(t.text));
  }

  const std::vector<Token>& tokens_;
  const std::map<std::string, std::size_t>& index_;
  MonomialOrder order_;
  std::size_t pos_ = 0;
};

bool is_auto_variable(const std::string& name) {
  return name.size() >= 2 && name[0] == 'x' &&
         std::all_of(name.begin() + 1, name.end(), [](char c) { return digit(c); });
}

// Numeric order on the digit suffix; ties (x1 vs x01) by spelling.
bool auto_variable_less(const std::string& a, const std::string& b) {
  auto strip = [](const std::string& s) {
    std::string_view d(s);
    d.remove_prefix(1);
    while (d.size() > 1 && d.front() == '0') d.remove_prefix(1);
    return d;
  };
  const auto da = strip(a);
  const auto db = strip(b);
  if (da.size() != db.size()) return da.size() < db.size();
  if (da != db) return da < db;
  return a < b;
}

std::vector<std::string> parse_vars_line(const std::vector<Token>& tokens) {
  // tokens[0] = "vars", tokens[1] = ':'
  std::vector<std::string> names;
  std::set<std::string> seen;
  std::size_t pos = 2;
  while (true) {
    const Token& t = tokens[pos];
    if (t.kind != Tok::Ident) {
      throw ParseError("expected a variable name but found " + describe(t), t.line, t.column);
    }
    if (!seen.insert(t.text).second) {
      throw ParseError("duplicate variable '" + t.text + "'", t.line, t.column);
    }
    names.push_back(t.text);
    ++pos;
    if (tokens[pos].kind == Tok::End) break;
    if (tokens[pos].kind != Tok::Comma) {
      throw ParseError("expected ',' but found " + describe(tokens[pos]), tokens[pos].line,
                       tokens[pos].column);
    }
    ++pos;
  }
  return names;
}

bool is_vars_line(const std::vector<Token>& tokens) {
  return tokens.size() >= 2 && tokens[0].kind == Tok::Ident && tokens[0].text == "vars" &&
         tokens[1].kind == Tok::Colon;
}

ParsedSystem parse_lines(const std::vector<SourceLine>& lines, std::vector<std::string> declared,
                         OrderKind kind, std::size_t eof_line) {
  std::vector<std::vector<Token>> polylines;
  bool header_allowed = declared.empty();
  for (const auto& line : lines) {
    auto tokens = tokenize(line);
    if (tokens.front().kind == Tok::End) continue;
    if (is_vars_line(tokens)) {
      if (!header_allowed) {
        throw ParseError("'vars:' must precede every polynomial", tokens[0].line, tokens[0].column);
      }
      declared = parse_vars_line(tokens);
      header_allowed = false;
      continue;
    }
    header_allowed = false;
    polylines.push_back(std::move(tokens));
  }
  if (polylines.empty()) throw ParseError("empty system: no polynomial given", eof_line, 1);

  if (declared.empty()) {
    std::set<std::string> found;
    for (const auto& tokens : polylines) {
      for (const auto& t : tokens) {
        if (t.kind != Tok::Ident) continue;
        if (!is_auto_variable(t.text)) {
          throw ParseError("undeclared identifier '" + t.text +
                               "' (only x<digits> names are auto-declared; add a 'vars:' line)",
                           t.line, t.column);
        }
        found.insert(t.text);
      }
    }
    declared.assign(found.begin(), found.end());
    std::sort(declared.begin(), declared.end(), auto_variable_less);
    if (declared.empty()) declared.push_back("x1");
  }

  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < declared.size(); ++i) index.emplace(declared[i], i);
  const MonomialOrder order(declared.size(), kind);

  ParsedSystem out;
  out.variables = std::move(declared);
  for (const auto& tokens : polylines) {
    out.polynomials.push_back(ExpressionParser(tokens, index, order).parse_line());
  }
  return out;
}

std::vector<SourceLine> split_lines(std::string_view text) {
  std::vector<SourceLine> lines;
  std::size_t line = 1;
  while (true) {
    const auto nl = text.find('\n');
    lines.push_back({text.substr(0, nl), line++});
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

void require_valid_names(const std::vector<std::string>& names) {
  std::set<std::string> seen;
  for (const auto& name : names) {
    if (name.empty() || !ident_start(name[0]) ||
        !std::all_of(name.begin(), name.end(), ident_char)) {
      throw ParseError("invalid variable name '" + name + "'", 1, 1);
    }
    if (!seen.insert(name).second) throw ParseError("duplicate variable '" + name + "'", 1, 1);
  }
}

}  // namespace

ParsedSystem parse_system(std::string_view text, OrderKind order) {
  auto lines = split_lines(text);
  const std::size_t eof_line = lines.size();
  return parse_lines(lines, {}, order, eof_line);
}

ParsedSystem parse_system(const SystemSource& source, OrderKind order) {
  require_valid_names(source.variables);
  std::vector<SourceLine> lines;
  for (std::size_t i = 0; i < source.polynomials.size(); ++i) {
    const std::string_view text = source.polynomials[i];
    if (text.find('\n') != std::string_view::npos) {
      throw ParseError("polynomial text spans several lines", i + 1, text.find('\n') + 1);
    }
    lines.push_back({text, i + 1});
  }
  return parse_lines(lines, source.variables, order, std::max<std::size_t>(1, lines.size()));
}

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables,
                            OrderKind order) {
  require_valid_names(variables);
  if (variables.empty()) throw ParseError("no variables declared", 1, 1);
  std::vector<Token> tokens;
  for (const auto& line : split_lines(text)) {
    auto part = tokenize(line);
    part.pop_back();
    tokens.insert(tokens.end(), part.begin(), part.end());
  }
  const auto lines = split_lines(text);
  tokens.push_back({Tok::End, "", lines.back().line, lines.back().text.size() + 1});
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < variables.size(); ++i) index.emplace(variables[i], i);
  return ExpressionParser(tokens, index, MonomialOrder(variables.size(), order)).parse_line();
}

std::string format_monomial(const Monomial& m, const std::vector<std::string>& variables) {
  if (m.variable_count() != variables.size()) {
    throw DimensionMismatch("variable names do not match the monomial");
  }
  std::string out;
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += variables[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string format_polynomial(const Polynomial& p, const std::vector<std::string>& variables) {
  if (p.variable_count() != variables.size()) {
    throw DimensionMismatch("variable names do not match the polynomial");
  }
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (c < 0) {
      out += '-';
    } else if (!first) {
      out += '+';
    }
    first = false;
    const Rational magnitude = abs(c);
    if (m.is_one()) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += format_monomial(m, variables);
    } else {
      out += to_string(magnitude) + "*" + format_monomial(m, variables);
    }
  }
  return out;
}

}  // namespace hermite
