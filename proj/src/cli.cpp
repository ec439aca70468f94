#include "hermite/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "hermite/errors.hpp"
#include "hermite/univariate.hpp"

namespace hermite::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::string read_source(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string> basis_strings(const QuotientBasis& basis,
                                       const std::vector<std::string>& variables) {
  std::vector<std::string> out;
  out.reserve(basis.dimension());
  for (const auto& m : basis.monomials()) out.push_back(format_monomial(m, variables));
  return out;
}

void print_matrix(std::ostream& out, const SymmetricRationalMatrix& h) {
  const std::size_t n = h.dimension();
  std::vector<std::size_t> width(n, 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) width[c] = std::max(width[c], to_string(h(r, c)).size());
  }
  for (std::size_t r = 0; r < n; ++r) {
    out << '|';
    for (std::size_t c = 0; c < n; ++c) {
      out << ' ' << std::setw(static_cast<int>(width[c])) << to_string(h(r, c));
    }
    out << " |\n";
  }
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

// Independent recomputation of the counts; throws OracleMismatch.
void cross_check(const ParsedSystem& system, const GroebnerBasis& basis, const HermiteReport& report) {
  if (!audit(basis).ok()) throw OracleMismatch("Groebner basis fails its audit");
  const auto& h = report.form.entries;
  if (inertia_via_charpoly(h) != report.inertia) {
    throw OracleMismatch("congruence inertia disagrees with characteristic polynomial inertia");
  }
  if (rank(h.matrix()) != report.rank()) {
    throw OracleMismatch("inertia rank disagrees with Gaussian elimination rank");
  }
  if (system.variables.size() != 1) return;

  UnivariatePolynomial g;
  for (const auto& p : system.polynomials) g = gcd(g, to_univariate(p));
  const std::size_t complex = static_cast<std::size_t>(std::max(0, squarefree_part(g).degree()));
  const std::size_t real = sturm_count(g);
  if (complex != report.complex_count() || real != report.real_count()) {
    throw OracleMismatch("univariate oracles give " + std::to_string(complex) + " complex / " +
                         std::to_string(real) + " real solutions");
  }
  if (g.degree() >= 1) {
    const auto classic = inertia(classic_hermite_matrix(g));
    if (classic.rank() != complex || classic.signature() != static_cast<long>(real)) {
      throw OracleMismatch("classic Hermite matrix disagrees with the univariate oracles");
    }
  }
}

}  // namespace

std::string render_json(const ParsedSystem& system, OrderKind order, const HermiteReport& report) {
  nlohmann::ordered_json doc;
  doc["variables"] = system.variables;
  doc["order"] = std::string(to_string(order));
  doc["quotient_dimension"] = report.quotient_dimension;
  doc["basis"] = basis_strings(report.form.basis, system.variables);
  auto matrix = nlohmann::ordered_json::array();
  const auto& h = report.form.entries;
  for (std::size_t r = 0; r < h.dimension(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < h.dimension(); ++c) row.push_back(to_string(h(r, c)));
    matrix.push_back(std::move(row));
  }
  doc["hermite_matrix"] = std::move(matrix);
  doc["rank"] = report.rank();
  doc["signature"] = report.signature();
  doc["distinct_complex_solutions"] = report.complex_count();
  doc["distinct_real_solutions"] = report.real_count();
  return doc.dump();
}

int solve_system(const ParsedSystem& system, const RunConfiguration& config, std::ostream& out,
                 std::ostream& err) {
  const auto start = Clock::now();
  const MonomialOrder order(system.variables.size(), config.order);
  try {
    const GroebnerBasis basis = buchberger(system.polynomials, order);
    if (!is_zero_dimensional(basis)) throw NotZeroDimensional();
    const HermiteReport report = hermite_report(basis, config.threads);
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (config.cross_check) cross_check(system, basis, report);

    if (config.format == OutputFormat::Json) {
      out << render_json(system, config.order, report) << '\n';
    } else {
      out << "variables: " << join(system.variables, ", ") << '\n';
      out << "order: " << to_string(config.order) << '\n';
      out << "quotient dimension: " << report.quotient_dimension << '\n';
      out << "basis: " << join(basis_strings(report.form.basis, system.variables), ", ") << '\n';
      if (config.print_matrix) {
        out << "Hermite matrix:\n";
        print_matrix(out, report.form.entries);
      }
      out << "number of complex solutions: " << report.complex_count() << '\n';
      out << "number of real solutions: " << report.real_count() << '\n';
      if (config.cross_check) out << "cross-check: ok\n";
    }
    if (config.timing) err << "time: " << std::fixed << std::setprecision(6) << seconds << " s\n";
    return exit_code::ok;
  } catch (const NotZeroDimensional& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::not_zero_dimensional;
  } catch (const OracleMismatch& e) {
    err << "error: oracle mismatch: " << e.what() << '\n';
    return exit_code::oracle_mismatch;
  }
}

int run_solve(const RunConfiguration& config, std::ostream& out, std::ostream& err) {
  if (config.file.has_value() == !config.inline_polynomials.empty()) {
    err << "error: give exactly one of FILE or --poly\n";
    return exit_code::parse_error;
  }
  ParsedSystem system;
  try {
    if (config.file) {
      system = parse_system(read_source(*config.file), config.order);
    } else {
      system = parse_system(SystemSource{{}, config.inline_polynomials}, config.order);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return exit_code::parse_error;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::parse_error;
  }
  return solve_system(system, config, out, err);
}

std::vector<std::string> sphere_family(unsigned n) {
  std::vector<std::string> system{"x1-1"};
  for (unsigned k = 2; k <= n; ++k) {
    std::string p;
    for (unsigned i = 1; i <= k; ++i) p += "x" + std::to_string(i) + "^2+";
    p.back() = '-';
    system.push_back(p + "1");
  }
  return system;
}

std::vector<std::string> degree_family(unsigned d) {
  return {"x1-x2", "x1^" + std::to_string(d) + "-x2"};
}

std::vector<BenchRow> bench_rows(const BenchConfiguration& config) {
  if (config.spheres < 2) throw std::invalid_argument("sphere family needs n >= 2");
  if (config.degrees < 2) throw std::invalid_argument("degree family needs d >= 2");
  const unsigned reps = std::max(1u, config.repetitions);

  auto measure = [&](const std::string& family, unsigned parameter,
                     const std::vector<std::string>& texts) {
    BenchRow row;
    row.family = family;
    row.parameter = parameter;
    double best = 0.0;
    for (unsigned r = 0; r < reps; ++r) {
      const auto start = Clock::now();
      const auto system = parse_system(SystemSource{{}, texts});
      const auto report = hermite_report(system.polynomials);
      const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
      if (r == 0 || seconds < best) best = seconds;
      row.dimension = report.quotient_dimension;
      row.complex_count = report.complex_count();
      row.real_count = report.real_count();
    }
    row.seconds = best;
    return row;
  };

  std::vector<BenchRow> rows;
  for (unsigned n = 2; n <= config.spheres; ++n) {
    BenchRow row = measure("sphere", n, sphere_family(n));
    // x1 = 1 forces every other coordinate to 0.
    row.expected_complex = 1;
    row.expected_real = 1;
    rows.push_back(row);
  }
  for (unsigned d = 2; d <= config.degrees; ++d) {
    BenchRow row = measure("degree", d, degree_family(d));
    // On the diagonal x1 = x2 the system is t^d - t = 0.
    std::vector<Rational> c(d + 1);
    c[1] = -1;
    c[d] = 1;
    const UnivariatePolynomial diagonal(std::move(c));
    row.expected_complex = static_cast<std::size_t>(squarefree_part(diagonal).degree());
    row.expected_real = sturm_count(diagonal);
    rows.push_back(row);
  }
  return rows;
}

int run_bench(const BenchConfiguration& config, std::ostream& out, std::ostream& err) {
  std::vector<BenchRow> rows;
  try {
    rows = bench_rows(config);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::parse_error;
  }
  out << std::left << std::setw(8) << "family" << std::setw(7) << "param" << std::setw(6) << "dim"
      << std::setw(9) << "complex" << std::setw(6) << "real" << std::setw(10) << "expected"
      << "seconds\n";
  bool ok = true;
  for (const auto& row : rows) {
    ok = ok && row.ok();
    out << std::left << std::setw(8) << row.family << std::setw(7) << row.parameter << std::setw(6)
        << row.dimension << std::setw(9) << row.complex_count << std::setw(6) << row.real_count
        << std::setw(10)
        << (std::to_string(row.expected_complex) + "/" + std::to_string(row.expected_real))
        << std::fixed << std::setprecision(6) << row.seconds << (row.ok() ? "" : "  MISMATCH")
        << '\n';
  }
  if (!ok) {
    err << "error: benchmark counts disagree with the expected values\n";
    return exit_code::oracle_mismatch;
  }
  return exit_code::ok;
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Count distinct complex and real solutions of a zero-dimensional polynomial system"};
  app.require_subcommand(1);

  RunConfiguration solve;
  std::string file;
  std::string order_name = "grevlex";
  bool json = false;
  auto* solve_cmd = app.add_subcommand("solve", "Count the solutions of a polynomial system");
  solve_cmd->add_option("FILE", file, "System file ('-' reads standard input)");
  solve_cmd->add_option("--poly", solve.inline_polynomials, "Inline polynomial (repeatable)");
  solve_cmd->add_option("--order", order_name, "Monomial order")
      ->check(CLI::IsMember({"lex", "grlex", "grevlex"}));
  solve_cmd->add_flag("--json", json, "Emit JSON");
  solve_cmd->add_flag("--print-matrix", solve.print_matrix, "Print the Hermite matrix");
  solve_cmd->add_flag("--check", solve.cross_check, "Verify against independent oracles");
  solve_cmd->add_flag("--timing", solve.timing, "Report wall-clock time on stderr");
  solve_cmd->add_option("--threads", solve.threads, "Workers for the product table")
      ->check(CLI::Range(1u, 256u));

  BenchConfiguration bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time the sphere and degree benchmark families");
  bench_cmd->add_option("--spheres", bench.spheres, "Largest sphere-family variable count");
  bench_cmd->add_option("--degrees", bench.degrees, "Largest degree-family exponent");
  bench_cmd->add_option("--repetitions", bench.repetitions, "Runs per instance (best time kept)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? exit_code::ok : exit_code::parse_error;
  }

  if (*solve_cmd) {
    if (!file.empty()) solve.file = file;
    solve.order = *parse_order_kind(order_name);
    solve.format = json ? OutputFormat::Json : OutputFormat::Text;
    return run_solve(solve, out, err);
  }
  return run_bench(bench, out, err);
}

}  // namespace hermite::cli
