#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hermite/monomial.hpp"
#include "hermite/parser.hpp"
#include "hermite/quotient.hpp"

namespace hermite::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int parse_error = 2;
inline constexpr int not_zero_dimensional = 3;
inline constexpr int oracle_mismatch = 4;
}  // namespace exit_code

enum class OutputFormat { Text, Json };

struct RunConfiguration {
  std::optional<std::string> file;          // system file path, "-" for stdin
  std::vector<std::string> inline_polynomials;  // --poly values
  OrderKind order = OrderKind::GrevLex;
  OutputFormat format = OutputFormat::Text;
  bool print_matrix = false;
  bool cross_check = false;
  bool timing = false;
  unsigned threads = 1;
};

// Solves the configured system and writes the report to out; diagnostics go to
// err. Returns one of the exit_code values.
int run_solve(const RunConfiguration& config, std::ostream& out, std::ostream& err);

// Same pipeline on an already parsed system.
int solve_system(const ParsedSystem& system, const RunConfiguration& config, std::ostream& out,
                 std::ostream& err);

// JSON document for a finished report (exact rational strings for entries).
std::string render_json(const ParsedSystem& system, OrderKind order, const HermiteReport& report);

// Benchmark systems: x1-1, x1^2+x2^2-1, ..., x1^2+...+xn^2-1.
std::vector<std::string> sphere_family(unsigned n);
// x1-x2, x1^d-x2.
std::vector<std::string> degree_family(unsigned d);

struct BenchConfiguration {
  unsigned spheres = 5;
  unsigned degrees = 7;
  unsigned repetitions = 3;  // best-of timing
};

struct BenchRow {
  std::string family;
  unsigned parameter = 0;
  std::size_t dimension = 0;
  std::size_t complex_count = 0;
  std::size_t real_count = 0;
  std::size_t expected_complex = 0;
  std::size_t expected_real = 0;
  double seconds = 0.0;

  bool ok() const noexcept {
    return complex_count == expected_complex && real_count == expected_real;
  }
};

// Throws std::invalid_argument when a family bound is below 2.
std::vector<BenchRow> bench_rows(const BenchConfiguration& config);

// Prints the timing table; exit_code::oracle_mismatch if any count is wrong.
int run_bench(const BenchConfiguration& config, std::ostream& out, std::ostream& err);

// Full command line: "solve ..." or "bench ...".
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace hermite::cli
