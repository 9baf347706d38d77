#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "lgb/laurent.hpp"
#include "lgb/problem.hpp"

namespace lgb {

/// Precision cap used for weight and polytope problems unless overridden.
inline const mpq_class kDefaultPrecision = 20;

enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 1,
  kExitMath = 2,
  kExitNegative = 3,
};

/// MonomialOrder, WeightOrder or PolytopeOrder, depending on the directives.
/// `precision` overrides the file's precision directive.
std::unique_ptr<TermOrder> make_term_order(const ProblemFile& problem, const std::optional<mpq_class>& precision = std::nullopt,
                                           std::int64_t search_radius = 0);

struct CommandOptions {
  std::string verb;          // gb | reduce | member | check | info | selftest
  std::string problem_text;  // contents of the problem file
  std::optional<std::string> poly;
  std::optional<mpq_class> precision;
  std::size_t max_basis = 500;
  bool normalize = false;
  std::int64_t search_radius = 0;
};

/// Runs one verb, writing results to `out` and diagnostics to `err`.
/// Returns the process exit code.
int run_command(const CommandOptions& options, std::ostream& out, std::ostream& err);

}  // namespace lgb
