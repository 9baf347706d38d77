#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "lgb/coeffs.hpp"
#include "lgb/laurent.hpp"

namespace lgb {

/// Parses a Laurent polynomial such as `2*x^2*y^-1 + x^-3*y - 3*y^-5` or
/// `(2*a+1)*x^2` (`a` is the generator of an extension field). Division is
/// allowed by nonzero constants and single terms; negative powers only of
/// single terms. `line` and `column` locate the text for diagnostics.
LaurentPoly parse_polynomial(const std::string& text, const FieldSpec& field, const std::vector<std::string>& vars,
                             int line = 1, int column = 1);

/// `x^-3*y`, or `1` for the zero exponent.
std::string format_monomial(const ExponentVec& e, const std::vector<std::string>& vars);
/// Terms listed from greatest to smallest under `order`, or in descending
/// lexicographic order when no order is given.
std::string format_polynomial(const LaurentPoly& f, const std::vector<std::string>& vars, const TermOrder* order = nullptr);

struct ProblemFile {
  const FieldSpec* field = nullptr;
  std::vector<std::string> vars;
  std::string order;  // "min" or "degmin"
  std::optional<std::vector<mpq_class>> weight;
  std::optional<std::vector<std::vector<mpq_class>>> polytope;
  std::optional<mpq_class> precision;
  std::vector<LaurentPoly> generators;
};

/// Directives, one per line, `#` starting a comment:
///   ring Q | ring Qp <p> | ring GF <q> [c_0 c_1 … c_k]
///   vars <name> …
///   order min | degmin
///   weight (r_1,…,r_n)
///   polytope (…) (…) …
///   precision <N>
///   gens:
/// followed by one generator per line.
ProblemFile parse_problem(const std::string& text);

}  // namespace lgb
