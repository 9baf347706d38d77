#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lgb/laurent.hpp"
#include "lgb/reduction.hpp"

namespace lgb {

struct GBConfig {
  std::size_t max_basis = 500;
  /// Divide every output element by its leading coefficient.
  bool normalize = false;
  /// Record each basis element as a combination of the inputs and re-check
  /// the combinations at the end.
  bool track_provenance = false;
};

struct GBStats {
  std::size_t pairs = 0;            // (f, g) pairs taken from the queue
  std::size_t spairs = 0;           // S-polynomials formed
  std::size_t zero_reductions = 0;  // S-polynomials with zero remainder
};

struct GBResult {
  std::vector<LaurentPoly> basis;
  GBStats stats;
  /// provenance[h][j] is the coefficient of input j in basis element h
  /// (filled only when tracking was requested).
  std::vector<std::vector<LaurentPoly>> provenance;
};

/// S(k, f, g, v) = lc_k(g)·X^(v − lm_k(f))·f − lc_k(f)·X^(v − lm_k(g))·g.
/// Throws UsageError unless v lies in both lm_k(f)T_k(f) and lm_k(g)T_k(g).
LaurentPoly spair(const TermOrder& order, std::size_t k, const LaurentPoly& f, const LaurentPoly& g, const ExponentVec& v);

GBResult buchberger(const TermOrder& order, std::span<const LaurentPoly> generators, const GBConfig& config = {});

struct CriterionFailure {
  std::size_t cone = 0;
  std::size_t first = 0, second = 0;  // indices into the tested list
  ExponentVec collision;
  LaurentPoly remainder;
};

struct GroebnerCertificate {
  bool is_groebner = true;
  std::size_t spairs_checked = 0;
  std::optional<CriterionFailure> failure;
};

/// Checks that every S-pair on every collision generator of every cone
/// reduces to zero.
GroebnerCertificate is_groebner(const TermOrder& order, std::span<const LaurentPoly> basis);

/// rem(f, G) == 0. With `strict`, G is first checked to be a Gröbner basis.
bool ideal_membership(const TermOrder& order, const LaurentPoly& f, std::span<const LaurentPoly> basis, bool strict = false);

}  // namespace lgb
