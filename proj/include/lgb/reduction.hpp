#pragma once

#include <span>
#include <vector>

#include "lgb/laurent.hpp"

namespace lgb {

struct DivisionResult {
  std::vector<LaurentPoly> quotients;
  LaurentPoly remainder;
  std::size_t steps = 0;
};

/// Per-divisor cone leading data, indexed [divisor][cone].
using LeadingCache = std::vector<std::vector<LeadingData>>;

LeadingCache leading_cache(const TermOrder& order, std::span<const LaurentPoly> divisors);

/// Multivariate division of f by the ordered list G. At each step the first
/// cone k (in index order) and first divisor g (in list order) with
/// lm(X^(lm(f) − lm_k(g)) · g) = lm(f) cancel the leading term; if none
/// exists the leading term moves to the remainder. Under a precision cap
/// terms of valuation at or above the cap are discarded as they appear.
/// The identity f = Σ q·g + s is re-checked before returning (modulo the
/// cap when there is one).
DivisionResult reduce(const TermOrder& order, const LaurentPoly& f, std::span<const LaurentPoly> divisors);
DivisionResult reduce(const TermOrder& order, const LaurentPoly& f, std::span<const LaurentPoly> divisors,
                      const LeadingCache& cache);

/// The reducer (cone, divisor) that the division loop would use on a term
/// with monomial m, if any.
std::optional<std::pair<std::size_t, std::size_t>> find_reducer(const TermOrder& order, const ExponentVec& m,
                                                                std::span<const LaurentPoly> divisors,
                                                                const LeadingCache& cache);

}  // namespace lgb
