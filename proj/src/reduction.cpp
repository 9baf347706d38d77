#include "lgb/reduction.hpp"

#include <stdexcept>

#include "lgb/errors.hpp"

namespace lgb {

namespace {
constexpr std::size_t kMaxDivisionSteps = 2'000'000;
}

LeadingCache leading_cache(const TermOrder& order, std::span<const LaurentPoly> divisors) {
  LeadingCache cache;
  cache.reserve(divisors.size());
  for (const auto& g : divisors) {
    if (g.is_zero()) throw UsageError("division by the zero polynomial");
    std::vector<LeadingData> per_cone;
    for (std::size_t k = 0; k < order.cone_count(); ++k) per_cone.push_back(order.cone_leading(g, k));
    cache.push_back(std::move(per_cone));
  }
  return cache;
}

std::optional<std::pair<std::size_t, std::size_t>> find_reducer(const TermOrder& order, const ExponentVec& m,
                                                                std::span<const LaurentPoly> divisors,
                                                                const LeadingCache& cache) {
  for (std::size_t k = 0; k < order.cone_count(); ++k)
    for (std::size_t j = 0; j < divisors.size(); ++j) {
      const ExponentVec shift = m - cache[j][k].lm;
      if (order.shifted_lm(divisors[j], shift) == m) return std::pair{k, j};
    }
  return std::nullopt;
}

DivisionResult reduce(const TermOrder& order, const LaurentPoly& f, std::span<const LaurentPoly> divisors) {
  return reduce(order, f, divisors, leading_cache(order, divisors));
}

DivisionResult reduce(const TermOrder& order, const LaurentPoly& f, std::span<const LaurentPoly> divisors,
                      const LeadingCache& cache) {
  const FieldSpec& field = f.field();
  const std::size_t n = f.nvars();
  for (const auto& g : divisors)
    if (&g.field() != &field || g.nvars() != n) throw UsageError("divisor lives in a different ring");

  DivisionResult out{std::vector<LaurentPoly>(divisors.size(), LaurentPoly(field, n)), LaurentPoly(field, n), 0};
  LaurentPoly work = order.truncate(f);
  while (!work.is_zero()) {
    if (++out.steps > kMaxDivisionSteps) throw ResourceError("division exceeded the step limit");
    const LeadingData lead = order.leading(work);
    auto reducer = find_reducer(order, lead.lm, divisors, cache);
    if (!reducer) {
      out.remainder.add_term(lead.lc, lead.lm);
      work.add_term(-lead.lc, lead.lm);
      continue;
    }
    const auto [k, j] = *reducer;
    const Coefficient c = lead.lc / cache[j][k].lc;
    const ExponentVec shift = lead.lm - cache[j][k].lm;
    out.quotients[j].add_term(c, shift);
    work = order.truncate(work - divisors[j].mul_term(c, shift));
  }

  LaurentPoly residual = f - out.remainder;
  for (std::size_t j = 0; j < divisors.size(); ++j) residual -= out.quotients[j] * divisors[j];
  if (!order.truncate(residual).is_zero()) throw std::logic_error("division identity f = sum q*g + s failed");
  return out;
}

}  // namespace lgb
