#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <set>
#include <vector>

#include "lgb/affinoid.hpp"
#include "lgb/gmo.hpp"
#include "lgb/laurent.hpp"

// Independent reference computations for tests and `lgb selftest`. Nothing
// here is used by the main computation path.
namespace lgb::oracle {

/// f ∈ ⟨gens⟩ in K[X±1], decided by an ordinary lex Buchberger run in
/// K[x_1, …, x_n, s] on the denominator-cleared generators plus
/// x_1⋯x_n·s − 1.
bool laurent_membership_oracle(const LaurentPoly& f, const std::vector<LaurentPoly>& gens, std::size_t max_basis = 2000);

/// Every t in the box of the given radius around 0 with lm(tf) in cone i,
/// by evaluating lm(tf) term by term.
std::set<ExponentVec> brute_ti(const GeneralizedOrder& o, const LaurentPoly& f, std::size_t i, std::int64_t radius);

/// min over vertices and terms of val(c) − r·u, in plain rational arithmetic.
Valuation brute_valP(const PolytopeContext& ctx, const LaurentPoly& f);

/// Random Laurent polynomial with up to `terms` terms, exponents in
/// [−exp_range, exp_range] and nonzero coefficients in [−coeff_range,
/// coeff_range] (mapped into the field).
LaurentPoly random_laurent(std::mt19937_64& rng, const FieldSpec& field, std::size_t n, std::size_t terms,
                           std::int64_t exp_range, long coeff_range);

/// Runs the oracle suites and prints one line per suite. Returns true when
/// every suite passed.
bool run_selftest(std::ostream& out);

}  // namespace lgb::oracle
