#include <random>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "lgb/errors.hpp"
#include "lgb/oracle.hpp"
#include "lgb/problem.hpp"

using namespace lgb;

TEST_CASE("membership oracle on known answers") {
  const FieldSpec& q = FieldSpec::rational();
  const std::vector<std::string> x{"x"};
  const LaurentPoly xm1 = parse_polynomial("x - 1", q, x);
  CHECK(oracle::laurent_membership_oracle(xm1, {xm1}));
  CHECK_FALSE(oracle::laurent_membership_oracle(LaurentPoly::constant(q, 1, 1), {xm1}));
  CHECK(oracle::laurent_membership_oracle(LaurentPoly::constant(q, 1, 1), {parse_polynomial("x", q, x)}));
  // x^-1 - 1 is a unit multiple of x - 1.
  CHECK(oracle::laurent_membership_oracle(parse_polynomial("x^-1 - 1", q, x), {xm1}));
  CHECK_THROWS_AS(oracle::laurent_membership_oracle(LaurentPoly::constant(FieldSpec::galois_field(9), 1, 1), {}), UsageError);
}

TEST_CASE("oracle handles prime fields and several variables") {
  const FieldSpec& f7 = FieldSpec::prime_field(7);
  const std::vector<std::string> xy{"x", "y"};
  const std::vector<LaurentPoly> gens{parse_polynomial("x*y - 1", f7, xy), parse_polynomial("x^-1 + y^2", f7, xy)};
  CHECK(oracle::laurent_membership_oracle(parse_polynomial("y + y^2", f7, xy), gens));
  CHECK_FALSE(oracle::laurent_membership_oracle(parse_polynomial("y", f7, xy), gens));
}

TEST_CASE("brute_ti on a four-term polynomial") {
  const GeneralizedOrder degmin = GeneralizedOrder::named("degmin", 2);
  const LaurentPoly f = parse_polynomial("2*x*y^-2 + x^-2*y^-2 + 3*x^-1*y^-2 + y^2", FieldSpec::rational(), {"x", "y"});
  const auto set = oracle::brute_ti(degmin, f, 2, 6);
  const Cone& c = degmin.decomposition().cone(2);
  std::size_t expected = 0;
  for_each_box_point(ExponentVec(2), 6, [&](const ExponentVec& t) {
    const bool in = c.contains(t - ExponentVec{0, 1});
    expected += in;
    CHECK(set.count(t) == std::size_t(in));
  });
  CHECK(set.size() == expected);
}

TEST_CASE("brute_ti of a single term is a translated cone") {
  const GeneralizedOrder min = GeneralizedOrder::named("min", 2);
  const LaurentPoly f = parse_polynomial("5*x^2*y^-3", FieldSpec::rational(), {"x", "y"});
  for (std::size_t i = 0; i < 3; ++i) {
    const auto set = oracle::brute_ti(min, f, i, 5);
    for_each_box_point(ExponentVec(2), 5, [&](const ExponentVec& t) {
      CHECK(set.count(t) == std::size_t(min.decomposition().cone(i).contains(t + ExponentVec{2, -3})));
    });
  }
}

TEST_CASE("brute_valP") {
  const PolytopeContext ctx({{1, 1}, {0, 1}});
  const FieldSpec& q2 = FieldSpec::padic_rational(2);
  CHECK(oracle::brute_valP(ctx, LaurentPoly(q2, 2)).is_infinite());
  CHECK(oracle::brute_valP(ctx, parse_polynomial("2*x + y", q2, {"x", "y"})) == Valuation(-1));
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 500; ++trial) {
    const LaurentPoly f = oracle::random_laurent(rng, q2, 2, 4, 3, 32);
    CHECK(oracle::brute_valP(ctx, f) == val_polytope(ctx, f).value);
  }
}

TEST_CASE("random_laurent respects its ranges") {
  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly f = oracle::random_laurent(rng, FieldSpec::rational(), 3, 4, 2, 5);
    CHECK_FALSE(f.is_zero());
    CHECK(f.size() <= 4);
    for (const auto& t : f.terms()) {
      CHECK(t.exp.norm_inf() <= 2);
      CHECK(abs(t.coeff.rational()) <= 20);
    }
  }
}

TEST_CASE("selftest passes") {
  std::ostringstream out;
  CHECK(oracle::run_selftest(out));
  CHECK(out.str().find("FAIL") == std::string::npos);
}
