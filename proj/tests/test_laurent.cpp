#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "lgb/errors.hpp"
#include "lgb/laurent.hpp"
#include "lgb/oracle.hpp"
#include "lgb/problem.hpp"

using namespace lgb;

namespace {

const std::vector<std::string> kXY{"x", "y"};

LaurentPoly q2(const std::string& text) { return parse_polynomial(text, FieldSpec::rational(), kXY); }

// 2xy^-2 + x^-2y^-2 + 3x^-1y^-2 + y^2
LaurentPoly example_f() { return q2("2*x*y^-2 + x^-2*y^-2 + 3*x^-1*y^-2 + y^2"); }

std::set<ExponentVec> generated_in_box(const Cone& c, const std::vector<ExponentVec>& gens, std::int64_t radius,
                                       std::size_t n) {
  std::set<ExponentVec> out;
  for_each_box_point(ExponentVec(n), radius, [&](const ExponentVec& t) {
    for (const auto& g : gens)
      if (c.contains(t - g)) {
        out.insert(t);
        return;
      }
  });
  return out;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  CHECK(q2("x + y") + q2("-y") == q2("x"));
  CHECK(q2("y") * q2("x*y + y^-1") == q2("x*y^2 + 1"));
  CHECK((q2("x + y") * LaurentPoly(FieldSpec::rational(), 2)).is_zero());
  CHECK(q2("x - x").is_zero());
  CHECK(q2("x^-1") * q2("x") == LaurentPoly::constant(FieldSpec::rational(), 2, 1));
  CHECK_THROWS_AS(q2("x") + parse_polynomial("x", FieldSpec::prime_field(7), kXY), UsageError);
}

TEST_CASE("leading data") {
  const GeneralizedOrder degmin = GeneralizedOrder::named("degmin", 2);
  const GeneralizedOrder min = GeneralizedOrder::named("min", 2);
  const LaurentPoly f = example_f();
  LeadingData d = leading_data(degmin, f);
  CHECK(d.lm == ExponentVec{1, -2});
  CHECK(d.lc == Coefficient(FieldSpec::rational(), 2));
  d = leading_data(min, f);
  CHECK(d.lm == ExponentVec{1, -2});
  CHECK(d.lc == Coefficient(FieldSpec::rational(), 2));

  const LaurentPoly g = q2("2*x^2*y^-1 + x^-3*y - 3*y^-5");
  d = leading_data(degmin, g);
  CHECK(d.lm == ExponentVec{0, -5});
  CHECK(d.lc == Coefficient(FieldSpec::rational(), -3));
  CHECK_THROWS_AS(leading_data(degmin, LaurentPoly(FieldSpec::rational(), 2)), UndefinedLeading);
}

TEST_CASE("cone leading data") {
  const GeneralizedOrder degmin = GeneralizedOrder::named("degmin", 2);
  const GeneralizedOrder min = GeneralizedOrder::named("min", 2);
  const LaurentPoly f = example_f();
  CHECK(cone_leading_data(degmin, f, 0).lm == ExponentVec{0, 2});
  CHECK(cone_leading_data(degmin, f, 1).lm == ExponentVec{0, 2});
  CHECK(cone_leading_data(degmin, f, 2).lm == ExponentVec{1, -2});
  CHECK(cone_leading_data(min, f, 1).lm == ExponentVec{-2, -2});
  CHECK(cone_leading_data(degmin, q2("2*x^2*y^-1 + x^-3*y - 3*y^-5"), 1).lm == ExponentVec{-3, 1});
}

TEST_CASE("T_i(f) generators") {
  const GeneralizedOrder degmin = GeneralizedOrder::named("degmin", 2);
  const GeneralizedOrder min = GeneralizedOrder::named("min", 2);
  const LaurentPoly f = example_f();
  CHECK(ti_generator(degmin, q2("2*x^2*y^-1 + x^-3*y - 3*y^-5"), 2) == ExponentVec{1, 2});
  CHECK(ti_generator(degmin, f, 0) == ExponentVec{0, 2});
  CHECK(ti_generator(degmin, f, 2) == ExponentVec{0, 1});
  CHECK(ti_generator(min, f, 0) == ExponentVec{2, 2});
  CHECK(ti_set_general(degmin, f, 1) == std::vector<ExponentVec>{{0, 2}});
  for (std::size_t i = 0; i < 3; ++i) CHECK(ti_generator(degmin, q2("x^3*y^-2"), i) == ExponentVec{-3, 2});
}

TEST_CASE("T_2(f) of a four-term polynomial on the box") {
  const GeneralizedOrder degmin = GeneralizedOrder::named("degmin", 2);
  const auto brute = oracle::brute_ti(degmin, example_f(), 2, 6);
  CHECK(brute == generated_in_box(degmin.decomposition().cone(2), {{0, 1}}, 6, 2));
}

TEST_CASE("u_intersection") {
  const GeneralizedOrder degmin = GeneralizedOrder::named("degmin", 2);
  CHECK(u_intersection(degmin, q2("x + y"), q2("x^2 + y"), 0) == std::vector<ExponentVec>{{2, 0}});
  const LaurentPoly f = example_f();
  for (std::size_t i = 0; i < 3; ++i) {
    const ExponentVec self = ti_generator(degmin, f, i) + cone_leading_data(degmin, f, i).lm;
    CHECK(u_intersection(degmin, f, f, i) == std::vector<ExponentVec>{self});
    CHECK(u_intersection(degmin, f, q2("y^2") * f, i).size() == 1);
  }
}

TEST_CASE("ti_generator is a minimal generator") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::int64_t> mult(0, 4);
  for (const char* name : {"min", "degmin"}) {
    for (std::size_t n = 2; n <= 3; ++n) {
      const GeneralizedOrder o = GeneralizedOrder::named(name, n);
      for (int trial = 0; trial < 20; ++trial) {
        const LaurentPoly f = oracle::random_laurent(rng, FieldSpec::rational(), n, 4, 3, 5);
        bool some_cone_holds_lm = false;
        const ExponentVec lm = leading_data(o, f).lm;
        for (std::size_t i = 0; i < o.decomposition().size(); ++i) {
          const Cone& c = o.decomposition().cone(i);
          const ExponentVec g = ti_generator(o, f, i);
          const ExponentVec lmi = cone_leading_data(o, f, i).lm;
          some_cone_holds_lm = some_cone_holds_lm || lmi == lm;
          for (int k = 0; k < 100; ++k) {
            ExponentVec w(n);
            for (const auto& h : c.generators()) w += h * mult(rng);
            const ExponentVec shifted = shifted_leading_monomial(o, f, g + w);
            REQUIRE(c.contains(shifted));
            REQUIRE(shifted - (g + w) == lmi);
          }
          for (const auto& h : c.generators()) CHECK_FALSE(c.contains(shifted_leading_monomial(o, f, g - h)));
        }
        CHECK(some_cone_holds_lm);
      }
    }
  }
}

TEST_CASE("search_module_generators reports an undersized box") {
  const auto d = build_decomposition(DecompositionKind::Standard, 2);
  const Cone& c = d->cone(0);
  // The generator of (3,-5) + N^2 lies just outside the radius-4 box, so the
  // members inside the box cannot be certified.
  auto member = [&](const ExponentVec& t) { return c.contains(t - ExponentVec{1, 1}); };
  CHECK(search_module_generators(c, member, {0, 0}, 4) == std::vector<ExponentVec>{{1, 1}});
  auto far = [&](const ExponentVec& t) { return c.contains(t - ExponentVec{3, -5}); };
  CHECK_THROWS_AS(search_module_generators(c, far, {0, 0}, 4), IncompleteSearch);
}
