// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lgb/affinoid.hpp"
#include "lgb/gmo.hpp"
#include "lgb/groebner.hpp"
#include "lgb/lattice.hpp"
#include "lgb/laurent.hpp"
#include "lgb/oracle.hpp"
#include "lgb/problem.hpp"
#include "lgb/reduction.hpp"

namespace {

using namespace lgb;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Collects the failed checks of one criterion.
struct Outcome {
  std::vector<std::string> problems;
  std::string detail;

  void check(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
  bool ok() const { return problems.empty(); }
};

struct Criterion {
  int number;
  std::string title;
  double budget_ms;  // 0 for no time limit
  std::function<void(Outcome&)> body;
};

LaurentPoly poly(const std::string& text, const FieldSpec& field, const std::vector<std::string>& vars) {
  return parse_polynomial(text, field, vars);
}

std::vector<LaurentPoly> polys(const std::vector<std::string>& texts, const FieldSpec& field,
                               const std::vector<std::string>& vars) {
  std::vector<LaurentPoly> out;
  for (const auto& t : texts) out.push_back(poly(t, field, vars));
  return out;
}

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kXYZ{"x", "y", "z"};

// ------------------------------------------------------------------ 1 to 3

void orders_fixture(Outcome& out) {
  const GeneralizedOrder o = GeneralizedOrder::named("degmin", 2);
  const std::vector<ExponentVec> pair{{-2, 3}, {1, 2}};
  const std::vector<ExponentVec> triple{{1, 3}, {-1, 2}, {-4, -3}};
  const ExponentVec g = o.greatest(pair);
  const ExponentVec gc = o.greatest_for_cone(2, triple);
  out.check(g == ExponentVec{-2, 3}, "greatest gave " + g.str());
  out.check(gc == ExponentVec{-4, -3}, "greatest_for_cone gave " + gc.str());
}

void leading_fixture(Outcome& out) {
  const GeneralizedOrder o = GeneralizedOrder::named("degmin", 2);
  const LaurentPoly f = poly("2*x^2*y^-1 + x^-3*y - 3*y^-5", FieldSpec::rational(), kXY);
  const ExponentVec lm = leading_data(o, f).lm;
  const ExponentVec lm1 = cone_leading_data(o, f, 1).lm;
  const ExponentVec t2 = ti_generator(o, f, 2);
  out.check(lm == ExponentVec{0, -5}, "lm = " + lm.str());
  out.check(lm1 == ExponentVec{-3, 1}, "lm_1 = " + lm1.str());
  out.check(t2 == ExponentVec{1, 2}, "T_2 generator = " + t2.str());
}

void division_fixture(Outcome& out) {
  const FieldSpec& q = FieldSpec::rational();
  const MonomialOrder order(GeneralizedOrder::named("degmin", 2));
  const LaurentPoly f = poly("2*x^2*y^-1 + x^-3*y - 3*y^-5", q, kXY);
  const auto divisors = polys({"x^-2*y^-1 + x*y", "x^-2*y + x^2*y^-1"}, q, kXY);
  const DivisionResult div = reduce(order, f, divisors);
  LaurentPoly rebuilt = div.remainder;
  for (std::size_t j = 0; j < divisors.size(); ++j) rebuilt += div.quotients[j] * divisors[j];
  out.check(rebuilt == f, "f != sum q*g + r");
  out.check(div.remainder == poly("-y^3 + 2*x^2*y^-1 - 3*x^-1*y^-1", q, kXY),
            "remainder " + format_polynomial(div.remainder, kXY, &order));
  out.check(div.quotients[0] == poly("x^-1*y^2 + 3*x^-2*y^-2", q, kXY),
            "q1 " + format_polynomial(div.quotients[0], kXY, &order));
  out.check(div.quotients[1] == poly("-3*x^-2*y^-4", q, kXY), "q2 " + format_polynomial(div.quotients[1], kXY, &order));
}

// ----------------------------------------------------------------------- 4

struct IdealFixture {
  std::string name;
  std::string score;
  const FieldSpec* field;
  std::vector<std::string> vars;
  std::vector<std::string> generators;
  std::vector<std::string> reference_basis;
};

std::vector<IdealFixture> ideal_fixtures() {
  // Two elements of the first reference basis carry corrected signs:
  // x^3*y^-4 + x*y*z and -y^-4 + x^-1*y^-2*z^-1 are not in that ideal, while
  // x^-3*y^-4 + x*y*z and -y^4*z + x^-1*y^-2*z^-1 are.
  return {
      {"degmin Q[x,y,z]", "degmin", &FieldSpec::rational(), kXYZ,
       {"x^-3*y^-4 + x*y*z", "x^3*y^-2 + y^-1*z"},
       {"x^-3*y^-4 + x*y*z", "x^3*y^-2 + y^-1*z", "-y^4*z + x^-1*y^-2*z^-1"}},
      {"min Q[x,y,z]", "min", &FieldSpec::rational(), kXYZ,
       {"1/2*x^-1*y + 3*y^-4*z^2 + y", "2*x^2*y^3*z^-1 - 1/3*x^-1*y^3*z^-6"},
       {"y + 1/2*x^-1*y + 3*y^-4*z^2", "2*x^2*y^3*z^-1 - 1/3*x^-1*y^3*z^-6",
        "1/4*y^5*z^5 - 3*x^2*z^7 + 3/2*x*z^7 + 1/3*y^5 + z^2",
        "1/4*y^10*z^5 - 3/4*y^5*z^7 + 1/3*y^10 - 9/2*x*z^9 + 2*y^5*z^2 + 3*z^4",
        "1/4*y^15*z^5 + 1/3*y^15 + 3*y^10*z^2 + 9*y^5*z^4 + 9*z^6", "6*x^2*y^4*z^4 + 3*x*y^4*z^4 + 3*x^-1*y^-1*z"}},
      {"degmin Q[x,y,z] (second ideal)", "degmin", &FieldSpec::rational(), kXYZ,
       {"1/2*x^-1*y + 3*y^-4*z^2 + y", "2*x^2*y^3*z^-1 - 1/3*x^-1*y^3*z^-6"},
       {"y + 1/2*x^-1*y + 3*y^-4*z^2", "2*x^2*y^3*z^-1 - 1/3*x^-1*y^3*z^-6", "y^5*z^3 + 1/3*x^-2*y^5*z^-2 + x^-2",
        "-1/16*y^5*z^6 - 1/12*y^5*z - 1/4*z^3 + 1/8*x^-1*z^3 - 1/16*x^-2*z^3",
        "-1/6*x*y^3*z^-1 + 1/24*x^-1*y^3*z^-1 - 1/12*x^-2*y^-2*z^-4 + 1/24*x^-3*y^-2*z^-4",
        "-1/36*y^3*z^-1 - 1/72*x^-1*y^3*z^-1 - 1/72*x^-3*y^-2*z^-4"}},
      {"degmin F9[x,y]", "degmin", &FieldSpec::galois_field(9), kXY,
       {"x^2*y + y^-6", "x^3*y^-2 + x^-6*y", "x^-2*y + x^-1*y^-2"},
       {"x^2*y + y^-6", "x^3*y^-2 + x^-6*y", "x^-2*y + x^-1*y^-2", "-x*y + x^-2*y^-3", "x^2*y + x^-2", "y^-1 + x^-1",
        "-y^2 + x^-1", "x^-1*y^-1 + x^-2*y^-2"}},
  };
}

void buchberger_fixtures(Outcome& out) {
  for (const auto& fx : ideal_fixtures()) {
    const MonomialOrder order(GeneralizedOrder::named(fx.score, fx.vars.size()));
    const auto gens = polys(fx.generators, *fx.field, fx.vars);
    const auto reference = polys(fx.reference_basis, *fx.field, fx.vars);
    const auto start = Clock::now();
    const auto basis = buchberger(order, gens).basis;
    const double elapsed = ms_since(start);
    out.check(elapsed < 10000, fx.name + ": took " + std::to_string(elapsed) + " ms");
    out.check(is_groebner(order, basis).is_groebner, fx.name + ": computed basis fails the criterion");
    for (std::size_t j = 0; j < gens.size(); ++j)
      out.check(reduce(order, gens[j], basis).remainder.is_zero(), fx.name + ": generator " + std::to_string(j + 1));
    for (std::size_t j = 0; j < reference.size(); ++j)
      out.check(reduce(order, reference[j], basis).remainder.is_zero(),
                fx.name + ": reference element " + std::to_string(j + 1) + " not in the computed ideal");
    const auto reference_closure = buchberger(order, reference).basis;
    for (std::size_t j = 0; j < basis.size(); ++j)
      out.check(reduce(order, basis[j], reference_closure).remainder.is_zero(),
                fx.name + ": computed element " + std::to_string(j + 1) + " not in the reference ideal");
    out.detail += fx.name + " " + std::to_string(basis.size()) + " elements in " + std::to_string(long(elapsed)) + " ms; ";
  }
}

// ------------------------------------------------------------------ 5 and 6

void ti_vs_brute(Outcome& out) {
  std::mt19937_64 rng(5);
  std::size_t compared = 0;
  for (const FieldSpec* field : {&FieldSpec::rational(), &FieldSpec::prime_field(7)})
    for (const char* score : {"degmin", "min"}) {
      const GeneralizedOrder o = GeneralizedOrder::named(score, 2);
      for (int trial = 0; trial < 50; ++trial) {
        const LaurentPoly f = oracle::random_laurent(rng, *field, 2, 4, 3, 5);
        for (std::size_t i = 0; i < o.decomposition().size(); ++i) {
          const Cone& cone = o.decomposition().cone(i);
          const auto gens = ti_set_general(o, f, i);
          std::set<ExponentVec> generated;
          for_each_box_point(ExponentVec(2), 6, [&](const ExponentVec& t) {
            if (std::any_of(gens.begin(), gens.end(), [&](const ExponentVec& g) { return cone.contains(t - g); }))
              generated.insert(t);
          });
          ++compared;
          std::ostringstream what;
          what << score << "/" << field->name() << " f=" << format_polynomial(f, kXY) << " cone " << i;
          out.check(generated == oracle::brute_ti(o, f, i, 6), what.str());
        }
      }
    }
  out.detail = std::to_string(compared) + " (f, cone) pairs";
}

void monogenous(Outcome& out) {
  std::mt19937_64 rng(6);
  const FieldSpec& q = FieldSpec::rational();
  std::size_t tested = 0;
  for (std::size_t n : {2u, 3u}) {
    const std::vector<std::string>& vars = n == 2 ? kXY : kXYZ;
    for (const char* score : {"degmin", "min"}) {
      const GeneralizedOrder o = GeneralizedOrder::named(score, n);
      for (int trial = 0; trial < 25; ++trial) {
        const LaurentPoly f = oracle::random_laurent(rng, q, n, 4, 3, 5);
        const std::string tag = std::string(score) + " f=" + format_polynomial(f, vars);
        std::vector<ExponentVec> gens;
        for (std::size_t i = 0; i < o.decomposition().size(); ++i) {
          const auto set = ti_set_general(o, f, i);
          const ExponentVec g = ti_generator(o, f, i);
          out.check(set.size() == 1, tag + ": cone " + std::to_string(i) + " has " + std::to_string(set.size()) + " generators");
          out.check(!set.empty() && set.front() == g, tag + ": cone " + std::to_string(i) + " disagrees with the descent");
          gens.push_back(g);
        }
        for (std::size_t j = 0; j < gens.size(); ++j)
          for (std::size_t k = j + 1; k < gens.size(); ++k)
            out.check((gens[j] - gens[k]).norm_inf() <= 1,
                      tag + ": generators " + gens[j].str() + " and " + gens[k].str() + " differ by more than 1");
        ++tested;
      }
    }
  }
  out.detail = std::to_string(tested) + " polynomials";
}

// ----------------------------------------------------------------------- 7

void membership_vs_oracle(Outcome& out) {
  std::mt19937_64 rng(7);
  const FieldSpec& q = FieldSpec::rational();
  std::size_t probes = 0, members = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const MonomialOrder order(GeneralizedOrder::named(trial % 2 ? "min" : "degmin", 2));
    const std::vector<LaurentPoly> gens{oracle::random_laurent(rng, q, 2, 3, 2, 3), oracle::random_laurent(rng, q, 2, 2, 2, 3)};
    const auto basis = buchberger(order, gens).basis;
    const std::vector<LaurentPoly> candidates{
        gens[0] * oracle::random_laurent(rng, q, 2, 2, 1, 2) + gens[1] * oracle::random_laurent(rng, q, 2, 2, 1, 2),
        oracle::random_laurent(rng, q, 2, 3, 2, 3), LaurentPoly::constant(q, 2, 1)};
    for (const auto& p : candidates) {
      const bool ours = ideal_membership(order, p, basis);
      const bool theirs = oracle::laurent_membership_oracle(p, gens);
      ++probes;
      members += theirs;
      out.check(ours == theirs, "disagreement on " + format_polynomial(p, kXY) + " in <" + format_polynomial(gens[0], kXY) +
                                    ", " + format_polynomial(gens[1], kXY) + ">");
    }
  }
  out.detail = std::to_string(probes) + " probes, " + std::to_string(members) + " members";
}

// ----------------------------------------------------------------------- 8

void gmo_axioms(Outcome& out) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const char* score : {"min", "degmin"}) {
      const GmoReport report = validate_gmo(GeneralizedOrder::named(score, n), n <= 2 ? 5 : 3, 2000);
      out.check(report.ok, std::string(score) + " n=" + std::to_string(n) + " rejected");
    }
  const auto standard = build_decomposition(DecompositionKind::Standard, 2);
  const std::vector<std::vector<mpq_class>> rows(standard->size(), std::vector<mpq_class>{1, 1});
  const GeneralizedOrder bad(standard, ScoreFunction::per_cone(standard, rows, ZeroSet::Identity));
  const GmoReport report = validate_gmo(bad, 3, 500);
  out.check(!report.ok, "score x+y accepted");
  out.check(report.witness == ExponentVec{-1, 0}, "witness " + (report.witness ? report.witness->str() : "none"));
}

// ----------------------------------------------------------------------- 9

void valuation_laws(Outcome& out) {
  std::mt19937_64 rng(9);
  const FieldSpec& q2 = FieldSpec::padic_rational(2);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 3);
  for (int trial = 0; trial < 500; ++trial) {
    const WeightContext ctx({mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng))});
    const LaurentPoly f = oracle::random_laurent(rng, q2, 2, 4, 3, 16);
    const LaurentPoly g = oracle::random_laurent(rng, q2, 2, 4, 3, 16);
    out.check(val_weight(ctx, f * g).value == val_weight(ctx, f).value + val_weight(ctx, g).value,
              "val_r(fg) != val_r(f) + val_r(g) for f=" + format_polynomial(f, kXY) + ", g=" + format_polynomial(g, kXY));
  }

  const PolytopeContext segment({{1, 1}, {0, 1}});
  for (int trial = 0; trial < 500; ++trial) {
    const LaurentPoly f = oracle::random_laurent(rng, q2, 2, 4, 3, 16);
    const LaurentPoly g = oracle::random_laurent(rng, q2, 2, 4, 3, 16);
    out.check(val_polytope(segment, f * g).value >= val_polytope(segment, f).value + val_polytope(segment, g).value,
              "val_P(fg) < val_P(f) + val_P(g)");
  }

  const LaurentPoly a = poly("x^-1*y^-1", q2, kXY);
  const LaurentPoly f = poly("2*x + y", q2, kXY);
  const Valuation va = val_polytope(segment, a).value;
  const Valuation vf = val_polytope(segment, f).value;
  const Valuation vaf = val_polytope(segment, a * f).value;
  out.check(vaf > va + vf, "no strict inequality for a = x^-1*y^-1, f = 2x + y: val_P(af) = " + vaf.str() +
                               ", val_P(a) + val_P(f) = " + (va + vf).str());

  const PolytopeOrder order(segment, GeneralizedOrder::named("degmin", 2), mpq_class(20));
  const LaurentPoly in_f = lm_polytope(order, f).initial;
  out.check(in_f == poly("y", q2, kXY), "in_P(2x + y) = " + format_polynomial(in_f, kXY));

  // A pair whose minima sit at different vertices is strict.
  const LaurentPoly u = poly("x", q2, kXY), v = poly("x^-1", q2, kXY);
  const Valuation vu = val_polytope(segment, u).value, vv = val_polytope(segment, v).value;
  const Valuation vuv = val_polytope(segment, u * v).value;
  out.detail = "val_P(x^-1*y^-1)=" + va.str() + ", val_P(2x+y)=" + vf.str() + ", val_P(product)=" + vaf.str() +
               "; x and x^-1 give " + vuv.str() + " > " + (vu + vv).str();
}

// ---------------------------------------------------------------------- 10

bool same_result(const DivisionResult& a, const DivisionResult& b) {
  return a.remainder == b.remainder && a.quotients == b.quotients;
}

void polytope_degeneration(Outcome& out) {
  std::mt19937_64 rng(10);
  const FieldSpec& q2 = FieldSpec::padic_rational(2);
  const mpq_class cap = 50;
  const std::vector<std::vector<mpq_class>> vertices{{1, 0}, {0, 1}, {1, 2}, {-1, 1}};
  std::size_t ideals = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto& r = vertices[trial % vertices.size()];
    const GeneralizedOrder base = GeneralizedOrder::named(trial % 2 ? "min" : "degmin", 2);
    const WeightOrder weight(WeightContext(r), base, cap);
    const PolytopeOrder polytope(PolytopeContext({r}), base, cap);

    for (int k = 0; k < 50; ++k) {
      const LaurentPoly s = oracle::random_laurent(rng, q2, 2, 2, 3, 16);
      const LaurentPoly t = oracle::random_laurent(rng, q2, 2, 2, 3, 16);
      const Term& st = s.terms().front();
      const Term& tt = t.terms().front();
      out.check(compare_weight(weight.context(), weight.gmo(), st, tt) ==
                    compare_polytope(polytope.context(), polytope.gmo(), st, tt),
                "term comparison differs");
    }

    std::vector<CappedSeries> wgens, pgens;
    for (int j = 0; j < 2; ++j) {
      const LaurentPoly g = oracle::random_laurent(rng, q2, 2, 3, 2, 8);
      wgens.push_back(make_series(weight, g));
      pgens.push_back(make_series(polytope, g));
    }
    const LaurentPoly f = oracle::random_laurent(rng, q2, 2, 4, 3, 8);
    out.check(same_result(reduce_P(weight, make_series(weight, f), wgens), reduce_P(polytope, make_series(polytope, f), pgens)),
              "division differs for f=" + format_polynomial(f, kXY));
    const auto wb = buchberger_P(weight, wgens).basis;
    const auto pb = buchberger_P(polytope, pgens).basis;
    out.check(wb == pb, "bases differ for r=(" + r[0].get_str() + "," + r[1].get_str() + ")");
    ++ideals;
  }
  out.detail = std::to_string(ideals) + " ideals at cap 50";
}

// ---------------------------------------------------------------------- 11

void refined_decompositions(Outcome& out) {
  const struct {
    std::string name;
    std::vector<std::vector<mpq_class>> vertices;
  } fixtures[] = {
      {"point", {{1, 1}}},
      {"segment", {{1, 1}, {-2, -1}}},
      {"quadrilateral", {{-2, 2}, {1, 2}, {2, -2}, {-1, -1}}},
  };
  for (const auto& fx : fixtures) {
    const PolytopeContext ctx(fx.vertices);
    for (const char* score : {"degmin", "min"}) {
      const PolytopeOrder order(ctx, GeneralizedOrder::named(score, 2));
      const RefinedDecomposition& refined = order.refined();
      const std::string tag = fx.name + "/" + score;
      out.check(validate_decomposition(*refined.cones, 5).ok(), tag + ": decomposition invalid");
      for (std::size_t k = 0; k < refined.size(); ++k) {
        out.check(refined.contained[k], tag + ": cone " + refined.label(k) + " not flagged inside its vertex cone");
        out.check(cone_in_vertex_cone(ctx, refined.cones->cone(k), refined.vertex[k]),
                  tag + ": cone " + refined.label(k) + " leaves its vertex cone");
      }
      if (fx.name == "quadrilateral") {
        out.check(refined.size() == 4, tag + ": " + std::to_string(refined.size()) + " cones");
        for (std::size_t k = 0; k < refined.size(); ++k)
          for_each_box_point(ExponentVec(2), 5, [&](const ExponentVec& a) {
            if (refined.cones->cone(k).contains(a) != ctx.in_vertex_cone(refined.vertex[k], a))
              out.check(false, tag + ": cone " + refined.label(k) + " differs from its vertex cone at " + a.str());
          });
      }
      out.detail += tag + " " + std::to_string(refined.size()) + " cones; ";
    }
  }
}

// ---------------------------------------------------------------------- 12

void valuation_vs_brute(Outcome& out) {
  std::mt19937_64 rng(12);
  const FieldSpec& q2 = FieldSpec::padic_rational(2);
  const std::vector<std::vector<std::vector<mpq_class>>> fixtures{
      {{1, 1}},
      {{1, 1}, {0, 1}},
      {{1, 1}, {-2, -1}},
      {{1, 2}, {2, 1}, {0, 0}},
      {{-2, 2}, {1, 2}, {2, -2}, {-1, -1}},
      {{mpq_class(1, 2), 0}, {0, mpq_class(-1, 3)}, {-1, 1}},
  };
  std::size_t checks = 0;
  for (const auto& verts : fixtures) {
    const PolytopeContext ctx(verts);
    for (int trial = 0; trial < 500; ++trial) {
      const LaurentPoly f = oracle::random_laurent(rng, q2, 2, 5, 4, 64);
      const auto fast = val_polytope(ctx, f);
      const Valuation slow = oracle::brute_valP(ctx, f);
      ++checks;
      out.check(fast.value == slow, "mismatch on " + format_polynomial(f, kXY));
      for (std::size_t i : fast.attained) {
        const Valuation at_vertex = val_weight(ctx.vertex_weight(i), f).value;
        out.check(at_vertex == slow, "I_P lists a vertex that does not attain the minimum");
      }
    }
  }
  out.detail = std::to_string(checks) + " inputs";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "order fixture: greatest and greatest_for_cone", 1, orders_fixture},
      {2, "leading data fixture", 1, leading_fixture},
      {3, "division fixture", 10, division_fixture},
      {4, "Buchberger fixtures reproduce the reference ideals", 0, buchberger_fixtures},
      {5, "T_i(f) generating sets match direct evaluation on the radius-6 box", 60000, ti_vs_brute},
      {6, "standard-cone T_i(f) are monogenous with generators within distance 1", 0, monogenous},
      {7, "ideal membership agrees with the elimination oracle", 120000, membership_vs_oracle},
      {8, "g.m.o. axioms and the rejected score", 0, gmo_axioms},
      {9, "valuation laws", 0, valuation_laws},
      {10, "single-vertex polytope reproduces the weight pipeline", 0, polytope_degeneration},
      {11, "refined decompositions of the point, segment and quadrilateral", 0, refined_decompositions},
      {12, "val_P matches the vertexwise brute force", 0, valuation_vs_brute},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome outcome;
    const auto start = Clock::now();
    try {
      c.body(outcome);
    } catch (const std::exception& e) {
      outcome.problems.push_back(std::string("exception: ") + e.what());
    }
    const double elapsed = ms_since(start);
    if (c.budget_ms > 0 && elapsed >= c.budget_ms)
      outcome.problems.push_back("took " + std::to_string(elapsed) + " ms, budget " + std::to_string(c.budget_ms) + " ms");

    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3f ms", elapsed);
    std::cout << (outcome.ok() ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.title << "  [" << timing << "]";
    if (!outcome.detail.empty()) std::cout << "  " << outcome.detail;
    std::cout << "\n";
    const std::size_t shown = std::min<std::size_t>(outcome.problems.size(), 5);
    for (std::size_t k = 0; k < shown; ++k) std::cout << "      " << outcome.problems[k] << "\n";
    if (outcome.problems.size() > shown) std::cout << "      (" << outcome.problems.size() - shown << " more)\n";
    failed += !outcome.ok();
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
