#include "lgb/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <ostream>
#include <stdexcept>

#include "lgb/errors.hpp"
#include "lgb/groebner.hpp"

namespace lgb::oracle {

namespace {

// Ordinary polynomials over K with exponents in N^m. Keys are compared
// lexicographically, so the last entry of the map is the lex-leading term
// with x_1 > x_2 > … > s.
using Mono = std::vector<long>;

class OrdPoly {
 public:
  explicit OrdPoly(const FieldSpec& field) : field_(&field) {}

  bool is_zero() const { return terms_.empty(); }
  const Mono& lm() const { return std::prev(terms_.end())->first; }
  const Coefficient& lc() const { return std::prev(terms_.end())->second; }
  const std::map<Mono, Coefficient>& terms() const { return terms_; }

  void add(const Coefficient& c, const Mono& m) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  // this −= c · x^shift · g
  void sub_multiple(const Coefficient& c, const Mono& shift, const OrdPoly& g) {
    for (const auto& [m, a] : g.terms_) {
      Mono e = m;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += shift[k];
      add(-(c * a), e);
    }
  }

  void make_monic() {
    const Coefficient inv = lc().inverse();
    for (auto& [m, a] : terms_) a *= inv;
  }

 private:
  const FieldSpec* field_;
  std::map<Mono, Coefficient> terms_;
};

bool divides(const Mono& a, const Mono& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

Mono difference(const Mono& a, const Mono& b) {
  Mono d(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) d[k] = a[k] - b[k];
  return d;
}

OrdPoly normal_form(OrdPoly f, const std::vector<OrdPoly>& basis, const FieldSpec& field) {
  OrdPoly rem(field);
  while (!f.is_zero()) {
    const Mono m = f.lm();
    const Coefficient c = f.lc();
    auto it = std::find_if(basis.begin(), basis.end(), [&](const OrdPoly& g) { return divides(g.lm(), m); });
    if (it == basis.end()) {
      rem.add(c, m);
      f.add(-c, m);
    } else {
      f.sub_multiple(c / it->lc(), difference(m, it->lm()), *it);
    }
  }
  return rem;
}

OrdPoly s_polynomial(const OrdPoly& f, const OrdPoly& g, const FieldSpec& field) {
  Mono lcm(f.lm().size());
  for (std::size_t k = 0; k < lcm.size(); ++k) lcm[k] = std::max(f.lm()[k], g.lm()[k]);
  OrdPoly s(field);
  const Coefficient one(field, 1);
  s.sub_multiple(-(one / f.lc()), difference(lcm, f.lm()), f);
  s.sub_multiple(one / g.lc(), difference(lcm, g.lm()), g);
  return s;
}

bool coprime(const Mono& a, const Mono& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > 0 && b[k] > 0) return false;
  return true;
}

std::vector<OrdPoly> ordinary_buchberger(std::vector<OrdPoly> gens, const FieldSpec& field, std::size_t max_basis) {
  std::vector<OrdPoly> basis;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    g.make_monic();
    basis.push_back(std::move(g));
  }
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    const auto [i, j] = pairs.front();
    pairs.pop_front();
    if (coprime(basis[i].lm(), basis[j].lm())) continue;
    OrdPoly r = normal_form(s_polynomial(basis[i], basis[j], field), basis, field);
    if (r.is_zero()) continue;
    if (basis.size() >= max_basis) throw ResourceError("oracle basis exceeded " + std::to_string(max_basis) + " elements");
    r.make_monic();
    basis.push_back(std::move(r));
    for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
  }
  // Textbook criterion on the output, every pair included.
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (!normal_form(s_polynomial(basis[i], basis[j], field), basis, field).is_zero())
        throw std::logic_error("oracle basis fails the Buchberger criterion");
  return basis;
}

// Multiplies by the monomial that clears every negative exponent; the slack
// coordinate is left at 0.
OrdPoly clear_denominators(const LaurentPoly& f) {
  const std::size_t n = f.nvars();
  std::vector<long> low(n, 0);
  for (const auto& t : f.terms())
    for (std::size_t k = 0; k < n; ++k) low[k] = std::min<long>(low[k], t.exp[k]);
  OrdPoly out(f.field());
  for (const auto& t : f.terms()) {
    Mono m(n + 1, 0);
    for (std::size_t k = 0; k < n; ++k) m[k] = t.exp[k] - low[k];
    out.add(t.coeff, m);
  }
  return out;
}

}  // namespace

bool laurent_membership_oracle(const LaurentPoly& f, const std::vector<LaurentPoly>& gens, std::size_t max_basis) {
  const FieldSpec& field = f.field();
  const std::size_t n = f.nvars();
  if (field.kind() == FieldKind::ExtensionField) throw UsageError("the membership oracle handles Q and prime fields only");
  if (f.is_zero()) return true;
  std::vector<OrdPoly> polys;
  for (const auto& g : gens) {
    if (&g.field() != &field || g.nvars() != n) throw UsageError("oracle inputs live in different rings");
    polys.push_back(clear_denominators(g));
  }
  OrdPoly slack(field);
  slack.add(Coefficient(field, 1), Mono(n + 1, 1));
  slack.add(Coefficient(field, -1), Mono(n + 1, 0));
  polys.push_back(std::move(slack));
  const auto basis = ordinary_buchberger(std::move(polys), field, max_basis);
  return normal_form(clear_denominators(f), basis, field).is_zero();
}

std::set<ExponentVec> brute_ti(const GeneralizedOrder& o, const LaurentPoly& f, std::size_t i, std::int64_t radius) {
  if (f.is_zero()) throw UndefinedLeading();
  const Cone& cone = o.decomposition().cone(i);
  std::set<ExponentVec> out;
  for_each_box_point(ExponentVec(f.nvars()), radius, [&](const ExponentVec& t) {
    ExponentVec best = f.terms().front().exp + t;
    for (const auto& term : f.terms()) {
      const ExponentVec e = term.exp + t;
      if (o.compare(e, best) > 0) best = e;
    }
    if (cone.contains(best)) out.insert(t);
  });
  return out;
}

Valuation brute_valP(const PolytopeContext& ctx, const LaurentPoly& f) {
  Valuation best = Valuation::infinity();
  for (const auto& r : ctx.vertices())
    for (const auto& t : f.terms()) {
      mpq_class v = t.coeff.valuation().value();
      for (std::size_t k = 0; k < r.size(); ++k) v -= r[k] * t.exp[k];
      const Valuation val(v);
      if (val < best) best = val;
    }
  return best;
}

LaurentPoly random_laurent(std::mt19937_64& rng, const FieldSpec& field, std::size_t n, std::size_t terms,
                           std::int64_t exp_range, long coeff_range) {
  std::uniform_int_distribution<std::int64_t> ex(-exp_range, exp_range);
  std::uniform_int_distribution<long> co(-coeff_range, coeff_range);
  std::uniform_int_distribution<std::size_t> count(1, std::max<std::size_t>(terms, 1));
  for (;;) {
    LaurentPoly f(field, n);
    const std::size_t k = count(rng);
    for (std::size_t j = 0; j < k; ++j) {
      ExponentVec e(n);
      for (std::size_t c = 0; c < n; ++c) e[c] = ex(rng);
      long c = 0;
      while (c == 0) c = co(rng);
      f.add_term(Coefficient(field, c), e);
    }
    if (!f.is_zero()) return f;
  }
}

// ------------------------------------------------------------------ selftest

namespace {

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string note;
};

SuiteResult suite_oracle_examples() {
  SuiteResult r{"membership oracle on known answers", 0, 0, ""};
  const FieldSpec& q = FieldSpec::rational();
  const LaurentPoly one = LaurentPoly::constant(q, 1, 1);
  const LaurentPoly x = LaurentPoly::monomial(Coefficient(q, 1), ExponentVec{1});
  auto expect = [&](bool got, bool want) {
    ++r.checks;
    if (got != want) ++r.failures;
  };
  expect(laurent_membership_oracle(x - one, {x - one}), true);
  expect(laurent_membership_oracle(one, {x - one}), false);
  expect(laurent_membership_oracle(one, {x}), true);
  return r;
}

SuiteResult suite_membership(std::mt19937_64& rng) {
  SuiteResult r{"ideal membership vs oracle (Q, n=2)", 0, 0, ""};
  const FieldSpec& q = FieldSpec::rational();
  for (const char* score : {"degmin", "min"}) {
    const MonomialOrder order(GeneralizedOrder::named(score, 2));
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<LaurentPoly> gens{random_laurent(rng, q, 2, 3, 2, 3), random_laurent(rng, q, 2, 2, 2, 3)};
      const auto gb = buchberger(order, gens).basis;
      std::vector<LaurentPoly> probes{
          gens[0] * random_laurent(rng, q, 2, 2, 1, 2) + gens[1] * random_laurent(rng, q, 2, 2, 1, 2),
          random_laurent(rng, q, 2, 3, 2, 3), LaurentPoly::constant(q, 2, 1)};
      for (const auto& p : probes) {
        ++r.checks;
        if (ideal_membership(order, p, gb) != laurent_membership_oracle(p, gens)) ++r.failures;
      }
    }
  }
  return r;
}

SuiteResult suite_ti(std::mt19937_64& rng) {
  SuiteResult r{"T_i(f) generators vs direct evaluation (n=2, radius 6)", 0, 0, ""};
  const FieldSpec& q = FieldSpec::rational();
  for (const char* score : {"degmin", "min"}) {
    const GeneralizedOrder o = GeneralizedOrder::named(score, 2);
    for (int trial = 0; trial < 5; ++trial) {
      const LaurentPoly f = random_laurent(rng, q, 2, 3, 2, 3);
      for (std::size_t i = 0; i < o.decomposition().size(); ++i) {
        const Cone& cone = o.decomposition().cone(i);
        const auto gens = ti_set_general(o, f, i);
        const auto brute = brute_ti(o, f, i, 6);
        std::set<ExponentVec> generated;
        for_each_box_point(ExponentVec(2), 6, [&](const ExponentVec& t) {
          if (std::any_of(gens.begin(), gens.end(), [&](const ExponentVec& g) { return cone.contains(t - g); }))
            generated.insert(t);
        });
        ++r.checks;
        if (generated != brute) ++r.failures;
      }
    }
  }
  return r;
}

SuiteResult suite_valuation(std::mt19937_64& rng) {
  SuiteResult r{"val_P vs vertexwise minimum (Q_2)", 0, 0, ""};
  const FieldSpec& q2 = FieldSpec::padic_rational(2);
  const std::vector<std::vector<std::vector<mpq_class>>> polytopes{
      {{1, 1}, {0, 1}},
      {{1, 1}, {-2, -1}},
      {{-2, 2}, {1, 2}, {2, -2}, {-1, -1}},
  };
  for (const auto& verts : polytopes) {
    const PolytopeContext ctx(verts);
    for (int trial = 0; trial < 100; ++trial) {
      const LaurentPoly f = random_laurent(rng, q2, 2, 4, 3, 16);
      ++r.checks;
      if (!(val_polytope(ctx, f).value == brute_valP(ctx, f))) ++r.failures;
    }
  }
  return r;
}

}  // namespace

bool run_selftest(std::ostream& out) {
  std::mt19937_64 rng(20240601);
  std::vector<SuiteResult> results;
  auto run = [&](auto&& suite) {
    try {
      results.push_back(suite());
    } catch (const std::exception& e) {
      results.push_back({"(suite aborted)", 1, 1, e.what()});
    }
  };
  run([] { return suite_oracle_examples(); });
  run([&] { return suite_membership(rng); });
  run([&] { return suite_ti(rng); });
  run([&] { return suite_valuation(rng); });

  bool all = true;
  for (const auto& s : results) {
    const bool ok = s.failures == 0;
    all = all && ok;
    out << (ok ? "PASS" : "FAIL") << "  " << s.name << "  (" << s.checks - s.failures << "/" << s.checks << ")";
    if (!s.note.empty()) out << "  " << s.note;
    out << "\n";
  }
  return all;
}

}  // namespace lgb::oracle
