#include "lgb/laurent.hpp"

#include <algorithm>
#include <unordered_map>

#include "lgb/errors.hpp"

namespace lgb {

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(const FieldSpec& field, std::size_t nvars) : field_(&field), n_(nvars) {}

LaurentPoly LaurentPoly::monomial(const Coefficient& c, const ExponentVec& e) {
  LaurentPoly p(c.field(), e.size());
  if (!c.is_zero()) p.terms_.push_back({c, e});
  return p;
}

LaurentPoly LaurentPoly::constant(const FieldSpec& field, std::size_t nvars, long c) {
  return monomial(Coefficient(field, c), ExponentVec(nvars));
}

std::vector<ExponentVec> LaurentPoly::support() const {
  std::vector<ExponentVec> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.exp);
  return out;
}

Coefficient LaurentPoly::coefficient(const ExponentVec& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [](const Term& t, const ExponentVec& x) { return t.exp < x; });
  if (it != terms_.end() && it->exp == e) return it->coeff;
  return Coefficient(*field_);
}

void LaurentPoly::add_term(const Coefficient& c, const ExponentVec& e) {
  if (e.size() != n_) throw UsageError("term has the wrong number of variables");
  if (&c.field() != field_) throw UsageError("coefficient field mismatch");
  if (c.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [](const Term& t, const ExponentVec& x) { return t.exp < x; });
  if (it != terms_.end() && it->exp == e) {
    it->coeff += c;
    if (it->coeff.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, {c, e});
  }
}

void LaurentPoly::check_compatible(const LaurentPoly& g) const {
  if (g.field_ != field_) throw UsageError("polynomials over different fields");
  if (g.n_ != n_) throw UsageError("polynomials in different numbers of variables");
}

LaurentPoly LaurentPoly::combine(const LaurentPoly& g, bool subtract) const {
  check_compatible(g);
  LaurentPoly out(*field_, n_);
  out.terms_.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin(), b = g.terms_.begin();
  while (a != terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end() || (a != terms_.end() && a->exp < b->exp)) {
      out.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->exp < a->exp) {
      out.terms_.push_back({subtract ? -b->coeff : b->coeff, b->exp});
      ++b;
    } else {
      Coefficient c = subtract ? a->coeff - b->coeff : a->coeff + b->coeff;
      if (!c.is_zero()) out.terms_.push_back({std::move(c), a->exp});
      ++a;
      ++b;
    }
  }
  return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& g) const { return combine(g, false); }
LaurentPoly LaurentPoly::operator-(const LaurentPoly& g) const { return combine(g, true); }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(*this);
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& g) const {
  check_compatible(g);
  std::vector<Term> raw;
  raw.reserve(terms_.size() * g.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : g.terms_) raw.push_back({a.coeff * b.coeff, a.exp + b.exp});
  std::stable_sort(raw.begin(), raw.end(), [](const Term& x, const Term& y) { return x.exp < y.exp; });
  LaurentPoly out(*field_, n_);
  for (auto& t : raw) {
    if (!out.terms_.empty() && out.terms_.back().exp == t.exp) {
      out.terms_.back().coeff += t.coeff;
    } else {
      if (!out.terms_.empty() && out.terms_.back().coeff.is_zero()) out.terms_.pop_back();
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty() && out.terms_.back().coeff.is_zero()) out.terms_.pop_back();
  return out;
}

LaurentPoly LaurentPoly::operator*(const Coefficient& c) const {
  if (&c.field() != field_) throw UsageError("coefficient field mismatch");
  LaurentPoly out(*field_, n_);
  if (c.is_zero()) return out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

LaurentPoly LaurentPoly::mul_term(const Coefficient& c, const ExponentVec& e) const {
  if (&c.field() != field_) throw UsageError("coefficient field mismatch");
  LaurentPoly out(*field_, n_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  // Translation preserves the lexicographic order.
  for (const auto& t : terms_) out.terms_.push_back({t.coeff * c, t.exp + e});
  return out;
}

LaurentPoly LaurentPoly::filtered(const std::function<bool(const Term&)>& keep) const {
  LaurentPoly out(*field_, n_);
  for (const auto& t : terms_)
    if (keep(t)) out.terms_.push_back(t);
  return out;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  return a.field_ == b.field_ && a.n_ == b.n_ && a.terms_ == b.terms_;
}

// ------------------------------------------------------------------ TermOrder

Valuation TermOrder::term_valuation(const Coefficient& c, const ExponentVec&) const { return c.valuation(); }

std::size_t TermOrder::leading_index(const LaurentPoly& f, const ExponentVec& shift) const {
  if (f.is_zero()) throw UndefinedLeading();
  const auto& ts = f.terms();
  std::size_t best = 0;
  ExponentVec best_exp = ts[0].exp + shift;
  for (std::size_t k = 1; k < ts.size(); ++k) {
    ExponentVec e = ts[k].exp + shift;
    if (compare(ts[k].coeff, e, ts[best].coeff, best_exp) > 0) {
      best = k;
      best_exp = e;
    }
  }
  return best;
}

LeadingData TermOrder::leading(const LaurentPoly& f) const {
  const auto& t = f.terms()[leading_index(f, ExponentVec(f.nvars()))];
  return {t.exp, t.coeff};
}

ExponentVec TermOrder::shifted_lm(const LaurentPoly& f, const ExponentVec& t) const {
  return f.terms()[leading_index(f, t)].exp + t;
}

bool TermOrder::in_module(const ConeData& data, std::size_t k, const ExponentVec& t) const {
  const Cone& c = cone(k);
  return std::any_of(data.generators.begin(), data.generators.end(), [&](const ExponentVec& g) { return c.contains(t - g); });
}

LaurentPoly TermOrder::truncate(const LaurentPoly& f) const {
  auto limit = cap();
  if (!limit) return f;
  const Valuation bound(*limit);
  return f.filtered([&](const Term& t) { return term_valuation(t.coeff, t.exp) < bound; });
}

std::vector<Term> TermOrder::sorted_terms(const LaurentPoly& f) const {
  std::vector<Term> ts = f.terms();
  std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) { return compare(a, b) > 0; });
  return ts;
}

std::vector<ExponentVec> TermOrder::collisions(const ConeData& f, const ConeData& g, std::size_t k) const {
  std::vector<ExponentVec> out;
  for (const auto& a : f.generators)
    for (const auto& b : g.generators) {
      auto part = shifted_cone_meet(cone(k), a + f.lm, b + g.lm);
      out.insert(out.end(), part.begin(), part.end());
    }
  if (out.size() > 1) out = minimal_elements(cone(k), std::move(out));
  return out;
}

// -------------------------------------------------------------- MonomialOrder

MonomialOrder::MonomialOrder(GeneralizedOrder order, std::int64_t search_radius)
    : order_(std::move(order)), search_radius_(search_radius) {}

ConeData MonomialOrder::cone_data(const LaurentPoly& f, std::size_t k) const {
  auto lead = cone_leading_data(order_, f, k);
  ConeData data{lead.lm, lead.lc, {}};
  if (order_.decomposition().kind() == DecompositionKind::Standard)
    data.generators = {ti_generator(order_, f, k)};
  else
    data.generators = ti_set_general(order_, f, k, search_radius_);
  return data;
}

// ------------------------------------------------------------- leading data

LeadingData leading_data(const GeneralizedOrder& o, const LaurentPoly& f) {
  if (f.is_zero()) throw UndefinedLeading();
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms())
    if (o.compare(t.exp, best->exp) > 0) best = &t;
  return {best->exp, best->coeff};
}

ExponentVec shifted_leading_monomial(const GeneralizedOrder& o, const LaurentPoly& f, const ExponentVec& t) {
  if (f.is_zero()) throw UndefinedLeading();
  ExponentVec best = f.terms().front().exp + t;
  for (const auto& term : f.terms()) {
    ExponentVec e = term.exp + t;
    if (o.compare(e, best) > 0) best = e;
  }
  return best;
}

LeadingData cone_leading_data(const GeneralizedOrder& o, const LaurentPoly& f, std::size_t i) {
  if (f.is_zero()) throw UndefinedLeading();
  const auto supp = f.support();
  const ExponentVec lm = o.greatest_for_cone(i, supp);
  return {lm, f.coefficient(lm)};
}

ExponentVec ti_generator(const GeneralizedOrder& o, const LaurentPoly& f, std::size_t i) {
  if (f.is_zero()) throw UndefinedLeading();
  if (o.decomposition().kind() != DecompositionKind::Standard) {
    auto gens = ti_set_general(o, f, i);
    if (gens.size() != 1) throw UsageError("T_i(f) is not monogenous for this decomposition");
    return gens.front();
  }
  const Cone& cone = o.decomposition().cone(i);
  const auto supp = f.support();
  auto member = [&](const ExponentVec& t) { return cone.contains(shifted_leading_monomial(o, f, t)); };
  ExponentVec t = push_into_cone(cone, supp);
  if (!member(t)) throw std::logic_error("cone witness is not in T_i(f)");
  for (const auto& h : cone.generators()) {
    std::size_t steps = 0;
    while (member(t - h)) {
      t -= h;
      if (++steps > 1'000'000) throw ResourceError("descent in T_i(f) did not terminate");
    }
  }
  return t;
}

std::vector<ExponentVec> search_module_generators(const Cone& cone, const std::function<bool(const ExponentVec&)>& member,
                                                  const ExponentVec& center, std::int64_t radius) {
  std::unordered_map<ExponentVec, bool, ExponentVecHash> cache;
  auto is_member = [&](const ExponentVec& t) {
    auto it = cache.find(t);
    if (it != cache.end()) return it->second;
    bool m = member(t);
    cache.emplace(t, m);
    return m;
  };
  std::vector<ExponentVec> members, gens;
  for_each_box_point(center, radius, [&](const ExponentVec& t) {
    if (!is_member(t)) return;
    members.push_back(t);
    bool minimal = std::none_of(cone.generators().begin(), cone.generators().end(),
                                [&](const ExponentVec& h) { return is_member(t - h); });
    if (minimal) gens.push_back(t);
  });
  if (gens.empty())
    throw IncompleteSearch("no module generator found within radius " + std::to_string(radius) + " of " + center.str());
  for (const auto& t : members) {
    bool covered = std::any_of(gens.begin(), gens.end(), [&](const ExponentVec& g) { return cone.contains(t - g); });
    if (!covered)
      throw IncompleteSearch("module point " + t.str() + " is not generated within radius " + std::to_string(radius));
  }
  std::sort(gens.begin(), gens.end());
  return gens;
}

std::vector<ExponentVec> ti_set_general(const GeneralizedOrder& o, const LaurentPoly& f, std::size_t i,
                                        std::int64_t search_radius) {
  if (f.is_zero()) throw UndefinedLeading();
  const auto& d = o.decomposition();
  std::vector<ExponentVec> lms;
  for (std::size_t j = 0; j < d.size(); ++j) lms.push_back(cone_leading_data(o, f, j).lm);
  const ExponentVec& lmi = lms[i];
  const Cone& ci = d.cone(i);

  // t ∈ A_i, and for every j with a different cone-leading monomial either
  // t ∉ A_j or t ∈ Δ_ij. On A_i ∩ A_j both scores are linear; on a score tie
  // the translation-invariant lex order decides.
  auto member = [&](const ExponentVec& t) {
    const ExponentVec a = t + lmi;
    if (!ci.contains(a)) return false;
    const std::int64_t score_i = o.cone_form(i).dot(a);
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (j == i || lms[j] == lmi) continue;
      const ExponentVec b = t + lms[j];
      if (!d.cone(j).contains(b)) continue;
      const std::int64_t score_j = o.cone_form(j).dot(b);
      if (score_i < score_j) return false;
      if (score_i == score_j && o.lex_compare(lmi, lms[j]) < 0) return false;
    }
    return true;
  };

  std::int64_t radius = search_radius;
  if (radius <= 0) {
    std::int64_t spread = 0;
    for (const auto& t : f.terms()) spread = std::max(spread, (t.exp - lmi).norm_inf());
    radius = 2 * spread + 2;
  }
  return search_module_generators(ci, member, -lmi, radius);
}

std::vector<ExponentVec> u_intersection(const GeneralizedOrder& o, const LaurentPoly& f, const LaurentPoly& g, std::size_t i) {
  const Cone& c = o.decomposition().cone(i);
  const ExponentVec lf = cone_leading_data(o, f, i).lm;
  const ExponentVec lg = cone_leading_data(o, g, i).lm;
  if (o.decomposition().kind() == DecompositionKind::Standard)
    return {shifted_cone_intersection(c, ti_generator(o, f, i) + lf, ti_generator(o, g, i) + lg)};
  std::vector<ExponentVec> out;
  for (const auto& a : ti_set_general(o, f, i))
    for (const auto& b : ti_set_general(o, g, i)) {
      auto part = shifted_cone_meet(c, a + lf, b + lg);
      out.insert(out.end(), part.begin(), part.end());
    }
  return minimal_elements(c, std::move(out));
}

}  // namespace lgb
