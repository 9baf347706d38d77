#include "lgb/affinoid.hpp"

#include <algorithm>
#include <functional>

#include "lgb/errors.hpp"
#include "lgb/linalg.hpp"

namespace lgb {

namespace {

constexpr std::size_t kMaxPolytopeVars = 3;
constexpr std::size_t kMaxVertices = 8;

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw ResourceError("scaled valuation data exceed 64 bits");
  return z.get_si();
}

// Common denominator D and the integer vectors D·v.
std::pair<std::vector<ExponentVec>, std::int64_t> clear_denominators(const std::vector<std::vector<mpq_class>>& vs) {
  mpz_class den = 1;
  for (const auto& v : vs)
    for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<ExponentVec> out;
  for (const auto& v : vs) {
    ExponentVec e(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) e[k] = to_int64(v[k].get_num() * (den / v[k].get_den()));
    out.push_back(e);
  }
  return {out, to_int64(den)};
}

std::int64_t scaled_coefficient_value(const Coefficient& c, std::int64_t den) {
  const Valuation v = c.valuation();
  if (v.is_infinite()) throw UsageError("valuation of a zero term");
  if (v.value().get_den() != 1) throw std::logic_error("coefficient valuation is not an integer");
  return to_int64(v.value().get_num() * den);
}

// Terms of f minimizing D·val(c) − R·u.
LaurentPoly initial_part(const LaurentPoly& f, const ExponentVec& scaled_weight, std::int64_t den) {
  if (f.is_zero()) return f;
  std::vector<std::int64_t> vals;
  std::int64_t best = 0;
  for (const auto& t : f.terms()) {
    vals.push_back(scaled_coefficient_value(t.coeff, den) - scaled_weight.dot(t.exp));
    best = vals.size() == 1 ? vals.back() : std::min(best, vals.back());
  }
  LaurentPoly out(f.field(), f.nvars());
  for (std::size_t k = 0; k < vals.size(); ++k)
    if (vals[k] == best) out.add_term(f.terms()[k].coeff, f.terms()[k].exp);
  return out;
}

// Is 0 a convex combination of the given points? Carathéodory lets us look
// only at affinely independent subsets of size at most n + 1, for which the
// barycentric system has at most one solution.
bool origin_in_hull(const std::vector<std::vector<mpq_class>>& points, std::size_t n) {
  const std::size_t m = points.size();
  std::vector<std::size_t> idx;
  std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
    if (!idx.empty()) {
      const std::size_t s = idx.size();
      linalg::RatMatrix a(n + 1, std::vector<mpq_class>(s + 1));
      for (std::size_t c = 0; c < s; ++c) {
        for (std::size_t r = 0; r < n; ++r) a[r][c] = points[idx[c]][r];
        a[n][c] = 1;
      }
      a[n][s] = 1;
      const std::size_t rk = linalg::row_reduce(a);
      bool consistent = true, unique = rk == s;
      for (std::size_t r = 0; r < rk; ++r) {
        std::size_t c = 0;
        while (a[r][c] == 0) ++c;
        if (c == s) consistent = false;
      }
      if (consistent && unique) {
        bool nonneg = true;
        for (std::size_t r = 0; r < s; ++r) nonneg = nonneg && a[r][s] >= 0;
        if (nonneg) return true;
      }
    }
    if (idx.size() == n + 1) return false;
    for (std::size_t k = start; k < m; ++k) {
      idx.push_back(k);
      if (rec(k + 1)) return true;
      idx.pop_back();
    }
    return false;
  };
  return rec(0);
}

}  // namespace

// ------------------------------------------------------------------- weights

WeightContext::WeightContext(std::vector<mpq_class> weight) : weight_(std::move(weight)) {
  if (weight_.empty() || weight_.size() > kMaxVars) throw UsageError("weight has an unsupported dimension");
  for (auto& x : weight_) x.canonicalize();
  auto [rows, den] = clear_denominators({weight_});
  scaled_ = rows.front();
  den_ = den;
}

std::int64_t WeightContext::scaled_term_value(const Coefficient& c, const ExponentVec& u) const {
  return scaled_coefficient_value(c, den_) - scaled_.dot(u);
}

Valuation WeightContext::term_value(const Coefficient& c, const ExponentVec& u) const {
  if (c.is_zero()) return Valuation::infinity();
  return Valuation(mpq_class(scaled_term_value(c, u), den_));
}

WeightValuation val_weight(const WeightContext& ctx, const LaurentPoly& f) {
  if (f.nvars() != ctx.nvars()) throw UsageError("weight and polynomial dimensions differ");
  if (f.is_zero()) return {Valuation::infinity(), f};
  std::int64_t best = ctx.scaled_term_value(f.terms().front().coeff, f.terms().front().exp);
  for (const auto& t : f.terms()) best = std::min(best, ctx.scaled_term_value(t.coeff, t.exp));
  LaurentPoly init = f.filtered([&](const Term& t) { return ctx.scaled_term_value(t.coeff, t.exp) == best; });
  return {Valuation(mpq_class(best, ctx.denominator())), init};
}

std::strong_ordering compare_weight(const WeightContext& ctx, const GeneralizedOrder& o, const Term& s, const Term& t) {
  const auto vs = ctx.scaled_term_value(s.coeff, s.exp);
  const auto vt = ctx.scaled_term_value(t.coeff, t.exp);
  if (vs != vt) return vt <=> vs;
  return o.compare(s.exp, t.exp);
}

// ----------------------------------------------------------------- polytopes

PolytopeContext::PolytopeContext(std::vector<std::vector<mpq_class>> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw UsageError("a polytope needs at least one vertex");
  if (vertices_.size() > kMaxVertices)
    throw UsageError("polytopes are supported with at most " + std::to_string(kMaxVertices) + " vertices");
  n_ = vertices_.front().size();
  if (n_ == 0 || n_ > kMaxPolytopeVars)
    throw UsageError("polytopes are supported in at most " + std::to_string(kMaxPolytopeVars) + " variables");
  for (auto& v : vertices_) {
    if (v.size() != n_) throw UsageError("vertices have different dimensions");
    for (auto& x : v) x.canonicalize();
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (vertices_[i] == vertices_[j]) throw UsageError("vertex " + std::to_string(i + 1) + " repeats vertex " + std::to_string(j + 1));
  std::tie(scaled_, den_) = clear_denominators(vertices_);

  std::vector<ExponentVec> diffs;
  for (std::size_t j = 1; j < scaled_.size(); ++j) diffs.push_back(scaled_[j] - scaled_[0]);
  dimension_ = diffs.empty() ? 0 : linalg::rank(diffs, n_);

  for (std::size_t i = 0; i < vertices_.size() && vertices_.size() > 1; ++i) {
    std::vector<std::vector<mpq_class>> shifted;
    for (std::size_t j = 0; j < vertices_.size(); ++j) {
      if (j == i) continue;
      std::vector<mpq_class> d(n_);
      for (std::size_t k = 0; k < n_; ++k) d[k] = vertices_[j][k] - vertices_[i][k];
      shifted.push_back(std::move(d));
    }
    if (origin_in_hull(shifted, n_))
      throw UsageError("point " + std::to_string(i + 1) + " lies in the convex hull of the other vertices");
  }
}

std::int64_t PolytopeContext::scaled_support(const ExponentVec& u) const {
  std::int64_t best = scaled_.front().dot(u);
  for (const auto& r : scaled_) best = std::max(best, r.dot(u));
  return best;
}

std::vector<std::size_t> PolytopeContext::attaining(const ExponentVec& u) const {
  const std::int64_t best = scaled_support(u);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < scaled_.size(); ++i)
    if (scaled_[i].dot(u) == best) out.push_back(i);
  return out;
}

std::size_t PolytopeContext::first_attaining(const ExponentVec& u) const {
  std::size_t best = 0;
  std::int64_t value = scaled_[0].dot(u);
  for (std::size_t i = 1; i < scaled_.size(); ++i) {
    const std::int64_t d = scaled_[i].dot(u);
    if (d > value) {
      value = d;
      best = i;
    }
  }
  return best;
}

std::int64_t PolytopeContext::scaled_term_value(const Coefficient& c, const ExponentVec& u) const {
  return scaled_coefficient_value(c, den_) - scaled_support(u);
}

Valuation PolytopeContext::term_value(const Coefficient& c, const ExponentVec& u) const {
  if (c.is_zero()) return Valuation::infinity();
  return Valuation(mpq_class(scaled_term_value(c, u), den_));
}

std::vector<ExponentVec> PolytopeContext::vertex_cone_halfspaces(std::size_t i) const {
  std::vector<ExponentVec> hs;
  for (std::size_t j = 0; j < scaled_.size(); ++j)
    if (j != i) hs.push_back(scaled_.at(i) - scaled_[j]);
  return hs;
}

bool PolytopeContext::in_vertex_cone(std::size_t i, const ExponentVec& a) const {
  const std::int64_t d = scaled_.at(i).dot(a);
  return std::all_of(scaled_.begin(), scaled_.end(), [&](const ExponentVec& r) { return r.dot(a) <= d; });
}

bool PolytopeContext::in_first_vertex_cone(std::size_t i, const ExponentVec& a) const {
  return in_vertex_cone(i, a) && first_attaining(a) == i;
}

PolytopeValuation val_polytope(const PolytopeContext& ctx, const LaurentPoly& f) {
  if (f.nvars() != ctx.nvars()) throw UsageError("polytope and polynomial dimensions differ");
  if (f.is_zero()) return {Valuation::infinity(), {}};
  const std::int64_t den = ctx.denominator();
  std::vector<std::int64_t> per_vertex;
  for (std::size_t i = 0; i < ctx.vertex_count(); ++i) {
    const ExponentVec& r = ctx.scaled_vertex(i);
    std::int64_t best = 0;
    bool first = true;
    for (const auto& t : f.terms()) {
      const std::int64_t v = scaled_coefficient_value(t.coeff, den) - r.dot(t.exp);
      best = first ? v : std::min(best, v);
      first = false;
    }
    per_vertex.push_back(best);
  }
  const std::int64_t value = *std::min_element(per_vertex.begin(), per_vertex.end());
  PolytopeValuation out{Valuation(mpq_class(value, den)), {}};
  for (std::size_t i = 0; i < per_vertex.size(); ++i)
    if (per_vertex[i] == value) out.attained.push_back(i);
  return out;
}

std::strong_ordering compare_polytope(const PolytopeContext& ctx, const GeneralizedOrder& o, const Term& s, const Term& t) {
  const auto vs = ctx.scaled_term_value(s.coeff, s.exp);
  const auto vt = ctx.scaled_term_value(t.coeff, t.exp);
  if (vs != vt) return vt <=> vs;
  const auto is = ctx.first_attaining(s.exp), it = ctx.first_attaining(t.exp);
  if (is != it) return it <=> is;
  return o.compare(s.exp, t.exp);
}

// ------------------------------------------------------ refined decomposition

std::string RefinedDecomposition::label(std::size_t k) const {
  return "(" + std::to_string(vertex.at(k) + 1) + "," + std::to_string(piece.at(k)) + ")";
}

bool cone_in_vertex_cone(const PolytopeContext& ctx, const Cone& cone, std::size_t i) {
  const auto hs = ctx.vertex_cone_halfspaces(i);
  return std::all_of(cone.rays().begin(), cone.rays().end(), [&](const ExponentVec& r) {
    return std::all_of(hs.begin(), hs.end(), [&](const ExponentVec& h) { return h.dot(r) >= 0; });
  });
}

RefinedDecomposition build_refined_decomposition(const PolytopeContext& ctx, const ConicDecomposition& base) {
  const std::size_t n = ctx.nvars();
  if (base.dim() != n) throw UsageError("base decomposition has the wrong dimension");
  RefinedDecomposition out;
  std::vector<Cone> cones;
  auto emit = [&](Cone c, std::size_t i, std::size_t j) {
    out.vertex.push_back(i);
    out.piece.push_back(j);
    out.contained.push_back(cone_in_vertex_cone(ctx, c, i));
    cones.push_back(c.with_id(cones.size()));
  };

  for (std::size_t i = 0; i < ctx.vertex_count(); ++i) {
    const auto hs = ctx.vertex_cone_halfspaces(i);
    std::size_t pieces = 0;
    if (ctx.full_dimensional()) {
      std::optional<Cone> whole;
      try {
        whole = Cone::from_halfspaces(0, n, hs);
      } catch (const UnsupportedCone& e) {
        throw DegeneratePolytope("vertex cone " + std::to_string(i + 1) + ": " + e.what());
      }
      emit(*whole, i, ++pieces);
    } else {
      for (const auto& b : base.cones()) {
        if (cone_in_vertex_cone(ctx, b, i)) {
          emit(b, i, ++pieces);
          continue;
        }
        std::vector<ExponentVec> all = hs;
        all.insert(all.end(), b.halfspaces().begin(), b.halfspaces().end());
        std::optional<Cone> piece;
        try {
          piece = Cone::from_halfspaces(0, n, all);
        } catch (const UnsupportedCone&) {
          // Lower-dimensional intersection: covered by its neighbours.
        }
        if (piece) emit(*piece, i, ++pieces);
      }
    }
    if (pieces == 0) throw DegeneratePolytope("vertex cone " + std::to_string(i + 1) + " has empty interior");
  }
  out.cones = std::make_shared<const ConicDecomposition>(n, DecompositionKind::Refined, std::move(cones));
  return out;
}

// ------------------------------------------------------------- WeightOrder

WeightOrder::WeightOrder(WeightContext ctx, GeneralizedOrder order, std::optional<mpq_class> cap, std::int64_t search_radius)
    : ctx_(std::move(ctx)), order_(std::move(order)), cap_(std::move(cap)), search_radius_(search_radius) {
  if (ctx_.nvars() != order_.nvars()) throw UsageError("weight and order dimensions differ");
}

std::strong_ordering WeightOrder::compare(const Coefficient& a, const ExponentVec& u, const Coefficient& b,
                                          const ExponentVec& v) const {
  const auto va = ctx_.scaled_term_value(a, u);
  const auto vb = ctx_.scaled_term_value(b, v);
  if (va != vb) return vb <=> va;
  return order_.compare(u, v);
}

LeadingData WeightOrder::cone_leading(const LaurentPoly& f, std::size_t k) const {
  const LaurentPoly init = initial(f);
  const ExponentVec lm = cone_leading_data(order_, init, k).lm;
  return {lm, f.coefficient(lm)};
}

ConeData WeightOrder::cone_data(const LaurentPoly& f, std::size_t k) const {
  const LaurentPoly init = initial(f);
  const ExponentVec lm = cone_leading_data(order_, init, k).lm;
  ConeData data{lm, f.coefficient(lm), {}};
  if (order_.decomposition().kind() == DecompositionKind::Standard)
    data.generators = {ti_generator(order_, init, k)};
  else
    data.generators = ti_set_general(order_, init, k, search_radius_);
  return data;
}

// ----------------------------------------------------------- PolytopeOrder

namespace {

ScoreFunction refined_score(const PolytopeContext& ctx, const GeneralizedOrder& base) {
  if (!ctx.full_dimensional()) return base.score();
  const std::size_t n = ctx.nvars(), t = ctx.vertex_count();
  std::vector<mpq_class> centroid(n);
  for (const auto& v : ctx.vertices())
    for (std::size_t k = 0; k < n; ++k) centroid[k] += v[k];
  for (auto& c : centroid) c /= static_cast<long>(t);
  std::vector<std::vector<mpq_class>> forms;
  for (const auto& v : ctx.vertices()) {
    std::vector<mpq_class> f(n);
    for (std::size_t k = 0; k < n; ++k) f[k] = v[k] - centroid[k];
    forms.push_back(std::move(f));
  }
  return ScoreFunction::max_of_linear(n, std::move(forms), ZeroSet::Identity);
}

}  // namespace

PolytopeOrder::PolytopeOrder(PolytopeContext ctx, const GeneralizedOrder& base, std::optional<mpq_class> cap,
                             std::int64_t search_radius)
    : ctx_(std::move(ctx)),
      refined_(build_refined_decomposition(ctx_, base.decomposition())),
      order_(refined_.cones, refined_score(ctx_, base), base.lex_priority()),
      cap_(std::move(cap)),
      search_radius_(search_radius) {}

std::strong_ordering PolytopeOrder::compare(const Coefficient& a, const ExponentVec& u, const Coefficient& b,
                                            const ExponentVec& v) const {
  return compare_polytope(ctx_, order_, Term{a, u}, Term{b, v});
}

bool PolytopeOrder::in_cone_target(std::size_t k, const ExponentVec& m) const {
  return cone(k).contains(m) && ctx_.first_attaining(m) == refined_.vertex[k];
}

LeadingData PolytopeOrder::cone_leading(const LaurentPoly& f, std::size_t k) const {
  if (f.is_zero()) throw UndefinedLeading();
  const LaurentPoly init = initial_part(f, ctx_.scaled_vertex(refined_.vertex.at(k)), ctx_.denominator());
  const auto supp = init.support();
  const ExponentVec lm = order_.greatest_for_cone(k, supp);
  return {lm, f.coefficient(lm)};
}

ConeData PolytopeOrder::cone_data(const LaurentPoly& f, std::size_t k) const {
  const LeadingData lead = cone_leading(f, k);
  return {lead.lm, lead.lc, tij_generators(*this, f, k, search_radius_)};
}

PolytopeLeading lm_polytope(const PolytopeOrder& order, const LaurentPoly& f) {
  const LeadingData lead = order.leading(f);
  const auto& ctx = order.context();
  const std::size_t k = ctx.first_attaining(lead.lm);
  return {lead, initial_part(f, ctx.scaled_vertex(k), ctx.denominator()), k};
}

std::vector<ExponentVec> tij_generators(const PolytopeOrder& order, const LaurentPoly& f, std::size_t k,
                                        std::int64_t search_radius) {
  if (f.is_zero()) throw UndefinedLeading();
  const Cone& cone = order.cone(k);
  const ExponentVec lm = order.cone_leading(f, k).lm;
  auto member = [&](const ExponentVec& t) { return order.in_cone_target(k, order.shifted_lm(f, t)); };

  // Witness: push the support into the cone, then walk towards its interior.
  const auto supp = f.support();
  const ExponentVec base = push_into_cone(cone, supp);
  const ExponentVec w = cone.interior_point();
  std::optional<ExponentVec> witness;
  for (std::int64_t m = 0; m <= (std::int64_t{1} << 16); m = m == 0 ? 1 : 2 * m) {
    if (member(base + w * m)) {
      witness = base + w * m;
      break;
    }
  }
  if (!witness) throw IncompleteSearch("no element of T" + order.cone_label(k) + "(f) found along the cone interior");

  ExponentVec t = *witness;
  std::size_t steps = 0;
  for (bool moved = true; moved;) {
    moved = false;
    for (const auto& h : cone.generators()) {
      while (member(t - h)) {
        t -= h;
        moved = true;
        if (++steps > 1'000'000) throw ResourceError("descent in T" + order.cone_label(k) + "(f) did not terminate");
      }
    }
  }

  std::int64_t radius = search_radius;
  if (radius <= 0) {
    std::int64_t spread = 0;
    for (const auto& u : supp) spread = std::max(spread, (u - lm).norm_inf());
    radius = std::max(2 * spread + 2, (t + lm).norm_inf() + 2);
  }
  return search_module_generators(cone, member, -lm, radius);
}

// ----------------------------------------------------------- capped series

namespace {

mpq_class required_cap(const TermOrder& order) {
  auto cap = order.cap();
  if (!cap) throw UsageError("series arithmetic needs a precision cap");
  return *cap;
}

std::vector<LaurentPoly> bodies(const TermOrder& order, std::span<const CappedSeries> series) {
  const mpq_class cap = required_cap(order);
  std::vector<LaurentPoly> out;
  for (const auto& s : series) {
    if (s.cap != cap) throw UsageError("series carry a different precision cap than the order");
    out.push_back(s.body);
  }
  return out;
}

}  // namespace

CappedSeries make_series(const TermOrder& order, const LaurentPoly& f) {
  const mpq_class cap = required_cap(order);
  return {order.truncate(f), cap};
}

DivisionResult reduce_P(const TermOrder& order, const CappedSeries& f, std::span<const CappedSeries> divisors) {
  if (f.cap != required_cap(order)) throw UsageError("series carries a different precision cap than the order");
  const auto gs = bodies(order, divisors);
  return reduce(order, f.body, gs);
}

GBResult buchberger_P(const TermOrder& order, std::span<const CappedSeries> generators, const GBConfig& config) {
  const auto gs = bodies(order, generators);
  return buchberger(order, gs, config);
}

}  // namespace lgb
