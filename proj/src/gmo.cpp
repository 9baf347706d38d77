#include "lgb/gmo.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "lgb/errors.hpp"
#include "lgb/linalg.hpp"

namespace lgb {

namespace {

std::int64_t checked_si(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("score value exceeds 64 bits");
  return z.get_si();
}

// Scales rational rows by a common denominator.
std::pair<std::vector<ExponentVec>, std::int64_t> scale_rows(std::size_t n, const std::vector<std::vector<mpq_class>>& rows) {
  mpz_class den = 1;
  for (const auto& row : rows) {
    if (row.size() != n) throw UsageError("score row has the wrong dimension");
    for (const auto& x : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  }
  std::vector<ExponentVec> out;
  for (const auto& row : rows) {
    ExponentVec v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = checked_si(row[k].get_num() * (den / row[k].get_den()));
    out.push_back(v);
  }
  return {out, checked_si(den)};
}

std::int64_t min0(const ExponentVec& v) {
  std::int64_t m = 0;
  for (auto x : v.coords()) m = std::min(m, x);
  return m;
}

}  // namespace

ScoreFunction ScoreFunction::min(std::size_t n) {
  ScoreFunction s;
  s.kind_ = Kind::Min;
  s.n_ = n;
  s.zero_set_ = ZeroSet::NonNegativeOrthant;
  return s;
}

ScoreFunction ScoreFunction::degmin(std::size_t n) {
  ScoreFunction s;
  s.kind_ = Kind::Degmin;
  s.n_ = n;
  s.zero_set_ = ZeroSet::Identity;
  return s;
}

ScoreFunction ScoreFunction::abs_sum(std::size_t n) {
  ScoreFunction s;
  s.kind_ = Kind::AbsSum;
  s.n_ = n;
  s.zero_set_ = ZeroSet::Identity;
  return s;
}

ScoreFunction ScoreFunction::per_cone(std::shared_ptr<const ConicDecomposition> cones, std::vector<std::vector<mpq_class>> rows,
                                      ZeroSet zero_set) {
  if (!cones || rows.size() != cones->size()) throw UsageError("per-cone score needs one row per cone");
  ScoreFunction s;
  s.kind_ = Kind::PerCone;
  s.n_ = cones->dim();
  s.zero_set_ = zero_set;
  std::tie(s.rows_, s.den_) = scale_rows(s.n_, rows);
  s.cones_ = std::move(cones);
  return s;
}

ScoreFunction ScoreFunction::max_of_linear(std::size_t n, std::vector<std::vector<mpq_class>> forms, ZeroSet zero_set) {
  if (forms.empty()) throw UsageError("max-of-linear score needs at least one form");
  ScoreFunction s;
  s.kind_ = Kind::MaxOfLinear;
  s.n_ = n;
  s.zero_set_ = zero_set;
  std::tie(s.rows_, s.den_) = scale_rows(n, forms);
  return s;
}

bool ScoreFunction::vanishing_allowed(const ExponentVec& v) const {
  if (zero_set_ == ZeroSet::Identity) return v.is_zero();
  return min0(v) == 0;
}

std::string ScoreFunction::name() const {
  switch (kind_) {
    case Kind::Min: return "min";
    case Kind::Degmin: return "degmin";
    case Kind::AbsSum: return "abs";
    case Kind::PerCone: return "per-cone";
    case Kind::MaxOfLinear: return "max-of-linear";
  }
  return "?";
}

std::int64_t ScoreFunction::scaled(const ExponentVec& v) const {
  switch (kind_) {
    case Kind::Min: return -min0(v);
    case Kind::Degmin: {
      std::int64_t sum = 0;
      for (auto x : v.coords()) sum += x;
      return sum - static_cast<std::int64_t>(n_ + 1) * min0(v);
    }
    case Kind::AbsSum: {
      std::int64_t sum = 0;
      for (auto x : v.coords()) sum += x < 0 ? -x : x;
      return sum;
    }
    case Kind::PerCone: return rows_[cones_->locate(v)].dot(v);
    case Kind::MaxOfLinear: {
      std::int64_t best = rows_.front().dot(v);
      for (const auto& r : rows_) best = std::max(best, r.dot(v));
      return best;
    }
  }
  return 0;
}

mpq_class ScoreFunction::operator()(const ExponentVec& v) const {
  mpq_class q(scaled(v), den_);
  q.canonicalize();
  return q;
}

// ----------------------------------------------------------- GeneralizedOrder

GeneralizedOrder::GeneralizedOrder(std::shared_ptr<const ConicDecomposition> decomposition, ScoreFunction score,
                                   std::vector<std::size_t> lex_priority)
    : decomposition_(std::move(decomposition)), score_(std::move(score)), lex_(std::move(lex_priority)) {
  const std::size_t n = decomposition_->dim();
  if (score_.dim() != n) throw UsageError("score and decomposition dimensions differ");
  if (lex_.empty()) {
    lex_.resize(n);
    std::iota(lex_.begin(), lex_.end(), 0);
  }
  auto sorted = lex_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < n; ++k)
    if (sorted.size() != n || sorted[k] != k) throw UsageError("lex priority must be a permutation of the variables");

  for (const auto& cone : decomposition_->cones()) {
    // Pick n independent rays and solve L·ray = φ(ray).
    std::vector<ExponentVec> basis;
    for (const auto& r : cone.rays()) {
      basis.push_back(r);
      if (linalg::rank(basis, n) < basis.size()) basis.pop_back();
      if (basis.size() == n) break;
    }
    linalg::RatMatrix a(n, std::vector<mpq_class>(n));
    std::vector<mpq_class> b(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) a[r][c] = basis[r][c];
      b[r] = score_.scaled(basis[r]);
    }
    auto sol = linalg::solve(a, b);
    ExponentVec form(n);
    for (std::size_t k = 0; k < n; ++k) {
      // Non-integral entries mean φ is not linear on this cone; keep the
      // floor so validation can report it.
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), (*sol)[k].get_num_mpz_t(), (*sol)[k].get_den_mpz_t());
      form[k] = q.get_si();
    }
    forms_.push_back(form);
  }
}

GeneralizedOrder GeneralizedOrder::named(const std::string& name, std::size_t n) {
  if (name == "min") return {build_decomposition(DecompositionKind::Standard, n), ScoreFunction::min(n)};
  if (name == "degmin") return {build_decomposition(DecompositionKind::Standard, n), ScoreFunction::degmin(n)};
  if (name == "abs") return {build_decomposition(DecompositionKind::Orthant, n), ScoreFunction::abs_sum(n)};
  throw UsageError("unknown order '" + name + "'");
}

std::strong_ordering GeneralizedOrder::lex_compare(const ExponentVec& u, const ExponentVec& v) const {
  for (auto k : lex_)
    if (u[k] != v[k]) return u[k] <=> v[k];
  return std::strong_ordering::equal;
}

std::strong_ordering GeneralizedOrder::compare(const ExponentVec& u, const ExponentVec& v) const {
  const auto su = score_.scaled(u), sv = score_.scaled(v);
  if (su != sv) return su <=> sv;
  return lex_compare(u, v);
}

ExponentVec GeneralizedOrder::greatest(std::span<const ExponentVec> tuples) const {
  if (tuples.empty()) throw UsageError("greatest of an empty list");
  ExponentVec best = tuples.front();
  for (const auto& t : tuples)
    if (compare(t, best) > 0) best = t;
  return best;
}

ExponentVec GeneralizedOrder::greatest_for_cone(std::size_t cone, std::span<const ExponentVec> tuples) const {
  if (tuples.empty()) throw UsageError("greatest of an empty list");
  const ExponentVec shift = push_into_cone(decomposition_->cone(cone), tuples);
  std::size_t best = 0;
  for (std::size_t k = 1; k < tuples.size(); ++k)
    if (compare(tuples[k] + shift, tuples[best] + shift) > 0) best = k;
  return tuples[best];
}

// --------------------------------------------------------------- validation

GmoReport validate_gmo(const GeneralizedOrder& order, std::int64_t sample_radius, std::size_t samples, std::uint64_t seed) {
  GmoReport report;
  const std::size_t n = order.nvars();
  const ScoreFunction& phi = order.score();
  auto fail = [&](const std::string& what, const ExponentVec& witness) {
    if (report.ok) report.witness = witness;
    report.ok = false;
    report.failures.push_back(what + " at " + witness.str());
  };

  // Box points ordered by L1 norm, then lex, so the reported witness is the
  // simplest one.
  std::vector<ExponentVec> box;
  for_each_box_point(ExponentVec(n), sample_radius, [&](const ExponentVec& v) { box.push_back(v); });
  auto l1 = [](const ExponentVec& v) {
    std::int64_t s = 0;
    for (auto x : v.coords()) s += x < 0 ? -x : x;
    return s;
  };
  std::stable_sort(box.begin(), box.end(), [&](const ExponentVec& a, const ExponentVec& b) { return l1(a) < l1(b); });

  for (const auto& v : box) {
    const auto s = phi.scaled(v);
    if (s < 0) {
      fail("negative score", v);
      break;
    }
    if (s == 0 && !phi.vanishing_allowed(v)) {
      fail("score vanishes outside the allowed zero set", v);
      break;
    }
  }
  for (const auto& v : box)
    if (order.compare(ExponentVec(n), v) > 0) {
      fail("1 is greater than a monomial", v);
      break;
    }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, box.size() - 1);
  std::uniform_int_distribution<std::int64_t> small(0, 3);
  const auto& d = order.decomposition();
  auto random_in_cone = [&](std::size_t i) {
    ExponentVec v(n);
    for (const auto& g : d.cone(i).generators()) v += g * small(rng);
    return v;
  };

  for (std::size_t k = 0; k < samples; ++k) {
    const ExponentVec& s = box[pick(rng)];
    const ExponentVec& t = box[pick(rng)];
    if (phi.scaled(s + t) > phi.scaled(s) + phi.scaled(t)) {
      fail("subadditivity fails for " + s.str() + " and " + t.str(), s + t);
      break;
    }
  }

  for (std::size_t i = 0; i < d.size() && report.failures.size() < 8; ++i) {
    for (const auto& g : d.cone(i).generators())
      if (order.cone_form(i).dot(g) != phi.scaled(g)) fail("score is not linear on cone " + std::to_string(i), g);
    for (std::size_t k = 0; k < samples / d.size() + 1; ++k) {
      const ExponentVec s = random_in_cone(i), t = random_in_cone(i);
      if (phi.scaled(s + t) != phi.scaled(s) + phi.scaled(t)) {
        fail("score is not additive on cone " + std::to_string(i), s + t);
        break;
      }
      const ExponentVec& r = box[pick(rng)];
      if (order.compare(r, s) < 0 && order.compare(r + t, s + t) >= 0) {
        fail("multiplication by " + t.str() + " in cone " + std::to_string(i) + " breaks the order", r);
        break;
      }
    }
  }
  return report;
}

}  // namespace lgb
