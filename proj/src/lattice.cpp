#include "lgb/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "lgb/errors.hpp"
#include "lgb/linalg.hpp"

namespace lgb {

// ---------------------------------------------------------------- ExponentVec

ExponentVec::ExponentVec(std::size_t n) : n_(static_cast<std::uint8_t>(n)) {
  if (n > kMaxVars) throw UsageError("at most " + std::to_string(kMaxVars) + " variables are supported");
}

ExponentVec::ExponentVec(std::initializer_list<std::int64_t> coords) : ExponentVec(coords.size()) {
  std::copy(coords.begin(), coords.end(), c_.begin());
}

ExponentVec::ExponentVec(std::span<const std::int64_t> coords) : ExponentVec(coords.size()) {
  std::copy(coords.begin(), coords.end(), c_.begin());
}

ExponentVec ExponentVec::unit(std::size_t n, std::size_t k) {
  ExponentVec e(n);
  e[k] = 1;
  return e;
}

bool ExponentVec::is_zero() const {
  return std::all_of(c_.begin(), c_.begin() + n_, [](std::int64_t x) { return x == 0; });
}

ExponentVec& ExponentVec::operator+=(const ExponentVec& o) {
  if (o.n_ != n_) throw UsageError("exponent dimension mismatch");
  for (std::size_t k = 0; k < n_; ++k) c_[k] += o.c_[k];
  return *this;
}

ExponentVec& ExponentVec::operator-=(const ExponentVec& o) {
  if (o.n_ != n_) throw UsageError("exponent dimension mismatch");
  for (std::size_t k = 0; k < n_; ++k) c_[k] -= o.c_[k];
  return *this;
}

ExponentVec ExponentVec::operator-() const {
  ExponentVec r(*this);
  for (std::size_t k = 0; k < n_; ++k) r.c_[k] = -r.c_[k];
  return r;
}

ExponentVec ExponentVec::operator*(std::int64_t s) const {
  ExponentVec r(*this);
  for (std::size_t k = 0; k < n_; ++k) r.c_[k] *= s;
  return r;
}

std::int64_t ExponentVec::dot(const ExponentVec& o) const {
  std::int64_t s = 0;
  for (std::size_t k = 0; k < n_; ++k) s += c_[k] * o.c_[k];
  return s;
}

std::int64_t ExponentVec::norm_inf() const {
  std::int64_t m = 0;
  for (std::size_t k = 0; k < n_; ++k) m = std::max(m, c_[k] < 0 ? -c_[k] : c_[k]);
  return m;
}

std::string ExponentVec::str() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t k = 0; k < n_; ++k) out << (k ? "," : "") << c_[k];
  out << ')';
  return out.str();
}

std::size_t ExponentVecHash::operator()(const ExponentVec& v) const noexcept {
  std::size_t h = v.size();
  for (auto x : v.coords()) h = h * 1000003u ^ std::hash<std::int64_t>{}(x);
  return h;
}

void for_each_box_point(const ExponentVec& center, std::int64_t radius, const std::function<void(const ExponentVec&)>& fn) {
  const std::size_t n = center.size();
  ExponentVec p(n);
  for (std::size_t k = 0; k < n; ++k) p[k] = center[k] - radius;
  if (n == 0) {
    fn(p);
    return;
  }
  for (;;) {
    fn(p);
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (p[k] < center[k] + radius) {
        ++p[k];
        break;
      }
      p[k] = center[k] - radius;
      if (k == 0) return;
    }
  }
}

// ---------------------------------------------------------------------- Cone

namespace {

// Extreme rays of the pointed full-dimensional cone {x : h·x ≥ 0}.
std::vector<ExponentVec> rays_from_halfspaces(std::size_t n, const std::vector<ExponentVec>& hs) {
  std::set<ExponentVec> rays;
  const std::size_t m = hs.size();
  if (n == 1) {
    for (std::int64_t s : {1, -1}) {
      ExponentVec v{s};
      if (std::all_of(hs.begin(), hs.end(), [&](const ExponentVec& h) { return h.dot(v) >= 0; })) rays.insert(v);
    }
    return {rays.begin(), rays.end()};
  }
  // Every (n-1)-subset of tight inequalities with a one-dimensional kernel.
  std::vector<std::size_t> idx(n - 1);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == n - 1) {
      std::vector<ExponentVec> rows;
      for (auto i : idx) rows.push_back(hs[i]);
      auto v = linalg::kernel_vector(rows, n);
      if (!v) return;
      for (const ExponentVec& cand : {*v, -*v}) {
        if (std::all_of(hs.begin(), hs.end(), [&](const ExponentVec& h) { return h.dot(cand) >= 0; })) rays.insert(cand);
      }
      return;
    }
    for (std::size_t i = start; i < m; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
  return {rays.begin(), rays.end()};
}

// Facet normals of the cone spanned by `gens` (assumed full-dimensional).
std::vector<ExponentVec> halfspaces_from_generators(std::size_t n, const std::vector<ExponentVec>& gens) {
  std::set<ExponentVec> out;
  if (n == 1) {
    for (std::int64_t s : {1, -1}) {
      ExponentVec h{s};
      if (std::all_of(gens.begin(), gens.end(), [&](const ExponentVec& g) { return h.dot(g) >= 0; })) out.insert(h);
    }
    return {out.begin(), out.end()};
  }
  std::vector<std::size_t> idx(n - 1);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == n - 1) {
      std::vector<ExponentVec> rows;
      for (auto i : idx) rows.push_back(gens[i]);
      auto h = linalg::kernel_vector(rows, n);
      if (!h) return;
      for (const ExponentVec& cand : {*h, -*h}) {
        if (std::all_of(gens.begin(), gens.end(), [&](const ExponentVec& g) { return cand.dot(g) >= 0; })) out.insert(cand);
      }
      return;
    }
    for (std::size_t i = start; i < gens.size(); ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
  return {out.begin(), out.end()};
}

// Exact ray coordinates λ with x = Σ λ_k rays[k] (simplicial cones).
struct RayFrame {
  linalg::RatMatrix inverse;  // λ = inverse · x

  explicit RayFrame(const std::vector<ExponentVec>& rays) {
    const std::size_t n = rays.size();
    linalg::RatMatrix aug(n, std::vector<mpq_class>(2 * n));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) aug[r][c] = rays[c][r];  // columns are rays
      aug[r][n + r] = 1;
    }
    if (linalg::row_reduce(aug) < n) throw UnsupportedCone("rays are linearly dependent");
    inverse.assign(n, std::vector<mpq_class>(n));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) inverse[r][c] = aug[r][n + c];
  }

  std::vector<mpq_class> operator()(const ExponentVec& x) const {
    std::vector<mpq_class> lambda(inverse.size());
    for (std::size_t r = 0; r < inverse.size(); ++r)
      for (std::size_t c = 0; c < inverse.size(); ++c) lambda[r] += inverse[r][c] * x[c];
    return lambda;
  }
};

// Lattice points x with λ(x) − base ∈ [0,1)^n for the simplicial cone on `rays`.
std::vector<ExponentVec> parallelepiped_points(const std::vector<ExponentVec>& rays, const std::vector<mpq_class>& base) {
  const std::size_t n = rays.size();
  const RayFrame frame(rays);
  std::vector<mpq_class> lo(n), hi(n);
  for (std::size_t c = 0; c < n; ++c) {
    mpq_class origin = 0;
    for (std::size_t k = 0; k < n; ++k) origin += base[k] * rays[k][c];
    lo[c] = hi[c] = origin;
    for (std::size_t k = 0; k < n; ++k) (rays[k][c] < 0 ? lo[c] : hi[c]) += rays[k][c];
  }
  std::vector<std::int64_t> lo_i(n), hi_i(n);
  for (std::size_t c = 0; c < n; ++c) {
    mpz_class l, h;
    mpz_cdiv_q(l.get_mpz_t(), lo[c].get_num_mpz_t(), lo[c].get_den_mpz_t());
    mpz_fdiv_q(h.get_mpz_t(), hi[c].get_num_mpz_t(), hi[c].get_den_mpz_t());
    lo_i[c] = l.get_si();
    hi_i[c] = h.get_si();
  }
  std::vector<ExponentVec> out;
  ExponentVec p(n);
  for (std::size_t c = 0; c < n; ++c) {
    if (lo_i[c] > hi_i[c]) return out;
    p[c] = lo_i[c];
  }
  for (;;) {
    auto lambda = frame(p);
    bool inside = true;
    for (std::size_t k = 0; k < n && inside; ++k) {
      mpq_class d = lambda[k] - base[k];
      inside = d >= 0 && d < 1;
    }
    if (inside) out.push_back(p);
    std::size_t k = n;
    for (;;) {
      if (k == 0) return out;
      --k;
      if (p[k] < hi_i[k]) {
        ++p[k];
        break;
      }
      p[k] = lo_i[k];
    }
  }
}

std::vector<ExponentVec> simplicial_hilbert_candidates(const std::vector<ExponentVec>& rays) {
  std::vector<ExponentVec> cands = parallelepiped_points(rays, std::vector<mpq_class>(rays.size(), 0));
  cands.insert(cands.end(), rays.begin(), rays.end());
  std::erase_if(cands, [](const ExponentVec& v) { return v.is_zero(); });
  return cands;
}

bool satisfies(const std::vector<ExponentVec>& hs, const ExponentVec& v) {
  return std::all_of(hs.begin(), hs.end(), [&](const ExponentVec& h) { return h.dot(v) >= 0; });
}

// Keeps the irreducible elements of a generating set of the monoid C ∩ Z^n.
std::vector<ExponentVec> irreducible(const std::vector<ExponentVec>& hs, std::vector<ExponentVec> cands) {
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  std::vector<ExponentVec> out;
  for (const auto& x : cands) {
    bool reducible = false;
    for (const auto& y : cands) {
      if (y == x) continue;
      ExponentVec d = x - y;
      if (!d.is_zero() && satisfies(hs, d)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.push_back(x);
  }
  return out;
}

}  // namespace

Cone Cone::make(std::size_t id, std::vector<ExponentVec> generators, std::vector<ExponentVec> halfspaces) {
  if (generators.empty()) throw UsageError("cone needs at least one generator");
  Cone c;
  c.id_ = id;
  c.n_ = generators.front().size();
  for (auto& h : halfspaces) h = linalg::primitive(h);
  c.generators_ = std::move(generators);
  c.halfspaces_ = std::move(halfspaces);
  c.rays_ = rays_from_halfspaces(c.n_, c.halfspaces_);
  c.finish();
  for (const auto& g : c.generators_)
    if (!c.contains(g)) throw UsageError("cone generator " + g.str() + " violates a half-space");
  // Each extreme ray must be a positive multiple of a generator, so both
  // descriptions define the same cone.
  for (const auto& r : c.rays_) {
    bool found = std::any_of(c.generators_.begin(), c.generators_.end(), [&](const ExponentVec& g) {
      return !g.is_zero() && linalg::primitive(g) == r;
    });
    if (!found) throw UsageError("cone half-spaces admit ray " + r.str() + " not among the generators");
  }
  if (c.unimodular_ && c.n_ <= 4) {
    for_each_box_point(ExponentVec(c.n_), 5, [&](const ExponentVec& v) {
      if (!c.contains(v)) return;
      for (auto x : c.coordinates(v))
        if (x < 0) throw UsageError("cone descriptions disagree at " + v.str());
    });
  }
  return c;
}

Cone Cone::from_halfspaces(std::size_t id, std::size_t n, std::vector<ExponentVec> halfspaces) {
  Cone c;
  c.id_ = id;
  c.n_ = n;
  for (auto& h : halfspaces) h = linalg::primitive(h);
  std::sort(halfspaces.begin(), halfspaces.end());
  halfspaces.erase(std::unique(halfspaces.begin(), halfspaces.end()), halfspaces.end());
  c.halfspaces_ = std::move(halfspaces);
  if (linalg::rank(c.halfspaces_, n) < n) throw UnsupportedCone("cone is not pointed");
  c.rays_ = rays_from_halfspaces(n, c.halfspaces_);
  if (linalg::rank(c.rays_, n) < n) throw UnsupportedCone("cone is not full-dimensional");
  // Drop redundant inequalities: keep those tight on a rank n-1 set of rays.
  std::vector<ExponentVec> facets;
  for (const auto& h : c.halfspaces_) {
    std::vector<ExponentVec> tight;
    for (const auto& r : c.rays_)
      if (h.dot(r) == 0) tight.push_back(r);
    if (linalg::rank(tight, n) == n - 1) facets.push_back(h);
  }
  c.halfspaces_ = std::move(facets);
  if (c.rays_.size() == n) {
    c.generators_ = irreducible(c.halfspaces_, simplicial_hilbert_candidates(c.rays_));
  } else {
    std::vector<ExponentVec> cands;
    for (const auto& piece : c.triangulate()) {
      auto h = simplicial_hilbert_candidates(piece.rays());
      cands.insert(cands.end(), h.begin(), h.end());
    }
    c.generators_ = irreducible(c.halfspaces_, std::move(cands));
  }
  // Rays first, in sorted order, then the remaining Hilbert basis elements.
  std::vector<ExponentVec> ordered = c.rays_;
  for (const auto& g : c.generators_)
    if (std::find(ordered.begin(), ordered.end(), g) == ordered.end()) ordered.push_back(g);
  c.generators_ = std::move(ordered);
  c.finish();
  return c;
}

Cone Cone::from_generators(std::size_t id, std::vector<ExponentVec> generators) {
  if (generators.empty()) throw UsageError("cone needs at least one generator");
  const std::size_t n = generators.front().size();
  return from_halfspaces(id, n, halfspaces_from_generators(n, generators));
}

void Cone::finish() {
  unimodular_ = false;
  inverse_.clear();
  if (generators_.size() != n_ || rays_.size() != n_) return;
  if (abs(linalg::determinant(generators_)) != 1) return;
  RayFrame frame(generators_);
  inverse_.assign(n_, std::vector<std::int64_t>(n_));
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) inverse_[r][c] = frame.inverse[r][c].get_num().get_si();
  unimodular_ = true;
}

bool Cone::contains(const ExponentVec& v) const { return satisfies(halfspaces_, v); }

ExponentVec Cone::interior_point() const {
  ExponentVec w(n_);
  for (const auto& r : rays_) w += r;
  return w;
}

std::vector<std::int64_t> Cone::coordinates(const ExponentVec& v) const {
  if (!unimodular_) throw UnsupportedCone("generator coordinates need a unimodular cone");
  std::vector<std::int64_t> out(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) out[r] += inverse_[r][c] * v[c];
  return out;
}

std::vector<Cone> Cone::triangulate() const {
  if (is_simplicial()) return {*this};
  if (n_ != 3) throw UnsupportedCone("triangulation is implemented for dimension 3 only");
  // Walk the cycle of rays, where two rays are adjacent when they span a facet.
  std::vector<ExponentVec> cycle{rays_.front()};
  std::vector<bool> used(rays_.size(), false);
  used[0] = true;
  while (cycle.size() < rays_.size()) {
    const ExponentVec& last = cycle.back();
    bool advanced = false;
    for (std::size_t k = 0; k < rays_.size() && !advanced; ++k) {
      if (used[k]) continue;
      for (const auto& h : halfspaces_) {
        if (h.dot(last) == 0 && h.dot(rays_[k]) == 0) {
          cycle.push_back(rays_[k]);
          used[k] = true;
          advanced = true;
          break;
        }
      }
    }
    if (!advanced) throw UnsupportedCone("could not order the rays of a 3-dimensional cone");
  }
  std::vector<Cone> out;
  for (std::size_t k = 1; k + 1 < cycle.size(); ++k)
    out.push_back(from_halfspaces(id_, n_, halfspaces_from_generators(n_, {cycle[0], cycle[k], cycle[k + 1]})));
  return out;
}

Cone Cone::with_id(std::size_t id) const {
  Cone c(*this);
  c.id_ = id;
  return c;
}

// -------------------------------------------------------- ConicDecomposition

ConicDecomposition::ConicDecomposition(std::size_t n, DecompositionKind kind, std::vector<Cone> cones)
    : n_(n), kind_(kind), cones_(std::move(cones)) {
  if (cones_.empty()) throw UsageError("a decomposition needs at least one cone");
  for (const auto& c : cones_)
    if (c.dim() != n) throw UsageError("cone dimension mismatch in decomposition");
}

std::size_t ConicDecomposition::locate(const ExponentVec& v) const {
  for (std::size_t i = 0; i < cones_.size(); ++i)
    if (cones_[i].contains(v)) return i;
  throw UsageError("point " + v.str() + " lies in no cone of the decomposition");
}

std::shared_ptr<const ConicDecomposition> build_decomposition(DecompositionKind kind, std::size_t n) {
  if (n == 0) throw UsageError("decomposition dimension must be positive");
  if (n > kMaxVars) throw UsageError("too many variables");
  std::vector<Cone> cones;
  if (kind == DecompositionKind::Standard) {
    std::vector<ExponentVec> units;
    for (std::size_t k = 0; k < n; ++k) units.push_back(ExponentVec::unit(n, k));
    cones.push_back(Cone::make(0, units, units));
    ExponentVec minus_ones(n);
    for (std::size_t k = 0; k < n; ++k) minus_ones[k] = -1;
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<ExponentVec> gens, hs;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) gens.push_back(units[k]);
      gens.push_back(minus_ones);
      hs.push_back(-units[j]);
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) hs.push_back(units[k] - units[j]);
      cones.push_back(Cone::make(j + 1, gens, hs));
    }
  } else if (kind == DecompositionKind::Orthant) {
    for (std::size_t i = 0; i < (std::size_t{1} << n); ++i) {
      const std::size_t gray = i ^ (i >> 1);
      std::vector<ExponentVec> gens;
      for (std::size_t k = 0; k < n; ++k) gens.push_back(ExponentVec::unit(n, k) * ((gray >> k) & 1 ? -1 : 1));
      cones.push_back(Cone::make(i, gens, gens));
    }
  } else {
    throw UsageError("only standard and orthant decompositions are built in");
  }
  return std::make_shared<const ConicDecomposition>(n, kind, std::move(cones));
}

// ------------------------------------------------------------- cone helpers

bool cone_contains(const Cone& c, const ExponentVec& v) {
  if (v.size() != c.dim()) throw UsageError("exponent dimension mismatch");
  return c.contains(v);
}

std::pair<ExponentVec, ExponentVec> cone_factorize(const Cone& c, const ExponentVec& s) {
  if (!c.is_unimodular()) throw UnsupportedCone("cone_factorize needs a unimodular cone");
  auto coords = c.coordinates(s);
  ExponentVec u(c.dim()), v(c.dim());
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k] > 0) u += c.generators()[k] * coords[k];
    if (coords[k] < 0) v += c.generators()[k] * (-coords[k]);
  }
  return {u, v};
}

ExponentVec shifted_cone_intersection(const Cone& c, const ExponentVec& a, const ExponentVec& b) {
  if (!c.is_unimodular()) throw UnsupportedCone("shifted_cone_intersection needs a unimodular cone");
  auto ca = c.coordinates(a);
  auto cb = c.coordinates(b);
  ExponentVec g(c.dim());
  for (std::size_t k = 0; k < ca.size(); ++k) g += c.generators()[k] * std::max(ca[k], cb[k]);
  return g;
}

namespace {

// Vertices of {x : rows[k]·x ≥ rhs[k]}, from every n-subset of tight rows.
std::vector<std::vector<mpq_class>> polyhedron_vertices(const std::vector<ExponentVec>& rows, const std::vector<mpq_class>& rhs,
                                                        std::size_t n) {
  std::vector<std::vector<mpq_class>> out;
  std::vector<std::size_t> idx(n);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == n) {
      linalg::RatMatrix m(n, std::vector<mpq_class>(n));
      std::vector<mpq_class> b(n);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) m[r][c] = rows[idx[r]][c];
        b[r] = rhs[idx[r]];
      }
      auto x = linalg::solve(m, b);
      if (!x) return;
      for (std::size_t k = 0; k < rows.size(); ++k) {
        mpq_class v = 0;
        for (std::size_t c = 0; c < n; ++c) v += rows[k][c] * (*x)[c];
        if (v < rhs[k]) return;
      }
      out.push_back(*x);
      return;
    }
    for (std::size_t i = start; i < rows.size(); ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
  return out;
}

// Minimal lattice points of Q = (a + C) ∩ (b + C) for a non-simplicial C.
// Write x = p + c with p in the convex hull of the vertices of Q and c in a
// simplicial piece of C. If some ray coefficient of c is at least 1 then
// x − ray stays in Q, so every minimal x satisfies
//   ℓ(x) < max_v ℓ(v) + Σ_rays ℓ(ray)
// for ℓ the sum of the facet normals, which is positive on C \ {0}. The
// lattice points below that level form a bounded set we enumerate.
std::vector<ExponentVec> polyhedral_meet(const Cone& c, const ExponentVec& a, const ExponentVec& b) {
  const std::size_t n = c.dim();
  const auto& hs = c.halfspaces();
  std::vector<mpq_class> rhs;
  for (const auto& h : hs) rhs.push_back(std::max(h.dot(a), h.dot(b)));
  ExponentVec level(n);
  for (const auto& h : hs) level += h;
  mpq_class bound = 0;
  bool first = true;
  for (const auto& v : polyhedron_vertices(hs, rhs, n)) {
    mpq_class lv = 0;
    for (std::size_t k = 0; k < n; ++k) lv += level[k] * v[k];
    bound = first ? lv : std::max(bound, lv);
    first = false;
  }
  for (const auto& r : c.rays()) bound += level.dot(r);

  // Bounding box of the polytope Q ∩ {ℓ ≤ bound}.
  std::vector<ExponentVec> rows = hs;
  std::vector<mpq_class> cut = rhs;
  rows.push_back(-level);
  cut.push_back(-bound);
  const auto corners = polyhedron_vertices(rows, cut, n);
  if (corners.empty()) throw std::logic_error("empty region in a shifted cone intersection");
  ExponentVec lo(n), hi(n);
  for (std::size_t k = 0; k < n; ++k) {
    mpq_class mn = corners.front()[k], mx = mn;
    for (const auto& v : corners) {
      mn = std::min(mn, v[k]);
      mx = std::max(mx, v[k]);
    }
    mpz_class l, h;
    mpz_fdiv_q(l.get_mpz_t(), mn.get_num_mpz_t(), mn.get_den_mpz_t());
    mpz_cdiv_q(h.get_mpz_t(), mx.get_num_mpz_t(), mx.get_den_mpz_t());
    lo[k] = l.get_si();
    hi[k] = h.get_si();
  }

  auto in_q = [&](const ExponentVec& x) {
    for (std::size_t k = 0; k < hs.size(); ++k)
      if (hs[k].dot(x) < rhs[k]) return false;
    return true;
  };
  std::vector<ExponentVec> out;
  ExponentVec p = lo;
  for (;;) {
    if (in_q(p) && level.dot(p) < bound &&
        std::none_of(c.generators().begin(), c.generators().end(), [&](const ExponentVec& g) { return in_q(p - g); }))
      out.push_back(p);
    std::size_t k = n;
    for (;;) {
      if (k == 0) {
        std::sort(out.begin(), out.end());
        return out;
      }
      --k;
      if (p[k] < hi[k]) {
        ++p[k];
        break;
      }
      p[k] = lo[k];
    }
  }
}

}  // namespace

std::vector<ExponentVec> shifted_cone_meet(const Cone& c, const ExponentVec& a, const ExponentVec& b) {
  if (c.is_unimodular()) return {shifted_cone_intersection(c, a, b)};
  if (!c.is_simplicial()) return polyhedral_meet(c, a, b);
  const RayFrame frame(c.rays());
  auto la = frame(a);
  auto lb = frame(b);
  std::vector<mpq_class> m(la.size());
  for (std::size_t k = 0; k < m.size(); ++k) m[k] = std::max(la[k], lb[k]);
  return minimal_elements(c, parallelepiped_points(c.rays(), m));
}

ExponentVec push_into_cone(const Cone& c, std::span<const ExponentVec> points) {
  ExponentVec t(c.dim());
  if (c.is_unimodular()) {
    for (const auto& p : points) t += cone_factorize(c, p).second;
    return t;
  }
  const ExponentVec w = c.interior_point();
  std::int64_t k = 0;
  for (const auto& p : points)
    for (const auto& h : c.halfspaces()) {
      const std::int64_t hp = h.dot(p), hw = h.dot(w);
      if (hp < 0) k = std::max(k, (-hp + hw - 1) / hw);
    }
  return w * k;
}

std::vector<ExponentVec> minimal_elements(const Cone& c, std::vector<ExponentVec> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<ExponentVec> out;
  for (const auto& x : points) {
    bool dominated = false;
    for (const auto& y : points)
      if (y != x && c.contains(x - y)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(x);
  }
  return out;
}

bool generates_lattice(std::span<const ExponentVec> generators, std::size_t n) {
  auto diag = linalg::smith_diagonal(generators, n);
  if (diag.size() != n) return false;
  return std::all_of(diag.begin(), diag.end(), [](const mpz_class& d) { return d == 1; });
}

bool is_pointed(const Cone& c) { return linalg::rank(c.halfspaces(), c.dim()) == c.dim(); }

bool DecompositionReport::ok() const {
  if (!covered) return false;
  for (const auto& c : cones)
    if (!c.pointed || !c.group_generating) return false;
  for (const auto& p : pairs)
    if (!p.ok) return false;
  return true;
}

DecompositionReport validate_decomposition(const ConicDecomposition& d, std::int64_t box_radius) {
  DecompositionReport report;
  const std::size_t n = d.dim();
  std::vector<ExponentVec> box;
  for_each_box_point(ExponentVec(n), box_radius, [&](const ExponentVec& v) { box.push_back(v); });

  for (const auto& c : d.cones()) report.cones.push_back({c.id(), is_pointed(c), generates_lattice(c.generators(), n)});

  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (i == j) continue;
      const Cone& ci = d.cone(i);
      const Cone& cj = d.cone(j);
      // gr<Ti ∩ Tj> is the lattice in the span of the (saturated) intersection.
      std::vector<ExponentVec> common;
      for (const auto& v : box)
        if (ci.contains(v) && cj.contains(v)) common.push_back(v);
      const auto normals = linalg::nullspace(common, n);
      PairReport pr{i, j, true, std::nullopt};
      for (const auto& v : box) {
        if (!ci.contains(v) || cj.contains(v)) continue;
        bool in_span = std::all_of(normals.begin(), normals.end(), [&](const ExponentVec& h) { return h.dot(v) == 0; });
        if (in_span) {
          pr.ok = false;
          pr.witness = v;
          break;
        }
      }
      report.pairs.push_back(pr);
    }
  }
  for (const auto& v : box) {
    bool hit = std::any_of(d.cones().begin(), d.cones().end(), [&](const Cone& c) { return c.contains(v); });
    if (!hit) {
      report.covered = false;
      report.uncovered.push_back(v);
    }
  }
  return report;
}

}  // namespace lgb
