#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "lgb/gmo.hpp"
#include "lgb/groebner.hpp"
#include "lgb/laurent.hpp"
#include "lgb/reduction.hpp"

namespace lgb {

/// A weight r ∈ Q^n and the valuation val_r(c·X^u) = val(c) − r·u.
class WeightContext {
 public:
  explicit WeightContext(std::vector<mpq_class> weight);

  std::size_t nvars() const { return weight_.size(); }
  const std::vector<mpq_class>& weight() const { return weight_; }

  /// val_r of a single term, exact.
  Valuation term_value(const Coefficient& c, const ExponentVec& u) const;
  /// val_r of a nonzero term times denominator(); coefficient valuations
  /// must be integers (true for every supported field).
  std::int64_t scaled_term_value(const Coefficient& c, const ExponentVec& u) const;
  std::int64_t denominator() const { return den_; }

 private:
  std::vector<mpq_class> weight_;
  ExponentVec scaled_;
  std::int64_t den_ = 1;
};

struct WeightValuation {
  Valuation value;      // +∞ for f = 0
  LaurentPoly initial;  // in_r(f): the terms attaining the minimum
};

WeightValuation val_weight(const WeightContext& ctx, const LaurentPoly& f);

/// Valuation first (a smaller value is the greater term), then the monomial
/// order.
std::strong_ordering compare_weight(const WeightContext& ctx, const GeneralizedOrder& o, const Term& s, const Term& t);

/// An indexed list of vertices r_1, …, r_t of a polytope P ⊂ Q^n. Indices
/// are 0-based in the API and printed 1-based.
class PolytopeContext {
 public:
  /// Rejects empty input, mismatched dimensions, duplicates and points that
  /// lie in the convex hull of the others.
  explicit PolytopeContext(std::vector<std::vector<mpq_class>> vertices);

  std::size_t nvars() const { return n_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<mpq_class>& vertex(std::size_t i) const { return vertices_.at(i); }
  const std::vector<std::vector<mpq_class>>& vertices() const { return vertices_; }
  /// Dimension of the affine hull of P.
  std::size_t dimension() const { return dimension_; }
  bool full_dimensional() const { return dimension_ == n_; }

  std::int64_t denominator() const { return den_; }
  /// Vertex i scaled by denominator().
  const ExponentVec& scaled_vertex(std::size_t i) const { return scaled_.at(i); }

  /// max_i r_i·u, scaled by denominator().
  std::int64_t scaled_support(const ExponentVec& u) const;
  /// I_P(X^u): the indices attaining max_i r_i·u (equivalently the minimum
  /// of val_{r_i}).
  std::vector<std::size_t> attaining(const ExponentVec& u) const;
  std::size_t first_attaining(const ExponentVec& u) const;

  Valuation term_value(const Coefficient& c, const ExponentVec& u) const;
  std::int64_t scaled_term_value(const Coefficient& c, const ExponentVec& u) const;

  /// Normals of the vertex cone V_i = {α : r_i·α ≥ r_j·α for all j}.
  std::vector<ExponentVec> vertex_cone_halfspaces(std::size_t i) const;
  bool in_vertex_cone(std::size_t i, const ExponentVec& a) const;
  /// V_{i,<}: inside V_i, with strict inequalities against every j < i.
  bool in_first_vertex_cone(std::size_t i, const ExponentVec& a) const;

  WeightContext vertex_weight(std::size_t i) const { return WeightContext(vertices_.at(i)); }

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<mpq_class>> vertices_;
  std::vector<ExponentVec> scaled_;
  std::int64_t den_ = 1;
  std::size_t dimension_ = 0;
};

struct PolytopeValuation {
  Valuation value;                    // +∞ for f = 0
  std::vector<std::size_t> attained;  // I_P(f), empty for f = 0
};

PolytopeValuation val_polytope(const PolytopeContext& ctx, const LaurentPoly& f);

/// val_P first, then the smallest attaining vertex index (smaller index is
/// the greater term), then the monomial order.
std::strong_ordering compare_polytope(const PolytopeContext& ctx, const GeneralizedOrder& o, const Term& s, const Term& t);

/// Cones (i, j) with cone (i, j) inside the vertex cone V_i.
struct RefinedDecomposition {
  std::shared_ptr<const ConicDecomposition> cones;
  std::vector<std::size_t> vertex;  // i, 0-based
  std::vector<std::size_t> piece;   // j, 1-based within its vertex
  /// Every extreme ray of the cone satisfies the half-spaces of V_i.
  std::vector<bool> contained;

  std::size_t size() const { return vertex.size(); }
  std::string label(std::size_t k) const;
};

/// When P is full-dimensional every V_i is pointed and is used as it stands.
/// Otherwise each V_i is intersected with the cones of `base` and the
/// full-dimensional pieces are kept; a base cone already inside V_i is
/// reused unchanged.
RefinedDecomposition build_refined_decomposition(const PolytopeContext& ctx, const ConicDecomposition& base);

/// Exact check that the cone lies in V_i.
bool cone_in_vertex_cone(const PolytopeContext& ctx, const Cone& cone, std::size_t i);

// ---------------------------------------------------------------- term orders

/// ≤_r on K{X; r}: coefficients matter through their valuation.
class WeightOrder : public TermOrder {
 public:
  WeightOrder(WeightContext ctx, GeneralizedOrder order, std::optional<mpq_class> cap = std::nullopt,
              std::int64_t search_radius = 0);

  const WeightContext& context() const { return ctx_; }
  const GeneralizedOrder& gmo() const { return order_; }
  /// in_r(f).
  LaurentPoly initial(const LaurentPoly& f) const { return val_weight(ctx_, f).initial; }

  std::string name() const override { return "weight/" + order_.score().name(); }
  std::size_t nvars() const override { return order_.nvars(); }
  std::size_t cone_count() const override { return order_.decomposition().size(); }
  const Cone& cone(std::size_t k) const override { return order_.decomposition().cone(k); }
  std::strong_ordering compare(const Coefficient& a, const ExponentVec& u, const Coefficient& b,
                               const ExponentVec& v) const override;
  bool in_cone_target(std::size_t k, const ExponentVec& m) const override { return cone(k).contains(m); }
  LeadingData cone_leading(const LaurentPoly& f, std::size_t k) const override;
  ConeData cone_data(const LaurentPoly& f, std::size_t k) const override;
  std::optional<mpq_class> cap() const override { return cap_; }
  Valuation term_valuation(const Coefficient& c, const ExponentVec& e) const override { return ctx_.term_value(c, e); }

 private:
  WeightContext ctx_;
  GeneralizedOrder order_;
  std::optional<mpq_class> cap_;
  std::int64_t search_radius_;
};

/// ≤_P on K{X; P}, with cones labelled (i, j) from the refined
/// decomposition. The monomial order on the refined cones uses the score
/// max_j (r_j − c)·α, c the vertex centroid, when P is full-dimensional
/// (linear on each V_i), and the base score otherwise.
class PolytopeOrder : public TermOrder {
 public:
  PolytopeOrder(PolytopeContext ctx, const GeneralizedOrder& base, std::optional<mpq_class> cap = std::nullopt,
                std::int64_t search_radius = 0);

  const PolytopeContext& context() const { return ctx_; }
  const RefinedDecomposition& refined() const { return refined_; }
  const GeneralizedOrder& gmo() const { return order_; }

  std::string name() const override { return "polytope/" + order_.score().name(); }
  std::size_t nvars() const override { return ctx_.nvars(); }
  std::size_t cone_count() const override { return refined_.size(); }
  std::string cone_label(std::size_t k) const override { return refined_.label(k); }
  const Cone& cone(std::size_t k) const override { return refined_.cones->cone(k); }
  std::strong_ordering compare(const Coefficient& a, const ExponentVec& u, const Coefficient& b,
                               const ExponentVec& v) const override;
  /// lm(tf) ∈ T_{i,j} ∩ V_{i,<}.
  bool in_cone_target(std::size_t k, const ExponentVec& m) const override;
  LeadingData cone_leading(const LaurentPoly& f, std::size_t k) const override;
  ConeData cone_data(const LaurentPoly& f, std::size_t k) const override;
  std::optional<mpq_class> cap() const override { return cap_; }
  Valuation term_valuation(const Coefficient& c, const ExponentVec& e) const override { return ctx_.term_value(c, e); }

  std::int64_t search_radius() const { return search_radius_; }

 private:
  PolytopeContext ctx_;
  RefinedDecomposition refined_;
  GeneralizedOrder order_;
  std::optional<mpq_class> cap_;
  std::int64_t search_radius_;
};

struct PolytopeLeading {
  LeadingData lead;
  LaurentPoly initial;  // in_P(f) = in_{r_k}(f) with k = min I_P(lm(f))
  std::size_t vertex;   // that k, 0-based
};

PolytopeLeading lm_polytope(const PolytopeOrder& order, const LaurentPoly& f);

/// Generators of T_{i,j}(f) = {t : lm(tf) ∈ T_{i,j} ∩ V_{i,<}} for refined
/// cone k: a witness deep inside the cone, a descent along the Hilbert
/// basis, then an exhaustive box search with direct membership checks.
/// Radius 0 sizes the box from the support spread and the descended
/// witness. Throws IncompleteSearch when the box cannot certify the result.
std::vector<ExponentVec> tij_generators(const PolytopeOrder& order, const LaurentPoly& f, std::size_t k,
                                        std::int64_t search_radius = 0);

// ------------------------------------------------------------ capped series

/// Finite approximation of an element of K{X; r} or K{X; P}: the terms of
/// valuation at or above `cap` have been dropped.
struct CappedSeries {
  LaurentPoly body;
  mpq_class cap;
};

/// Truncates f at the order's cap (which must be set).
CappedSeries make_series(const TermOrder& order, const LaurentPoly& f);

/// Division at the order's precision. All inputs must carry the order's cap.
DivisionResult reduce_P(const TermOrder& order, const CappedSeries& f, std::span<const CappedSeries> divisors);

/// Buchberger at the order's precision.
GBResult buchberger_P(const TermOrder& order, std::span<const CappedSeries> generators, const GBConfig& config = {});

}  // namespace lgb
