#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lgb/coeffs.hpp"
#include "lgb/gmo.hpp"
#include "lgb/lattice.hpp"

namespace lgb {

struct Term {
  Coefficient coeff;
  ExponentVec exp;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Finitely supported map Z^n → K. Terms are stored in lexicographic order of
/// their exponents; no zero coefficient is ever stored.
class LaurentPoly {
 public:
  LaurentPoly(const FieldSpec& field, std::size_t nvars);
  static LaurentPoly monomial(const Coefficient& c, const ExponentVec& e);
  static LaurentPoly constant(const FieldSpec& field, std::size_t nvars, long c);

  const FieldSpec& field() const { return *field_; }
  std::size_t nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::vector<ExponentVec> support() const;
  Coefficient coefficient(const ExponentVec& e) const;

  void add_term(const Coefficient& c, const ExponentVec& e);

  LaurentPoly operator+(const LaurentPoly& g) const;
  LaurentPoly operator-(const LaurentPoly& g) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& g) const;
  LaurentPoly operator*(const Coefficient& c) const;
  LaurentPoly& operator+=(const LaurentPoly& g) { return *this = *this + g; }
  LaurentPoly& operator-=(const LaurentPoly& g) { return *this = *this - g; }
  /// c · X^e · f
  LaurentPoly mul_term(const Coefficient& c, const ExponentVec& e) const;
  /// The terms satisfying `keep`.
  LaurentPoly filtered(const std::function<bool(const Term&)>& keep) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

 private:
  void check_compatible(const LaurentPoly& g) const;
  LaurentPoly combine(const LaurentPoly& g, bool subtract) const;

  const FieldSpec* field_;
  std::size_t n_;
  std::vector<Term> terms_;
};

struct LeadingData {
  ExponentVec lm;
  Coefficient lc;
  Term lt() const { return {lc, lm}; }
};

/// Leading data for one cone: lm_k(f), lc_k(f) and generators of the
/// T_k-module T_k(f).
struct ConeData {
  ExponentVec lm;
  Coefficient lc;
  std::vector<ExponentVec> generators;
};

/// A total preorder on terms together with a conic decomposition: the
/// interface shared by the plain Laurent setting and the valued settings.
/// Division and Buchberger are written once against it.
class TermOrder {
 public:
  virtual ~TermOrder() = default;

  virtual std::string name() const = 0;
  virtual std::size_t nvars() const = 0;
  virtual std::size_t cone_count() const = 0;
  virtual std::string cone_label(std::size_t k) const { return std::to_string(k); }
  /// Module monoid of cone k.
  virtual const Cone& cone(std::size_t k) const = 0;

  virtual std::strong_ordering compare(const Coefficient& a, const ExponentVec& u, const Coefficient& b,
                                       const ExponentVec& v) const = 0;
  /// Whether a leading monomial m places its multiplier in T_k(f), i.e.
  /// t ∈ T_k(f) ⟺ in_cone_target(k, lm(tf)).
  virtual bool in_cone_target(std::size_t k, const ExponentVec& m) const = 0;
  /// lm_k(f) and lc_k(f) only.
  virtual LeadingData cone_leading(const LaurentPoly& f, std::size_t k) const = 0;
  /// cone_leading plus generators of T_k(f).
  virtual ConeData cone_data(const LaurentPoly& f, std::size_t k) const = 0;
  /// Generators of lm_k(f)T_k(f) ∩ lm_k(g)T_k(g).
  virtual std::vector<ExponentVec> collisions(const ConeData& f, const ConeData& g, std::size_t k) const;

  /// Precision cap for series arithmetic; terms of valuation ≥ cap vanish.
  virtual std::optional<mpq_class> cap() const { return std::nullopt; }
  virtual Valuation term_valuation(const Coefficient& c, const ExponentVec& e) const;

  std::strong_ordering compare(const Term& a, const Term& b) const { return compare(a.coeff, a.exp, b.coeff, b.exp); }
  /// Index into f.terms() of the leading term of X^shift · f.
  std::size_t leading_index(const LaurentPoly& f, const ExponentVec& shift) const;
  LeadingData leading(const LaurentPoly& f) const;
  ExponentVec shifted_lm(const LaurentPoly& f, const ExponentVec& t) const;
  bool in_module(const ConeData& data, std::size_t k, const ExponentVec& t) const;
  /// Drops the terms at or above the cap.
  LaurentPoly truncate(const LaurentPoly& f) const;
  /// Terms of f sorted from greatest to smallest.
  std::vector<Term> sorted_terms(const LaurentPoly& f) const;
};

/// lm_i(f) via a translation putting supp(f) inside cone i.
LeadingData cone_leading_data(const GeneralizedOrder& o, const LaurentPoly& f, std::size_t i);

/// The plain generalized monomial order on K[X±1]; coefficients are ignored.
class MonomialOrder : public TermOrder {
 public:
  explicit MonomialOrder(GeneralizedOrder order, std::int64_t search_radius = 0);

  const GeneralizedOrder& gmo() const { return order_; }
  std::string name() const override { return order_.score().name(); }
  std::size_t nvars() const override { return order_.nvars(); }
  std::size_t cone_count() const override { return order_.decomposition().size(); }
  const Cone& cone(std::size_t k) const override { return order_.decomposition().cone(k); }
  std::strong_ordering compare(const Coefficient&, const ExponentVec& u, const Coefficient&, const ExponentVec& v) const override {
    return order_.compare(u, v);
  }
  bool in_cone_target(std::size_t k, const ExponentVec& m) const override { return cone(k).contains(m); }
  LeadingData cone_leading(const LaurentPoly& f, std::size_t k) const override { return cone_leading_data(order_, f, k); }
  ConeData cone_data(const LaurentPoly& f, std::size_t k) const override;

 private:
  GeneralizedOrder order_;
  std::int64_t search_radius_;
};

// -------------------------------------------------------------------------
// Leading data under a generalized monomial order.

LeadingData leading_data(const GeneralizedOrder& o, const LaurentPoly& f);
/// lm(X^t · f).
ExponentVec shifted_leading_monomial(const GeneralizedOrder& o, const LaurentPoly& f, const ExponentVec& t);

/// Generator g of the monogenous module T_i(f) = g + T_i (standard
/// decomposition), found by descending from a witness along each generator.
ExponentVec ti_generator(const GeneralizedOrder& o, const LaurentPoly& f, std::size_t i);

/// Generating set of T_i(f) from its description as
/// A_i ∩ ⋂_j (A_j^c ∪ Δ_ij), valid for any decomposition on whose cones the
/// score is linear. Radius 0 picks a default from the support spread.
std::vector<ExponentVec> ti_set_general(const GeneralizedOrder& o, const LaurentPoly& f, std::size_t i,
                                        std::int64_t search_radius = 0);

/// Generators of lm_i(f)T_i(f) ∩ lm_i(g)T_i(g).
std::vector<ExponentVec> u_intersection(const GeneralizedOrder& o, const LaurentPoly& f, const LaurentPoly& g, std::size_t i);

/// Minimal elements of a module over the cone's monoid, given an exact
/// membership test, searched in the box around `center`. Throws
/// IncompleteSearch if some member of the box is not generated by the
/// elements found.
std::vector<ExponentVec> search_module_generators(const Cone& cone, const std::function<bool(const ExponentVec&)>& member,
                                                  const ExponentVec& center, std::int64_t radius);

}  // namespace lgb
