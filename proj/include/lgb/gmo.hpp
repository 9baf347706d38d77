#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "lgb/lattice.hpp"

namespace lgb {

/// Set on which a score function may vanish.
enum class ZeroSet {
  Identity,            // only the exponent 0
  NonNegativeOrthant,  // the cone N^n
};

/// A score φ: Z^n → Q≥0 used to build a generalized monomial order. Values
/// are kept as integers scaled by a common denominator.
class ScoreFunction {
 public:
  enum class Kind { Min, Degmin, AbsSum, PerCone, MaxOfLinear };

  /// −min(0, x_1, …, x_n), vanishing on N^n.
  static ScoreFunction min(std::size_t n);
  /// Σx − (n+1)·min(0, x_1, …, x_n), vanishing only at 0.
  static ScoreFunction degmin(std::size_t n);
  /// |x_1| + … + |x_n|, for the orthant decomposition.
  static ScoreFunction abs_sum(std::size_t n);
  /// Linear on each cone of `cones`: φ(v) = rows[k]·v where k is the first
  /// cone containing v. No sign condition is imposed here.
  static ScoreFunction per_cone(std::shared_ptr<const ConicDecomposition> cones, std::vector<std::vector<mpq_class>> rows,
                                ZeroSet zero_set);
  /// φ(v) = max_k forms[k]·v.
  static ScoreFunction max_of_linear(std::size_t n, std::vector<std::vector<mpq_class>> forms, ZeroSet zero_set);

  Kind kind() const { return kind_; }
  std::size_t dim() const { return n_; }
  ZeroSet zero_set() const { return zero_set_; }
  bool vanishing_allowed(const ExponentVec& v) const;
  std::string name() const;

  /// φ(v) · denominator().
  std::int64_t scaled(const ExponentVec& v) const;
  mpq_class operator()(const ExponentVec& v) const;
  std::int64_t denominator() const { return den_; }

 private:
  Kind kind_ = Kind::Min;
  std::size_t n_ = 0;
  ZeroSet zero_set_ = ZeroSet::Identity;
  std::int64_t den_ = 1;
  std::shared_ptr<const ConicDecomposition> cones_;  // PerCone only
  std::vector<ExponentVec> rows_;                    // scaled integer rows
};

/// Total order on Z^n: compare φ first, then break ties with lex on a fixed
/// variable permutation (first listed variable most significant).
class GeneralizedOrder {
 public:
  GeneralizedOrder(std::shared_ptr<const ConicDecomposition> decomposition, ScoreFunction score,
                   std::vector<std::size_t> lex_priority = {});

  /// "min" or "degmin" over the standard decomposition.
  static GeneralizedOrder named(const std::string& name, std::size_t n);

  std::size_t nvars() const { return decomposition_->dim(); }
  const ConicDecomposition& decomposition() const { return *decomposition_; }
  std::shared_ptr<const ConicDecomposition> decomposition_ptr() const { return decomposition_; }
  const ScoreFunction& score() const { return score_; }
  const std::vector<std::size_t>& lex_priority() const { return lex_; }

  std::strong_ordering compare(const ExponentVec& u, const ExponentVec& v) const;
  bool less(const ExponentVec& u, const ExponentVec& v) const { return compare(u, v) < 0; }
  std::strong_ordering lex_compare(const ExponentVec& u, const ExponentVec& v) const;

  /// Maximum of a nonempty list.
  ExponentVec greatest(std::span<const ExponentVec> tuples) const;
  /// Maximum after translating every candidate into cone i.
  ExponentVec greatest_for_cone(std::size_t cone, std::span<const ExponentVec> tuples) const;

  /// Integer row L with φ(v)·denominator = L·v on cone k (solved from the
  /// cone's rays; meaningful when φ is linear there).
  const ExponentVec& cone_form(std::size_t k) const { return forms_.at(k); }

 private:
  std::shared_ptr<const ConicDecomposition> decomposition_;
  ScoreFunction score_;
  std::vector<std::size_t> lex_;
  std::vector<ExponentVec> forms_;
};

struct GmoReport {
  bool ok = true;
  std::vector<std::string> failures;
  std::optional<ExponentVec> witness;  // first offending point
};

/// Checks positivity off the zero set, subadditivity, additivity inside each
/// cone, 1 ≤ t, and multiplicative compatibility inside cones, on points of
/// the box of the given radius (exhaustively for positivity, sampled for the
/// rest).
GmoReport validate_gmo(const GeneralizedOrder& order, std::int64_t sample_radius, std::size_t samples,
                       std::uint64_t seed = 1);

}  // namespace lgb
