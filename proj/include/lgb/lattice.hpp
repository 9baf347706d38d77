#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lgb {

inline constexpr std::size_t kMaxVars = 8;

/// A point of Z^n (n ≤ kMaxVars), i.e. the exponent of a Laurent monomial.
/// The built-in ordering is lexicographic and is used only for storage.
class ExponentVec {
 public:
  ExponentVec() = default;
  explicit ExponentVec(std::size_t n);
  ExponentVec(std::initializer_list<std::int64_t> coords);
  explicit ExponentVec(std::span<const std::int64_t> coords);

  static ExponentVec unit(std::size_t n, std::size_t k);

  std::size_t size() const { return n_; }
  std::int64_t operator[](std::size_t k) const { return c_[k]; }
  std::int64_t& operator[](std::size_t k) { return c_[k]; }
  std::span<const std::int64_t> coords() const { return {c_.data(), n_}; }
  bool is_zero() const;

  ExponentVec& operator+=(const ExponentVec& o);
  ExponentVec& operator-=(const ExponentVec& o);
  friend ExponentVec operator+(ExponentVec a, const ExponentVec& b) { return a += b; }
  friend ExponentVec operator-(ExponentVec a, const ExponentVec& b) { return a -= b; }
  ExponentVec operator-() const;
  ExponentVec operator*(std::int64_t s) const;

  std::int64_t dot(const ExponentVec& o) const;
  std::int64_t norm_inf() const;

  friend bool operator==(const ExponentVec&, const ExponentVec&) = default;
  friend std::strong_ordering operator<=>(const ExponentVec&, const ExponentVec&) = default;

  /// "(1,-2)"
  std::string str() const;

 private:
  std::uint8_t n_ = 0;
  std::array<std::int64_t, kMaxVars> c_{};
};

struct ExponentVecHash {
  std::size_t operator()(const ExponentVec& v) const noexcept;
};

/// Calls fn on every point of the box center + [-radius, radius]^n, in
/// lexicographic order.
void for_each_box_point(const ExponentVec& center, std::int64_t radius, const std::function<void(const ExponentVec&)>& fn);

/// Rational polyhedral cone {x : h·x ≥ 0 for every half-space normal h},
/// together with its lattice-point generators. Only full-dimensional pointed
/// cones are constructed.
class Cone {
 public:
  /// Both descriptions given; checked for consistency on a sample box.
  static Cone make(std::size_t id, std::vector<ExponentVec> generators, std::vector<ExponentVec> halfspaces);
  /// Derives extreme rays and monoid generators from the inequalities.
  static Cone from_halfspaces(std::size_t id, std::size_t n, std::vector<ExponentVec> halfspaces);
  /// Derives inequalities from the given generating set.
  static Cone from_generators(std::size_t id, std::vector<ExponentVec> generators);

  std::size_t id() const { return id_; }
  std::size_t dim() const { return n_; }
  /// Generators of the monoid of lattice points (a Hilbert basis for
  /// derived cones; the declared list for built-in ones).
  const std::vector<ExponentVec>& generators() const { return generators_; }
  /// Primitive extreme rays.
  const std::vector<ExponentVec>& rays() const { return rays_; }
  const std::vector<ExponentVec>& halfspaces() const { return halfspaces_; }

  bool contains(const ExponentVec& v) const;
  bool is_simplicial() const { return rays_.size() == n_; }
  /// Simplicial with |det(rays)| = 1, and the generator list is that basis.
  bool is_unimodular() const { return unimodular_; }
  /// Sum of the extreme rays: a lattice point in the interior.
  ExponentVec interior_point() const;

  /// Coordinates of v in the generator basis (unimodular cones only).
  std::vector<std::int64_t> coordinates(const ExponentVec& v) const;

  /// Splits a non-simplicial cone (n ≤ 3) into simplicial ones sharing its
  /// rays. A simplicial cone returns itself.
  std::vector<Cone> triangulate() const;

  Cone with_id(std::size_t id) const;

 private:
  void finish();

  std::size_t id_ = 0;
  std::size_t n_ = 0;
  std::vector<ExponentVec> generators_;
  std::vector<ExponentVec> rays_;
  std::vector<ExponentVec> halfspaces_;
  bool unimodular_ = false;
  std::vector<std::vector<std::int64_t>> inverse_;  // unimodular only: coordinates = inverse_ · v
};

enum class DecompositionKind { Standard, Orthant, Refined, Custom };

/// Indexed family of cones covering Z^n.
class ConicDecomposition {
 public:
  ConicDecomposition(std::size_t n, DecompositionKind kind, std::vector<Cone> cones);

  std::size_t dim() const { return n_; }
  DecompositionKind kind() const { return kind_; }
  std::size_t size() const { return cones_.size(); }
  const Cone& cone(std::size_t i) const { return cones_.at(i); }
  const std::vector<Cone>& cones() const { return cones_; }
  /// First cone containing v.
  std::size_t locate(const ExponentVec& v) const;

 private:
  std::size_t n_;
  DecompositionKind kind_;
  std::vector<Cone> cones_;
};

/// standard: the n+1 cones T_0 = N^n and T_j = {x_j ≤ 0, x_j ≤ x_k};
/// orthant: the 2^n sign cones.
std::shared_ptr<const ConicDecomposition> build_decomposition(DecompositionKind kind, std::size_t n);

bool cone_contains(const Cone& c, const ExponentVec& v);

/// s = u − v with u, v in the cone, from the signs of the generator
/// coordinates of s. Unimodular cones only.
std::pair<ExponentVec, ExponentVec> cone_factorize(const Cone& c, const ExponentVec& s);

/// g with (a + C) ∩ (b + C) = g + C on lattice points. Unimodular cones only.
ExponentVec shifted_cone_intersection(const Cone& c, const ExponentVec& a, const ExponentVec& b);

/// Minimal generators of the C-module (a + C) ∩ (b + C) ∩ Z^n, exactly:
/// a fundamental parallelepiped for simplicial cones, a bounded lattice
/// enumeration otherwise.
std::vector<ExponentVec> shifted_cone_meet(const Cone& c, const ExponentVec& a, const ExponentVec& b);

/// A translation t with t + p ∈ C for every p. For unimodular cones this is
/// the sum of the negative parts of cone_factorize; otherwise a multiple of
/// the interior point.
ExponentVec push_into_cone(const Cone& c, std::span<const ExponentVec> points);

/// Keeps the elements of `points` not of the form q + c with q another
/// element and c ∈ C \ {0}. Output is sorted and deduplicated.
std::vector<ExponentVec> minimal_elements(const Cone& c, std::vector<ExponentVec> points);

/// Smith-form check that the generators span Z^n as a group.
bool generates_lattice(std::span<const ExponentVec> generators, std::size_t n);
/// No nonzero v with v and −v in the cone.
bool is_pointed(const Cone& c);

struct ConeReport {
  std::size_t cone = 0;
  bool pointed = false;
  bool group_generating = false;
};

struct PairReport {
  std::size_t i = 0, j = 0;
  bool ok = true;
  std::optional<ExponentVec> witness;  // point of gr<Ti∩Tj> ∩ Ti outside Tj
};

struct DecompositionReport {
  std::vector<ConeReport> cones;
  std::vector<PairReport> pairs;
  bool covered = true;
  std::vector<ExponentVec> uncovered;
  bool ok() const;
};

/// Pointedness and group generation per cone, the condition
/// gr<Ti∩Tj> ∩ Ti = Ti∩Tj on every pair, and coverage, all on the box of
/// the given radius.
DecompositionReport validate_decomposition(const ConicDecomposition& d, std::int64_t box_radius);

}  // namespace lgb
