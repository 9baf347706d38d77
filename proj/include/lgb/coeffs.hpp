#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace lgb {

/// An element of Q ∪ {+∞}, ordered with +∞ on top.
class Valuation {
 public:
  Valuation() = default;  // +∞
  explicit Valuation(mpq_class value) : finite_(true), value_(std::move(value)) { value_.canonicalize(); }
  Valuation(long value) : finite_(true), value_(value) {}

  static Valuation infinity() { return {}; }

  bool is_infinite() const { return !finite_; }
  /// Throws UsageError on +∞.
  const mpq_class& value() const;

  Valuation operator+(const Valuation& other) const;
  Valuation operator-(const mpq_class& shift) const;

  friend bool operator==(const Valuation& a, const Valuation& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }
  friend bool operator<(const Valuation& a, const Valuation& b) {
    if (!a.finite_) return false;
    if (!b.finite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
  friend bool operator<=(const Valuation& a, const Valuation& b) { return !(b < a); }
  friend bool operator>=(const Valuation& a, const Valuation& b) { return !(a < b); }

  std::string str() const;

 private:
  bool finite_ = false;
  mpq_class value_;
};

enum class FieldKind {
  RationalPadic,    // Q with the p-adic valuation
  RationalTrivial,  // Q with the trivial valuation
  PrimeField,       // F_p
  ExtensionField,   // F_{p^k} = F_p[a]/(m(a))
};

/// Description of a valued coefficient field. Instances are interned: the
/// factory functions return the same object for the same parameters, so
/// fields compare by address and references stay valid for the whole run.
class FieldSpec {
 public:
  static const FieldSpec& rational();
  static const FieldSpec& padic_rational(std::uint64_t p);
  static const FieldSpec& prime_field(std::uint64_t p);
  /// `modulus` lists the monic defining polynomial low degree first
  /// (size k + 1, last entry 1).
  static const FieldSpec& extension_field(std::uint64_t p, std::span<const std::uint64_t> modulus);
  /// F_q with the built-in defining polynomial (q prime gives F_p).
  static const FieldSpec& galois_field(std::uint64_t q);

  FieldKind kind() const { return kind_; }
  bool is_rational() const { return kind_ == FieldKind::RationalPadic || kind_ == FieldKind::RationalTrivial; }
  bool is_finite() const { return !is_rational(); }
  /// Residue characteristic / p-adic prime; 0 for Q with trivial valuation.
  std::uint64_t prime() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint64_t order() const { return q_; }
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }
  std::string name() const;

  // Arithmetic on encoded finite-field elements. An element of F_{p^k} is
  // encoded as the integer sum c_j p^j of its coefficient vector.
  std::uint64_t ff_add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t ff_sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t ff_neg(std::uint64_t a) const;
  std::uint64_t ff_mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t ff_inv(std::uint64_t a) const;
  std::vector<std::uint64_t> ff_digits(std::uint64_t a) const;
  std::uint64_t ff_encode(std::span<const std::uint64_t> digits) const;

  FieldSpec(const FieldSpec&) = delete;
  FieldSpec& operator=(const FieldSpec&) = delete;

 private:
  FieldSpec() = default;
  void build_tables();
  friend struct FieldRegistry;

  FieldKind kind_ = FieldKind::RationalTrivial;
  std::uint64_t p_ = 0;
  unsigned k_ = 1;
  std::uint64_t q_ = 0;
  std::vector<std::uint64_t> modulus_;
  std::vector<std::uint32_t> log_;  // extension fields only
  std::vector<std::uint32_t> exp_;
};

/// True iff `modulus` (monic, low degree first) is irreducible over F_p.
/// Brute-force search for monic factors up to half the degree.
bool is_irreducible_mod_p(std::span<const std::uint64_t> modulus, std::uint64_t p);
bool is_prime(std::uint64_t n);

/// Element of a FieldSpec. Zero has a unique representation; rationals are
/// kept in lowest terms.
class Coefficient {
 public:
  explicit Coefficient(const FieldSpec& field);  // zero
  Coefficient(const FieldSpec& field, long value);
  /// Rational value mapped into the field (num · den⁻¹ for finite fields).
  Coefficient(const FieldSpec& field, const mpq_class& value);
  /// Element of F_{p^k} from its coefficient vector.
  static Coefficient from_digits(const FieldSpec& field, std::span<const std::uint64_t> digits);
  /// The class of `a` in F_p[a]/(m); usage error outside extension fields.
  static Coefficient generator(const FieldSpec& field);

  const FieldSpec& field() const { return *field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Usage error unless the field is rational.
  const mpq_class& rational() const;
  /// Encoded finite-field element; usage error for rational fields.
  std::uint64_t ff_code() const;
  std::vector<std::uint64_t> digits() const;

  Coefficient operator+(const Coefficient& b) const;
  Coefficient operator-(const Coefficient& b) const;
  Coefficient operator*(const Coefficient& b) const;
  Coefficient operator/(const Coefficient& b) const;
  Coefficient operator-() const;
  Coefficient inverse() const;
  Coefficient& operator+=(const Coefficient& b) { return *this = *this + b; }
  Coefficient& operator-=(const Coefficient& b) { return *this = *this - b; }
  Coefficient& operator*=(const Coefficient& b) { return *this = *this * b; }

  friend bool operator==(const Coefficient& a, const Coefficient& b);

  /// val: K → Q ∪ {+∞}.
  Valuation valuation() const;

  /// Plain text: `-3/2` for rationals, `4` for F_p, `2*a+1` for F_{p^k}.
  std::string str() const;
  /// True if str() needs parentheses when used as a factor.
  bool needs_parentheses() const;

 private:
  void check_same_field(const Coefficient& b) const;

  const FieldSpec* field_;
  std::variant<mpq_class, std::uint64_t> value_;
};

/// p-adic valuation of a nonzero integer.
long padic_valuation(const mpz_class& n, std::uint64_t p);

}  // namespace lgb
