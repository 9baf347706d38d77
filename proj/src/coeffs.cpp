#include "lgb/coeffs.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <mutex>

#include "lgb/errors.hpp"

namespace lgb {

// ---------------------------------------------------------------- Valuation

const mpq_class& Valuation::value() const {
  if (!finite_) throw UsageError("value() of an infinite valuation");
  return value_;
}

Valuation Valuation::operator+(const Valuation& other) const {
  if (!finite_ || !other.finite_) return infinity();
  return Valuation(mpq_class(value_ + other.value_));
}

Valuation Valuation::operator-(const mpq_class& shift) const {
  if (!finite_) return infinity();
  return Valuation(mpq_class(value_ - shift));
}

std::string Valuation::str() const { return finite_ ? value_.get_str() : std::string("+inf"); }

// --------------------------------------------------------------- utilities

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

using Poly = std::vector<std::uint64_t>;  // over F_p, low degree first

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo monic g.
Poly poly_rem(Poly f, const Poly& g, std::uint64_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() >= g.size()) {
    const std::uint64_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t j = 0; j <= dg; ++j) {
      f[shift + j] = (f[shift + j] + p - mulmod(lead, g[j], p)) % p;
    }
    trim(f);
  }
  return f;
}

// Monic polynomial of degree d whose lower coefficients are the base-p digits of idx.
Poly monic_from_index(std::uint64_t idx, unsigned d, std::uint64_t p) {
  Poly f(d + 1, 0);
  for (unsigned j = 0; j < d; ++j) {
    f[j] = idx % p;
    idx /= p;
  }
  f[d] = 1;
  return f;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

bool is_irreducible_mod_p(std::span<const std::uint64_t> modulus, std::uint64_t p) {
  Poly m(modulus.begin(), modulus.end());
  for (auto& c : m) c %= p;
  trim(m);
  if (m.size() < 2 || m.back() != 1) return false;
  const unsigned k = static_cast<unsigned>(m.size() - 1);
  for (unsigned d = 1; d <= k / 2; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (poly_rem(m, monic_from_index(idx, d, p), p).empty()) return false;
    }
  }
  return true;
}

long padic_valuation(const mpz_class& n, std::uint64_t p) {
  if (n == 0) throw UsageError("p-adic valuation of zero");
  mpz_class rest;
  mpz_class prime(static_cast<unsigned long>(p));
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

// ----------------------------------------------------------------- registry

struct FieldRegistry {
  std::mutex mu;
  std::deque<std::unique_ptr<FieldSpec>> fields;

  static FieldRegistry& instance() {
    static FieldRegistry r;
    return r;
  }

  const FieldSpec& intern(FieldKind kind, std::uint64_t p, const Poly& modulus) {
    std::lock_guard lock(mu);
    for (const auto& f : fields) {
      if (f->kind_ == kind && f->p_ == p && f->modulus_ == modulus) return *f;
    }
    auto spec = std::unique_ptr<FieldSpec>(new FieldSpec());
    spec->kind_ = kind;
    spec->p_ = p;
    spec->modulus_ = modulus;
    if (kind == FieldKind::ExtensionField) {
      spec->k_ = static_cast<unsigned>(modulus.size() - 1);
      spec->q_ = ipow(p, spec->k_);
      spec->build_tables();
    } else if (kind == FieldKind::PrimeField) {
      spec->q_ = p;
    }
    fields.push_back(std::move(spec));
    return *fields.back();
  }
};

const FieldSpec& FieldSpec::rational() {
  return FieldRegistry::instance().intern(FieldKind::RationalTrivial, 0, {});
}

const FieldSpec& FieldSpec::padic_rational(std::uint64_t p) {
  if (!is_prime(p)) throw UsageError("p-adic valuation needs a prime, got " + std::to_string(p));
  return FieldRegistry::instance().intern(FieldKind::RationalPadic, p, {});
}

const FieldSpec& FieldSpec::prime_field(std::uint64_t p) {
  if (!is_prime(p)) throw UsageError("F_p needs a prime, got " + std::to_string(p));
  if (p >= (std::uint64_t{1} << 62)) throw UsageError("prime too large");
  return FieldRegistry::instance().intern(FieldKind::PrimeField, p, {});
}

const FieldSpec& FieldSpec::extension_field(std::uint64_t p, std::span<const std::uint64_t> modulus) {
  if (!is_prime(p)) throw UsageError("F_{p^k} needs a prime p, got " + std::to_string(p));
  Poly m(modulus.begin(), modulus.end());
  for (auto& c : m) c %= p;
  if (m.size() < 2 || m.back() != 1) throw UsageError("defining polynomial must be monic of degree >= 1");
  if (m.size() == 2) return prime_field(p);
  const unsigned k = static_cast<unsigned>(m.size() - 1);
  double q = 1;
  for (unsigned j = 0; j < k; ++j) q *= static_cast<double>(p);
  if (q > 1 << 20) throw UsageError("extension fields are limited to 2^20 elements");
  if (!is_irreducible_mod_p(m, p)) throw UsageError("defining polynomial is reducible over F_" + std::to_string(p));
  return FieldRegistry::instance().intern(FieldKind::ExtensionField, p, m);
}

const FieldSpec& FieldSpec::galois_field(std::uint64_t q) {
  if (is_prime(q)) return prime_field(q);
  // Built-in defining polynomials, low degree first.
  static const std::vector<std::pair<std::uint64_t, Poly>> builtin = {
      {4, {1, 1, 1}},      // t^2 + t + 1
      {8, {1, 1, 0, 1}},   // t^3 + t + 1
      {9, {2, 1, 1}},      // t^2 + t + 2
      {25, {2, 1, 1}},     // t^2 + t + 2
      {27, {1, 2, 0, 1}},  // t^3 + 2t + 1
  };
  std::uint64_t p = 0;
  unsigned k = 0;
  for (std::uint64_t d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  std::uint64_t rest = q;
  while (p && rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1 || k < 2) throw UsageError("GF(q) needs a prime power, got " + std::to_string(q));
  for (const auto& [order, poly] : builtin) {
    if (order == q) return extension_field(p, poly);
  }
  // Otherwise the first irreducible monic polynomial in digit order.
  const std::uint64_t count = ipow(p, k);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly m = monic_from_index(idx, k, p);
    if (is_irreducible_mod_p(m, p)) return extension_field(p, m);
  }
  throw UsageError("no irreducible polynomial found");
}

std::string FieldSpec::name() const {
  switch (kind_) {
    case FieldKind::RationalTrivial:
      return "Q";
    case FieldKind::RationalPadic:
      return "Q_" + std::to_string(p_);
    case FieldKind::PrimeField:
      return "F_" + std::to_string(p_);
    case FieldKind::ExtensionField:
      return "F_" + std::to_string(q_);
  }
  return "?";
}

// ---------------------------------------------------------- finite fields

std::vector<std::uint64_t> FieldSpec::ff_digits(std::uint64_t a) const {
  std::vector<std::uint64_t> d(k_, 0);
  if (kind_ == FieldKind::PrimeField) {
    d[0] = a;
    return d;
  }
  for (unsigned j = 0; j < k_; ++j) {
    d[j] = a % p_;
    a /= p_;
  }
  return d;
}

std::uint64_t FieldSpec::ff_encode(std::span<const std::uint64_t> digits) const {
  if (kind_ == FieldKind::PrimeField) return digits.empty() ? 0 : digits[0] % p_;
  std::uint64_t code = 0;
  for (unsigned j = k_; j-- > 0;) code = code * p_ + (j < digits.size() ? digits[j] % p_ : 0);
  return code;
}

std::uint64_t FieldSpec::ff_add(std::uint64_t a, std::uint64_t b) const {
  if (kind_ == FieldKind::PrimeField) {
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t code = 0, scale = 1;
  for (unsigned j = 0; j < k_; ++j) {
    code += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return code;
}

std::uint64_t FieldSpec::ff_neg(std::uint64_t a) const {
  if (kind_ == FieldKind::PrimeField) return a == 0 ? 0 : p_ - a;
  std::uint64_t code = 0, scale = 1;
  for (unsigned j = 0; j < k_; ++j) {
    code += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return code;
}

std::uint64_t FieldSpec::ff_sub(std::uint64_t a, std::uint64_t b) const { return ff_add(a, ff_neg(b)); }

std::uint64_t FieldSpec::ff_mul(std::uint64_t a, std::uint64_t b) const {
  if (kind_ == FieldKind::PrimeField) return mulmod(a, b, p_);
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

std::uint64_t FieldSpec::ff_inv(std::uint64_t a) const {
  if (a == 0) throw DivisionByZero();
  if (kind_ == FieldKind::PrimeField) return powmod(a, p_ - 2, p_);
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

void FieldSpec::build_tables() {
  // Schoolbook product modulo the defining polynomial, used only here.
  auto slow_mul = [this](std::uint64_t a, std::uint64_t b) {
    const auto da = ff_digits(a), db = ff_digits(b);
    Poly prod(2 * k_, 0);
    for (unsigned i = 0; i < k_; ++i)
      for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + mulmod(da[i], db[j], p_)) % p_;
    return ff_encode(poly_rem(prod, modulus_, p_));
  };
  log_.assign(q_, 0);
  exp_.assign(q_ - 1, 0);
  for (std::uint64_t g = 2; g < q_; ++g) {
    std::uint64_t x = 1;
    std::uint64_t order = 0;
    do {
      exp_[order] = static_cast<std::uint32_t>(x);
      x = slow_mul(x, g);
      ++order;
    } while (x != 1 && order < q_ - 1);
    if (x == 1 && order == q_ - 1) {
      for (std::uint64_t e = 0; e < q_ - 1; ++e) log_[exp_[e]] = static_cast<std::uint32_t>(e);
      return;
    }
  }
  throw UsageError("no primitive element found");
}

// -------------------------------------------------------------- Coefficient

Coefficient::Coefficient(const FieldSpec& field) : field_(&field) {
  if (field.is_finite()) value_ = std::uint64_t{0};
}

Coefficient::Coefficient(const FieldSpec& field, long value) : Coefficient(field, mpq_class(value)) {}

Coefficient::Coefficient(const FieldSpec& field, const mpq_class& value) : field_(&field) {
  if (field.is_rational()) {
    mpq_class v = value;
    v.canonicalize();
    value_ = std::move(v);
    return;
  }
  const std::uint64_t p = field.prime();
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_class num = value.get_num() % pz;
  if (num < 0) num += pz;
  mpz_class den = value.get_den() % pz;
  if (den == 0) throw DivisionByZero();
  const std::uint64_t n = num.get_ui();
  const std::uint64_t d = den.get_ui();
  const std::uint64_t r = mulmod(n, powmod(d, p - 2, p), p);
  value_ = field.kind() == FieldKind::PrimeField ? r : field.ff_encode(std::vector<std::uint64_t>{r});
}

Coefficient Coefficient::from_digits(const FieldSpec& field, std::span<const std::uint64_t> digits) {
  if (!field.is_finite()) throw UsageError("coefficient vectors only exist in finite fields");
  Coefficient c(field);
  c.value_ = field.ff_encode(digits);
  return c;
}

Coefficient Coefficient::generator(const FieldSpec& field) {
  if (field.kind() != FieldKind::ExtensionField) throw UsageError("field " + field.name() + " has no generator `a`");
  std::vector<std::uint64_t> d(field.degree(), 0);
  d[1] = 1;
  return from_digits(field, d);
}

bool Coefficient::is_zero() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool Coefficient::is_one() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
  return std::get<std::uint64_t>(value_) == 1;
}

const mpq_class& Coefficient::rational() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw UsageError("not a rational coefficient");
}

std::uint64_t Coefficient::ff_code() const {
  if (auto* c = std::get_if<std::uint64_t>(&value_)) return *c;
  throw UsageError("not a finite-field coefficient");
}

std::vector<std::uint64_t> Coefficient::digits() const { return field_->ff_digits(ff_code()); }

void Coefficient::check_same_field(const Coefficient& b) const {
  if (field_ != b.field_) throw UsageError("coefficient field mismatch: " + field_->name() + " vs " + b.field_->name());
}

Coefficient Coefficient::operator+(const Coefficient& b) const {
  check_same_field(b);
  Coefficient r(*field_);
  if (field_->is_rational())
    r.value_ = mpq_class(std::get<mpq_class>(value_) + std::get<mpq_class>(b.value_));
  else
    r.value_ = field_->ff_add(std::get<std::uint64_t>(value_), std::get<std::uint64_t>(b.value_));
  return r;
}

Coefficient Coefficient::operator-(const Coefficient& b) const {
  check_same_field(b);
  Coefficient r(*field_);
  if (field_->is_rational())
    r.value_ = mpq_class(std::get<mpq_class>(value_) - std::get<mpq_class>(b.value_));
  else
    r.value_ = field_->ff_sub(std::get<std::uint64_t>(value_), std::get<std::uint64_t>(b.value_));
  return r;
}

Coefficient Coefficient::operator*(const Coefficient& b) const {
  check_same_field(b);
  Coefficient r(*field_);
  if (field_->is_rational())
    r.value_ = mpq_class(std::get<mpq_class>(value_) * std::get<mpq_class>(b.value_));
  else
    r.value_ = field_->ff_mul(std::get<std::uint64_t>(value_), std::get<std::uint64_t>(b.value_));
  return r;
}

Coefficient Coefficient::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Coefficient r(*field_);
  if (field_->is_rational())
    r.value_ = mpq_class(1 / std::get<mpq_class>(value_));
  else
    r.value_ = field_->ff_inv(std::get<std::uint64_t>(value_));
  return r;
}

Coefficient Coefficient::operator/(const Coefficient& b) const {
  check_same_field(b);
  if (b.is_zero()) throw DivisionByZero();
  if (field_->is_rational()) {
    Coefficient r(*field_);
    r.value_ = mpq_class(std::get<mpq_class>(value_) / std::get<mpq_class>(b.value_));
    return r;
  }
  return *this * b.inverse();
}

Coefficient Coefficient::operator-() const {
  Coefficient r(*field_);
  if (field_->is_rational())
    r.value_ = mpq_class(-std::get<mpq_class>(value_));
  else
    r.value_ = field_->ff_neg(std::get<std::uint64_t>(value_));
  return r;
}

bool operator==(const Coefficient& a, const Coefficient& b) { return a.field_ == b.field_ && a.value_ == b.value_; }

Valuation Coefficient::valuation() const {
  if (is_zero()) return Valuation::infinity();
  if (field_->kind() != FieldKind::RationalPadic) return Valuation(0);
  const auto& q = std::get<mpq_class>(value_);
  return Valuation(padic_valuation(q.get_num(), field_->prime()) - padic_valuation(q.get_den(), field_->prime()));
}

std::string Coefficient::str() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
  const std::uint64_t code = std::get<std::uint64_t>(value_);
  if (field_->kind() == FieldKind::PrimeField) return std::to_string(code);
  const auto d = field_->ff_digits(code);
  std::string out;
  for (unsigned j = field_->degree(); j-- > 0;) {
    if (d[j] == 0) continue;
    if (!out.empty()) out += "+";
    if (j == 0) {
      out += std::to_string(d[j]);
      continue;
    }
    if (d[j] != 1) out += std::to_string(d[j]) + "*";
    out += "a";
    if (j > 1) out += "^" + std::to_string(j);
  }
  return out.empty() ? "0" : out;
}

bool Coefficient::needs_parentheses() const {
  if (field_->kind() != FieldKind::ExtensionField) return false;
  const auto d = digits();
  return std::count_if(d.begin(), d.end(), [](std::uint64_t x) { return x != 0; }) > 1;
}

}  // namespace lgb
