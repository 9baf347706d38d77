#include <random>
#include <vector>

#include "doctest.h"
#include "lgb/coeffs.hpp"
#include "lgb/errors.hpp"

using namespace lgb;

namespace {

std::vector<const FieldSpec*> all_fields() {
  return {&FieldSpec::rational(), &FieldSpec::padic_rational(2), &FieldSpec::padic_rational(3), &FieldSpec::prime_field(7),
          &FieldSpec::galois_field(9), &FieldSpec::galois_field(8)};
}

Coefficient random_coeff(std::mt19937_64& rng, const FieldSpec& field) {
  if (field.kind() == FieldKind::ExtensionField) {
    std::uniform_int_distribution<std::uint64_t> digit(0, field.prime() - 1);
    std::vector<std::uint64_t> d(field.degree());
    for (auto& x : d) x = digit(rng);
    return Coefficient::from_digits(field, d);
  }
  std::uniform_int_distribution<long> num(-40, 40), den(1, 24);
  if (field.is_finite()) return Coefficient(field, num(rng));
  return Coefficient(field, mpq_class(num(rng), den(rng)));
}

}  // namespace

TEST_CASE("rational arithmetic") {
  const FieldSpec& q = FieldSpec::rational();
  CHECK(Coefficient(q, mpq_class(1, 2)) + Coefficient(q, mpq_class(1, 3)) == Coefficient(q, mpq_class(5, 6)));
  CHECK((Coefficient(q, 3) / Coefficient(q, 6)).str() == "1/2");
  CHECK_THROWS_AS(Coefficient(q, 1) / Coefficient(q), DivisionByZero);
}

TEST_CASE("prime field inverse") {
  const FieldSpec& f7 = FieldSpec::prime_field(7);
  CHECK(Coefficient(f7, 2).inverse() == Coefficient(f7, 4));
  CHECK(Coefficient(f7, -1) == Coefficient(f7, 6));
  CHECK(Coefficient(f7, mpq_class(1, 2)) == Coefficient(f7, 4));
}

TEST_CASE("F_9 generator squares by the defining polynomial") {
  const FieldSpec& f9 = FieldSpec::galois_field(9);
  REQUIRE(f9.modulus() == std::vector<std::uint64_t>{2, 1, 1});
  const Coefficient a = Coefficient::generator(f9);
  // a^2 = -a - 2 = 2a + 1 over F_3
  CHECK((a * a).digits() == std::vector<std::uint64_t>{1, 2});
  CHECK((a * a).str() == "2*a+1");
  CHECK((a * a).needs_parentheses());
  CHECK(a.inverse() * a == Coefficient(f9, 1));
  CHECK_THROWS_AS(Coefficient::generator(FieldSpec::prime_field(5)), UsageError);
}

TEST_CASE("fields are interned") {
  CHECK(&FieldSpec::padic_rational(2) == &FieldSpec::padic_rational(2));
  CHECK(&FieldSpec::galois_field(7) == &FieldSpec::prime_field(7));
  CHECK_THROWS_AS(FieldSpec::galois_field(6), UsageError);
  const std::vector<std::uint64_t> reducible{1, 0, 1};  // t^2 + 1 = (t + 1)^2 over F_2
  CHECK_FALSE(is_irreducible_mod_p(reducible, 2));
  CHECK_THROWS_AS(FieldSpec::extension_field(2, reducible), UsageError);
}

TEST_CASE("mixing fields is rejected") {
  CHECK_THROWS_AS(Coefficient(FieldSpec::rational(), 1) + Coefficient(FieldSpec::prime_field(7), 1), UsageError);
}

TEST_CASE("p-adic valuations") {
  const FieldSpec& q2 = FieldSpec::padic_rational(2);
  CHECK(Coefficient(q2, mpq_class(4, 3)).valuation() == Valuation(2));
  CHECK(Coefficient(q2, mpq_class(1, 2)).valuation() == Valuation(-1));
  CHECK(Coefficient(q2).valuation().is_infinite());
  CHECK(Coefficient(FieldSpec::rational(), 12).valuation() == Valuation(0));
  CHECK(Coefficient(FieldSpec::prime_field(7), 3).valuation() == Valuation(0));
  CHECK(padic_valuation(mpz_class(96), 2) == 5);
}

TEST_CASE("valuation order puts infinity on top") {
  CHECK(Valuation(5) < Valuation::infinity());
  CHECK_FALSE(Valuation::infinity() < Valuation::infinity());
  CHECK((Valuation(2) + Valuation::infinity()).is_infinite());
  CHECK_THROWS_AS(Valuation::infinity().value(), UsageError);
}

TEST_CASE("valuation laws on random pairs") {
  std::mt19937_64 rng(11);
  for (const FieldSpec* field : all_fields()) {
    for (int trial = 0; trial < 1000; ++trial) {
      const Coefficient a = random_coeff(rng, *field);
      const Coefficient b = random_coeff(rng, *field);
      CHECK((a * b).valuation() == a.valuation() + b.valuation());
      const Valuation lo = std::min(a.valuation(), b.valuation());
      const Valuation sum = (a + b).valuation();
      CHECK(sum >= lo);
      if (!(a.valuation() == b.valuation())) CHECK(sum == lo);
    }
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(12);
  for (const FieldSpec* field : all_fields()) {
    for (int trial = 0; trial < 300; ++trial) {
      const Coefficient a = random_coeff(rng, *field), b = random_coeff(rng, *field), c = random_coeff(rng, *field);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == Coefficient(*field));
      if (!a.is_zero()) CHECK(a * a.inverse() == Coefficient(*field, 1));
    }
  }
}
