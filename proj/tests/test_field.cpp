#include <doctest.h>

#include "srdegen/field.hpp"

#include <random>

using namespace srdegen;

TEST_CASE("field descriptors validate their modulus") {
  CHECK(Field::parse("QQ").is_rational());
  CHECK(Field::parse("GF(7)").modulus() == 7);
  CHECK(Field::prime(2147483647).modulus() == 2147483647u);
  CHECK_THROWS_AS(Field::prime(9), std::invalid_argument);
  CHECK_THROWS_AS(Field::prime(1), std::invalid_argument);
  CHECK_THROWS(Field::prime(4294967311ull));
  CHECK_THROWS(Field::parse("GF(x)"));
  CHECK(Field::prime(5).to_string() == "GF(5)");
}

TEST_CASE("rationals stay in lowest terms with a positive denominator") {
  const Field q = Field::rationals();
  const Scalar a = Scalar::from_rational(q, mpq_class(6, -4));
  CHECK(a.rational().get_num() == -3);
  CHECK(a.rational().get_den() == 2);
  CHECK(a.to_string() == "-3/2");
  const Scalar b = a * Scalar::from_integer(q, 4) / Scalar::from_integer(q, -6);
  CHECK(b == Scalar::one(q));
}

TEST_CASE("every nonzero element has an inverse") {
  std::mt19937_64 rng(11);
  const Field q = Field::rationals();
  const Field p = Field::prime(101);
  std::uniform_int_distribution<long> d(-50, 50);
  for (int i = 0; i < 200; ++i) {
    const long num = d(rng), den = d(rng);
    if (num == 0 || den == 0) continue;
    const Scalar r = Scalar::from_rational(q, mpq_class(num, den));
    CHECK((r * r.inverse()).is_one());
    const Scalar s = Scalar::from_integer(p, num);
    if (!s.is_zero()) CHECK((s * s.inverse()).is_one());
  }
  CHECK_THROWS(Scalar::zero(q).inverse());
  CHECK_THROWS(Scalar::zero(p).inverse());
}

TEST_CASE("residues wrap into [0, p)") {
  const Field p = Field::prime(7);
  CHECK(Scalar::from_integer(p, -1).residue() == 6);
  CHECK(Scalar::from_integer(p, 15).residue() == 1);
  CHECK((Scalar::from_integer(p, 3) * Scalar::from_integer(p, 5)).residue() == 1);
  CHECK(Scalar::from_rational(p, mpq_class(1, 3)).residue() == 5);
  CHECK_THROWS_AS(Scalar::from_rational(p, mpq_class(1, 7)), std::domain_error);
}

TEST_CASE("arithmetic never mixes fields") {
  const Scalar a = Scalar::one(Field::rationals());
  const Scalar b = Scalar::one(Field::prime(5));
  const Scalar c = Scalar::one(Field::prime(7));
  CHECK_THROWS_AS(a + b, FieldMismatch);
  CHECK_THROWS_AS(b * c, FieldMismatch);
  CHECK_FALSE(b == c);
}

TEST_CASE("primality check") {
  CHECK(is_prime(2));
  CHECK(is_prime(2147483647));
  CHECK_FALSE(is_prime(2147483649ull));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(561));
}
