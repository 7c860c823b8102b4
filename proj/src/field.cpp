#include "srdegen/field.hpp"

#include <charconv>

namespace srdegen {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31)) {
    throw std::invalid_argument("prime modulus must be below 2^31: " + std::to_string(p));
  }
  if (!is_prime(p)) {
    throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
  }
  return Field(Kind::prime, static_cast<std::uint32_t>(p));
}

Field Field::parse(std::string_view text) {
  if (text == "QQ") return rationals();
  if (text.size() > 4 && text.substr(0, 3) == "GF(" && text.back() == ')') {
    auto digits = text.substr(3, text.size() - 4);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return prime(p);
  }
  throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected QQ or GF(p))");
}

std::string Field::to_string() const {
  return is_rational() ? "QQ" : "GF(" + std::to_string(modulus_) + ")";
}

namespace {

std::uint32_t reduce_mpz(const mpz_class& value, std::uint32_t p) {
  mpz_class r = value % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

Scalar Scalar::zero(const Field& field) { return from_integer(field, 0); }
Scalar Scalar::one(const Field& field) { return from_integer(field, 1); }

Scalar Scalar::from_integer(const Field& field, long value) {
  return from_mpz(field, mpz_class(value));
}

Scalar Scalar::from_mpz(const Field& field, const mpz_class& value) {
  if (field.is_rational()) return Scalar(mpq_class(value));
  return Scalar(Residue{reduce_mpz(value, field.modulus()), field.modulus()});
}

Scalar Scalar::from_rational(const Field& field, const mpq_class& raw) {
  if (raw.get_den() == 0) throw std::domain_error("zero denominator");
  mpq_class value(raw);
  value.canonicalize();
  if (field.is_rational()) return Scalar(value);
  const std::uint32_t p = field.modulus();
  const std::uint32_t den = reduce_mpz(value.get_den(), p);
  if (den == 0) {
    throw std::domain_error("denominator of " + value.get_str() + " vanishes modulo " +
                            std::to_string(p));
  }
  const std::uint64_t num = reduce_mpz(value.get_num(), p);
  return Scalar(Residue{static_cast<std::uint32_t>(num * pow_mod(den, p - 2, p) % p), p});
}

Field Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return Field(Field::Kind::prime, r->modulus);
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw FieldMismatch("scalar is not rational");
}

std::uint32_t Scalar::residue() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value;
  throw FieldMismatch("scalar is not a prime-field residue");
}

std::uint32_t Scalar::check_same(const Scalar& a, const Scalar& b) {
  const auto* ra = std::get_if<Residue>(&a.value_);
  const auto* rb = std::get_if<Residue>(&b.value_);
  if (ra == nullptr && rb == nullptr) return 0;
  if (ra == nullptr || rb == nullptr || ra->modulus != rb->modulus) {
    throw FieldMismatch("arithmetic between " + a.field().to_string() + " and " +
                        b.field().to_string());
  }
  return ra->modulus;
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return Scalar(Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus});
  }
  return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return Scalar(Residue{pow_mod(r->value, r->modulus - 2, r->modulus), r->modulus});
  }
  return Scalar(mpq_class(1 / std::get<mpq_class>(value_)));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (auto p = Scalar::check_same(a, b)) {
    const std::uint64_t s = std::uint64_t{std::get<Scalar::Residue>(a.value_).value} +
                            std::get<Scalar::Residue>(b.value_).value;
    return Scalar(Scalar::Residue{static_cast<std::uint32_t>(s % p), p});
  }
  return Scalar(mpq_class(std::get<mpq_class>(a.value_) + std::get<mpq_class>(b.value_)));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (auto p = Scalar::check_same(a, b)) {
    const std::uint64_t s = std::uint64_t{std::get<Scalar::Residue>(a.value_).value} *
                            std::get<Scalar::Residue>(b.value_).value;
    return Scalar(Scalar::Residue{static_cast<std::uint32_t>(s % p), p});
  }
  return Scalar(mpq_class(std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_)));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  Scalar::check_same(a, b);
  return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  const auto* ra = std::get_if<Scalar::Residue>(&a.value_);
  const auto* rb = std::get_if<Scalar::Residue>(&b.value_);
  if (ra != nullptr && rb != nullptr) return ra->modulus == rb->modulus && ra->value == rb->value;
  if (ra != nullptr || rb != nullptr) return false;
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

}  // namespace srdegen
