#ifndef SRDEGEN_FIELD_HPP
#define SRDEGEN_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace srdegen {

/// Thrown whenever two values living over different coefficient fields meet.
class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_prime(std::uint64_t n);

/**
 * Coefficient field descriptor: the rationals QQ or a prime field GF(p).
 *
 * Prime moduli are restricted to p < 2^31 so that a product of two residues
 * fits in 64 bits; primality is checked on construction.
 */
class Field {
 public:
  enum class Kind { rational, prime };

  static Field rationals() { return Field(Kind::rational, 0); }
  static Field prime(std::uint64_t p);
  /// Accepts `QQ` or `GF(p)`.
  static Field parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::rational; }
  /// Zero for QQ.
  std::uint32_t modulus() const { return modulus_; }
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  Field(Kind kind, std::uint32_t modulus) : kind_(kind), modulus_(modulus) {}

  Kind kind_;
  std::uint32_t modulus_;
};

/**
 * Exact field element. Rationals are kept canonical by GMP (lowest terms,
 * positive denominator); residues are stored in [0, p) together with p so
 * that every operation can reject mixed-field arithmetic.
 */
class Scalar {
 public:
  /// Rational zero.
  Scalar() = default;

  static Scalar zero(const Field& field);
  static Scalar one(const Field& field);
  static Scalar from_integer(const Field& field, long value);
  static Scalar from_mpz(const Field& field, const mpz_class& value);
  /// Throws std::domain_error if the denominator vanishes modulo p.
  static Scalar from_rational(const Field& field, const mpq_class& value);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  /// Precondition: rational scalar.
  const mpq_class& rational() const;
  /// Precondition: prime-field scalar.
  std::uint32_t residue() const;

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& other) { return *this = *this + other; }
  Scalar& operator-=(const Scalar& other) { return *this = *this - other; }
  Scalar& operator*=(const Scalar& other) { return *this = *this * other; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
  };

  explicit Scalar(mpq_class q) : value_(std::move(q)) {}
  explicit Scalar(Residue r) : value_(r) {}

  static std::uint32_t check_same(const Scalar& a, const Scalar& b);

  std::variant<mpq_class, Residue> value_;
};

}  // namespace srdegen

#endif
