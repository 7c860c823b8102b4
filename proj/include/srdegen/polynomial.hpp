#ifndef SRDEGEN_POLYNOMIAL_HPP
#define SRDEGEN_POLYNOMIAL_HPP

#include "srdegen/field.hpp"
#include "srdegen/ring.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace srdegen {

struct Term {
  Monomial monomial;
  Scalar coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/**
 * Sparse polynomial with terms sorted strictly descending under its attached
 * order. No zero coefficients, no repeated monomials; the empty term list is 0.
 *
 * Binary operations require the same ring and the same order. Switching
 * orders is an explicit conversion through with_order().
 */
class Polynomial {
 public:
  Polynomial(RingPtr ring, MonomialOrder order);

  /// Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(RingPtr ring, MonomialOrder order, std::vector<Term> terms);
  static Polynomial constant(RingPtr ring, MonomialOrder order, const Scalar& c);
  static Polynomial monomial(RingPtr ring, MonomialOrder order, Monomial m, Scalar c);

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const Field& field() const { return ring_->field(); }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// Throws std::domain_error on the zero polynomial.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const Scalar& leading_coefficient() const { return leading_term().coefficient; }

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Scalar& c) const;
  Polynomial times(const Monomial& m, const Scalar& c) const;
  /// *this - c * m * g in one merge pass.
  Polynomial minus_multiple(const Scalar& c, const Monomial& m, const Polynomial& g) const;
  Polynomial monic() const;
  /// All terms but the leading one.
  Polynomial tail() const;

  Polynomial partial_derivative(std::size_t variable) const;
  Scalar evaluate(std::span<const Scalar> point) const;

  /// Graded degree if every term has the same degree under the ring grading.
  std::optional<std::uint64_t> homogeneous_degree() const;
  std::optional<std::uint64_t> homogeneous_degree(std::span<const std::uint32_t> grading) const;

  Polynomial with_order(const MonomialOrder& order) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_compatible(const Polynomial& other) const;

  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

Term leading_term(const Polynomial& f, const MonomialOrder& order);
Polynomial partial_derivative(const Polynomial& f, std::size_t variable);
Scalar evaluate(const Polynomial& f, std::span<const Scalar> point);
std::optional<std::uint64_t> is_homogeneous(const Polynomial& f, std::span<const std::uint32_t> grading);

}  // namespace srdegen

#endif
