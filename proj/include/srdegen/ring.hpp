#ifndef SRDEGEN_RING_HPP
#define SRDEGEN_RING_HPP

#include "srdegen/field.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace srdegen {

/// Polynomial ring K[x_1..x_n] with a positive grading.
class RingContext {
 public:
  /// An empty grading means deg x_i = 1 for every variable.
  static std::shared_ptr<const RingContext> create(std::vector<std::string> names, Field field,
                                                   std::vector<std::uint32_t> grading = {});
  /// Variables named x1..xn.
  static std::shared_ptr<const RingContext> standard(std::size_t n, Field field);

  std::size_t num_vars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::uint32_t>& grading() const { return grading_; }
  const Field& field() const { return field_; }
  bool has_standard_grading() const;
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Same variables and grading over a different field.
  std::shared_ptr<const RingContext> with_field(Field field) const;

  friend bool operator==(const RingContext&, const RingContext&) = default;

 private:
  RingContext(std::vector<std::string> names, Field field, std::vector<std::uint32_t> grading)
      : names_(std::move(names)), grading_(std::move(grading)), field_(field) {}

  std::vector<std::string> names_;
  std::vector<std::uint32_t> grading_;
  Field field_;
};

using RingPtr = std::shared_ptr<const RingContext>;

bool same_ring(const RingPtr& a, const RingPtr& b);

/// Exponent vector. Multiplication overflow throws std::overflow_error.
class Monomial {
 public:
  Monomial() = default;
  /// The monomial 1 in n variables.
  explicit Monomial(std::size_t n) : exponents_(n, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exponents) : exponents_(std::move(exponents)) {}

  static Monomial variable(std::size_t n, std::size_t index, std::uint32_t power = 1);
  /// Square-free monomial x_F for the vertex set encoded in `mask`.
  static Monomial from_mask(std::size_t n, std::uint64_t mask);

  std::size_t size() const { return exponents_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exponents_[i]; }
  std::span<const std::uint32_t> exponents() const { return exponents_; }

  std::uint64_t total_degree() const;
  std::uint64_t degree(std::span<const std::uint32_t> grading) const;
  bool is_one() const;
  bool is_squarefree() const;
  /// Bit i set iff x_i divides the monomial (n <= 64).
  std::uint64_t support_mask() const;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  /// Precondition: divisor divides *this.
  Monomial quotient(const Monomial& divisor) const;

  std::string to_string(std::span<const std::string> names) const;

  /// Plain lexicographic comparison of exponent vectors, for containers.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exponents_;
};

/**
 * Global monomial order.
 *
 * lex/degrevlex carry a variable permutation, listed from the largest
 * variable to the smallest. weighted compares integer weight rows (first row
 * strictly positive) and breaks ties by reverse lexicographic order on
 * x_1 > ... > x_n. matrix compares by successive rows; the matrix must have
 * full column rank and every variable must exceed 1.
 */
class MonomialOrder {
 public:
  enum class Kind { lex, degrevlex, weighted, matrix };

  static MonomialOrder lex(std::size_t n);
  static MonomialOrder degrevlex(std::size_t n);
  static MonomialOrder lex(std::vector<std::size_t> descending);
  static MonomialOrder degrevlex(std::vector<std::size_t> descending);
  static MonomialOrder weighted(std::vector<std::vector<std::int64_t>> rows);
  static MonomialOrder matrix(std::vector<std::vector<std::int64_t>> rows);

  Kind kind() const { return data_->kind; }
  std::size_t num_vars() const { return data_->num_vars; }
  /// Empty for weighted/matrix orders.
  const std::vector<std::size_t>& permutation() const { return data_->permutation; }
  const std::vector<std::vector<std::int64_t>>& rows() const { return data_->rows; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// Variables sorted from largest to smallest under the order.
  std::vector<std::size_t> variables_descending() const;
  std::size_t largest_variable() const { return variables_descending().front(); }
  std::size_t smallest_variable() const { return variables_descending().back(); }

  /// e.g. "lex x>y>z" or "matrix 1,1;0,-1".
  std::string describe(std::span<const std::string> names) const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b);

 private:
  struct Data {
    Kind kind;
    std::size_t num_vars;
    std::vector<std::size_t> permutation;
    std::vector<std::vector<std::int64_t>> rows;
  };
  explicit MonomialOrder(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// compare_monomials in the order's own convention; throws on length mismatch.
std::strong_ordering compare_monomials(const MonomialOrder& order, const Monomial& a,
                                       const Monomial& b);

}  // namespace srdegen

#endif
