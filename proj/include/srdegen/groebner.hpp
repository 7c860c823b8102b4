#ifndef SRDEGEN_GROEBNER_HPP
#define SRDEGEN_GROEBNER_HPP

#include "srdegen/polynomial.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace srdegen {

/// A configured computation cap was hit (degree cap, variable bound, ...).
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reduction modulo p is undefined or drops a leading term.
class BadPrimeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class PairStrategy {
  normal,  ///< smallest lcm degree first, ties by the order
  fifo,    ///< pairs in creation order
};

struct GroebnerOptions {
  PairStrategy strategy = PairStrategy::normal;
  /// Abort once an S-pair lcm exceeds this total degree.
  std::uint64_t degree_cap = 40;
};

/// Minimal monomial generators, pairwise non-dividing, sorted lexicographically
/// descending on exponent vectors (x_1 > ... > x_n).
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(std::size_t num_vars, std::vector<Monomial> generators);

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<Monomial>& generators() const& { return generators_; }
  std::vector<Monomial> generators() && { return std::move(generators_); }
  bool empty() const { return generators_.empty(); }
  bool contains(const Monomial& m) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t num_vars_ = 0;
  std::vector<Monomial> generators_;
};

/// Reduced, monic Groebner basis sorted by descending leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<Polynomial> elements);

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& elements() const& { return elements_; }
  std::vector<Polynomial> elements() && { return std::move(elements_); }
  std::size_t size() const { return elements_.size(); }
  bool is_unit_ideal() const;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b);

 private:
  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Polynomial> elements_;
};

/**
 * Full reduction of f by G under f's order. At each step the leading
 * remaining term is reduced by the first element of G (in list order) whose
 * leading monomial divides it.
 */
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors);

/// lcm/in(f) * f - lcm/in(g) * g after making both inputs monic.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Reduced Groebner basis of the ideal generated by `generators`. Uses the
/// coprime-leading-monomial and chain criteria. Throws ResourceLimitError
/// when the degree cap is exceeded.
GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> generators,
                         const MonomialOrder& order, const GroebnerOptions& options = {});
/// Convenience overload; the ring is taken from the (nonempty) generator list.
GroebnerBasis buchberger(std::span<const Polynomial> generators, const MonomialOrder& order,
                         const GroebnerOptions& options = {});

/// Buchberger's criterion: every S-pair of `elements` reduces to zero.
bool is_groebner_basis(std::span<const Polynomial> elements);

MonomialIdeal initial_ideal(const GroebnerBasis& basis);
bool is_squarefree(const MonomialIdeal& ideal);
bool ideal_membership(const Polynomial& f, const GroebnerBasis& basis);

/// (I : x_i) == I, via a tag variable t and an elimination order on
/// t*I + (1 - t)*(x_i).
bool is_variable_regular(const GroebnerBasis& basis, std::size_t variable, const GroebnerOptions& options = {});

/// True iff x_i divides no minimal generator of the square-free initial ideal.
bool cone_point_certificate(const GroebnerBasis& basis, std::size_t variable);
bool cone_point_certificate(const MonomialIdeal& initial, std::size_t variable);

struct ModularReduction {
  std::uint32_t prime = 0;
  /// Images over GF(p) of the primitive integer forms of the inputs.
  std::vector<Polynomial> generators;
  MonomialIdeal rational_initial;
  MonomialIdeal modular_initial;
  /// in(I_p) == (in I)_p for this prime.
  bool stable = false;
};

/// Reduces rational generators modulo p. Throws BadPrimeError if p divides a
/// coefficient denominator or the leading coefficient of a primitive form.
ModularReduction reduce_mod_p(std::span<const Polynomial> generators, const MonomialOrder& order, std::uint32_t p,
                              const GroebnerOptions& options = {});

/// Image of a single rational polynomial over GF(p) (same checks as above).
Polynomial reduce_polynomial_mod_p(const Polynomial& f, const RingPtr& target);

}  // namespace srdegen

#endif
