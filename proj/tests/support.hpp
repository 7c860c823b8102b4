// Test-side conveniences: building library objects from text and converting
// them into the oracle representation.
#ifndef SRDEGEN_TESTS_SUPPORT_HPP
#define SRDEGEN_TESTS_SUPPORT_HPP

#include "oracles.hpp"

#include "srdegen/parse.hpp"
#include "srdegen/pipeline.hpp"

#include <random>
#include <string>
#include <vector>

namespace testing {

using namespace srdegen;

inline RingPtr ring_of(const std::string& names, const Field& field = Field::rationals()) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= names.size()) {
    const auto comma = names.find(',', start);
    out.push_back(names.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return RingContext::create(out, field);
}

inline Polynomial poly(const std::string& text, const RingPtr& ring, const MonomialOrder& order) {
  return parse_polynomial(text, ring, order);
}

inline std::vector<Polynomial> polys(const std::vector<std::string>& texts, const RingPtr& ring,
                                     const MonomialOrder& order) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(poly(t, ring, order));
  return out;
}

inline oracle::Exps exps(const Monomial& m) { return {m.exponents().begin(), m.exponents().end()}; }

/// Rational polynomial in the oracle's representation.
inline oracle::Poly to_oracle(const Polynomial& f) {
  oracle::Poly out;
  for (const auto& t : f.terms()) out.terms[exps(t.monomial)] = t.coefficient.rational();
  return out;
}

inline std::vector<oracle::Poly> to_oracle(std::span<const Polynomial> fs) {
  std::vector<oracle::Poly> out;
  for (const auto& f : fs) out.push_back(to_oracle(f));
  return out;
}

/// The oracle comparator matching a permutation lex/degrevlex order.
inline oracle::Cmp oracle_order(const MonomialOrder& order) {
  const auto& perm = order.permutation();
  return order.kind() == MonomialOrder::Kind::lex ? oracle::lex_order(perm) : oracle::degrevlex_order(perm);
}

/// Random homogeneous polynomial of degree d with small integer coefficients.
inline Polynomial random_homogeneous(std::mt19937_64& rng, const RingPtr& ring, const MonomialOrder& order, int d,
                                     std::size_t max_terms, int coeff = 3) {
  const auto all = oracle::monomials_of_degree(ring->num_vars(), d);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  std::uniform_int_distribution<long> c(-coeff, coeff);
  std::uniform_int_distribution<std::size_t> count(1, max_terms);
  std::vector<Term> terms;
  const std::size_t k = count(rng);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& e = all[pick(rng)];
    std::vector<std::uint32_t> ex(e.begin(), e.end());
    terms.push_back({Monomial(ex), Scalar::from_integer(ring->field(), c(rng))});
  }
  return Polynomial::from_terms(ring, order, std::move(terms));
}

inline SimplicialComplex complex_of(const std::string& facets, std::optional<std::size_t> n = std::nullopt) {
  return parse_facets(facets, n);
}

inline std::vector<std::string> rendered(std::span<const Polynomial> fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(f.to_string());
  return out;
}

}  // namespace testing

#endif
