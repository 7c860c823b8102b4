#ifndef SRDEGEN_PARSE_HPP
#define SRDEGEN_PARSE_HPP

#include "srdegen/complex.hpp"
#include "srdegen/pipeline.hpp"
#include "srdegen/polynomial.hpp"

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace srdegen {

/// Syntax or validation error with a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/**
 * Polynomial expression over the ring: + - * ^, parentheses, integer
 * literals and division by nonzero constants. Multiplication is explicit.
 */
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, const MonomialOrder& order);

/// "lex x>y>z", "degrevlex", "weighted 1,2,3", "matrix 1,1;0,-1".
MonomialOrder parse_order(std::string_view text, const RingContext& ring);

/// "1 2; 2 3; 1 3" with 1-based vertex ids.
SimplicialComplex parse_facets(std::string_view text, std::optional<std::size_t> vertices);

/**
 * One job file. Line oriented, `#` starts a comment, the colon after a
 * keyword is optional:
 *
 *   ring QQ x,y,z          grading 1,1,2        order lex x>y>z
 *   ideal: x*y*z + y^3 + z^3, ...              (repeatable)
 *   vertices 6             facets: 1 2; 2 3
 *   pool -1,1   budget 500   seed 7   family both   prime 5,7   workers 4   format json
 *
 * Without a ring line, a complex job lives over QQ in x1..xn. Without an
 * order line, degrevlex in the variable order is used.
 */
struct JobSpec {
  RingPtr ring;
  std::optional<MonomialOrder> order;
  std::vector<Polynomial> ideal;
  std::optional<SimplicialComplex> complex;
  std::vector<mpq_class> pool;
  std::optional<std::uint64_t> budget;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> workers;
  std::optional<OrderFamily> family;
  std::vector<std::uint32_t> primes;
  std::optional<std::string> format;

  /// The explicit order, or degrevlex on the variable order.
  MonomialOrder effective_order() const;
};

JobSpec parse_job(std::string_view text);
/// Canonical text; parse_job(render_job(j)) renders identically.
std::string render_job(const JobSpec& job);

std::string to_string(OrderFamily family);
OrderFamily parse_family(std::string_view text);

}  // namespace srdegen

#endif
