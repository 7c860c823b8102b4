#ifndef SRDEGEN_SINGULARITY_HPP
#define SRDEGEN_SINGULARITY_HPP

#include "srdegen/complex.hpp"
#include "srdegen/groebner.hpp"
#include "srdegen/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace srdegen {

/// Point of projective space over a field, scaled so the first nonzero
/// coordinate is 1.
class ProjPoint {
 public:
  /// Throws std::invalid_argument for the zero vector or mixed fields.
  explicit ProjPoint(std::vector<Scalar> coordinates);
  /// The coordinate point with a 1 in position i.
  static ProjPoint coordinate(std::size_t n, std::size_t i, const Field& field);

  std::size_t size() const { return coords_.size(); }
  const std::vector<Scalar>& coordinates() const { return coords_; }
  Field field() const { return coords_.front().field(); }
  /// "[1:0:0]"
  std::string to_string() const;

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

 private:
  std::vector<Scalar> coords_;
};

enum class PointVerdict {
  singular,
  smooth,
  off_scheme,
  /// Jacobian rank exceeds the expected codimension, so the scheme is not
  /// equidimensional of that codimension near the point.
  indeterminate,
};

std::string to_string(PointVerdict verdict);

/// Jacobian criterion at one point. The verdict assumes the scheme is
/// equidimensional of the given codimension.
struct JacobianAnalysis {
  ProjPoint point;
  bool on_scheme = false;
  std::size_t rank = 0;
  std::size_t codimension = 0;
  PointVerdict verdict = PointVerdict::off_scheme;
};

/// Generators must be homogeneous over a standard-graded ring in the point's field.
JacobianAnalysis jacobian_rank_at(std::span<const Polynomial> generators, const ProjPoint& point,
                                  std::size_t codimension);
/// Codimension n - 1 - dim(Δ) from the square-free initial ideal unless given.
JacobianAnalysis jacobian_rank_at(const GroebnerBasis& basis, const ProjPoint& point,
                                  std::optional<std::size_t> codimension = std::nullopt);

/// Jacobian matrix (rows = generators) evaluated at a point.
linalg::Matrix<Scalar> jacobian_at(std::span<const Polynomial> generators, const ProjPoint& point);

enum class Obstruction { complete_intersection, leafless_vertex, lex_free_face };
std::string to_string(Obstruction obstruction);

struct ObstructionVerdict {
  Obstruction theorem = Obstruction::complete_intersection;
  bool applicable = false;
  std::string reason;
  /// relabeling[k] is the original variable playing the role of x_{k+1}.
  std::vector<std::size_t> relabeling;
  std::optional<std::size_t> distinguished_vertex;
  /// complete_intersection: generator supports in relabeled block order.
  std::vector<std::vector<std::size_t>> blocks;
  /// leafless_vertex: the monomials the rank bound requires to be absent.
  std::vector<Monomial> excluded_monomials;
  std::optional<JacobianAnalysis> at_p1;
  /// Rank bound proved by the obstruction, compared against the actual rank.
  std::optional<std::size_t> rank_bound;
  /// leafless_vertex: ranks of the two row blocks at P_1.
  std::vector<std::size_t> block_ranks;
  /// lex_free_face: |vertices of link v| for every vertex v.
  std::vector<std::size_t> link_sizes;
  std::vector<FaceMask> free_faces;
  /// Applicable and the claimed singularity was confirmed by computation.
  bool certified = false;
};

/// Square-free complete intersection with all degrees >= 2 and degree sum n.
ObstructionVerdict ci_obstruction(const GroebnerBasis& basis);

struct SupportViolation {
  FaceMask nonface = 0;
  Monomial monomial;
  /// non_neighbor_exclusion, top_link_exclusion or degree3_exclusion
  std::string rule;
};

/// Excluded support monomials of a reduced basis with in(B) = I_Δ, dim Δ = 1.
/// Vertex 1 is the largest variable and its link is taken in descending order.
std::vector<SupportViolation> support_exclusions(const GroebnerBasis& basis, const SimplicialComplex& complex);

/// Rank bound at P_1 for graphs whose largest vertex is not a leaf.
ObstructionVerdict leafless_obstruction(const GroebnerBasis& basis, const SimplicialComplex& complex);

/// Combinatorial certificate that no lex Groebner smoothing exists.
ObstructionVerdict lex_obstruction(const SimplicialComplex& complex, const MonomialOrder& order);

/// Relabeling with the largest variable first, then its link vertices in
/// descending order, then the rest in descending order.
std::vector<std::size_t> graph_relabeling(const SimplicialComplex& complex, const MonomialOrder& order);

}  // namespace srdegen

#endif
