#ifndef SRDEGEN_COMPLEX_HPP
#define SRDEGEN_COMPLEX_HPP

#include "srdegen/field.hpp"
#include "srdegen/groebner.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace srdegen {

/// Vertex set encoded as a bitmask; bit i is vertex i (0-based).
using FaceMask = std::uint64_t;

std::vector<std::size_t> vertices_of(FaceMask face);
/// 1-based, space separated: "1 2 4". The empty face prints as "{}".
std::string face_to_string(FaceMask face);

/**
 * Simplicial complex on the vertex set [n] (n <= 63), stored by its facets.
 * Vertices of [n] that lie in no face are "ghost" vertices; they are allowed
 * and reported by ghost_vertices().
 */
class SimplicialComplex {
 public:
  /// Drops non-maximal entries. Rejects the void complex and {∅}.
  static SimplicialComplex from_facets(std::size_t n, std::vector<FaceMask> facets);
  static SimplicialComplex from_facets(std::size_t n, const std::vector<std::vector<std::size_t>>& facets);

  std::size_t num_vertices() const { return n_; }
  /// Sorted lexicographically by vertex lists.
  const std::vector<FaceMask>& facets() const& { return facets_; }
  std::vector<FaceMask> facets() && { return std::move(facets_); }
  /// -1 only for {∅}, which arises as the link of a facet.
  int dimension() const { return dimension_; }
  bool is_pure() const;
  bool contains(FaceMask face) const;
  bool is_irrelevant() const { return facets_.size() == 1 && facets_.front() == 0; }

  /// All faces including ∅, by dimension then lexicographically.
  std::vector<FaceMask> faces() const;
  /// faces_by_dimension()[k] holds the (k-1)-dimensional faces; [0] = {∅}.
  std::vector<std::vector<FaceMask>> faces_by_dimension() const;
  /// f_0 .. f_dim.
  std::vector<std::uint64_t> f_vector() const;
  std::vector<std::size_t> ghost_vertices() const;
  std::vector<FaceMask> minimal_nonfaces() const;

  /// "1 2; 2 3; 1 3"
  std::string to_string() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  friend struct ComplexAccess;
  SimplicialComplex(std::size_t n, std::vector<FaceMask> facets);

  std::size_t n_ = 0;
  std::vector<FaceMask> facets_;
  int dimension_ = -1;
};

/// Faces are the subsets of [n] containing no generator's support.
SimplicialComplex complex_from_squarefree_ideal(const MonomialIdeal& ideal, std::size_t n);
/// Stanley-Reisner ideal: generated by the minimal non-faces.
MonomialIdeal to_ideal(const SimplicialComplex& complex);

struct Link {
  SimplicialComplex complex;
  /// vertex_map[j] is the original vertex of link vertex j.
  std::vector<std::size_t> vertex_map;
};

/// Link of a face, relabelled onto the vertices it actually uses (in
/// increasing order). Throws std::invalid_argument if `face` is not a face.
Link link(const SimplicialComplex& complex, FaceMask face);

struct CohomologyProfile {
  Field field = Field::rationals();
  /// dims[i] = dim H~^i for i = 0 .. dim.
  std::vector<std::uint64_t> dims;
  /// dim H~^{-1}; nonzero only for {∅}.
  std::uint64_t h_minus1 = 0;
  std::int64_t reduced_euler = 0;
};

/// Reduced simplicial cohomology from exact ranks of the augmented coboundary
/// maps (faces ordered lexicographically, sign (-1)^j for the j-th vertex).
CohomologyProfile reduced_cohomology(const SimplicialComplex& complex, const Field& field);

/// -1 + sum (-1)^j f_j
std::int64_t reduced_euler_characteristic(const SimplicialComplex& complex);

struct ComplexPropertyReport {
  bool pure = false;
  bool strongly_connected = false;
  bool normal = false;
  bool cohen_macaulay = false;
  bool buchsbaum = false;
  bool acyclic = false;
  /// Only meaningful for Cohen-Macaulay complexes; empty otherwise.
  std::optional<bool> negative_a_invariant;
  std::vector<std::size_t> leaves;
  std::vector<FaceMask> free_faces;
  std::vector<std::size_t> cone_points;
  std::vector<std::size_t> ghost_vertices;
  CohomologyProfile cohomology;
};

/// Pure and the facet graph (adjacent iff sharing a codimension-one face) is connected.
bool is_strongly_connected(const SimplicialComplex& complex);
/// Codimension-one faces of top-dimensional facets lying in exactly one facet.
std::vector<FaceMask> free_faces(const SimplicialComplex& complex);
/// Reisner's criterion over `field`.
bool is_cohen_macaulay(const SimplicialComplex& complex, const Field& field);

ComplexPropertyReport property_report(const SimplicialComplex& complex, const Field& field);

}  // namespace srdegen

#endif
