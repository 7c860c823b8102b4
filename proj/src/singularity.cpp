#include "srdegen/singularity.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace srdegen {

ProjPoint::ProjPoint(std::vector<Scalar> coordinates) : coords_(std::move(coordinates)) {
  if (coords_.empty()) throw std::invalid_argument("projective point needs at least one coordinate");
  const Field field = coords_.front().field();
  for (const auto& c : coords_) {
    if (c.field() != field) throw FieldMismatch("projective point mixes coordinate fields");
  }
  const auto first = std::find_if(coords_.begin(), coords_.end(), [](const Scalar& c) { return !c.is_zero(); });
  if (first == coords_.end()) throw std::invalid_argument("projective point cannot be the zero vector");
  const Scalar scale = first->inverse();
  for (auto& c : coords_) c *= scale;
}

ProjPoint ProjPoint::coordinate(std::size_t n, std::size_t i, const Field& field) {
  if (i >= n) throw std::out_of_range("coordinate point index");
  std::vector<Scalar> coords(n, Scalar::zero(field));
  coords[i] = Scalar::one(field);
  return ProjPoint(std::move(coords));
}

std::string ProjPoint::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i > 0) out += ':';
    out += coords_[i].to_string();
  }
  return out + "]";
}

std::string to_string(PointVerdict verdict) {
  switch (verdict) {
    case PointVerdict::singular: return "singular";
    case PointVerdict::smooth: return "smooth";
    case PointVerdict::off_scheme: return "off_scheme";
    case PointVerdict::indeterminate: return "indeterminate";
  }
  return "unknown";
}

std::string to_string(Obstruction obstruction) {
  switch (obstruction) {
    case Obstruction::complete_intersection: return "complete_intersection";
    case Obstruction::leafless_vertex: return "leafless_vertex";
    case Obstruction::lex_free_face: return "lex_free_face";
  }
  return "unknown";
}

namespace {

void check_generator(const Polynomial& f, const ProjPoint& point) {
  if (f.ring()->num_vars() != point.size()) throw std::invalid_argument("point and ring dimensions differ");
  if (f.field() != point.field()) throw FieldMismatch("point lies over a different field than the ideal");
  if (!f.ring()->has_standard_grading()) {
    throw std::invalid_argument("Jacobian criterion on projective space needs the standard grading");
  }
  if (!f.homogeneous_degree()) throw std::invalid_argument("generator is not homogeneous: " + f.to_string());
}

std::size_t rank_of_rows(const linalg::Matrix<Scalar>& jac, const std::vector<std::size_t>& rows, const Field& field) {
  linalg::Matrix<Scalar> sub(rows.size(), jac.cols(), Scalar::zero(field));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < jac.cols(); ++c) sub(r, c) = jac(rows[r], c);
  }
  return linalg::rank(sub, field);
}

Monomial x1_power_times(std::size_t n, std::size_t v1, std::uint32_t power, std::size_t other) {
  std::vector<std::uint32_t> e(n, 0);
  e[v1] += power;
  e[other] += 1;
  return Monomial(std::move(e));
}

bool in_support(const Polynomial& f, const Monomial& m, bool tail_only) {
  const auto terms = f.terms();
  return std::any_of(terms.begin() + (tail_only ? 1 : 0), terms.end(),
                     [&](const Term& t) { return t.monomial == m; });
}

// Shared preconditions for the one-dimensional statements.
void check_graph_setup(const GroebnerBasis& basis, const SimplicialComplex& complex, const char* what) {
  if (complex.dimension() != 1) throw std::invalid_argument(std::string(what) + ": complex must be 1-dimensional");
  if (!complex.ghost_vertices().empty()) {
    throw std::invalid_argument(std::string(what) + ": ideal contains linear forms (ghost vertices)");
  }
  if (complex.num_vertices() != basis.ring()->num_vars()) {
    throw std::invalid_argument(std::string(what) + ": complex and ring have different vertex counts");
  }
  if (!(initial_ideal(basis) == to_ideal(complex))) {
    throw std::invalid_argument(std::string(what) + ": initial ideal is not the Stanley-Reisner ideal");
  }
}

std::vector<std::size_t> neighbours_descending(const SimplicialComplex& complex, std::size_t v,
                                               const std::vector<std::size_t>& position) {
  FaceMask star = 0;
  for (FaceMask f : complex.facets()) {
    if ((f >> v & 1) != 0) star |= f;
  }
  star &= ~(FaceMask{1} << v);
  std::vector<std::size_t> out = vertices_of(star);
  std::sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) { return position[a] < position[b]; });
  return out;
}

std::vector<std::size_t> positions(const MonomialOrder& order) {
  const auto desc = order.variables_descending();
  std::vector<std::size_t> pos(desc.size());
  for (std::size_t k = 0; k < desc.size(); ++k) pos[desc[k]] = k;
  return pos;
}

}  // namespace

linalg::Matrix<Scalar> jacobian_at(std::span<const Polynomial> generators, const ProjPoint& point) {
  const std::size_t n = point.size();
  linalg::Matrix<Scalar> jac(generators.size(), n, Scalar::zero(point.field()));
  for (std::size_t r = 0; r < generators.size(); ++r) {
    for (std::size_t c = 0; c < n; ++c) jac(r, c) = generators[r].partial_derivative(c).evaluate(point.coordinates());
  }
  return jac;
}

JacobianAnalysis jacobian_rank_at(std::span<const Polynomial> generators, const ProjPoint& point,
                                  std::size_t codimension) {
  JacobianAnalysis out{point, true, 0, codimension, PointVerdict::off_scheme};
  for (const auto& f : generators) {
    check_generator(f, point);
    if (!f.evaluate(point.coordinates()).is_zero()) out.on_scheme = false;
  }
  out.rank = linalg::rank(jacobian_at(generators, point), point.field());
  if (!out.on_scheme) {
    out.verdict = PointVerdict::off_scheme;
  } else if (out.rank < codimension) {
    out.verdict = PointVerdict::singular;
  } else if (out.rank == codimension) {
    out.verdict = PointVerdict::smooth;
  } else {
    out.verdict = PointVerdict::indeterminate;
  }
  return out;
}

JacobianAnalysis jacobian_rank_at(const GroebnerBasis& basis, const ProjPoint& point,
                                  std::optional<std::size_t> codimension) {
  if (!codimension) {
    const MonomialIdeal initial = initial_ideal(basis);
    if (basis.is_unit_ideal()) {
      codimension = point.size();
    } else if (!is_squarefree(initial)) {
      throw std::invalid_argument("jacobian_rank_at: codimension needed for a non-square-free initial ideal");
    } else {
      const int dim = complex_from_squarefree_ideal(initial, basis.ring()->num_vars()).dimension();
      codimension = basis.ring()->num_vars() - 1 - static_cast<std::size_t>(dim);
    }
  }
  return jacobian_rank_at(basis.elements(), point, *codimension);
}

std::vector<std::size_t> graph_relabeling(const SimplicialComplex& complex, const MonomialOrder& order) {
  const auto desc = order.variables_descending();
  const auto pos = positions(order);
  const std::size_t v1 = desc.front();
  std::vector<std::size_t> out{v1};
  const auto link_vertices = neighbours_descending(complex, v1, pos);
  out.insert(out.end(), link_vertices.begin(), link_vertices.end());
  for (std::size_t v : desc) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

ObstructionVerdict ci_obstruction(const GroebnerBasis& basis) {
  ObstructionVerdict out;
  out.theorem = Obstruction::complete_intersection;
  const std::size_t n = basis.ring()->num_vars();
  const MonomialIdeal initial = initial_ideal(basis);
  if (basis.is_unit_ideal() || initial.empty()) {
    out.reason = "initial ideal is zero or the unit ideal";
    return out;
  }
  if (!is_squarefree(initial)) {
    out.reason = "initial ideal is not square-free";
    return out;
  }
  FaceMask used = 0;
  std::uint64_t degree_sum = 0;
  for (const auto& m : initial.generators()) {
    if (m.total_degree() < 2) {
      out.reason = "initial ideal has a generator of degree < 2";
      return out;
    }
    if ((used & m.support_mask()) != 0) {
      out.reason = "generators of the initial ideal share variables";
      return out;
    }
    used |= m.support_mask();
    degree_sum += m.total_degree();
  }
  if (degree_sum != n) {
    out.reason = "generator degrees sum to " + std::to_string(degree_sum) + " < " + std::to_string(n);
    return out;
  }

  const auto pos = positions(basis.order());
  std::vector<std::vector<std::size_t>> blocks;
  for (const auto& m : initial.generators()) {
    auto block = vertices_of(m.support_mask());
    std::sort(block.begin(), block.end(), [&](std::size_t a, std::size_t b) { return pos[a] < pos[b]; });
    blocks.push_back(std::move(block));
  }
  // First block holds the largest variable; the last holds the smallest
  // variable outside the first block; the others go by their largest variable.
  std::sort(blocks.begin(), blocks.end(), [&](const auto& a, const auto& b) { return pos[a[0]] < pos[b[0]]; });
  if (blocks.size() > 2) {
    const auto last = std::max_element(blocks.begin() + 1, blocks.end(), [&](const auto& a, const auto& b) {
      return pos[a.back()] < pos[b.back()];
    });
    std::rotate(last, last + 1, blocks.end());
  }
  for (const auto& block : blocks) out.relabeling.insert(out.relabeling.end(), block.begin(), block.end());
  out.blocks = blocks;
  out.applicable = true;
  out.distinguished_vertex = out.relabeling.front();
  out.rank_bound = blocks.size() - 1;
  out.at_p1 = jacobian_rank_at(basis, ProjPoint::coordinate(n, out.relabeling.front(), basis.ring()->field()),
                               blocks.size());
  out.certified = out.at_p1->verdict == PointVerdict::singular;
  out.reason = out.certified ? "P_1 is singular: Jacobian rank " + std::to_string(out.at_p1->rank) + " < " +
                                   std::to_string(blocks.size())
                             : "P_1 is not singular; the basis is not a reduced Groebner basis of this shape";
  return out;
}

std::vector<SupportViolation> support_exclusions(const GroebnerBasis& basis, const SimplicialComplex& complex) {
  check_graph_setup(basis, complex, "support_exclusions");
  const std::size_t n = complex.num_vertices();
  const auto relabel = graph_relabeling(complex, basis.order());
  const std::size_t v1 = relabel.front();
  const auto link_vertices = neighbours_descending(complex, v1, positions(basis.order()));
  std::vector<std::size_t> top(link_vertices.begin(),
                               link_vertices.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(2, link_vertices.size())));
  std::vector<std::size_t> non_neighbours;
  for (std::size_t v = 0; v < n; ++v) {
    if (v != v1 && std::find(link_vertices.begin(), link_vertices.end(), v) == link_vertices.end()) {
      non_neighbours.push_back(v);
    }
  }

  std::vector<SupportViolation> out;
  for (const auto& f : basis.elements()) {
    const FaceMask face = f.leading_monomial().support_mask();
    const auto d = static_cast<std::uint32_t>(f.leading_monomial().total_degree());
    const bool contains_v1 = (face >> v1 & 1) != 0;
    const Monomial pure_power = Monomial::variable(n, v1, d);
    if (in_support(f, pure_power, false)) out.push_back({face, pure_power, "non_neighbor_exclusion"});
    for (std::size_t l : non_neighbours) {
      const Monomial m = x1_power_times(n, v1, d - 1, l);
      if (in_support(f, m, true)) out.push_back({face, m, "non_neighbor_exclusion"});
    }
    for (std::size_t a : top) {
      if (!contains_v1) {
        const Monomial m = x1_power_times(n, v1, d - 1, a);
        if (in_support(f, m, false)) out.push_back({face, m, "top_link_exclusion"});
      } else if (std::popcount(face) == 3) {
        const Monomial m = x1_power_times(n, v1, 2, a);
        if (in_support(f, m, false)) out.push_back({face, m, "degree3_exclusion"});
      }
    }
  }
  return out;
}

ObstructionVerdict leafless_obstruction(const GroebnerBasis& basis, const SimplicialComplex& complex) {
  check_graph_setup(basis, complex, "leafless_obstruction");
  ObstructionVerdict out;
  out.theorem = Obstruction::leafless_vertex;
  const std::size_t n = complex.num_vertices();
  out.relabeling = graph_relabeling(complex, basis.order());
  const std::size_t v1 = out.relabeling.front();
  out.distinguished_vertex = v1;
  const auto link_vertices = neighbours_descending(complex, v1, positions(basis.order()));
  if (link_vertices.size() < 2) {
    out.reason = "vertex " + std::to_string(v1 + 1) + " is a leaf";
    return out;
  }
  out.applicable = true;
  const std::size_t a2 = link_vertices[0];
  const std::size_t a3 = link_vertices[1];
  for (std::uint32_t d : {2u, 3u}) {
    out.excluded_monomials.push_back(x1_power_times(n, v1, d - 1, a2));
    out.excluded_monomials.push_back(x1_power_times(n, v1, d - 1, a3));
  }

  const auto& elements = basis.elements();
  std::vector<std::size_t> block1;
  std::vector<std::size_t> block2;
  std::size_t uncovered = 0;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    const Polynomial& f = elements[k];
    const auto d = static_cast<std::uint32_t>(f.leading_monomial().total_degree());
    if (d == 2 && (f.leading_monomial().support_mask() >> v1 & 1) != 0) {
      block1.push_back(k);
    } else if (!in_support(f, x1_power_times(n, v1, d - 1, a2), false) &&
               !in_support(f, x1_power_times(n, v1, d - 1, a3), false)) {
      block2.push_back(k);
    } else {
      ++uncovered;
    }
  }
  const Field& field = basis.ring()->field();
  const ProjPoint p1 = ProjPoint::coordinate(n, v1, field);
  const auto jac = jacobian_at(elements, p1);
  out.block_ranks = {rank_of_rows(jac, block1, field), rank_of_rows(jac, block2, field)};
  out.rank_bound = n - 3;
  out.at_p1 = jacobian_rank_at(basis, p1, n - 2);
  out.certified = uncovered == 0 && out.at_p1->verdict == PointVerdict::singular && out.at_p1->rank <= n - 3;
  if (uncovered != 0) {
    out.reason = std::to_string(uncovered) + " generator(s) fall outside both row blocks";
  } else {
    out.reason = "Jacobian rank at P_1 is " + std::to_string(out.at_p1->rank) + " <= " + std::to_string(n - 3) +
                 " < " + std::to_string(n - 2);
  }
  return out;
}

ObstructionVerdict lex_obstruction(const SimplicialComplex& complex, const MonomialOrder& order) {
  if (order.kind() != MonomialOrder::Kind::lex) throw std::invalid_argument("lex_obstruction needs a lex order");
  if (order.num_vars() != complex.num_vertices()) {
    throw std::invalid_argument("lex_obstruction: order and complex have different vertex counts");
  }
  ObstructionVerdict out;
  out.theorem = Obstruction::lex_free_face;
  out.relabeling = order.variables_descending();
  out.distinguished_vertex = out.relabeling.front();
  const auto dim = static_cast<std::size_t>(std::max(complex.dimension(), 0));
  bool all_large = complex.ghost_vertices().empty();
  for (std::size_t v = 0; v < complex.num_vertices(); ++v) {
    FaceMask star = 0;
    for (FaceMask f : complex.facets()) {
      if ((f >> v & 1) != 0) star |= f;
    }
    const std::size_t size = star == 0 ? 0 : static_cast<std::size_t>(std::popcount(star)) - 1;
    out.link_sizes.push_back(size);
    if (size <= dim) all_large = false;
  }
  out.applicable = all_large;
  out.certified = all_large;
  if (all_large) {
    out.reason = "every vertex link has at least " + std::to_string(dim + 1) +
                 " vertices, so P_1 is singular for every lex Groebner lift";
  } else {
    out.free_faces = free_faces(complex);
    out.reason = "some vertex link has at most " + std::to_string(dim) + " vertices";
  }
  return out;
}

}  // namespace srdegen
