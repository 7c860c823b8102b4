#include "srdegen/complex.hpp"

#include "srdegen/linalg.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace srdegen {

namespace {

constexpr std::size_t kMaxVertices = 63;

bool lex_less(FaceMask a, FaceMask b) { return vertices_of(a) < vertices_of(b); }

// For faces of equal size: a precedes b iff a owns the lowest differing vertex.
bool same_size_lex_less(FaceMask a, FaceMask b) {
  const FaceMask diff = a ^ b;
  return diff != 0 && (a & (diff & (~diff + 1))) != 0;
}

std::vector<FaceMask> maximal_only(std::vector<FaceMask> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<FaceMask> out;
  for (FaceMask s : sets) {
    const bool dominated = std::any_of(sets.begin(), sets.end(), [&](FaceMask t) { return t != s && (s & t) == s; });
    if (!dominated) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace

struct ComplexAccess {
  static SimplicialComplex make(std::size_t n, std::vector<FaceMask> facets) {
    return SimplicialComplex(n, std::move(facets));
  }
};

std::vector<std::size_t> vertices_of(FaceMask face) {
  std::vector<std::size_t> out;
  while (face != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(face)));
    face &= face - 1;
  }
  return out;
}

std::string face_to_string(FaceMask face) {
  if (face == 0) return "{}";
  std::string out;
  for (std::size_t v : vertices_of(face)) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v + 1);
  }
  return out;
}

SimplicialComplex::SimplicialComplex(std::size_t n, std::vector<FaceMask> facets) : n_(n) {
  if (n > kMaxVertices) throw std::invalid_argument("simplicial complex: at most 63 vertices supported");
  if (facets.empty()) throw std::invalid_argument("simplicial complex: the void complex is not supported");
  const FaceMask universe = n == 0 ? 0 : (~FaceMask{0} >> (64 - n));
  for (FaceMask f : facets) {
    if ((f & ~universe) != 0) {
      throw std::invalid_argument("simplicial complex: facet " + face_to_string(f) + " uses a vertex outside [" +
                                  std::to_string(n) + "]");
    }
  }
  facets_ = maximal_only(std::move(facets));
  for (FaceMask f : facets_) dimension_ = std::max(dimension_, std::popcount(f) - 1);
}

SimplicialComplex SimplicialComplex::from_facets(std::size_t n, std::vector<FaceMask> facets) {
  SimplicialComplex out(n, std::move(facets));
  if (out.is_irrelevant()) throw std::invalid_argument("simplicial complex: the complex {∅} is not supported");
  return out;
}

SimplicialComplex SimplicialComplex::from_facets(std::size_t n, const std::vector<std::vector<std::size_t>>& facets) {
  std::vector<FaceMask> masks;
  for (const auto& facet : facets) {
    FaceMask m = 0;
    for (std::size_t v : facet) {
      if (v >= n) throw std::invalid_argument("simplicial complex: vertex index out of range");
      m |= FaceMask{1} << v;
    }
    masks.push_back(m);
  }
  return from_facets(n, std::move(masks));
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(), [&](FaceMask f) { return std::popcount(f) - 1 == dimension_; });
}

bool SimplicialComplex::contains(FaceMask face) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](FaceMask f) { return (face & f) == face; });
}

std::vector<std::vector<FaceMask>> SimplicialComplex::faces_by_dimension() const {
  std::vector<std::unordered_set<FaceMask>> levels(static_cast<std::size_t>(dimension_ + 2));
  for (FaceMask f : facets_) {
    // Enumerate all subsets of the facet.
    FaceMask sub = f;
    while (true) {
      levels[static_cast<std::size_t>(std::popcount(sub))].insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & f;
    }
  }
  std::vector<std::vector<FaceMask>> out;
  for (const auto& level : levels) {
    std::vector<FaceMask> faces(level.begin(), level.end());
    std::sort(faces.begin(), faces.end(), same_size_lex_less);
    out.push_back(std::move(faces));
  }
  return out;
}

std::vector<FaceMask> SimplicialComplex::faces() const {
  std::vector<FaceMask> out;
  for (const auto& level : faces_by_dimension()) out.insert(out.end(), level.begin(), level.end());
  return out;
}

std::vector<std::uint64_t> SimplicialComplex::f_vector() const {
  const auto levels = faces_by_dimension();
  std::vector<std::uint64_t> out;
  for (std::size_t k = 1; k < levels.size(); ++k) out.push_back(levels[k].size());
  return out;
}

std::vector<std::size_t> SimplicialComplex::ghost_vertices() const {
  const FaceMask used = std::accumulate(facets_.begin(), facets_.end(), FaceMask{0}, std::bit_or<>());
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n_; ++v) {
    if ((used >> v & 1) == 0) out.push_back(v);
  }
  return out;
}

std::vector<FaceMask> SimplicialComplex::minimal_nonfaces() const {
  // A minimal non-face S has every S \ {v} a face, so it is a face plus one vertex.
  std::vector<FaceMask> out;
  for (std::size_t v : ghost_vertices()) out.push_back(FaceMask{1} << v);
  std::unordered_set<FaceMask> seen;
  for (FaceMask face : faces()) {
    for (std::size_t v = 0; v < n_; ++v) {
      const FaceMask bit = FaceMask{1} << v;
      if ((face & bit) != 0 || face == 0) continue;
      const FaceMask candidate = face | bit;
      if (contains(candidate)) continue;
      if (!seen.insert(candidate).second) continue;
      bool minimal = true;
      for (std::size_t u : vertices_of(candidate)) {
        if (!contains(candidate & ~(FaceMask{1} << u))) {
          minimal = false;
          break;
        }
      }
      if (minimal) out.push_back(candidate);
    }
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::string SimplicialComplex::to_string() const {
  std::string out;
  for (FaceMask f : facets_) {
    if (!out.empty()) out += "; ";
    out += face_to_string(f);
  }
  return out;
}

SimplicialComplex complex_from_squarefree_ideal(const MonomialIdeal& ideal, std::size_t n) {
  if (!is_squarefree(ideal)) throw std::invalid_argument("complex_from_squarefree_ideal: ideal is not square-free");
  if (n > kMaxVertices) throw std::invalid_argument("complex_from_squarefree_ideal: at most 63 vertices supported");
  if (!ideal.empty() && ideal.num_vars() != n) {
    throw std::invalid_argument("complex_from_squarefree_ideal: ideal lives in a different number of variables");
  }
  std::vector<FaceMask> nonfaces;
  for (const auto& m : ideal.generators()) {
    if (m.is_one()) throw std::invalid_argument("complex_from_squarefree_ideal: the unit ideal has no complex");
    nonfaces.push_back(m.support_mask());
  }
  auto is_face = [&](FaceMask f) {
    return std::none_of(nonfaces.begin(), nonfaces.end(), [&](FaceMask g) { return (f & g) == g; });
  };

  std::vector<FaceMask> facets;
  std::vector<FaceMask> level{0};
  while (!level.empty()) {
    std::vector<FaceMask> next;
    for (FaceMask f : level) {
      bool extendable = false;
      for (std::size_t v = 0; v < n; ++v) {
        const FaceMask bit = FaceMask{1} << v;
        if ((f & bit) != 0 || !is_face(f | bit)) continue;
        extendable = true;
        // Generate each face once, from its prefix without the largest vertex.
        if (f < bit) next.push_back(f | bit);
      }
      if (!extendable) facets.push_back(f);
    }
    level = std::move(next);
  }
  SimplicialComplex out = ComplexAccess::make(n, std::move(facets));
  if (out.is_irrelevant()) throw std::invalid_argument("complex_from_squarefree_ideal: the complex {∅} is not supported");
  return out;
}

MonomialIdeal to_ideal(const SimplicialComplex& complex) {
  std::vector<Monomial> gens;
  for (FaceMask s : complex.minimal_nonfaces()) gens.push_back(Monomial::from_mask(complex.num_vertices(), s));
  return MonomialIdeal(complex.num_vertices(), std::move(gens));
}

Link link(const SimplicialComplex& complex, FaceMask face) {
  if (!complex.contains(face)) throw std::invalid_argument("link: " + face_to_string(face) + " is not a face");
  std::vector<FaceMask> parts;
  FaceMask used = 0;
  for (FaceMask f : complex.facets()) {
    if ((f & face) != face) continue;
    parts.push_back(f & ~face);
    used |= f & ~face;
  }
  Link out{ComplexAccess::make(0, {0}), vertices_of(used)};
  std::vector<FaceMask> relabelled;
  for (FaceMask p : parts) {
    FaceMask m = 0;
    for (std::size_t j = 0; j < out.vertex_map.size(); ++j) {
      if ((p >> out.vertex_map[j] & 1) != 0) m |= FaceMask{1} << j;
    }
    relabelled.push_back(m);
  }
  out.complex = ComplexAccess::make(out.vertex_map.size(), std::move(relabelled));
  return out;
}

std::int64_t reduced_euler_characteristic(const SimplicialComplex& complex) {
  std::int64_t chi = -1;
  std::int64_t sign = 1;
  for (std::uint64_t f : complex.f_vector()) {
    chi += sign * static_cast<std::int64_t>(f);
    sign = -sign;
  }
  return chi;
}

CohomologyProfile reduced_cohomology(const SimplicialComplex& complex, const Field& field) {
  const auto levels = complex.faces_by_dimension();
  // ranks[k + 1] = rank of the coboundary C^k -> C^{k+1}, k = -1 .. dim - 1.
  std::vector<std::size_t> ranks(levels.size(), 0);
  for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
    const auto& source = levels[k];
    const auto& target = levels[k + 1];
    std::unordered_map<FaceMask, std::size_t> index;
    for (std::size_t c = 0; c < source.size(); ++c) index.emplace(source[c], c);
    linalg::Matrix<int> delta(target.size(), source.size(), 0);
    for (std::size_t r = 0; r < target.size(); ++r) {
      const auto verts = vertices_of(target[r]);
      for (std::size_t j = 0; j < verts.size(); ++j) {
        const FaceMask boundary = target[r] & ~(FaceMask{1} << verts[j]);
        delta(r, index.at(boundary)) = j % 2 == 0 ? 1 : -1;
      }
    }
    ranks[k] = linalg::rank(delta, field);
  }

  CohomologyProfile out;
  out.field = field;
  std::int64_t chi = 0;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    const std::size_t incoming = k == 0 ? 0 : ranks[k - 1];
    const std::uint64_t h = levels[k].size() - ranks[k] - incoming;
    if (k == 0) {
      out.h_minus1 = h;
    } else {
      out.dims.push_back(h);
    }
    chi += (k % 2 == 0 ? -1 : 1) * static_cast<std::int64_t>(h);
  }
  out.reduced_euler = chi;
  return out;
}

bool is_strongly_connected(const SimplicialComplex& complex) {
  if (!complex.is_pure()) return false;
  const auto& facets = complex.facets();
  const int d = complex.dimension();
  std::vector<bool> reached(facets.size(), false);
  std::vector<std::size_t> stack{0};
  reached[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t a = stack.back();
    stack.pop_back();
    for (std::size_t b = 0; b < facets.size(); ++b) {
      if (reached[b] || std::popcount(facets[a] & facets[b]) != d) continue;
      reached[b] = true;
      ++count;
      stack.push_back(b);
    }
  }
  return count == facets.size();
}

namespace {

// Reisner's condition at one face: H~^i(link F) = 0 for i < dim link F.
bool link_condition(const SimplicialComplex& complex, FaceMask face, const Field& field) {
  const Link lk = link(complex, face);
  const int dim = lk.complex.dimension();
  if (dim < 0) return true;
  const CohomologyProfile h = reduced_cohomology(lk.complex, field);
  if (h.h_minus1 != 0) return false;
  for (int i = 0; i < dim; ++i) {
    if (h.dims[static_cast<std::size_t>(i)] != 0) return false;
  }
  return true;
}

}  // namespace

bool is_cohen_macaulay(const SimplicialComplex& complex, const Field& field) {
  const auto faces = complex.faces();
  return std::all_of(faces.begin(), faces.end(), [&](FaceMask f) { return link_condition(complex, f, field); });
}

std::vector<FaceMask> free_faces(const SimplicialComplex& complex) {
  std::vector<FaceMask> out;
  const auto& facets = complex.facets();
  const int d = complex.dimension();
  if (d >= 0) {
    const auto levels = complex.faces_by_dimension();
    for (FaceMask f : levels[static_cast<std::size_t>(d)]) {
      std::size_t containing = 0;
      bool in_top_facet = false;
      for (FaceMask g : facets) {
        if ((f & g) != f) continue;
        ++containing;
        in_top_facet = in_top_facet || std::popcount(g) - 1 == d;
      }
      if (containing == 1 && in_top_facet) out.push_back(f);
    }
  }
  return out;
}

ComplexPropertyReport property_report(const SimplicialComplex& complex, const Field& field) {
  ComplexPropertyReport out;
  out.pure = complex.is_pure();
  out.strongly_connected = is_strongly_connected(complex);
  out.cohomology = reduced_cohomology(complex, field);
  out.ghost_vertices = complex.ghost_vertices();

  const auto faces = complex.faces();
  out.normal = true;
  bool nonempty_faces_ok = true;
  for (FaceMask f : faces) {
    if (f == 0) continue;
    if (!link_condition(complex, f, field)) nonempty_faces_ok = false;
    if (out.normal && !is_strongly_connected(link(complex, f).complex)) out.normal = false;
  }
  out.normal = out.normal && out.strongly_connected;

  bool empty_face_ok = out.cohomology.h_minus1 == 0;
  for (int i = 0; i < complex.dimension(); ++i) {
    if (out.cohomology.dims[static_cast<std::size_t>(i)] != 0) empty_face_ok = false;
  }
  out.buchsbaum = out.pure && nonempty_faces_ok;
  out.cohen_macaulay = out.buchsbaum && empty_face_ok;
  out.acyclic = out.cohomology.h_minus1 == 0 &&
                std::all_of(out.cohomology.dims.begin(), out.cohomology.dims.end(), [](auto h) { return h == 0; });
  if (out.cohen_macaulay) {
    out.negative_a_invariant = complex.dimension() < 0 || out.cohomology.dims.back() == 0;
  }

  const auto& facets = complex.facets();
  for (std::size_t v = 0; v < complex.num_vertices(); ++v) {
    const FaceMask bit = FaceMask{1} << v;
    const auto containing = std::count_if(facets.begin(), facets.end(), [&](FaceMask f) { return (f & bit) != 0; });
    if (containing == 1) out.leaves.push_back(v);
    if (static_cast<std::size_t>(containing) == facets.size()) out.cone_points.push_back(v);
  }

  out.free_faces = free_faces(complex);
  return out;
}

}  // namespace srdegen
