#include <doctest.h>

#include "oracles.hpp"
#include "support.hpp"

#include <random>

using namespace srdegen;
using testing::complex_of;

namespace {

const char* kOctahedron = "1 3 5; 1 3 6; 1 4 5; 1 4 6; 2 3 5; 2 3 6; 2 4 5; 2 4 6";
const char* kRP2 = "1 2 3; 1 3 4; 1 4 5; 1 5 6; 1 2 6; 2 3 5; 2 4 5; 2 4 6; 3 4 6; 3 5 6";

std::vector<std::uint64_t> dims(const SimplicialComplex& c, const Field& f = Field::rationals()) {
  return reduced_cohomology(c, f).dims;
}

FaceMask mask(std::initializer_list<std::size_t> one_based) {
  FaceMask m = 0;
  for (auto v : one_based) m |= FaceMask{1} << (v - 1);
  return m;
}

std::vector<Monomial> monomials_of(const std::vector<FaceMask>& masks, std::size_t n) {
  std::vector<Monomial> out;
  for (auto m : masks) out.push_back(Monomial::from_mask(n, m));
  return out;
}

}  // namespace

TEST_CASE("complexes from square-free ideals") {
  const auto tri = complex_from_squarefree_ideal(MonomialIdeal(3, {Monomial({1, 1, 1})}), 3);
  CHECK(tri == complex_of("1 2; 1 3; 2 3"));
  CHECK(complex_from_squarefree_ideal(MonomialIdeal(3, {}), 3) == complex_of("1 2 3"));
  const MonomialIdeal pairs(6, monomials_of({mask({1, 2}), mask({3, 4}), mask({5, 6})}, 6));
  const auto oct = complex_from_squarefree_ideal(pairs, 6);
  CHECK(oct == complex_of(kOctahedron));
  CHECK(oct.facets().size() == 8);
  CHECK_THROWS(complex_from_squarefree_ideal(MonomialIdeal(2, {Monomial({1, 0}), Monomial({0, 1})}), 2));
  CHECK_THROWS(complex_from_squarefree_ideal(MonomialIdeal(2, {Monomial({2, 0})}), 2));
}

TEST_CASE("Stanley-Reisner ideals") {
  CHECK(to_ideal(complex_of("1 2; 2 3; 1 3")).generators() == std::vector<Monomial>{Monomial({1, 1, 1})});
  CHECK(to_ideal(complex_of("1 2 3")).empty());
  CHECK(to_ideal(complex_of("1 2; 2 3; 3 4; 1 4")) ==
        MonomialIdeal(4, {Monomial({1, 0, 1, 0}), Monomial({0, 1, 0, 1})}));
  // ghost vertex 3 becomes the linear generator x3
  const auto ghost = SimplicialComplex::from_facets(3, std::vector<FaceMask>{mask({1, 2})});
  CHECK(ghost.ghost_vertices() == std::vector<std::size_t>{2});
  CHECK(to_ideal(ghost).generators() == std::vector<Monomial>{Monomial({0, 0, 1})});
}

TEST_CASE("links") {
  const auto tri = complex_of("1 2; 1 3; 2 3");
  const auto l = link(tri, mask({1}));
  CHECK(l.vertex_map == std::vector<std::size_t>{1, 2});
  CHECK(l.complex == complex_of("1; 2"));
  CHECK(link(tri, 0).complex == tri);
  const auto oct = link(complex_of(kOctahedron), mask({1}));
  CHECK(oct.complex.facets().size() == 4);
  CHECK(to_ideal(oct.complex).generators().size() == 2);
  CHECK(is_strongly_connected(oct.complex));
  CHECK(oct.complex.dimension() == 1);
  CHECK(link(tri, mask({1, 2})).complex.dimension() == -1);
  CHECK_THROWS_AS(link(tri, mask({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("reduced cohomology of reference complexes") {
  CHECK(dims(complex_of("1 2; 1 3; 2 3")) == std::vector<std::uint64_t>{0, 1});
  CHECK(dims(complex_of("1 2 3 4")) == std::vector<std::uint64_t>{0, 0, 0, 0});
  CHECK(dims(complex_of(kOctahedron)) == std::vector<std::uint64_t>{0, 0, 1});
  CHECK(dims(complex_of(kRP2)) == std::vector<std::uint64_t>{0, 0, 0});
  CHECK(dims(complex_of(kRP2), Field::prime(2)) == std::vector<std::uint64_t>{0, 1, 1});
  CHECK(dims(complex_of("1; 2; 3")) == std::vector<std::uint64_t>{2});
}

TEST_CASE("property reports") {
  const auto tri = property_report(complex_of("1 2; 1 3; 2 3"), Field::rationals());
  CHECK(tri.pure);
  CHECK(tri.strongly_connected);
  CHECK(tri.cohen_macaulay);
  CHECK_FALSE(tri.acyclic);
  CHECK(tri.negative_a_invariant == false);
  CHECK(tri.leaves.empty());

  const auto path = property_report(complex_of("1 2; 2 3"), Field::rationals());
  CHECK(path.cohen_macaulay);
  CHECK(path.acyclic);
  CHECK(path.leaves == std::vector<std::size_t>{0, 2});
  CHECK(path.negative_a_invariant == true);

  const auto bowtie = property_report(complex_of("1 2 3; 3 4 5"), Field::rationals());
  CHECK(bowtie.pure);
  CHECK_FALSE(bowtie.strongly_connected);
  CHECK_FALSE(bowtie.cohen_macaulay);
  CHECK_FALSE(bowtie.negative_a_invariant.has_value());

  const auto cone = property_report(complex_of("1 2 3; 1 3 4; 1 4 5"), Field::prime(3));
  CHECK(cone.cone_points == std::vector<std::size_t>{0});
  CHECK(cone.acyclic);
}

TEST_CASE("the real projective plane separates QQ from GF(2)") {
  const auto rp2 = complex_of(kRP2);
  CHECK(is_cohen_macaulay(rp2, Field::rationals()));
  CHECK(is_cohen_macaulay(rp2, Field::prime(3)));
  CHECK_FALSE(is_cohen_macaulay(rp2, Field::prime(2)));
  const auto over2 = property_report(rp2, Field::prime(2));
  CHECK(over2.buchsbaum);
  CHECK_FALSE(over2.acyclic);
}

TEST_CASE("free faces") {
  const auto edge = complex_of("1 2");
  CHECK(free_faces(edge) == std::vector<FaceMask>{mask({1}), mask({2})});
  CHECK(free_faces(complex_of(kOctahedron)).empty());
  CHECK(free_faces(complex_of("1 2 3; 2 3 4")).size() == 4);
}

TEST_CASE("input validation") {
  CHECK_THROWS(SimplicialComplex::from_facets(3, std::vector<FaceMask>{}));
  CHECK_THROWS(SimplicialComplex::from_facets(3, std::vector<FaceMask>{0}));
  CHECK_THROWS(SimplicialComplex::from_facets(64, std::vector<FaceMask>{1}));
  CHECK_THROWS(SimplicialComplex::from_facets(2, std::vector<FaceMask>{mask({3})}));
  const auto c = SimplicialComplex::from_facets(3, std::vector<FaceMask>{mask({1, 2}), mask({1}), mask({2, 3})});
  CHECK(c.facets().size() == 2);
  CHECK(c.to_string() == "1 2; 2 3");
}

TEST_CASE("random complexes against brute-force oracles") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  while (checked < 100) {
    std::uniform_int_distribution<std::size_t> size(2, 8);
    const std::size_t n = size(rng);
    const auto facets = oracle::random_facets(rng, n);
    const auto c = SimplicialComplex::from_facets(n, facets);
    ++checked;
    const auto faces = oracle::all_faces(n, facets);

    const auto lib_faces = c.faces();
    CHECK(std::set<FaceMask>(lib_faces.begin(), lib_faces.end()) == faces);
    CHECK(lib_faces.size() == faces.size());
    for (FaceMask s = 0; s < (FaceMask{1} << n); ++s) CHECK(c.contains(s) == (faces.count(s) > 0));

    const auto nonfaces = oracle::minimal_nonfaces(n, faces);
    auto lib_nonfaces = c.minimal_nonfaces();
    std::sort(lib_nonfaces.begin(), lib_nonfaces.end());
    CHECK(lib_nonfaces == nonfaces);
    CHECK(complex_from_squarefree_ideal(to_ideal(c), n) == c);

    const auto fv = c.f_vector();
    for (std::size_t k = 0; k < fv.size(); ++k) {
      const auto count = std::count_if(faces.begin(), faces.end(),
                                       [&](FaceMask f) { return oracle::popcount(f) == static_cast<int>(k + 1); });
      CHECK(fv[k] == static_cast<std::uint64_t>(count));
    }

    for (std::int64_t p : {0, 2, 3}) {
      const Field field = p == 0 ? Field::rationals() : Field::prime(static_cast<std::uint64_t>(p));
      const auto profile = reduced_cohomology(c, field);
      const auto homology = oracle::reduced_homology(faces, p);
      REQUIRE(homology.size() == profile.dims.size() + 1);
      CHECK(profile.h_minus1 == static_cast<std::uint64_t>(homology[0]));
      std::int64_t alternating = 0;
      for (std::size_t i = 0; i < profile.dims.size(); ++i) {
        CHECK(profile.dims[i] == static_cast<std::uint64_t>(homology[i + 1]));
        alternating += (i % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(profile.dims[i]);
      }
      // Euler: sum (-1)^i dim H~^i = -1 + sum (-1)^j f_j
      CHECK(alternating == reduced_euler_characteristic(c));
      CHECK(profile.reduced_euler == reduced_euler_characteristic(c));
      CHECK(profile.dims[0] + 1 == oracle::components(n, faces));

      const auto report = property_report(c, field);
      CHECK(report.cohen_macaulay == oracle::cohen_macaulay(faces, p));
      if (report.strongly_connected) CHECK(report.pure);
      if (report.cohen_macaulay) CHECK(report.buchsbaum);
      if (!report.cone_points.empty()) CHECK(report.acyclic);
      if (c.dimension() == 1) CHECK(report.cohen_macaulay == (report.pure && profile.dims[0] == 0));
      if (c.dimension() == 1) CHECK(report.cohen_macaulay == report.strongly_connected);
    }
  }
}

TEST_CASE("faces by dimension are listed lexicographically") {
  const auto c = complex_of("1 2 3; 2 4");
  const auto levels = c.faces_by_dimension();
  REQUIRE(levels.size() == 4);
  CHECK(levels[0] == std::vector<FaceMask>{0});
  CHECK(levels[1] == std::vector<FaceMask>{mask({1}), mask({2}), mask({3}), mask({4})});
  CHECK(levels[2] == std::vector<FaceMask>{mask({1, 2}), mask({1, 3}), mask({2, 3}), mask({2, 4})});
  CHECK(face_to_string(mask({1, 3})) == "1 3");
  CHECK(face_to_string(0) == "{}");
}
