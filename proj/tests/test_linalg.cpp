#include <doctest.h>

#include "oracles.hpp"

#include "srdegen/linalg.hpp"

#include <random>

using namespace srdegen;

TEST_CASE("Bareiss rank matches rational elimination") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> entry(-3, 3);
  std::uniform_int_distribution<std::size_t> dim(1, 7);
  for (int k = 0; k < 200; ++k) {
    const std::size_t rows = dim(rng), cols = dim(rng);
    linalg::Matrix<mpz_class> m(rows, cols);
    std::vector<std::vector<mpq_class>> q(rows, std::vector<mpq_class>(cols));
    // low-rank products show up often enough with a sparse factor
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        const long v = (r % 3 == 2) ? entry(rng) * (c % 2) : entry(rng);
        m(r, c) = v;
        q[r][c] = v;
      }
    }
    if (rows >= 2 && k % 4 == 0) {
      for (std::size_t c = 0; c < cols; ++c) {
        m(rows - 1, c) = m(0, c) * 2 - m(1, c);
        q[rows - 1][c] = q[0][c] * 2 - q[1][c];
      }
    }
    CHECK(linalg::rank(m) == oracle::rank_q(q));
  }
}

TEST_CASE("modular rank matches elimination over GF(p)") {
  std::mt19937_64 rng(37);
  for (std::uint32_t p : {2u, 3u, 7u, 101u}) {
    std::uniform_int_distribution<std::uint32_t> entry(0, p - 1);
    for (int k = 0; k < 60; ++k) {
      const std::size_t rows = 1 + k % 6, cols = 1 + (k / 6) % 6;
      linalg::Matrix<std::uint32_t> m(rows, cols);
      std::vector<std::vector<std::int64_t>> o(rows, std::vector<std::int64_t>(cols));
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) o[r][c] = m(r, c) = entry(rng);
      }
      CHECK(linalg::rank_mod(m, p) == oracle::rank_p(o, p));
    }
  }
}

TEST_CASE("rank depends on the field") {
  linalg::Matrix<int> m(2, 2);
  m(0, 0) = 1, m(0, 1) = 1, m(1, 0) = 1, m(1, 1) = -1;
  CHECK(linalg::rank(m, Field::rationals()) == 2);
  CHECK(linalg::rank(m, Field::prime(2)) == 1);
  linalg::Matrix<Scalar> s(1, 2, Scalar::zero(Field::rationals()));
  s(0, 1) = Scalar::from_rational(Field::rationals(), mpq_class(1, 3));
  CHECK(linalg::rank(s, Field::rationals()) == 1);
  CHECK(linalg::rank(linalg::Matrix<mpz_class>(0, 3)) == 0);
}
