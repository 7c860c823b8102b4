#include "srdegen/linalg.hpp"

namespace srdegen::linalg {

namespace {

std::uint64_t inverse_mod(std::uint64_t a, std::uint32_t p) {
  std::uint64_t result = 1;
  std::uint64_t exp = p - 2;
  while (exp > 0) {
    if (exp & 1) result = result * a % p;
    a = a * a % p;
    exp >>= 1;
  }
  return result;
}

}  // namespace

std::size_t rank(Matrix<mpz_class> m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  mpz_class previous = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && sgn(m(pivot, c)) == 0) ++pivot;
    if (pivot == rows) continue;
    m.swap_rows(r, pivot);
    const mpz_class& p = m(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const mpz_class factor = m(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class value = p * m(i, j) - factor * m(r, j);
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
        m(i, j) = std::move(value);
      }
      m(i, c) = 0;
    }
    previous = m(r, c);
    ++r;
  }
  return r;
}

std::size_t rank_mod(Matrix<std::uint32_t> m, std::uint32_t p) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    m.swap_rows(r, pivot);
    const std::uint64_t pinv = inverse_mod(m(r, c), p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m(i, c) == 0) continue;
      const std::uint64_t factor = m(i, c) * pinv % p;
      for (std::size_t j = c; j < cols; ++j) {
        const std::uint64_t sub = factor * m(r, j) % p;
        m(i, j) = static_cast<std::uint32_t>((m(i, j) + p - sub) % p);
      }
    }
    ++r;
  }
  return r;
}

std::size_t rank(const Matrix<Scalar>& m, const Field& field) {
  if (field.is_rational()) {
    Matrix<mpz_class> ints(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      mpz_class row_lcm = 1;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (m(i, j).field() != field) throw FieldMismatch("matrix entry outside " + field.to_string());
        mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(i, j).rational().get_den_mpz_t());
      }
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const mpq_class& q = m(i, j).rational();
        ints(i, j) = q.get_num() * (row_lcm / q.get_den());
      }
    }
    return rank(std::move(ints));
  }
  Matrix<std::uint32_t> residues(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).field() != field) throw FieldMismatch("matrix entry outside " + field.to_string());
      residues(i, j) = m(i, j).residue();
    }
  }
  return rank_mod(std::move(residues), field.modulus());
}

std::size_t rank(const Matrix<int>& m, const Field& field) {
  if (field.is_rational()) {
    Matrix<mpz_class> ints(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) ints(i, j) = m(i, j);
    }
    return rank(std::move(ints));
  }
  const std::uint32_t p = field.modulus();
  Matrix<std::uint32_t> residues(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const long long v = m(i, j) % static_cast<long long>(p);
      residues(i, j) = static_cast<std::uint32_t>(v < 0 ? v + p : v);
    }
  }
  return rank_mod(std::move(residues), p);
}

}  // namespace srdegen::linalg
