#ifndef SRDEGEN_LINALG_HPP
#define SRDEGEN_LINALG_HPP

#include "srdegen/field.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace srdegen::linalg {

/// Row-major dense matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Rank over QQ by fraction-free (Bareiss) elimination.
std::size_t rank(Matrix<mpz_class> m);

/// Rank over GF(p); entries must already lie in [0, p).
std::size_t rank_mod(Matrix<std::uint32_t> m, std::uint32_t p);

/// Rank of a matrix over `field` with entries in that field. Rational rows
/// are scaled to integers and handed to the Bareiss kernel.
std::size_t rank(const Matrix<Scalar>& m, const Field& field);

/// Rank of a signed small-integer matrix over `field` (used for coboundaries).
std::size_t rank(const Matrix<int>& m, const Field& field);

}  // namespace srdegen::linalg

#endif
