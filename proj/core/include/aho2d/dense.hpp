#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "aho2d/bigfloat.hpp"
#include "aho2d/rational.hpp"

namespace aho {

/// Row-major dense matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Leading k×k block.
  Matrix leading(std::size_t k) const {
    if (k > rows_ || k > cols_) throw std::out_of_range("leading block larger than matrix");
    Matrix out(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) out(i, j) = (*this)(i, j);
    }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations,
/// ascending. Works at the precision of the entries.
std::vector<BigFloat> symmetric_eigenvalues(Matrix<BigFloat> a);

struct RitzSolution {
  std::vector<BigFloat> values;  // ascending
  std::size_t rank = 0;          // retained basis directions
};

/// Solves H v = E S v for symmetric H and positive semidefinite S.
///
/// S is diagonally scaled to unit diagonal and factored by Cholesky with
/// complete (diagonal) pivoting; elimination stops once the largest
/// remaining pivot drops below `rank_tolerance`, and the problem is
/// restricted to the pivoted basis vectors.
RitzSolution generalized_ritz(const Matrix<BigFloat>& h, const Matrix<BigFloat>& s, const BigFloat& rank_tolerance);

/// Monic characteristic polynomial det(x I - M) by Faddeev-LeVerrier;
/// coefficient k multiplies x^k, the last entry is 1.
std::vector<Rational> characteristic_polynomial(const Matrix<Rational>& m);

}  // namespace aho
