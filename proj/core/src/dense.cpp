#include "aho2d/dense.hpp"

#include <algorithm>
#include <numeric>

namespace aho {

std::vector<BigFloat> symmetric_eigenvalues(Matrix<BigFloat> a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("symmetric_eigenvalues needs a square matrix");
  if (n == 0) return {};
  const auto bits = a(0, 0).precision();
  const BigFloat zero(bits);
  const BigFloat one(1L, bits);
  const BigFloat eps = exp2(-static_cast<long>(bits) + 8, bits);

  BigFloat norm(bits);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) norm += a(i, j) * a(i, j);
  }
  const BigFloat threshold = eps * eps * norm;

  for (int sweep = 0; sweep < 200; ++sweep) {
    BigFloat off(bits);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
    }
    if (off <= threshold) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a(p, q).is_zero()) continue;
        // Classic rotation: t = sgn(θ)/(|θ| + sqrt(θ² + 1)), θ = (a_qq - a_pp)/(2 a_pq).
        const BigFloat theta = (a(q, q) - a(p, p)) / (BigFloat(2L, bits) * a(p, q));
        BigFloat t = one / (abs(theta) + sqrt(theta * theta + one));
        if (theta.sign() < 0) t = -t;
        const BigFloat c = one / sqrt(t * t + one);
        const BigFloat s = t * c;
        const BigFloat apq = a(p, q);
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = zero;
        a(q, p) = zero;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const BigFloat akp = a(k, p);
          const BigFloat akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(p, k) = a(k, p);
          a(k, q) = s * akp + c * akq;
          a(q, k) = a(k, q);
        }
      }
    }
  }
  std::vector<BigFloat> values;
  values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) values.push_back(a(i, i));
  std::sort(values.begin(), values.end(), [](const BigFloat& x, const BigFloat& y) { return x < y; });
  return values;
}

RitzSolution generalized_ritz(const Matrix<BigFloat>& h, const Matrix<BigFloat>& s, const BigFloat& rank_tolerance) {
  const std::size_t n = s.rows();
  if (s.cols() != n || h.rows() != n || h.cols() != n) throw std::invalid_argument("generalized_ritz: shape mismatch");
  if (n == 0) return {};
  const auto bits = std::max(s(0, 0).precision(), h(0, 0).precision());

  std::vector<BigFloat> scale(n, BigFloat(bits));
  for (std::size_t i = 0; i < n; ++i) {
    if (s(i, i).sign() <= 0) throw std::domain_error("overlap matrix has a non-positive diagonal");
    scale[i] = BigFloat(1L, bits) / sqrt(s(i, i));
  }
  Matrix<BigFloat> ss(n, n, BigFloat(bits));
  Matrix<BigFloat> hs(n, n, BigFloat(bits));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ss(i, j) = s(i, j) * scale[i] * scale[j];
      hs(i, j) = h(i, j) * scale[i] * scale[j];
    }
  }

  // Pivoted Cholesky: work holds the Schur complement, l the factor columns.
  Matrix<BigFloat> work = ss;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Matrix<BigFloat> l(n, n, BigFloat(bits));
  std::size_t rank = 0;
  for (; rank < n; ++rank) {
    std::size_t best = rank;
    for (std::size_t i = rank + 1; i < n; ++i) {
      if (work(perm[i], perm[i]) > work(perm[best], perm[best])) best = i;
    }
    if (!(work(perm[best], perm[best]) > rank_tolerance)) break;
    std::swap(perm[rank], perm[best]);
    const std::size_t pk = perm[rank];
    const BigFloat pivot = sqrt(work(pk, pk));
    l(pk, rank) = pivot;
    for (std::size_t i = rank + 1; i < n; ++i) {
      const std::size_t pi = perm[i];
      l(pi, rank) = work(pi, pk) / pivot;
    }
    for (std::size_t i = rank + 1; i < n; ++i) {
      const std::size_t pi = perm[i];
      for (std::size_t j = rank + 1; j < n; ++j) {
        const std::size_t pj = perm[j];
        work(pi, pj) -= l(pi, rank) * l(pj, rank);
      }
    }
  }
  if (rank == 0) throw std::domain_error("overlap matrix is numerically zero");

  // Restricted to the pivoted vectors, S_r = L1 L1^T with L1 lower
  // triangular in pivot order; form A = L1^{-1} H_r L1^{-T}.
  Matrix<BigFloat> l1(rank, rank, BigFloat(bits));
  Matrix<BigFloat> hr(rank, rank, BigFloat(bits));
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = 0; j <= i; ++j) l1(i, j) = l(perm[i], j);
    for (std::size_t j = 0; j < rank; ++j) hr(i, j) = hs(perm[i], perm[j]);
  }
  auto forward = [&](Matrix<BigFloat>& m) {
    // m <- L1^{-1} m, column by column.
    for (std::size_t col = 0; col < m.cols(); ++col) {
      for (std::size_t i = 0; i < rank; ++i) {
        BigFloat acc = m(i, col);
        for (std::size_t k = 0; k < i; ++k) acc -= l1(i, k) * m(k, col);
        m(i, col) = acc / l1(i, i);
      }
    }
  };
  forward(hr);
  Matrix<BigFloat> ht(rank, rank, BigFloat(bits));
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = 0; j < rank; ++j) ht(i, j) = hr(j, i);
  }
  forward(ht);
  Matrix<BigFloat> a(rank, rank, BigFloat(bits));
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = 0; j < rank; ++j) {
      a(i, j) = (ht(i, j) + ht(j, i)) / BigFloat(2L, bits);
    }
  }
  return {symmetric_eigenvalues(std::move(a)), rank};
}

std::vector<Rational> characteristic_polynomial(const Matrix<Rational>& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("characteristic_polynomial needs a square matrix");
  // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k)/k.
  std::vector<Rational> coeffs(n + 1);
  coeffs[n] = 1;
  Matrix<Rational> mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<Rational> next(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational acc;
        for (std::size_t t = 0; t < n; ++t) acc += m(i, t) * mk(t, j);
        if (i == j) acc += coeffs[n - k + 1];
        next(i, j) = acc;
      }
    }
    mk = std::move(next);
    Rational trace;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t t = 0; t < n; ++t) trace += m(i, t) * mk(t, i);
    }
    coeffs[n - k] = -trace / static_cast<long>(k);
  }
  return coeffs;
}

}  // namespace aho
