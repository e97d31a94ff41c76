#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <random>
#include <vector>

#include "aho2d/polygauss.hpp"

namespace aho::testing {

/// Trapezoid rule on [-L, L]²; spectrally accurate for Gaussian-decaying integrands.
inline double quadrature(const PolyGauss& f, double half_width = 9.0, int points = 241) {
  const double h = 2 * half_width / (points - 1);
  double sum = 0;
  for (int i = 0; i < points; ++i) {
    const double x = -half_width + i * h;
    for (int j = 0; j < points; ++j) sum += f.evaluate(x, -half_width + j * h);
  }
  return sum * h * h;
}

/// (-Δ + x² + y² + λ(a x⁴ + b y⁴ + 2c x²y²)) f at a point, by central differences.
inline double hamiltonian_fd(const PotentialParams& p, const PolyGauss& f, double x, double y, double h = 1e-3) {
  const double center = f.evaluate(x, y);
  const double lap = (f.evaluate(x + h, y) + f.evaluate(x - h, y) + f.evaluate(x, y + h) + f.evaluate(x, y - h) - 4 * center) / (h * h);
  const double v = x * x + y * y +
                   p.lambda.get_d() * (p.a.get_d() * std::pow(x, 4) + p.b.get_d() * std::pow(y, 4) + 2 * p.c.get_d() * x * x * y * y);
  return -lap + v * center;
}

/// Lowest eigenvalues of -d²/dx² + x² + g x⁴ restricted to even or odd
/// functions, from second-order finite differences on two grids combined
/// by Richardson extrapolation.
inline std::vector<double> quartic_1d_levels(double g, bool odd, int count, double half_width = 7.0) {
  auto solve = [&](double h) {
    // Half line x = (k + 1/2) h for even, x = k h (k >= 1) for odd, with the
    // symmetric or antisymmetric image supplying the boundary at the origin.
    const int n = static_cast<int>(half_width / h);
    Eigen::VectorXd diag(n);
    Eigen::VectorXd off(n - 1);
    for (int k = 0; k < n; ++k) {
      const double x = odd ? (k + 1) * h : (k + 0.5) * h;
      diag(k) = 2 / (h * h) + x * x + g * std::pow(x, 4);
      if (k + 1 < n) off(k) = -1 / (h * h);
    }
    if (!odd) diag(0) -= 1 / (h * h);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
    std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + count);
    return out;
  };
  const auto coarse = solve(0.01);
  const auto fine = solve(0.005);
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out[i] = (4 * fine[i] - coarse[i]) / 3;
  return out;
}

/// Small random rationals p/q with |p| <= span, 1 <= q <= den.
class RationalSource {
 public:
  explicit RationalSource(unsigned seed) : rng_(seed) {}

  Rational next(int span = 9, int den = 5, bool allow_negative = true) {
    std::uniform_int_distribution<int> num(allow_negative ? -span : 0, span);
    std::uniform_int_distribution<int> d(1, den);
    Rational r(num(rng_), d(rng_));
    r.canonicalize();
    return r;
  }

  Rational nonzero(int span = 9, int den = 5, bool allow_negative = true) {
    Rational r;
    do {
      r = next(span, den, allow_negative);
    } while (r == 0);
    return r;
  }

  /// Random polynomial of total degree <= degree times e^{-alpha r²}.
  PolyGauss poly(const Rational& alpha, int degree, int terms = 5) {
    std::uniform_int_distribution<int> e(0, degree);
    PolyGauss f(alpha);
    for (int t = 0; t < terms; ++t) {
      const int m = e(rng_);
      std::uniform_int_distribution<int> en(0, degree - m);
      f.add_term({m, en(rng_)}, next());
    }
    return f;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace aho::testing
