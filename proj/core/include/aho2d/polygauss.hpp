#pragma once

#include <compare>
#include <map>
#include <string>

#include "aho2d/rational.hpp"

namespace aho {

/// Exponent pair (m, n) of the monomial x^m y^n.
struct Exponent {
  int x = 0;
  int y = 0;

  int degree() const { return x + y; }
  auto operator<=>(const Exponent&) const = default;
};

/// Exact real number q·π. All Gaussian integrals of PolyGauss functions
/// land in this set.
class PiRational {
 public:
  PiRational() = default;
  explicit PiRational(Rational coefficient) : coefficient_(std::move(coefficient)) {}

  const Rational& coefficient() const { return coefficient_; }
  bool is_zero() const { return coefficient_ == 0; }

  PiRational& operator+=(const PiRational& rhs) { coefficient_ += rhs.coefficient_; return *this; }
  PiRational& operator-=(const PiRational& rhs) { coefficient_ -= rhs.coefficient_; return *this; }
  friend PiRational operator+(PiRational a, const PiRational& b) { return a += b; }
  friend PiRational operator-(PiRational a, const PiRational& b) { return a -= b; }
  friend PiRational operator*(const Rational& s, const PiRational& v) { return PiRational(Rational(s * v.coefficient_)); }
  friend bool operator==(const PiRational& a, const PiRational& b) { return a.coefficient_ == b.coefficient_; }

  /// π cancels in ratios.
  friend Rational operator/(const PiRational& a, const PiRational& b) { return a.coefficient_ / b.coefficient_; }

  double to_double() const;
  std::string to_string() const;

 private:
  Rational coefficient_;
};

/// p(x, y)·exp(-alpha (x² + y²)) with p a finite polynomial over the
/// rationals. Zero coefficients are never stored and alpha > 0.
class PolyGauss {
 public:
  using Terms = std::map<Exponent, Rational>;

  explicit PolyGauss(Rational alpha);
  PolyGauss(Rational alpha, Terms terms);

  static PolyGauss monomial(Rational alpha, int m, int n, Rational coefficient = 1);

  const Rational& alpha() const { return alpha_; }
  const Terms& terms() const { return terms_; }
  Rational coefficient(int m, int n) const;
  /// Highest total degree m + n, or -1 for the zero function.
  int degree() const;
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponent& e, const Rational& c);

  PolyGauss& operator+=(const PolyGauss& rhs);
  PolyGauss& operator-=(const PolyGauss& rhs);
  PolyGauss& operator*=(const Rational& s);
  PolyGauss operator-() const;

  friend PolyGauss operator+(PolyGauss a, const PolyGauss& b) { return a += b; }
  friend PolyGauss operator-(PolyGauss a, const PolyGauss& b) { return a -= b; }
  friend PolyGauss operator*(const Rational& s, PolyGauss f) { return f *= s; }
  friend bool operator==(const PolyGauss& a, const PolyGauss& b) = default;

  /// Evaluates at a point in double precision (used by numeric oracles).
  double evaluate(double x, double y) const;

  /// Human-readable form such as "(3/2*x^2 - y)*exp(-1/2*r^2)".
  std::string to_string() const;

 private:
  void check_alpha(const PolyGauss& rhs) const;

  Rational alpha_;
  Terms terms_;
};

/// Product of polynomial parts; the Gaussian exponents add.
PolyGauss multiply(const PolyGauss& f, const PolyGauss& g);

/// Coefficients of H = p_x² + p_y² + x² + y² + λ(a x⁴ + b y⁴ + 2c x² y²).
struct PotentialParams {
  Rational a;
  Rational b;
  Rational c;
  Rational lambda;
};

/// H f, exact; Gaussian exponent unchanged.
PolyGauss apply_hamiltonian(const PotentialParams& params, const PolyGauss& f);

/// (a x⁴ + b y⁴ + 2c x² y²) f.
PolyGauss apply_perturbation(const Rational& a, const Rational& b, const Rational& c, const PolyGauss& f);

/// Integral over the plane.
PiRational integrate(const PolyGauss& f);

/// <f|g> for real functions.
PiRational inner_product(const PolyGauss& f, const PolyGauss& g);

/// Integral of x^m e^{-alpha x²} over the line divided by sqrt(pi/alpha):
/// (m-1)!!/(2 alpha)^{m/2} for even m, zero for odd m.
Rational gaussian_moment_1d(int m, const Rational& alpha);

}  // namespace aho
