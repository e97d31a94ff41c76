#pragma once

#include <compare>
#include <string>

#include "aho2d/bigfloat.hpp"
#include "aho2d/rational.hpp"

namespace aho {

/// Exact p + q·√r with rational p, q and a non-negative integer radicand r.
///
/// Canonical form: r carries no square factor below a small trial bound, and
/// q = r = 0 whenever the surd is rational. Equality is exact for any pair
/// of values; arithmetic between two surds requires a common radicand.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(Rational p) : p_(std::move(p)) {}  // NOLINT(google-explicit-constructor)
  QuadraticNumber(long p) : p_(p) {}                  // NOLINT(google-explicit-constructor)
  QuadraticNumber(Rational p, Rational q, const Rational& r);

  /// q·√r.
  static QuadraticNumber surd(Rational q, const Rational& r) { return {0, std::move(q), r}; }

  const Rational& rational_part() const { return p_; }
  const Rational& surd_coefficient() const { return q_; }
  const Integer& radicand() const { return r_; }
  bool is_rational() const { return q_ == 0; }

  QuadraticNumber& operator+=(const QuadraticNumber& rhs);
  QuadraticNumber& operator-=(const QuadraticNumber& rhs);
  QuadraticNumber& operator*=(const QuadraticNumber& rhs);
  QuadraticNumber& operator/=(const QuadraticNumber& rhs);
  QuadraticNumber operator-() const;

  friend QuadraticNumber operator+(QuadraticNumber a, const QuadraticNumber& b) { return a += b; }
  friend QuadraticNumber operator-(QuadraticNumber a, const QuadraticNumber& b) { return a -= b; }
  friend QuadraticNumber operator*(QuadraticNumber a, const QuadraticNumber& b) { return a *= b; }
  friend QuadraticNumber operator/(QuadraticNumber a, const QuadraticNumber& b) { return a /= b; }

  friend bool operator==(const QuadraticNumber& a, const QuadraticNumber& b);
  /// Exact ordering (equality decided algebraically, sign of a nonzero
  /// difference by adaptive-precision evaluation).
  friend std::strong_ordering operator<=>(const QuadraticNumber& a, const QuadraticNumber& b);

  /// p - q√r.
  QuadraticNumber conjugate() const;

  BigFloat to_bigfloat(BigFloat::Precision bits) const;
  double to_double() const;

  /// "(73-2*sqrt(85))/4", "3/2", "sqrt(3)", "(-sqrt(7))/2".
  std::string to_string() const;

 private:
  void canonicalize(const Rational& r);
  /// Rewrites rhs over this radicand; throws std::domain_error when the
  /// two surds are linearly independent over the rationals.
  Rational surd_in_my_basis(const QuadraticNumber& rhs) const;

  Rational p_;
  Rational q_;
  Integer r_ = 0;
};

/// Roots of x² + b x + c = 0 ordered (smaller, larger); discriminant must be >= 0.
std::pair<QuadraticNumber, QuadraticNumber> solve_monic_quadratic(const Rational& b, const Rational& c);

}  // namespace aho
