#pragma once

#include <mpfr.h>

#include <compare>
#include <string>

#include "aho2d/rational.hpp"

namespace aho {

/// Owning wrapper around an mpfr_t. Every value carries its own precision;
/// binary operations produce the larger of the operand precisions and
/// assignment adopts the precision of the source.
class BigFloat {
 public:
  using Precision = mpfr_prec_t;

  BigFloat() : BigFloat(64) {}
  explicit BigFloat(Precision bits);
  BigFloat(long value, Precision bits);
  BigFloat(double value, Precision bits);
  BigFloat(const Rational& value, Precision bits);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  Precision precision() const { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);

  friend BigFloat operator+(BigFloat lhs, const BigFloat& rhs) { return lhs += rhs; }
  friend BigFloat operator-(BigFloat lhs, const BigFloat& rhs) { return lhs -= rhs; }
  friend BigFloat operator*(BigFloat lhs, const BigFloat& rhs) { return lhs *= rhs; }
  friend BigFloat operator/(BigFloat lhs, const BigFloat& rhs) { return lhs /= rhs; }
  BigFloat operator-() const;

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  /// Scientific notation with `digits` significant digits, trailing zeros
  /// of the mantissa removed ("1.5e+00"). Deterministic for equal values.
  std::string to_string(int digits = 30) const;

 private:
  mpfr_t value_;
};

BigFloat sqrt(const BigFloat& x);
BigFloat abs(const BigFloat& x);
BigFloat pi(BigFloat::Precision bits);
/// 2^exponent at the given precision.
BigFloat exp2(long exponent, BigFloat::Precision bits);

}  // namespace aho
