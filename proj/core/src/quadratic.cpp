#include "aho2d/quadratic.hpp"

#include <stdexcept>

namespace aho {

namespace {

constexpr unsigned long kTrialBound = 2000;

/// Splits r = s²·t with the square part s collected over primes up to kTrialBound.
Integer extract_square(Integer& r) {
  Integer s = 1;
  for (unsigned long p = 2; p <= kTrialBound; p += (p == 2 ? 1 : 2)) {
    const unsigned long pp = p * p;
    if (r < pp) break;
    while (mpz_divisible_ui_p(r.get_mpz_t(), pp)) {
      mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), pp);
      s *= p;
    }
  }
  return s;
}

}  // namespace

QuadraticNumber::QuadraticNumber(Rational p, Rational q, const Rational& r) : p_(std::move(p)), q_(std::move(q)) {
  if (r < 0) throw std::domain_error("negative radicand");
  canonicalize(r);
}

void QuadraticNumber::canonicalize(const Rational& r) {
  if (q_ == 0 || r == 0) {
    q_ = 0;
    r_ = 0;
    return;
  }
  Rational root;
  if (is_rational_square(r, &root)) {
    p_ += q_ * root;
    q_ = 0;
    r_ = 0;
    return;
  }
  // √(u/v) = √(uv)/v
  Integer rad = r.get_num() * r.get_den();
  q_ /= r.get_den();
  const Integer s = extract_square(rad);
  q_ *= s;
  if (mpz_perfect_square_p(rad.get_mpz_t())) {
    Integer t;
    mpz_sqrt(t.get_mpz_t(), rad.get_mpz_t());
    p_ += q_ * t;
    q_ = 0;
    r_ = 0;
    return;
  }
  r_ = rad;
}

Rational QuadraticNumber::surd_in_my_basis(const QuadraticNumber& rhs) const {
  if (rhs.q_ == 0) return 0;
  if (rhs.r_ == r_) return rhs.q_;
  if (q_ == 0) throw std::logic_error("surd_in_my_basis needs a radicand");
  // q'√r' = (q'·√(r'/r))·√r when r'/r is a rational square.
  Rational root;
  Rational ratio(rhs.r_, r_);
  ratio.canonicalize();
  if (!is_rational_square(ratio, &root)) {
    throw std::domain_error("incompatible radicands sqrt(" + r_.get_str() + ") and sqrt(" + rhs.r_.get_str() + ")");
  }
  return rhs.q_ * root;
}

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& rhs) {
  p_ += rhs.p_;
  if (rhs.q_ == 0) return *this;
  if (q_ == 0) {
    q_ = rhs.q_;
    r_ = rhs.r_;
    return *this;
  }
  q_ += surd_in_my_basis(rhs);
  if (q_ == 0) r_ = 0;
  return *this;
}

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& rhs) { return *this += -rhs; }

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& rhs) {
  if (rhs.q_ == 0) {
    p_ *= rhs.p_;
    q_ *= rhs.p_;
    if (q_ == 0) r_ = 0;
    return *this;
  }
  if (q_ == 0) {
    const Rational p = p_;
    *this = rhs;
    p_ *= p;
    q_ *= p;
    if (q_ == 0) r_ = 0;
    return *this;
  }
  const Rational q2 = surd_in_my_basis(rhs);
  const Rational p = p_ * rhs.p_ + q_ * q2 * Rational(r_);
  const Rational q = p_ * q2 + rhs.p_ * q_;
  p_ = p;
  q_ = q;
  if (q_ == 0) r_ = 0;
  return *this;
}

QuadraticNumber& QuadraticNumber::operator/=(const QuadraticNumber& rhs) {
  // 1/(p + q√r) = (p - q√r)/(p² - q² r); the denominator is nonzero for an
  // irrational surd unless p = q = 0.
  const Rational norm = rhs.p_ * rhs.p_ - rhs.q_ * rhs.q_ * Rational(rhs.r_);
  if (norm == 0) throw std::domain_error("division by zero");
  *this *= rhs.conjugate();
  p_ /= norm;
  q_ /= norm;
  return *this;
}

QuadraticNumber QuadraticNumber::operator-() const {
  QuadraticNumber result(*this);
  result.p_ = -result.p_;
  result.q_ = -result.q_;
  return result;
}

QuadraticNumber QuadraticNumber::conjugate() const {
  QuadraticNumber result(*this);
  result.q_ = -result.q_;
  return result;
}

bool operator==(const QuadraticNumber& a, const QuadraticNumber& b) {
  if (a.p_ != b.p_) return false;
  if (a.q_ == 0 || b.q_ == 0) return a.q_ == b.q_;
  if (sgn(a.q_) != sgn(b.q_)) return false;
  return a.q_ * a.q_ * Rational(a.r_) == b.q_ * b.q_ * Rational(b.r_);
}

std::strong_ordering operator<=>(const QuadraticNumber& a, const QuadraticNumber& b) {
  if (a == b) return std::strong_ordering::equal;
  // Nonzero algebraic numbers of bounded height; double the precision until
  // the sign of the difference is certain.
  for (BigFloat::Precision bits = 256; bits <= (1 << 16); bits *= 2) {
    const BigFloat diff = a.to_bigfloat(bits) - b.to_bigfloat(bits);
    const BigFloat tolerance = exp2(-static_cast<long>(bits) / 2, bits);
    if (abs(diff) > tolerance) return diff.sign() < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  throw std::runtime_error("cannot order quadratic numbers: difference below 2^-32768");
}

BigFloat QuadraticNumber::to_bigfloat(BigFloat::Precision bits) const {
  BigFloat value(p_, bits);
  if (q_ != 0) value += BigFloat(q_, bits) * sqrt(BigFloat(Rational(r_), bits));
  return value;
}

double QuadraticNumber::to_double() const { return to_bigfloat(128).to_double(); }

std::string QuadraticNumber::to_string() const {
  if (q_ == 0) return format_rational(p_);
  Integer den;
  mpz_lcm(den.get_mpz_t(), p_.get_den_mpz_t(), q_.get_den_mpz_t());
  const Integer pn = p_.get_num() * (den / p_.get_den());
  const Integer qn = q_.get_num() * (den / q_.get_den());
  std::string numerator;
  const std::string root = "sqrt(" + r_.get_str() + ")";
  const Integer qa = abs(qn);
  const std::string surd = qa == 1 ? root : qa.get_str() + "*" + root;
  if (pn == 0) {
    numerator = (qn < 0 ? "-" : "") + surd;
  } else {
    numerator = pn.get_str() + (qn < 0 ? "-" : "+") + surd;
  }
  if (den == 1) return numerator;
  return "(" + numerator + ")/" + den.get_str();
}

std::pair<QuadraticNumber, QuadraticNumber> solve_monic_quadratic(const Rational& b, const Rational& c) {
  const Rational disc = b * b / 4 - c;
  if (disc < 0) throw std::domain_error("complex roots");
  const Rational centre = -b / 2;
  return {QuadraticNumber(centre, -1, disc), QuadraticNumber(centre, 1, disc)};
}

}  // namespace aho
