#include "aho2d/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace aho {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

[[noreturn]] void reject(std::string_view text) {
  throw std::invalid_argument("not an exact rational: '" + std::string(text) + "'");
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) reject(whole);
  Integer value(std::string(s), 10);
  return negative ? Integer(-value) : value;
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    const Integer exp_value = parse_integer(s.substr(e + 1), whole);
    if (!exp_value.fits_slong_p() || abs(exp_value) > 10000) reject(whole);
    exponent = exp_value.get_si();
    s = s.substr(0, e);
  }
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto int_part = s.substr(0, dot);
    const auto frac_part = s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) reject(whole);
    if ((!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      reject(whole);
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) reject(whole);
    digits = std::string(s);
  }
  Rational value{Integer(digits, 10)};
  Integer ten_power;
  mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent >= 0) {
    value *= ten_power;
  } else {
    value /= ten_power;
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) reject(text);

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    const Integer num = parse_integer(s.substr(0, slash), text);
    const Integer den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) reject(text);
    Rational value(num, den);
    value.canonicalize();
    return value;
  }
  return parse_decimal(s, text);
}

std::string format_rational(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Integer double_factorial(long n) {
  Integer result = 1;
  for (long k = n; k > 1; k -= 2) result *= k;
  return result;
}

Rational pow(const Rational& x, unsigned long k) {
  Rational result;
  mpz_pow_ui(result.get_num_mpz_t(), x.get_num_mpz_t(), k);
  mpz_pow_ui(result.get_den_mpz_t(), x.get_den_mpz_t(), k);
  return result;
}

bool is_rational_square(const Rational& value, Rational* root) {
  if (value < 0) return false;
  if (!mpz_perfect_square_p(value.get_num_mpz_t()) ||
      !mpz_perfect_square_p(value.get_den_mpz_t())) {
    return false;
  }
  if (root) {
    Rational r;
    mpz_sqrt(r.get_num_mpz_t(), value.get_num_mpz_t());
    mpz_sqrt(r.get_den_mpz_t(), value.get_den_mpz_t());
    *root = r;
  }
  return true;
}

}  // namespace aho
