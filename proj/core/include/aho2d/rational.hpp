#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace aho {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses an exact rational from "p/q", an integer, or a finite decimal
/// such as "-0.05" or "1.25e-3". Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& value);

/// n!! with the conventions 0!! = (-1)!! = 1.
Integer double_factorial(long n);

/// x^k for k >= 0.
Rational pow(const Rational& x, unsigned long k);

/// True when value = root^2 for some rational root >= 0.
bool is_rational_square(const Rational& value, Rational* root = nullptr);

}  // namespace aho
