#pragma once

#include <map>
#include <set>
#include <string>

#include "aho2d/quadratic.hpp"
#include "aho2d/rational.hpp"

namespace aho {

/// Polynomial with rational coefficients in named unknowns.
class SymbolicScalar {
 public:
  /// Variable name -> positive exponent.
  using Monomial = std::map<std::string, int>;
  using Terms = std::map<Monomial, Rational>;

  SymbolicScalar() = default;
  SymbolicScalar(Rational value);  // NOLINT(google-explicit-constructor)
  SymbolicScalar(long value) : SymbolicScalar(Rational(value)) {}  // NOLINT(google-explicit-constructor)

  static SymbolicScalar variable(const std::string& name);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Throws std::logic_error if unknowns remain.
  Rational constant() const;

  std::set<std::string> variables() const;
  int degree(const std::string& name) const;
  /// Coefficient of name^k, as a polynomial in the other unknowns.
  SymbolicScalar coefficient(const std::string& name, int k) const;
  SymbolicScalar substitute(const std::string& name, const Rational& value) const;
  /// All unknowns must be bound.
  QuadraticNumber evaluate(const std::map<std::string, QuadraticNumber>& values) const;

  SymbolicScalar& operator+=(const SymbolicScalar& rhs);
  SymbolicScalar& operator-=(const SymbolicScalar& rhs);
  SymbolicScalar& operator*=(const SymbolicScalar& rhs);
  SymbolicScalar operator-() const;

  friend SymbolicScalar operator+(SymbolicScalar a, const SymbolicScalar& b) { return a += b; }
  friend SymbolicScalar operator-(SymbolicScalar a, const SymbolicScalar& b) { return a -= b; }
  friend SymbolicScalar operator*(SymbolicScalar a, const SymbolicScalar& b) { return a *= b; }
  friend bool operator==(const SymbolicScalar&, const SymbolicScalar&) = default;

  /// E.g. "3/2*u*E1 - 1/4".
  std::string to_string() const;

 private:
  void add(const Monomial& m, const Rational& c);

  Terms terms_;
};

}  // namespace aho
