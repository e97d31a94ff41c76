#include "aho2d/polygauss.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace aho {

double PiRational::to_double() const { return coefficient_.get_d() * std::numbers::pi; }

std::string PiRational::to_string() const {
  if (coefficient_ == 0) return "0";
  if (coefficient_ == 1) return "pi";
  return format_rational(coefficient_) + "*pi";
}

PolyGauss::PolyGauss(Rational alpha) : alpha_(std::move(alpha)) {
  if (alpha_ <= 0) throw std::invalid_argument("Gaussian exponent must be positive");
}

PolyGauss::PolyGauss(Rational alpha, Terms terms) : PolyGauss(std::move(alpha)) {
  for (auto& [e, c] : terms) add_term(e, c);
}

PolyGauss PolyGauss::monomial(Rational alpha, int m, int n, Rational coefficient) {
  PolyGauss f(std::move(alpha));
  f.add_term({m, n}, coefficient);
  return f;
}

Rational PolyGauss::coefficient(int m, int n) const {
  auto it = terms_.find({m, n});
  return it == terms_.end() ? Rational(0) : it->second;
}

int PolyGauss::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.degree());
  return d;
}

void PolyGauss::add_term(const Exponent& e, const Rational& c) {
  if (e.x < 0 || e.y < 0) throw std::invalid_argument("negative monomial exponent");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void PolyGauss::check_alpha(const PolyGauss& rhs) const {
  if (alpha_ != rhs.alpha_) {
    throw std::invalid_argument("cannot add functions with different Gaussian exponents");
  }
}

PolyGauss& PolyGauss::operator+=(const PolyGauss& rhs) {
  check_alpha(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

PolyGauss& PolyGauss::operator-=(const PolyGauss& rhs) {
  check_alpha(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

PolyGauss& PolyGauss::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

PolyGauss PolyGauss::operator-() const {
  PolyGauss result(*this);
  for (auto& [e, c] : result.terms_) c = -c;
  return result;
}

double PolyGauss::evaluate(double x, double y) const {
  double sum = 0.0;
  for (const auto& [e, c] : terms_) sum += c.get_d() * std::pow(x, e.x) * std::pow(y, e.y);
  return sum * std::exp(-alpha_.get_d() * (x * x + y * y));
}

std::string PolyGauss::to_string() const {
  std::ostringstream out;
  out << '(';
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational magnitude = abs(c);
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << '-';
    first = false;
    const bool unit = magnitude == 1 && e.degree() > 0;
    if (!unit) out << format_rational(magnitude);
    auto power = [&](char var, int k) {
      if (k == 0) return;
      if (!unit) out << '*';
      out << var;
      if (k > 1) out << '^' << k;
    };
    power('x', e.x);
    if (unit && e.x > 0 && e.y > 0) out << '*';
    power('y', e.y);
  }
  if (first) out << '0';
  out << ")*exp(-" << format_rational(alpha_) << "*r^2)";
  return out.str();
}

PolyGauss multiply(const PolyGauss& f, const PolyGauss& g) {
  PolyGauss result(f.alpha() + g.alpha());
  for (const auto& [ef, cf] : f.terms()) {
    for (const auto& [eg, cg] : g.terms()) {
      result.add_term({ef.x + eg.x, ef.y + eg.y}, cf * cg);
    }
  }
  return result;
}

PolyGauss apply_hamiltonian(const PotentialParams& params, const PolyGauss& f) {
  const Rational& alpha = f.alpha();
  const Rational four_alpha = 4 * alpha;
  const Rational raise = 1 - four_alpha * alpha;
  const Rational la = params.lambda * params.a;
  const Rational lb = params.lambda * params.b;
  const Rational lc = 2 * params.lambda * params.c;

  PolyGauss result(alpha);
  Rational scratch;
  for (const auto& [e, c] : f.terms()) {
    const int m = e.x;
    const int n = e.y;
    // -d²/dx² (x^m e^{-αr²}) = [-m(m-1)x^{m-2} + 2α(2m+1)x^m - 4α²x^{m+2}] e^{-αr²}
    if (m >= 2) result.add_term({m - 2, n}, Rational(-m * (m - 1)) * c);
    if (n >= 2) result.add_term({m, n - 2}, Rational(-n * (n - 1)) * c);
    scratch = four_alpha * (m + n + 1);
    result.add_term(e, scratch * c);
    if (raise != 0) {
      scratch = raise * c;
      result.add_term({m + 2, n}, scratch);
      result.add_term({m, n + 2}, scratch);
    }
    if (la != 0) result.add_term({m + 4, n}, la * c);
    if (lb != 0) result.add_term({m, n + 4}, lb * c);
    if (lc != 0) result.add_term({m + 2, n + 2}, lc * c);
  }
  return result;
}

PolyGauss apply_perturbation(const Rational& a, const Rational& b, const Rational& c, const PolyGauss& f) {
  PolyGauss result(f.alpha());
  const Rational two_c = 2 * c;
  for (const auto& [e, coef] : f.terms()) {
    if (a != 0) result.add_term({e.x + 4, e.y}, a * coef);
    if (b != 0) result.add_term({e.x, e.y + 4}, b * coef);
    if (c != 0) result.add_term({e.x + 2, e.y + 2}, two_c * coef);
  }
  return result;
}

Rational gaussian_moment_1d(int m, const Rational& alpha) {
  if (m < 0 || m % 2 != 0) return 0;
  return Rational(double_factorial(m - 1)) / pow(2 * alpha, static_cast<unsigned long>(m / 2));
}

PiRational integrate(const PolyGauss& f) {
  // ∫∫ x^m y^n e^{-α r²} = G(m) G(n) π/α with G the reduced 1D moment.
  const Rational& alpha = f.alpha();
  std::map<int, Rational> cache;
  auto moment = [&](int k) -> const Rational& {
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, gaussian_moment_1d(k, alpha)).first;
    return it->second;
  };
  Rational sum;
  for (const auto& [e, c] : f.terms()) {
    if (e.x % 2 != 0 || e.y % 2 != 0) continue;
    sum += c * moment(e.x) * moment(e.y);
  }
  return PiRational(Rational(sum / alpha));
}

PiRational inner_product(const PolyGauss& f, const PolyGauss& g) { return integrate(multiply(f, g)); }

}  // namespace aho
