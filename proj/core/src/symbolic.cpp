#include "aho2d/symbolic.hpp"

#include <stdexcept>

namespace aho {

SymbolicScalar::SymbolicScalar(Rational value) {
  if (value != 0) terms_.emplace(Monomial{}, std::move(value));
}

SymbolicScalar SymbolicScalar::variable(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("unknown needs a name");
  SymbolicScalar s;
  s.terms_.emplace(Monomial{{name, 1}}, Rational(1));
  return s;
}

bool SymbolicScalar::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational SymbolicScalar::constant() const {
  if (!is_constant()) throw std::logic_error("expression still depends on unknowns: " + to_string());
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

std::set<std::string> SymbolicScalar::variables() const {
  std::set<std::string> out;
  for (const auto& [mono, c] : terms_) {
    for (const auto& [name, e] : mono) out.insert(name);
  }
  return out;
}

int SymbolicScalar::degree(const std::string& name) const {
  int d = 0;
  for (const auto& [mono, c] : terms_) {
    if (auto it = mono.find(name); it != mono.end()) d = std::max(d, it->second);
  }
  return d;
}

SymbolicScalar SymbolicScalar::coefficient(const std::string& name, int k) const {
  SymbolicScalar out;
  for (const auto& [mono, c] : terms_) {
    auto it = mono.find(name);
    const int e = it == mono.end() ? 0 : it->second;
    if (e != k) continue;
    Monomial rest = mono;
    rest.erase(name);
    out.add(rest, c);
  }
  return out;
}

SymbolicScalar SymbolicScalar::substitute(const std::string& name, const Rational& value) const {
  SymbolicScalar out;
  for (const auto& [mono, c] : terms_) {
    auto it = mono.find(name);
    if (it == mono.end()) {
      out.add(mono, c);
      continue;
    }
    Monomial rest = mono;
    rest.erase(name);
    out.add(rest, c * pow(value, static_cast<unsigned long>(it->second)));
  }
  return out;
}

QuadraticNumber SymbolicScalar::evaluate(const std::map<std::string, QuadraticNumber>& values) const {
  QuadraticNumber total;
  for (const auto& [mono, c] : terms_) {
    QuadraticNumber term(c);
    for (const auto& [name, e] : mono) {
      auto it = values.find(name);
      if (it == values.end()) throw std::invalid_argument("no value bound for '" + name + "'");
      for (int k = 0; k < e; ++k) term *= it->second;
    }
    total += term;
  }
  return total;
}

void SymbolicScalar::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

SymbolicScalar& SymbolicScalar::operator+=(const SymbolicScalar& rhs) {
  for (const auto& [mono, c] : rhs.terms_) add(mono, c);
  return *this;
}

SymbolicScalar& SymbolicScalar::operator-=(const SymbolicScalar& rhs) {
  for (const auto& [mono, c] : rhs.terms_) add(mono, -c);
  return *this;
}

SymbolicScalar& SymbolicScalar::operator*=(const SymbolicScalar& rhs) {
  SymbolicScalar out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      Monomial m = ma;
      for (const auto& [name, e] : mb) m[name] += e;
      out.add(m, ca * cb);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

SymbolicScalar SymbolicScalar::operator-() const {
  SymbolicScalar out;
  for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, -c);
  return out;
}

std::string SymbolicScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string factors;
    for (const auto& [name, e] : mono) {
      if (!factors.empty()) factors += "*";
      factors += name;
      if (e > 1) factors += "^" + std::to_string(e);
    }
    if (factors.empty()) {
      out += format_rational(mag);
    } else if (mag == 1) {
      out += factors;
    } else {
      out += format_rational(mag) + "*" + factors;
    }
  }
  return out;
}

}  // namespace aho
