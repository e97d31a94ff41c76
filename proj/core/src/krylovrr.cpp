#include "aho2d/krylovrr.hpp"

#include <algorithm>
#include <stdexcept>

#include "aho2d/errors.hpp"

namespace aho {

std::string_view to_string(Partner p) { return p == Partner::EO ? "eo" : "oe"; }

PolyGauss reference_function(IrrepLabel irrep, GroupName group, const Rational& alpha, Partner partner) {
  if (!group_data(group).has_irrep(irrep)) {
    throw std::invalid_argument(std::string(to_string(irrep)) + " is not an irrep of " + std::string(to_string(group)));
  }
  PolyGauss f(alpha);
  if (group == GroupName::C4v) {
    switch (irrep) {
      case IrrepLabel::A1: f.add_term({0, 0}, 1); break;
      case IrrepLabel::B1:
        f.add_term({2, 0}, 1);
        f.add_term({0, 2}, -1);
        break;
      case IrrepLabel::A2:
        f.add_term({1, 3}, 1);
        f.add_term({3, 1}, -1);
        break;
      case IrrepLabel::B2: f.add_term({1, 1}, 1); break;
      case IrrepLabel::E: f.add_term(partner == Partner::EO ? Exponent{0, 1} : Exponent{1, 0}, 1); break;
    }
    return f;
  }
  switch (irrep) {
    case IrrepLabel::A1: f.add_term({0, 0}, 1); break;
    case IrrepLabel::A2: f.add_term({1, 1}, 1); break;
    case IrrepLabel::B1: f.add_term({1, 0}, 1); break;
    default: f.add_term({0, 1}, 1); break;
  }
  return f;
}

void require_bounded(const PotentialParams& p) {
  if (p.lambda < 0) throw ScopeError("lambda < 0: the quartic term is unbounded below");
  if (p.a < 0 || p.b < 0) throw ScopeError("a and b must be non-negative for a potential bounded below");
  if (p.c < 0 && p.c * p.c > p.a * p.b) throw ScopeError("c < -sqrt(ab): the potential is unbounded below along a diagonal");
}

namespace {

void check_config(int k, BigFloat::Precision bits, const Rational& alpha) {
  if (k < 1) throw std::invalid_argument("Krylov dimension K must be at least 1");
  if (bits < 128) throw std::invalid_argument("working precision must be at least 128 bits");
  if (alpha <= 0) throw std::invalid_argument("alpha must be positive");
}

struct Solved {
  RitzSolution ritz;
  BigFloat::Precision bits = 0;
};

RitzSolution solve_at(const std::vector<Rational>& mu, std::size_t k, BigFloat::Precision bits) {
  Matrix<BigFloat> s(k, k, BigFloat(bits));
  Matrix<BigFloat> h(k, k, BigFloat(bits));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      s(i, j) = BigFloat(mu[i + j], bits);
      h(i, j) = BigFloat(mu[i + j + 1], bits);
    }
  }
  const auto tolerance = exp2(-static_cast<long>(bits / 2), bits);
  return generalized_ritz(h, s, tolerance);
}

bool settled(const std::vector<BigFloat>& prev, const std::vector<BigFloat>& next) {
  const std::size_t n = std::min<std::size_t>(5, std::min(prev.size(), next.size()));
  if (n == 0 || std::min<std::size_t>(5, prev.size()) != std::min<std::size_t>(5, next.size())) return false;
  const BigFloat tol(1e-10, next.front().precision());
  for (std::size_t i = 0; i < n; ++i) {
    if (abs(prev[i] - next[i]) >= tol) return false;
  }
  return true;
}

/// Generalized problem on the Hankel moments with precision escalation.
Solved solve_hankel(const std::vector<Rational>& mu, std::size_t k, BigFloat::Precision bits, bool escalate,
                    BigFloat::Precision max_bits) {
  RitzSolution current = solve_at(mu, k, bits);
  if (!escalate) return {std::move(current), bits};
  while (true) {
    const BigFloat::Precision next_bits = bits * 2;
    if (next_bits > std::max(max_bits, bits)) {
      throw NumericalError("Ritz values did not settle to 1e-10 below " + std::to_string(max_bits) + " bits");
    }
    RitzSolution next = solve_at(mu, k, next_bits);
    if (settled(current.values, next.values)) return {std::move(next), next_bits};
    current = std::move(next);
    bits = next_bits;
  }
}

std::vector<Rational> coefficients(const std::vector<PiRational>& v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.coefficient());
  return out;
}

}  // namespace

KrylovMatrices krylov_matrices(const KrylovConfig& config) {
  check_config(config.K, config.precision_bits, config.alpha);
  const auto k = static_cast<std::size_t>(config.K);
  const PolyGauss omega = reference_function(config.irrep, config.group, config.alpha, config.partner);

  // H is symmetric on this class, so ⟨Ω_i|Ω_j⟩ = ⟨Ω|H^{i+j} Ω⟩.
  std::vector<PolyGauss> powers{omega};
  std::vector<PiRational> mu;
  mu.reserve(2 * k);
  for (std::size_t i = 0; i < 2 * k; ++i) {
    if (i > 0) powers.push_back(apply_hamiltonian(config.params, powers.back()));
    mu.push_back(inner_product(omega, powers.back()));
  }
  for (std::size_t i = 0; i < std::min<std::size_t>(k, 3); ++i) {
    for (std::size_t j = 0; j < std::min<std::size_t>(k, 3); ++j) {
      if (inner_product(powers[i], powers[j]) != mu[i + j]) throw std::logic_error("Krylov overlap breaks the Hankel identity");
      if (i + j + 1 < mu.size() && inner_product(powers[i], powers[j + 1]) != mu[i + j + 1]) {
        throw std::logic_error("Krylov Hamiltonian matrix breaks the Hankel identity");
      }
    }
  }

  KrylovMatrices out{Matrix<PiRational>(k, k), Matrix<PiRational>(k, k), std::move(mu)};
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      out.S(i, j) = out.moments[i + j];
      if (i + j + 1 < out.moments.size()) out.H(i, j) = out.moments[i + j + 1];
    }
  }
  // H_{K-1,K-1} = μ_{2K-1} is the last moment, so every entry is filled.
  return out;
}

RRResult rr_eigenvalues(const KrylovConfig& config) {
  require_bounded(config.params);
  const KrylovMatrices m = krylov_matrices(config);
  const auto mu = coefficients(m.moments);
  const auto k = static_cast<std::size_t>(config.K);

  Solved full = solve_hankel(mu, k, config.precision_bits, config.escalate, config.max_precision_bits);
  RRResult out;
  out.irrep = config.irrep;
  out.partner = config.partner;
  out.lambda = config.params.lambda;
  out.K_requested = config.K;
  out.K_used = static_cast<int>(full.ritz.rank);
  out.bits_used = full.bits;
  if (k > 2) {
    const RitzSolution smaller = solve_at(mu, k - 2, full.bits);
    const std::size_t n = std::min(smaller.values.size(), full.ritz.values.size());
    for (std::size_t i = 0; i < n; ++i) out.convergence.push_back(abs(full.ritz.values[i] - smaller.values[i]));
  }
  out.eigenvalues = std::move(full.ritz.values);
  return out;
}

std::vector<BigFloat> rr_eigenvalues_1d(const Krylov1DConfig& config) {
  check_config(config.K, config.precision_bits, config.alpha);
  if (config.g < 0) throw ScopeError("negative quartic coupling is unbounded below");
  const Rational& alpha = config.alpha;
  const Rational lift = 1 - 4 * alpha * alpha;
  // coefficient vector indexed by power of x, times e^{-α x²}
  std::vector<Rational> f(config.odd ? 2 : 1);
  f.back() = 1;
  const std::vector<Rational> omega = f;
  auto apply = [&](const std::vector<Rational>& v) {
    std::vector<Rational> out(v.size() + 4);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      const auto m = static_cast<long>(i);
      if (m >= 2) out[i - 2] -= m * (m - 1) * v[i];
      out[i] += 2 * alpha * (2 * m + 1) * v[i];
      out[i + 2] += lift * v[i];
      out[i + 4] += config.g * v[i];
    }
    return out;
  };
  auto overlap = [&](const std::vector<Rational>& u, const std::vector<Rational>& v) {
    Rational sum;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i] == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] != 0 && (i + j) % 2 == 0) sum += u[i] * v[j] * gaussian_moment_1d(static_cast<int>(i + j), 2 * alpha);
      }
    }
    return sum;
  };
  const auto k = static_cast<std::size_t>(config.K);
  std::vector<Rational> mu;
  for (std::size_t i = 0; i < 2 * k; ++i) {
    if (i > 0) f = apply(f);
    mu.push_back(overlap(omega, f));
  }
  return solve_hankel(mu, k, config.precision_bits, config.escalate, config.max_precision_bits).ritz.values;
}

}  // namespace aho
