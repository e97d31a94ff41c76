#pragma once

#include <vector>

#include "aho2d/bigfloat.hpp"
#include "aho2d/dense.hpp"
#include "aho2d/polygauss.hpp"
#include "aho2d/symcore.hpp"

namespace aho {

/// Which row of a C4v E pair: eo (x even, y odd, Ω = y) or oe (Ω = x).
enum class Partner { EO, OE };

std::string_view to_string(Partner p);

struct KrylovConfig {
  Rational alpha{1};
  int K = 20;
  BigFloat::Precision precision_bits = 512;
  /// Double the precision until the lowest five values settle to 1e-10.
  bool escalate = true;
  BigFloat::Precision max_precision_bits = 4096;
  GroupName group = GroupName::C4v;
  IrrepLabel irrep = IrrepLabel::A1;
  Partner partner = Partner::EO;
  PotentialParams params;
};

struct RRResult {
  IrrepLabel irrep = IrrepLabel::A1;
  Partner partner = Partner::EO;
  Rational lambda;
  std::vector<BigFloat> eigenvalues;  // ascending
  int K_requested = 0;
  int K_used = 0;  // retained directions after rank filtering
  /// |E_i(K) - E_i(K-2)|, empty when K <= 2.
  std::vector<BigFloat> convergence;
  BigFloat::Precision bits_used = 0;
};

/// Ω^S: the lowest polynomial of the irrep times e^{-α r²}.
PolyGauss reference_function(IrrepLabel irrep, GroupName group, const Rational& alpha, Partner partner = Partner::EO);

/// Krylov overlap and Hamiltonian matrices on Ω_k = H^k Ω, exact.
struct KrylovMatrices {
  Matrix<PiRational> S;
  Matrix<PiRational> H;
  /// μ_k = ⟨Ω|H^k Ω⟩ for k < 2K; S_ij = μ_{i+j}, H_ij = μ_{i+j+1}.
  std::vector<PiRational> moments;
};

KrylovMatrices krylov_matrices(const KrylovConfig& config);

/// Throws ScopeError unless λ >= 0, a, b >= 0 and c >= -sqrt(ab).
void require_bounded(const PotentialParams& params);

RRResult rr_eigenvalues(const KrylovConfig& config);

/// One-dimensional p² + x² + g x⁴ in the Krylov space of 1 (even) or x (odd)
/// times e^{-α x²}; same escalation rules as the planar solver.
struct Krylov1DConfig {
  Rational alpha{1};
  int K = 20;
  Rational g;
  bool odd = false;
  BigFloat::Precision precision_bits = 512;
  bool escalate = true;
  BigFloat::Precision max_precision_bits = 4096;
};

std::vector<BigFloat> rr_eigenvalues_1d(const Krylov1DConfig& config);

}  // namespace aho
