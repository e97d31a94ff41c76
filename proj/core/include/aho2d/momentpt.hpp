#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aho2d/quadratic.hpp"
#include "aho2d/symbolic.hpp"
#include "aho2d/symcore.hpp"

namespace aho {

/// I⁽ᵖ⁾_{m,n}: order-p coefficient of ⟨x^m y^n e^{-r²/2}|ψ⟩.
struct MomentKey {
  int m = 0;
  int n = 0;
  int p = 0;
  auto operator<=>(const MomentKey&) const = default;
};

enum class Exchange { None, Symmetric, Antisymmetric };

/// Which moments an eigenfunction of a given irrep can have.
struct MomentConstraints {
  int x_parity = 0;  // required m mod 2
  int y_parity = 0;  // required n mod 2
  Exchange exchange = Exchange::None;

  bool admissible(int m, int n) const;
  /// Independent representative of I_{m,n} and the sign relating them;
  /// nullopt when the moment vanishes identically.
  std::optional<std::pair<std::pair<int, int>, int>> reduce(int m, int n) const;
  /// Representatives of the given degree, lexicographic.
  std::vector<std::pair<int, int>> independent_keys(int degree) const;
};

/// For C4v E the constraints describe the eo partner (x even, y odd).
MomentConstraints moment_constraints(IrrepLabel irrep, GroupName group);

struct RowTerm {
  Rational coefficient;
  MomentKey key;
  /// q when the term carries E⁽q⁾, -1 otherwise.
  int energy_order = -1;
};

/// Σ_q E⁽q⁾ I⁽ᵖ⁻q⁾_{m,n} - [H I]⁽ᵖ⁾_{m,n} written as Σ terms = 0 (α = 1/2);
/// terms with negative indices or negative order are dropped.
std::vector<RowTerm> recurrence_row(int m, int n, int p, const Rational& a, const Rational& b, const Rational& c);

struct StateSpec {
  GroupName group = GroupName::C4v;
  IrrepLabel irrep = IrrepLabel::A1;
  int level = 0;
};

class MomentTable {
 public:
  MomentTable(StateSpec state, MomentConstraints constraints) : state_(state), constraints_(constraints) {}

  const StateSpec& state() const { return state_; }
  const MomentConstraints& constraints() const { return constraints_; }
  /// Degree-N keys normalized at order zero: the first is fixed to 1,
  /// the others carry the unknown seed ratios.
  const std::vector<std::pair<int, int>>& seeds() const { return seeds_; }
  const std::map<MomentKey, SymbolicScalar>& entries() const { return entries_; }

  /// Value through the constraints; zero for vanishing or negative keys.
  /// Throws std::logic_error for an independent key that was never solved.
  SymbolicScalar value(const MomentKey& key) const;
  bool has(const MomentKey& key) const;

  void set(const MomentKey& key, SymbolicScalar v);
  void set_seeds(std::vector<std::pair<int, int>> seeds) { seeds_ = std::move(seeds); }

 private:
  StateSpec state_;
  MomentConstraints constraints_;
  std::vector<std::pair<int, int>> seeds_;
  std::map<MomentKey, SymbolicScalar> entries_;
};

struct EnergySeries {
  std::string label;  // jS
  StateSpec state;
  /// E⁽⁰⁾ … E⁽ᴾ⁾; rational except order one of coupled pairs.
  std::vector<QuadraticNumber> coefficients;

  BigFloat partial_sum(const Rational& lambda, BigFloat::Precision bits = 256) const;
};

struct SeriesSolution {
  EnergySeries series;
  MomentTable table;
};

/// Number of states of the irrep in level N (one partner row for E).
int sector_multiplicity(const StateSpec& state);

/// Order-by-order series for a state alone in its sector. Coupled sectors
/// are refused with ScopeError.
SeriesSolution solve_series(const StateSpec& state, const Rational& a, const Rational& b, const Rational& c, int max_order);

/// Degree-N consistency rows at order one with the seed ratios and E1 kept
/// as unknowns. Works for any sector size; nothing is solved.
struct OrderOneSystem {
  StateSpec state;
  std::vector<std::string> seed_unknowns;  // one per seed after the first
  std::vector<SymbolicScalar> rows;        // each row = 0
  MomentTable table;
};

OrderOneSystem order_one_system(const StateSpec& state, const Rational& a, const Rational& b, const Rational& c);

struct CoupledRoot {
  QuadraticNumber e1;
  /// Ratio of the second seed moment to the first; empty when the first vanishes.
  std::optional<QuadraticNumber> seed_ratio;
};

/// First-order energies of a two-state sector from the quadratic obtained
/// by eliminating the seed ratio; ascending.
std::array<CoupledRoot, 2> coupled_first_order(const StateSpec& state, const Rational& a, const Rational& b, const Rational& c);

/// Locates jS among the levels of (a, b, c): level, irrep, and position in
/// the sector counted in ascending first-order energy.
struct ResolvedState {
  StateSpec state;
  int index_in_sector = 0;
  int multiplicity = 0;
};

ResolvedState resolve_state(std::string_view label, const Rational& a, const Rational& b, const Rational& c);

}  // namespace aho
