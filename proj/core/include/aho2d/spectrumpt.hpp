#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aho2d/dense.hpp"
#include "aho2d/polygauss.hpp"
#include "aho2d/quadratic.hpp"
#include "aho2d/symcore.hpp"

namespace aho {

/// Unnormalized product of Hermite functions H_m(x) H_n(y) e^{-r²/2}:
/// an eigenfunction of the harmonic part with energy 2(m+n+1).
struct HOState {
  int m = 0;
  int n = 0;
  PolyGauss representation{Rational(1, 2)};
  PiRational norm_sq;
};

HOState ho_state(int m, int n);

/// Physicists' Hermite polynomial coefficients, index = power.
std::vector<Integer> hermite_coefficients(int n);

enum class StateKind { Plain, Plus, Minus, PartnerEO, PartnerOE };

std::string_view to_string(StateKind k);

/// Symmetry-adapted unperturbed state.
///
/// `representation` is the rational combination φ_{m,n} ± φ_{n,m} (Plus /
/// Minus), or the bare product. The conventional normalized function is
/// representation·norm_factor/sqrt(norm of the Hermite product), with
/// norm_factor √(2-δ_mn)/2 for Plus, 1/√2 for Minus, 1 otherwise; the
/// exact norm of `representation` is kept in norm_sq.
struct SymAdaptedState {
  IrrepLabel irrep;
  StateKind kind;
  int m = 0;
  int n = 0;
  PolyGauss representation{Rational(1, 2)};
  PiRational norm_sq;
  QuadraticNumber norm_factor;

  std::string name() const;
};

/// States of one irrep inside one degenerate level. For E, `states` is the
/// eo partner row and `partners` holds the σd1 images (oe row), paired by index.
struct Sector {
  IrrepLabel irrep;
  std::vector<SymAdaptedState> states;
  std::vector<SymAdaptedState> partners;

  /// ν: number of states of one partner row.
  int multiplicity() const { return static_cast<int>(states.size()); }
};

struct DegenerateBlock {
  int level = 0;
  GroupName group = GroupName::C4v;
  std::vector<Sector> sectors;  // kIrrepOrder, empty sectors omitted

  const Sector* find(IrrepLabel s) const;
  const Sector& sector(IrrepLabel s) const;
};

DegenerateBlock degenerate_block(int level, GroupName group);

/// Normalized <i|a x⁴ + b y⁴ + 2c x²y²|j> over states of one irrep; mixed irreps are rejected.
Matrix<QuadraticNumber> perturbation_matrix(const std::vector<SymAdaptedState>& states,
                                            const Rational& a, const Rational& b, const Rational& c);

struct FirstOrderLevel {
  std::string label;  // "jS", e.g. "2E"
  int level = 0;      // N
  IrrepLabel irrep;
  Rational e0;
  /// Exact first-order coefficient when it is a root of a linear or
  /// quadratic factor of the sector's characteristic polynomial.
  std::optional<QuadraticNumber> e1;
  BigFloat e1_approx;
  /// Characteristic polynomial of the coupled component when e1 has no
  /// closed form (low power first, monic).
  std::vector<Rational> characteristic;

  bool closed_form() const { return e1.has_value(); }
};

/// First-order energies for all levels N <= nmax, ordered by E0, then E1,
/// then sector order; labels count appearances of each irrep in that order.
/// The point group follows from (a, b).
std::vector<FirstOrderLevel> first_order_levels(const Rational& a, const Rational& b, const Rational& c, int nmax);

struct LabelMapEntry {
  int level;
  std::string label;
  /// Label used in the earlier inner-product literature, "omitted" where that
  /// work has no such state, empty beyond N = 4.
  std::string literature;
};

/// C4v labels of the tracked states for N <= nmax. Entries up to N = 4
/// follow the established correspondence, E partners listed once.
std::vector<LabelMapEntry> label_map(int nmax);

/// Splits "3A1" into (3, A1).
std::pair<int, IrrepLabel> parse_level_label(std::string_view label);

}  // namespace aho
