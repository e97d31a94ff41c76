#include "aho2d/momentpt.hpp"

#include <algorithm>
#include <stdexcept>

#include "aho2d/errors.hpp"
#include "aho2d/spectrumpt.hpp"

namespace aho {

bool MomentConstraints::admissible(int m, int n) const {
  return m >= 0 && n >= 0 && m % 2 == x_parity && n % 2 == y_parity && !(exchange == Exchange::Antisymmetric && m == n);
}

std::optional<std::pair<std::pair<int, int>, int>> MomentConstraints::reduce(int m, int n) const {
  if (!admissible(m, n)) return std::nullopt;
  if (exchange != Exchange::None && m > n) {
    return std::make_pair(std::make_pair(n, m), exchange == Exchange::Symmetric ? 1 : -1);
  }
  return std::make_pair(std::make_pair(m, n), 1);
}

std::vector<std::pair<int, int>> MomentConstraints::independent_keys(int degree) const {
  std::vector<std::pair<int, int>> out;
  for (int m = 0; m <= degree; ++m) {
    auto r = reduce(m, degree - m);
    if (r && r->first == std::make_pair(m, degree - m)) out.emplace_back(m, degree - m);
  }
  return out;
}

MomentConstraints moment_constraints(IrrepLabel irrep, GroupName group) {
  if (!group_data(group).has_irrep(irrep)) {
    throw std::invalid_argument(std::string(to_string(irrep)) + " is not an irrep of " + std::string(to_string(group)));
  }
  if (group == GroupName::C4v) {
    switch (irrep) {
      case IrrepLabel::A1: return {0, 0, Exchange::Symmetric};
      case IrrepLabel::A2: return {1, 1, Exchange::Antisymmetric};
      case IrrepLabel::B1: return {0, 0, Exchange::Antisymmetric};
      case IrrepLabel::B2: return {1, 1, Exchange::Symmetric};
      case IrrepLabel::E: return {0, 1, Exchange::None};
    }
  }
  switch (irrep) {
    case IrrepLabel::A1: return {0, 0, Exchange::None};
    case IrrepLabel::A2: return {1, 1, Exchange::None};
    case IrrepLabel::B1: return {1, 0, Exchange::None};
    default: return {0, 1, Exchange::None};
  }
}

std::vector<RowTerm> recurrence_row(int m, int n, int p, const Rational& a, const Rational& b, const Rational& c) {
  if (m < 0 || n < 0 || p < 0) throw std::invalid_argument("recurrence_row: negative index");
  std::vector<RowTerm> row;
  for (int q = 0; q <= p; ++q) row.push_back({Rational(1), {m, n, p - q}, q});
  if (m >= 2) row.push_back({Rational(m * (m - 1)), {m - 2, n, p}, -1});
  if (n >= 2) row.push_back({Rational(n * (n - 1)), {m, n - 2, p}, -1});
  row.push_back({Rational(-2 * (m + n + 1)), {m, n, p}, -1});
  if (p >= 1) {
    if (a != 0) row.push_back({Rational(-a), {m + 4, n, p - 1}, -1});
    if (b != 0) row.push_back({Rational(-b), {m, n + 4, p - 1}, -1});
    if (c != 0) row.push_back({Rational(-2 * c), {m + 2, n + 2, p - 1}, -1});
  }
  return row;
}

SymbolicScalar MomentTable::value(const MomentKey& key) const {
  if (key.p < 0) return {};
  auto r = constraints_.reduce(key.m, key.n);
  if (!r) return {};
  auto it = entries_.find({r->first.first, r->first.second, key.p});
  if (it == entries_.end()) {
    throw std::logic_error("moment I(" + std::to_string(key.m) + "," + std::to_string(key.n) + ") at order " +
                           std::to_string(key.p) + " referenced before it was solved");
  }
  return r->second > 0 ? it->second : -it->second;
}

bool MomentTable::has(const MomentKey& key) const {
  auto r = constraints_.reduce(key.m, key.n);
  return !r || entries_.count({r->first.first, r->first.second, key.p}) > 0;
}

void MomentTable::set(const MomentKey& key, SymbolicScalar v) {
  auto r = constraints_.reduce(key.m, key.n);
  if (!r || r->first != std::make_pair(key.m, key.n)) throw std::logic_error("moment key is not an independent representative");
  entries_[key] = std::move(v);
}

BigFloat EnergySeries::partial_sum(const Rational& lambda, BigFloat::Precision bits) const {
  BigFloat total(bits);
  BigFloat power(1L, bits);
  const BigFloat l(lambda, bits);
  for (const auto& e : coefficients) {
    total += e.to_bigfloat(bits) * power;
    power *= l;
  }
  return total;
}

namespace {

void check_group(const StateSpec& state, const Rational& a, const Rational& b) {
  if (state.level < 0) throw std::invalid_argument("level index must be non-negative");
  if (state.group == GroupName::C4v && a != b) throw std::invalid_argument("a != b: the potential has only C2v symmetry");
  if (!group_data(state.group).has_irrep(state.irrep)) {
    throw std::invalid_argument(std::string(to_string(state.irrep)) + " is not an irrep of " + std::string(to_string(state.group)));
  }
}

class Marcher {
 public:
  Marcher(const StateSpec& state, const Rational& a, const Rational& b, const Rational& c)
      : a_(a), b_(b), c_(c), level_(state.level), table_(state, moment_constraints(state.irrep, state.group)) {
    energies_.emplace_back(Rational(2 * (state.level + 1)));
  }

  MomentTable& table() { return table_; }
  std::vector<SymbolicScalar>& energies() { return energies_; }
  int level() const { return level_; }

  /// Row at (m, n, p) as coef·I⁽ᵖ⁾_{m,n} + rest = 0.
  std::pair<SymbolicScalar, SymbolicScalar> split(int m, int n, int p) const {
    SymbolicScalar coef;
    SymbolicScalar rest;
    const MomentKey self{m, n, p};
    for (const auto& t : recurrence_row(m, n, p, a_, b_, c_)) {
      SymbolicScalar factor(t.coefficient);
      if (t.key == self) {
        if (t.energy_order >= 0) factor *= energies_.at(static_cast<std::size_t>(t.energy_order));
        coef += factor;
        continue;
      }
      const SymbolicScalar moment = table_.value(t.key);
      if (moment.is_zero()) continue;
      if (t.energy_order >= 0) {
        if (static_cast<std::size_t>(t.energy_order) >= energies_.size()) {
          throw std::logic_error("row at order " + std::to_string(p) + " needs an unsolved energy");
        }
        factor *= energies_[static_cast<std::size_t>(t.energy_order)];
      }
      rest += factor * moment;
    }
    return {coef, rest};
  }

  void solve(int m, int n, int p) {
    auto [coef, rest] = split(m, n, p);
    const Rational k = coef.constant();
    if (k == 0) throw std::logic_error("recurrence row has no pivot");
    table_.set({m, n, p}, SymbolicScalar(Rational(-1 / k)) * rest);
  }

  void solve_degrees(int from, int to, int p) {
    for (int d = from; d <= to; ++d) {
      for (auto [m, n] : table_.constraints().independent_keys(d)) solve(m, n, p);
    }
  }

  /// Degree-N row, whose own moment drops out.
  SymbolicScalar consistency_row(int m, int n, int p) const {
    auto [coef, rest] = split(m, n, p);
    if (!coef.is_zero()) throw std::logic_error("degree-N row kept a pivot");
    return rest;
  }

 private:
  Rational a_, b_, c_;
  int level_;
  MomentTable table_;
  std::vector<SymbolicScalar> energies_;
};

std::string level_label(const StateSpec& state, const Rational& a, const Rational& b, const Rational& c) {
  if (symmetry_group(a, b) != state.group) return "";
  for (const auto& lvl : first_order_levels(a, b, c, state.level)) {
    if (lvl.level == state.level && lvl.irrep == state.irrep) return lvl.label;
  }
  return "";
}

}  // namespace

int sector_multiplicity(const StateSpec& state) {
  return static_cast<int>(moment_constraints(state.irrep, state.group).independent_keys(state.level).size());
}

SeriesSolution solve_series(const StateSpec& state, const Rational& a, const Rational& b, const Rational& c, int max_order) {
  check_group(state, a, b);
  if (max_order < 0) throw std::invalid_argument("order must be non-negative");
  const int nu = sector_multiplicity(state);
  if (nu != 1) {
    throw ScopeError("the " + std::string(to_string(state.irrep)) + " sector of level " + std::to_string(state.level) + " holds " +
                     std::to_string(nu) + " states but l_S = " + std::to_string(group_data(state.group).irrep(state.irrep).dimension) +
                     " < nu functions fix the seed moments; use the coupled first-order closure");
  }
  Marcher run(state, a, b, c);
  const int n_level = state.level;
  const auto seed = run.table().constraints().independent_keys(n_level).front();
  run.table().set_seeds({seed});
  for (int p = 0; p <= max_order; ++p) {
    run.solve_degrees(0, n_level - 1, p);
    run.table().set({seed.first, seed.second, p}, SymbolicScalar(Rational(p == 0 ? 1 : 0)));
    if (p >= 1) {
      const std::string name = "E" + std::to_string(p);
      run.energies().push_back(SymbolicScalar::variable(name));
      const SymbolicScalar row = run.consistency_row(seed.first, seed.second, p);
      const Rational slope = row.coefficient(name, 1).constant();
      const Rational offset = row.coefficient(name, 0).constant();
      if (slope == 0 || row.degree(name) != 1) throw std::logic_error("energy row does not fix E at order " + std::to_string(p));
      run.energies().back() = SymbolicScalar(Rational(-offset / slope));
    }
    run.solve_degrees(n_level + 1, n_level + 4 * (max_order - p), p);
  }
  EnergySeries series{level_label(state, a, b, c), state, {}};
  for (const auto& e : run.energies()) series.coefficients.emplace_back(e.constant());
  return {std::move(series), std::move(run.table())};
}

OrderOneSystem order_one_system(const StateSpec& state, const Rational& a, const Rational& b, const Rational& c) {
  check_group(state, a, b);
  Marcher run(state, a, b, c);
  const int n_level = state.level;
  const auto keys = run.table().constraints().independent_keys(n_level);
  std::vector<std::string> unknowns;
  for (std::size_t k = 1; k < keys.size(); ++k) unknowns.push_back(keys.size() == 2 ? "u" : "u" + std::to_string(k));
  run.table().set_seeds(keys);

  run.solve_degrees(0, n_level - 1, 0);
  for (std::size_t k = 0; k < keys.size(); ++k) {
    run.table().set({keys[k].first, keys[k].second, 0}, k == 0 ? SymbolicScalar(1) : SymbolicScalar::variable(unknowns[k - 1]));
  }
  run.solve_degrees(n_level + 1, n_level + 4, 0);

  run.energies().push_back(SymbolicScalar::variable("E1"));
  run.solve_degrees(0, n_level - 1, 1);
  std::vector<SymbolicScalar> rows;
  for (auto [m, n] : keys) rows.push_back(run.consistency_row(m, n, 1));
  return {state, std::move(unknowns), std::move(rows), std::move(run.table())};
}

std::array<CoupledRoot, 2> coupled_first_order(const StateSpec& state, const Rational& a, const Rational& b, const Rational& c) {
  check_group(state, a, b);
  const int nu = sector_multiplicity(state);
  if (nu == 1) throw std::invalid_argument("sector holds a single state; use solve_series");
  if (nu > 2) {
    throw ScopeError("sector holds " + std::to_string(nu) + " coupled states; the first-order polynomial system is left unsolved");
  }
  const OrderOneSystem sys = order_one_system(state, a, b, c);
  const std::string& u = sys.seed_unknowns.front();
  std::array<SymbolicScalar, 2> lin;
  std::array<SymbolicScalar, 2> con;
  for (std::size_t k = 0; k < 2; ++k) {
    if (sys.rows[k].degree(u) > 1 || sys.rows[k].degree("E1") > 1) throw std::logic_error("first-order rows are not bilinear");
    con[k] = sys.rows[k].coefficient(u, 0);
    lin[k] = sys.rows[k].coefficient(u, 1);
  }
  const SymbolicScalar resultant = con[0] * lin[1] - con[1] * lin[0];
  if (resultant.degree("E1") != 2) {
    throw AccidentalDegeneracy("first-order rows are dependent: the coupled states stay degenerate at first order");
  }
  const Rational c2 = resultant.coefficient("E1", 2).constant();
  const Rational c1 = resultant.coefficient("E1", 1).constant();
  const Rational c0 = resultant.coefficient("E1", 0).constant();
  const auto [lo, hi] = solve_monic_quadratic(c1 / c2, c0 / c2);

  auto back_substitute = [&](const QuadraticNumber& e) -> CoupledRoot {
    const std::map<std::string, QuadraticNumber> at{{"E1", e}};
    for (std::size_t k = 0; k < 2; ++k) {
      const QuadraticNumber slope = lin[k].evaluate(at);
      if (slope != QuadraticNumber(0)) return {e, -con[k].evaluate(at) / slope};
    }
    if (con[0].evaluate(at) == QuadraticNumber(0) && con[1].evaluate(at) == QuadraticNumber(0)) {
      throw AccidentalDegeneracy("seed ratio undetermined at E1 = " + e.to_string());
    }
    return {e, std::nullopt};
  };
  return {back_substitute(lo), back_substitute(hi)};
}

ResolvedState resolve_state(std::string_view label, const Rational& a, const Rational& b, const Rational& c) {
  const auto [j, irrep] = parse_level_label(label);
  const GroupName group = symmetry_group(a, b);
  if (!group_data(group).has_irrep(irrep)) {
    throw std::invalid_argument(std::string(label) + ": " + std::string(to_string(irrep)) + " does not occur in " +
                                std::string(to_string(group)));
  }
  constexpr int kMaxLevel = 32;
  for (int nmax = 4;; nmax *= 2) {
    const auto levels = first_order_levels(a, b, c, std::min(nmax, kMaxLevel));
    for (const auto& lvl : levels) {
      if (lvl.label != label) continue;
      ResolvedState out{{group, irrep, lvl.level}, 0, 0};
      for (const auto& other : levels) {
        if (other.level != lvl.level || other.irrep != irrep) continue;
        if (&other < &lvl) ++out.index_in_sector;
        ++out.multiplicity;
      }
      return out;
    }
    if (nmax >= kMaxLevel) throw std::invalid_argument(std::string(label) + " lies beyond level " + std::to_string(kMaxLevel));
  }
}

}  // namespace aho
