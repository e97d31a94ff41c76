#include "aho2d/spectrumpt.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace aho {

namespace {

const Rational kHalf(1, 2);

PolyGauss hermite_product(int m, int n) {
  const auto hx = hermite_coefficients(m);
  const auto hy = hermite_coefficients(n);
  PolyGauss f(kHalf);
  for (std::size_t i = 0; i < hx.size(); ++i) {
    if (hx[i] == 0) continue;
    for (std::size_t j = 0; j < hy.size(); ++j) {
      if (hy[j] == 0) continue;
      f.add_term({static_cast<int>(i), static_cast<int>(j)}, Rational(hx[i] * hy[j]));
    }
  }
  return f;
}

IrrepLabel c2v_irrep(int m, int n) {
  const bool ox = m % 2 != 0;
  const bool oy = n % 2 != 0;
  if (!ox && !oy) return IrrepLabel::A1;
  if (ox && oy) return IrrepLabel::A2;
  return ox ? IrrepLabel::B1 : IrrepLabel::B2;
}

SymAdaptedState plain_state(IrrepLabel irrep, StateKind kind, int m, int n) {
  HOState h = ho_state(m, n);
  return {irrep, kind, m, n, std::move(h.representation), h.norm_sq, QuadraticNumber(1)};
}

SymAdaptedState combined_state(IrrepLabel irrep, StateKind kind, int m, int n) {
  PolyGauss rep = hermite_product(m, n);
  if (kind == StateKind::Plus) {
    rep += hermite_product(n, m);
  } else {
    rep -= hermite_product(n, m);
  }
  const PiRational norm = inner_product(rep, rep);
  // √(2-δ)/2 for φ⁺, 1/√2 for φ⁻.
  const QuadraticNumber factor = kind == StateKind::Plus
                                     ? QuadraticNumber::surd(Rational(1, 2), Rational(m == n ? 1 : 2))
                                     : QuadraticNumber::surd(1, Rational(1, 2));
  return {irrep, kind, m, n, std::move(rep), norm, factor};
}

void push(std::vector<Sector>& sectors, IrrepLabel irrep, SymAdaptedState state) {
  for (auto& s : sectors) {
    if (s.irrep == irrep) {
      s.states.push_back(std::move(state));
      return;
    }
  }
  sectors.push_back({irrep, {std::move(state)}, {}});
}

void sort_sectors(std::vector<Sector>& sectors) {
  auto rank = [](IrrepLabel s) {
    return std::find(kIrrepOrder.begin(), kIrrepOrder.end(), s) - kIrrepOrder.begin();
  };
  std::sort(sectors.begin(), sectors.end(), [&](const Sector& x, const Sector& y) { return rank(x.irrep) < rank(y.irrep); });
}

/// Raw matrix elements <rep_i|H'|rep_j> / π and norms / π.
struct RawSector {
  Matrix<Rational> elements;
  std::vector<Rational> norms;
};

RawSector raw_elements(const std::vector<SymAdaptedState>& states, const Rational& a, const Rational& b, const Rational& c) {
  if (states.empty()) return {};
  const IrrepLabel irrep = states.front().irrep;
  const StateKind partner = states.front().kind;
  for (const auto& s : states) {
    if (s.irrep != irrep) throw std::invalid_argument("perturbation_matrix: states from different irreps");
    const bool e_row = s.kind == StateKind::PartnerEO || s.kind == StateKind::PartnerOE;
    if (e_row && s.kind != partner) throw std::invalid_argument("perturbation_matrix: mixes both E partner rows");
  }
  const std::size_t n = states.size();
  RawSector raw{Matrix<Rational>(n, n), std::vector<Rational>(n)};
  std::vector<PolyGauss> images;
  images.reserve(n);
  for (const auto& s : states) images.push_back(apply_perturbation(a, b, c, s.representation));
  for (std::size_t i = 0; i < n; ++i) {
    raw.norms[i] = states[i].norm_sq.coefficient();
    for (std::size_t j = i; j < n; ++j) {
      raw.elements(i, j) = inner_product(states[i].representation, images[j]).coefficient();
      raw.elements(j, i) = raw.elements(i, j);
    }
  }
  return raw;
}

}  // namespace

std::vector<Integer> hermite_coefficients(int n) {
  if (n < 0) throw std::invalid_argument("Hermite degree must be non-negative");
  std::vector<Integer> prev{1};
  if (n == 0) return prev;
  std::vector<Integer> cur{0, 2};
  for (int k = 1; k < n; ++k) {
    // H_{k+1} = 2x H_k - 2k H_{k-1}
    std::vector<Integer> next(static_cast<std::size_t>(k) + 2, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2 * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= 2 * k * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

HOState ho_state(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("ho_state: negative quantum number");
  // ∫ H_k² e^{-q²} dq = 2^k k! √π
  Integer norm = 1;
  for (int k = 1; k <= m; ++k) norm *= 2 * k;
  for (int k = 1; k <= n; ++k) norm *= 2 * k;
  return {m, n, hermite_product(m, n), PiRational(Rational(norm))};
}

std::string_view to_string(StateKind k) {
  switch (k) {
    case StateKind::Plain: return "plain";
    case StateKind::Plus: return "plus";
    case StateKind::Minus: return "minus";
    case StateKind::PartnerEO: return "eo";
    case StateKind::PartnerOE: return "oe";
  }
  return "?";
}

std::string SymAdaptedState::name() const {
  std::string base = "phi(" + std::to_string(m) + "," + std::to_string(n) + ")";
  if (kind == StateKind::Plus) return base + "+";
  if (kind == StateKind::Minus) return base + "-";
  return base;
}

const Sector* DegenerateBlock::find(IrrepLabel s) const {
  for (const auto& sec : sectors) {
    if (sec.irrep == s) return &sec;
  }
  return nullptr;
}

const Sector& DegenerateBlock::sector(IrrepLabel s) const {
  if (const Sector* p = find(s)) return *p;
  throw std::invalid_argument("level " + std::to_string(level) + " has no " + std::string(to_string(s)) + " states");
}

DegenerateBlock degenerate_block(int level, GroupName group) {
  if (level < 0) throw std::invalid_argument("level index must be non-negative");
  DegenerateBlock block{level, group, {}};
  if (group == GroupName::C2v) {
    for (int m = 0; m <= level; ++m) {
      push(block.sectors, c2v_irrep(m, level - m), plain_state(c2v_irrep(m, level - m), StateKind::Plain, m, level - m));
    }
  } else if (level % 2 != 0) {
    Sector e{IrrepLabel::E, {}, {}};
    for (int m = level; m >= 0; --m) {
      const int n = level - m;
      if (m % 2 == 0) continue;
      // oe row: x odd, y even; eo row holds the σd1 images.
      e.partners.push_back(plain_state(IrrepLabel::E, StateKind::PartnerOE, m, n));
      e.states.push_back(plain_state(IrrepLabel::E, StateKind::PartnerEO, n, m));
    }
    block.sectors.push_back(std::move(e));
  } else {
    for (int m = level; 2 * m >= level; --m) {
      const int n = level - m;
      const bool odd = m % 2 != 0;
      push(block.sectors, odd ? IrrepLabel::B2 : IrrepLabel::A1,
           combined_state(odd ? IrrepLabel::B2 : IrrepLabel::A1, StateKind::Plus, m, n));
      if (m != n) {
        push(block.sectors, odd ? IrrepLabel::A2 : IrrepLabel::B1,
             combined_state(odd ? IrrepLabel::A2 : IrrepLabel::B1, StateKind::Minus, m, n));
      }
    }
  }
  sort_sectors(block.sectors);
  return block;
}

Matrix<QuadraticNumber> perturbation_matrix(const std::vector<SymAdaptedState>& states,
                                            const Rational& a, const Rational& b, const Rational& c) {
  const RawSector raw = raw_elements(states, a, b, c);
  const std::size_t n = states.size();
  Matrix<QuadraticNumber> out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        out(i, j) = QuadraticNumber(Rational(raw.elements(i, i) / raw.norms[i]));
      } else {
        out(i, j) = QuadraticNumber::surd(raw.elements(i, j), Rational(1) / (raw.norms[i] * raw.norms[j]));
      }
    }
  }
  return out;
}

namespace {

constexpr BigFloat::Precision kLevelBits = 256;

struct SectorRoot {
  std::optional<QuadraticNumber> exact;
  BigFloat approx;
  std::vector<Rational> characteristic;
};

std::vector<SectorRoot> sector_roots(const std::vector<SymAdaptedState>& states, const Rational& a, const Rational& b,
                                     const Rational& c) {
  const RawSector raw = raw_elements(states, a, b, c);
  const std::size_t n = states.size();
  // Components of the coupling graph.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (raw.elements(i, j) != 0) parent[root(i)] = root(j);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> components;
  for (std::size_t i = 0; i < n; ++i) components[root(i)].push_back(i);

  std::vector<SectorRoot> roots;
  for (const auto& [r, idx] : components) {
    const std::size_t k = idx.size();
    // D^{-1} A is similar to the symmetric normalized matrix and rational.
    Matrix<Rational> m(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) m(i, j) = raw.elements(idx[i], idx[j]) / raw.norms[idx[i]];
    }
    if (k == 1) {
      QuadraticNumber e(m(0, 0));
      roots.push_back({e, e.to_bigfloat(kLevelBits), {}});
    } else if (k == 2) {
      const Rational trace = m(0, 0) + m(1, 1);
      const Rational det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
      auto [lo, hi] = solve_monic_quadratic(-trace, det);
      roots.push_back({lo, lo.to_bigfloat(kLevelBits), {}});
      roots.push_back({hi, hi.to_bigfloat(kLevelBits), {}});
    } else {
      const auto poly = characteristic_polynomial(m);
      Matrix<BigFloat> sym(k, k, BigFloat(kLevelBits));
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          const Rational norm = raw.norms[idx[i]] * raw.norms[idx[j]];
          sym(i, j) = BigFloat(raw.elements(idx[i], idx[j]), kLevelBits) / sqrt(BigFloat(norm, kLevelBits));
        }
      }
      for (auto& v : symmetric_eigenvalues(std::move(sym))) roots.push_back({std::nullopt, std::move(v), poly});
    }
  }
  return roots;
}

}  // namespace

std::vector<FirstOrderLevel> first_order_levels(const Rational& a, const Rational& b, const Rational& c, int nmax) {
  if (nmax < 0) throw std::invalid_argument("nmax must be non-negative");
  const GroupName group = symmetry_group(a, b);
  struct Entry {
    FirstOrderLevel level;
    std::size_t sector_rank;
  };
  std::vector<Entry> entries;
  for (int level = 0; level <= nmax; ++level) {
    const DegenerateBlock block = degenerate_block(level, group);
    for (const auto& sector : block.sectors) {
      const auto rank = static_cast<std::size_t>(std::find(kIrrepOrder.begin(), kIrrepOrder.end(), sector.irrep) - kIrrepOrder.begin());
      for (auto& r : sector_roots(sector.states, a, b, c)) {
        FirstOrderLevel lvl;
        lvl.level = level;
        lvl.irrep = sector.irrep;
        lvl.e0 = 2 * (level + 1);
        lvl.e1 = std::move(r.exact);
        lvl.e1_approx = std::move(r.approx);
        lvl.characteristic = std::move(r.characteristic);
        entries.push_back({std::move(lvl), rank});
      }
    }
  }
  auto less_e1 = [](const FirstOrderLevel& x, const FirstOrderLevel& y) {
    if (x.e1 && y.e1) return *x.e1 < *y.e1;
    return x.e1_approx < y.e1_approx;
  };
  std::stable_sort(entries.begin(), entries.end(), [&](const Entry& x, const Entry& y) {
    if (x.level.level != y.level.level) return x.level.level < y.level.level;
    if (less_e1(x.level, y.level)) return true;
    if (less_e1(y.level, x.level)) return false;
    return x.sector_rank < y.sector_rank;
  });
  std::map<IrrepLabel, int> seen;
  std::vector<FirstOrderLevel> out;
  out.reserve(entries.size());
  for (auto& e : entries) {
    e.level.label = std::to_string(++seen[e.level.irrep]) + std::string(to_string(e.level.irrep));
    out.push_back(std::move(e.level));
  }
  return out;
}

std::vector<LabelMapEntry> label_map(int nmax) {
  static const std::vector<LabelMapEntry> known = {
      {0, "1A1", "(0,0,e)"},
      {1, "1E", "(0,1,mixed),(1,0,mixed)"},
      {2, "1B1", "(0,2,o)"},
      {2, "2A1", "(0,2,e)"},
      {2, "1B2", "(1,1,e)"},
      {3, "2E", "omitted"},
      {3, "3E", "omitted"},
      {4, "3A1", "omitted"},
      {4, "2B1", "omitted"},
      {4, "1A2", "(1,3,o)"},
      {4, "2B2", "(1,3,e)"},
      {4, "4A1", "omitted"},
  };
  std::vector<LabelMapEntry> out;
  std::map<IrrepLabel, int> seen;
  for (const auto& e : known) {
    if (e.level > nmax) break;
    out.push_back(e);
    ++seen[parse_level_label(e.label).second];
  }
  for (int level = 5; level <= nmax; ++level) {
    for (const auto& [irrep, count] : expected_irrep_content(level, GroupName::C4v)) {
      for (int k = 0; k < count; ++k) {
        out.push_back({level, std::to_string(++seen[irrep]) + std::string(to_string(irrep)), ""});
      }
    }
  }
  return out;
}

std::pair<int, IrrepLabel> parse_level_label(std::string_view label) {
  std::size_t pos = 0;
  while (pos < label.size() && label[pos] >= '0' && label[pos] <= '9') ++pos;
  if (pos == 0 || pos == label.size()) throw std::invalid_argument("malformed level label '" + std::string(label) + "'");
  const int j = std::stoi(std::string(label.substr(0, pos)));
  if (j < 1) throw std::invalid_argument("malformed level label '" + std::string(label) + "'");
  return {j, parse_irrep(label.substr(pos))};
}

}  // namespace aho
