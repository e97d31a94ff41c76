#include "aho2d/symcore.hpp"

#include <stdexcept>

namespace aho {

std::string_view to_string(GroupName g) { return g == GroupName::C4v ? "C4v" : "C2v"; }

std::string_view to_string(IrrepLabel s) {
  switch (s) {
    case IrrepLabel::A1: return "A1";
    case IrrepLabel::A2: return "A2";
    case IrrepLabel::B1: return "B1";
    case IrrepLabel::B2: return "B2";
    case IrrepLabel::E: return "E";
  }
  return "?";
}

std::string_view to_string(CaseKind k) {
  switch (k) {
    case CaseKind::Case0: return "Case 0";
    case CaseKind::Case1: return "Case 1";
    case CaseKind::Case2: return "Case 2";
    case CaseKind::Case3: return "Case 3";
  }
  return "?";
}

GroupName parse_group(std::string_view text) {
  if (text == "C4v") return GroupName::C4v;
  if (text == "C2v") return GroupName::C2v;
  throw std::invalid_argument("unknown point group '" + std::string(text) + "'");
}

IrrepLabel parse_irrep(std::string_view text) {
  for (IrrepLabel s : kIrrepOrder) {
    if (text == to_string(s)) return s;
  }
  throw std::invalid_argument("unknown irrep '" + std::string(text) + "'");
}

std::array<std::array<int, 2>, 2> GroupOp::times(const GroupOp& other) const {
  std::array<std::array<int, 2>, 2> r{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      r[i][j] = matrix[i][0] * other.matrix[0][j] + matrix[i][1] * other.matrix[1][j];
    }
  }
  return r;
}

int Irrep::character(const std::string& op_name) const {
  auto it = characters.find(op_name);
  if (it == characters.end()) throw std::out_of_range("no character for operation " + op_name);
  return it->second;
}

const Irrep& GroupData::irrep(IrrepLabel label) const {
  for (const auto& s : irreps) {
    if (s.label == label) return s;
  }
  throw std::invalid_argument(std::string(to_string(label)) + " is not an irrep of " +
                              std::string(to_string(name)));
}

bool GroupData::has_irrep(IrrepLabel label) const {
  for (const auto& s : irreps) {
    if (s.label == label) return true;
  }
  return false;
}

const GroupOp& GroupData::op(std::string_view op_name) const {
  for (const auto& u : ops) {
    if (u.name == op_name) return u;
  }
  throw std::invalid_argument("no operation " + std::string(op_name));
}

namespace {

Irrep make_irrep(IrrepLabel label, int dim, const std::vector<GroupOp>& ops, const std::vector<int>& chars) {
  Irrep s{label, dim, {}};
  for (std::size_t i = 0; i < ops.size(); ++i) s.characters[ops[i].name] = chars[i];
  return s;
}

GroupData build_c4v() {
  // Rows of M give the images: (x, y) -> (M00 x + M01 y, M10 x + M11 y).
  std::vector<GroupOp> ops = {
      {"E", {{{1, 0}, {0, 1}}}},
      {"C4", {{{0, 1}, {-1, 0}}}},
      {"C4^3", {{{0, -1}, {1, 0}}}},
      {"C2", {{{-1, 0}, {0, -1}}}},
      {"sigma_v1", {{{1, 0}, {0, -1}}}},
      {"sigma_v2", {{{-1, 0}, {0, 1}}}},
      {"sigma_d1", {{{0, 1}, {1, 0}}}},
      {"sigma_d2", {{{0, -1}, {-1, 0}}}},
  };
  //                         E  C4 C4³ C2 σv1 σv2 σd1 σd2
  std::vector<Irrep> irreps = {
      make_irrep(IrrepLabel::A1, 1, ops, {1, 1, 1, 1, 1, 1, 1, 1}),
      make_irrep(IrrepLabel::A2, 1, ops, {1, 1, 1, 1, -1, -1, -1, -1}),
      make_irrep(IrrepLabel::B1, 1, ops, {1, -1, -1, 1, 1, 1, -1, -1}),
      make_irrep(IrrepLabel::B2, 1, ops, {1, -1, -1, 1, -1, -1, 1, 1}),
      make_irrep(IrrepLabel::E, 2, ops, {2, 0, 0, -2, 0, 0, 0, 0}),
  };
  return {GroupName::C4v, std::move(ops), std::move(irreps)};
}

GroupData build_c2v() {
  std::vector<GroupOp> ops = {
      {"E", {{{1, 0}, {0, 1}}}},
      {"C2", {{{-1, 0}, {0, -1}}}},
      {"sigma_v1", {{{1, 0}, {0, -1}}}},
      {"sigma_v2", {{{-1, 0}, {0, 1}}}},
  };
  // B1 transforms like x, B2 like y.
  std::vector<Irrep> irreps = {
      make_irrep(IrrepLabel::A1, 1, ops, {1, 1, 1, 1}),
      make_irrep(IrrepLabel::A2, 1, ops, {1, 1, -1, -1}),
      make_irrep(IrrepLabel::B1, 1, ops, {1, -1, 1, -1}),
      make_irrep(IrrepLabel::B2, 1, ops, {1, -1, -1, 1}),
  };
  return {GroupName::C2v, std::move(ops), std::move(irreps)};
}

}  // namespace

const GroupData& group_data(GroupName name) {
  static const GroupData c4v = build_c4v();
  static const GroupData c2v = build_c2v();
  return name == GroupName::C4v ? c4v : c2v;
}

const GroupData& group_data(std::string_view name) { return group_data(parse_group(name)); }

PolyGauss apply_op(const GroupOp& op, const PolyGauss& f) {
  // x^m y^n -> (s0 v0)^m (s1 v1)^n where row i of M has its single nonzero
  // entry s_i in column v_i.
  int var[2];
  int sgn[2];
  for (int i = 0; i < 2; ++i) {
    var[i] = op.matrix[i][0] != 0 ? 0 : 1;
    sgn[i] = op.matrix[i][var[i]];
  }
  PolyGauss result(f.alpha());
  for (const auto& [e, c] : f.terms()) {
    int powers[2] = {0, 0};
    powers[var[0]] += e.x;
    powers[var[1]] += e.y;
    const bool negative = (sgn[0] < 0 && e.x % 2 != 0) != (sgn[1] < 0 && e.y % 2 != 0);
    result.add_term({powers[0], powers[1]}, negative ? Rational(-c) : c);
  }
  return result;
}

PolyGauss project(const Irrep& irrep, const GroupData& group, const PolyGauss& f) {
  PolyGauss sum(f.alpha());
  for (const auto& u : group.ops) {
    const int chi = irrep.character(u.name);
    if (chi == 0) continue;
    sum += Rational(chi) * apply_op(u, f);
  }
  sum *= Rational(irrep.dimension) / group.order();
  return sum;
}

CaseKind classify_potential(const Rational& a, const Rational& b, const Rational& c) {
  if (c == 0) return CaseKind::Case0;
  if (a == b && b == c) return CaseKind::Case1;
  if (a == b) return CaseKind::Case2;
  return CaseKind::Case3;
}

GroupName symmetry_group(const Rational& a, const Rational& b) {
  return a == b ? GroupName::C4v : GroupName::C2v;
}

std::map<IrrepLabel, int> expected_irrep_content(int level, GroupName group) {
  if (level < 0) throw std::invalid_argument("level index must be non-negative");
  std::map<IrrepLabel, int> content;
  auto bump = [&](IrrepLabel s, int k) {
    if (k > 0) content[s] += k;
  };
  if (group == GroupName::C2v) {
    // Count products φ_{m,N-m} by the parities of m and N-m.
    for (int m = 0; m <= level; ++m) {
      const bool mx = m % 2 != 0;
      const bool my = (level - m) % 2 != 0;
      if (!mx && !my) bump(IrrepLabel::A1, 1);
      if (mx && my) bump(IrrepLabel::A2, 1);
      if (mx && !my) bump(IrrepLabel::B1, 1);
      if (!mx && my) bump(IrrepLabel::B2, 1);
    }
    return content;
  }
  if (level % 2 != 0) {
    bump(IrrepLabel::E, (level + 1) / 2);
    return content;
  }
  // Unordered pairs {m, n}, m + n = N: unequal pairs give a ± combination,
  // equal pairs only the + one.
  for (int m = level; 2 * m >= level; --m) {
    const int n = level - m;
    const bool odd = m % 2 != 0;
    if (m == n) {
      bump(odd ? IrrepLabel::B2 : IrrepLabel::A1, 1);
    } else {
      bump(odd ? IrrepLabel::B2 : IrrepLabel::A1, 1);
      bump(odd ? IrrepLabel::A2 : IrrepLabel::B1, 1);
    }
  }
  return content;
}

}  // namespace aho
