#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "aho2d/polygauss.hpp"

namespace aho {

enum class GroupName { C4v, C2v };
enum class IrrepLabel { A1, A2, B1, B2, E };

std::string_view to_string(GroupName g);
std::string_view to_string(IrrepLabel s);
GroupName parse_group(std::string_view text);
IrrepLabel parse_irrep(std::string_view text);

/// Fixed sector order A1, A2, B1, B2, E used wherever output must be deterministic.
inline constexpr std::array<IrrepLabel, 5> kIrrepOrder = {
    IrrepLabel::A1, IrrepLabel::A2, IrrepLabel::B1, IrrepLabel::B2, IrrepLabel::E};

/// Signed coordinate permutation. Acting on a function, (U f)(x, y) = f(M (x, y)).
struct GroupOp {
  std::string name;
  std::array<std::array<int, 2>, 2> matrix{};

  /// Matrix product this·other.
  std::array<std::array<int, 2>, 2> times(const GroupOp& other) const;
};

struct Irrep {
  IrrepLabel label;
  int dimension = 1;
  std::map<std::string, int> characters;

  int character(const std::string& op_name) const;
};

struct GroupData {
  GroupName name;
  std::vector<GroupOp> ops;
  std::vector<Irrep> irreps;

  int order() const { return static_cast<int>(ops.size()); }
  const Irrep& irrep(IrrepLabel label) const;
  bool has_irrep(IrrepLabel label) const;
  const GroupOp& op(std::string_view op_name) const;
};

enum class CaseKind { Case0, Case1, Case2, Case3 };

std::string_view to_string(CaseKind k);

const GroupData& group_data(GroupName name);
/// Accepts "C4v" or "C2v"; anything else is rejected with std::invalid_argument.
const GroupData& group_data(std::string_view name);

PolyGauss apply_op(const GroupOp& op, const PolyGauss& f);

/// Character projector (l_S/h) Σ χ^S(U) U f. For E this projects onto the
/// whole two-dimensional subspace.
PolyGauss project(const Irrep& irrep, const GroupData& group, const PolyGauss& f);

/// Exact comparisons. Precedence: Case0 (c = 0), Case1 (a = b = c), Case2 (a = b), Case3.
CaseKind classify_potential(const Rational& a, const Rational& b, const Rational& c);

/// Point group of H for the given quartic coefficients: C4v when a = b, else C2v.
GroupName symmetry_group(const Rational& a, const Rational& b);

/// Multiplicity of each irrep in the (N+1)-fold degenerate level N.
/// Irreps with zero multiplicity are omitted.
std::map<IrrepLabel, int> expected_irrep_content(int level, GroupName group);

}  // namespace aho
