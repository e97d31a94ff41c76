#include <gtest/gtest.h>

#include "aho2d/symcore.hpp"
#include "support/oracles.hpp"

namespace aho {

void PrintTo(GroupName g, std::ostream* os) { *os << to_string(g); }

namespace {

PolyGauss mono(int m, int n, const Rational& c = 1) { return PolyGauss::monomial(1, m, n, c); }

std::vector<PolyGauss> monomials(int max_degree) {
  std::vector<PolyGauss> out;
  for (int d = 0; d <= max_degree; ++d) {
    for (int m = 0; m <= d; ++m) out.push_back(mono(m, d - m));
  }
  return out;
}

TEST(GroupData, Tables) {
  const GroupData& c4v = group_data("C4v");
  EXPECT_EQ(c4v.order(), 8);
  EXPECT_EQ(c4v.irreps.size(), 5U);
  const auto& c4 = c4v.op("C4").matrix;
  // (x, y) -> (y, -x)
  EXPECT_EQ(c4[0], (std::array<int, 2>{0, 1}));
  EXPECT_EQ(c4[1], (std::array<int, 2>{-1, 0}));
  EXPECT_EQ(c4v.irrep(IrrepLabel::E).character("C2"), -2);
  EXPECT_EQ(c4v.irrep(IrrepLabel::E).character("C4"), 0);

  const GroupData& c2v = group_data("C2v");
  EXPECT_EQ(c2v.order(), 4);
  for (const auto& s : c2v.irreps) EXPECT_EQ(s.dimension, 1);
  EXPECT_THROW(group_data("D4h"), std::invalid_argument);
}

TEST(GroupData, StructuralInvariants) {
  for (GroupName name : {GroupName::C4v, GroupName::C2v}) {
    const GroupData& g = group_data(name);
    int dim_sq = 0;
    for (const auto& s : g.irreps) {
      dim_sq += s.dimension * s.dimension;
      EXPECT_EQ(s.character("E"), s.dimension);
      for (const auto& t : g.irreps) {
        int sum = 0;
        for (const auto& op : g.ops) sum += s.character(op.name) * t.character(op.name);
        EXPECT_EQ(sum, s.label == t.label ? g.order() : 0);
      }
    }
    EXPECT_EQ(dim_sq, g.order());
    for (const auto& u : g.ops) {
      int nonzero = 0;
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) nonzero += u.matrix[i][j] != 0;
      }
      EXPECT_EQ(nonzero, 2);
      GroupOp transpose = u;
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) transpose.matrix[i][j] = u.matrix[j][i];
      }
      EXPECT_EQ(transpose.times(u), (std::array<std::array<int, 2>, 2>{{{1, 0}, {0, 1}}}));
      for (const auto& v : g.ops) {
        const auto product = u.times(v);
        const bool closed = std::any_of(g.ops.begin(), g.ops.end(), [&](const GroupOp& w) { return w.matrix == product; });
        EXPECT_TRUE(closed) << u.name << "*" << v.name;
      }
    }
  }
}

TEST(ApplyOp, Examples) {
  const GroupData& g = group_data(GroupName::C4v);
  // Substituting x -> y, y -> -x in x²y gives y²(-x).
  EXPECT_EQ(apply_op(g.op("C4"), mono(2, 1)), mono(1, 2, -1));
  EXPECT_EQ(apply_op(g.op("E"), mono(3, 1, 5)), mono(3, 1, 5));
  EXPECT_EQ(apply_op(g.op("sigma_d1"), mono(1, 0)), mono(0, 1));
}

TEST(ApplyOp, IsAnIsometry) {
  testing::RationalSource src(17);
  for (GroupName name : {GroupName::C4v, GroupName::C2v}) {
    for (int trial = 0; trial < 8; ++trial) {
      const PolyGauss f = src.poly(1, 8, 6);
      const PolyGauss h = src.poly(1, 8, 6);
      for (const auto& u : group_data(name).ops) {
        EXPECT_EQ(inner_product(apply_op(u, f), apply_op(u, h)), inner_product(f, h));
      }
    }
  }
}

TEST(Project, Examples) {
  const GroupData& g = group_data(GroupName::C4v);
  EXPECT_EQ(project(g.irrep(IrrepLabel::A1), g, mono(2, 0)), mono(2, 0, Rational(1, 2)) + mono(0, 2, Rational(1, 2)));
  EXPECT_TRUE(project(g.irrep(IrrepLabel::A2), g, mono(2, 0)).is_zero());
  EXPECT_EQ(project(g.irrep(IrrepLabel::B1), g, mono(2, 0)), mono(2, 0, Rational(1, 2)) + mono(0, 2, Rational(-1, 2)));
}

class ProjectorAlgebra : public ::testing::TestWithParam<GroupName> {};

TEST_P(ProjectorAlgebra, IdempotentAnnihilatingComplete) {
  const GroupData& g = group_data(GetParam());
  for (const PolyGauss& f : monomials(8)) {
    PolyGauss total(f.alpha());
    for (const auto& s : g.irreps) {
      const PolyGauss ps = project(s, g, f);
      EXPECT_EQ(project(s, g, ps), ps);
      for (const auto& t : g.irreps) {
        if (t.label != s.label) EXPECT_TRUE(project(t, g, ps).is_zero());
      }
      total += ps;
    }
    EXPECT_EQ(total, f);
  }
}

INSTANTIATE_TEST_SUITE_P(Groups, ProjectorAlgebra, ::testing::Values(GroupName::C4v, GroupName::C2v),
                         [](const auto& info) { return std::string(to_string(info.param)); });

TEST(Classify, Cases) {
  EXPECT_EQ(classify_potential(1, 1, 1), CaseKind::Case1);
  EXPECT_EQ(classify_potential(0, 0, 1), CaseKind::Case2);
  EXPECT_EQ(classify_potential(1, 2, 1), CaseKind::Case3);
  EXPECT_EQ(classify_potential(1, 1, 0), CaseKind::Case0);
  EXPECT_EQ(classify_potential(1, 2, 0), CaseKind::Case0);
  EXPECT_EQ(classify_potential(0, 0, 0), CaseKind::Case0);
  EXPECT_EQ(classify_potential(Rational(1, 3), parse_rational("0.3333"), 1), CaseKind::Case3);
  EXPECT_EQ(symmetry_group(2, 2), GroupName::C4v);
  EXPECT_EQ(symmetry_group(2, 3), GroupName::C2v);
}

TEST(IrrepContent, Examples) {
  using M = std::map<IrrepLabel, int>;
  EXPECT_EQ(expected_irrep_content(3, GroupName::C4v), (M{{IrrepLabel::E, 2}}));
  EXPECT_EQ(expected_irrep_content(2, GroupName::C4v), (M{{IrrepLabel::A1, 1}, {IrrepLabel::B1, 1}, {IrrepLabel::B2, 1}}));
  EXPECT_EQ(expected_irrep_content(4, GroupName::C4v),
            (M{{IrrepLabel::A1, 2}, {IrrepLabel::A2, 1}, {IrrepLabel::B1, 1}, {IrrepLabel::B2, 1}}));
  EXPECT_EQ(expected_irrep_content(2, GroupName::C2v), (M{{IrrepLabel::A1, 2}, {IrrepLabel::A2, 1}}));
  EXPECT_THROW(expected_irrep_content(-1, GroupName::C4v), std::invalid_argument);
}

TEST(IrrepContent, DimensionsSumToDegeneracy) {
  for (GroupName name : {GroupName::C4v, GroupName::C2v}) {
    const GroupData& g = group_data(name);
    for (int n = 0; n <= 10; ++n) {
      int total = 0;
      for (const auto& [s, count] : expected_irrep_content(n, name)) total += count * g.irrep(s).dimension;
      EXPECT_EQ(total, n + 1);
    }
  }
}

}  // namespace
}  // namespace aho
