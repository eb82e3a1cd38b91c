#include <gtest/gtest.h>

#include "mulab/errors.hpp"
#include "mulab/qdiff.hpp"
#include "test_util.hpp"

using namespace mulab;
using mulab::test::rel;

namespace {

const QContext kC{cplx(0.05, 1.0)};

QDiffProblem kummer() { return QDiffProblem(1, 0, {kC.qpow(0.7), cplx(-0.4, 0.3)}, {1.0}, kC); }

QDiffProblem order_two() {
  return QDiffProblem(2, 0, {kC.qpow(0.7), cplx(-0.4, 0.3), cplx(0.25, 0.6)}, {cplx(0.8, 0.1)}, kC);
}

double operator_residual(const QDiffProblem& p, int j, cplx x) {
  const auto s = apply_operator(p, [&](cplx y) { return convergent_solution(p, j, y); }, x);
  return rel(s.lhs, s.rhs);
}

}  // namespace

TEST(QDiff, ConvergentSolutionsSatisfyEquation) {
  const QDiffProblem p = kummer();
  for (int j = 0; j <= 1; ++j) EXPECT_LT(operator_residual(p, j, cplx(0.35, 0.2)), 1e-9);
  const QDiffProblem p2 = order_two();
  for (int j = 0; j <= 2; ++j) EXPECT_LT(operator_residual(p2, j, cplx(-0.6, 0.45)), 1e-9) << j;
}

TEST(QDiff, ConnectionFormula) {
  const QDiffProblem p = kummer();
  const cplx l1[2] = {cplx(0.3, 0.4), cplx(-0.55, 0.2)};
  EXPECT_LT(connection_residual(p, 0, l1), 1e-8);
  const QDiffProblem p2 = order_two();
  const cplx l2[3] = {cplx(0.3, 0.4), cplx(-0.55, 0.2), cplx(0.15, -0.7)};
  EXPECT_LT(connection_residual(p2, 0, l2), 1e-7);
}

TEST(QDiff, LinearFactorProduct) {
  const std::vector<cplx> c{2.0, cplx(0.0, 1.0)};
  const auto p = linear_factor_product(c);
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p[0], cplx(1.0));
  EXPECT_EQ(p[1], -cplx(2.0, 1.0));
  EXPECT_EQ(p[2], cplx(0.0, 2.0));
}

TEST(QDiff, RejectsResonantParameters) {
  try {
    QDiffProblem(1, 0, {0.3, 0.3 * kC.q()}, {1.0}, kC);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParameterDegeneracy);
  }
  EXPECT_THROW(QDiffProblem(1, 1, {0.3, 0.5}, {1.0, 2.0}, kC), Error);
  EXPECT_THROW(QDiffProblem(1, 0, {0.3}, {1.0}, kC), Error);
}
