#include <gtest/gtest.h>

#include "mulab/borel.hpp"
#include "mulab/errors.hpp"
#include "mulab/mu.hpp"
#include "test_util.hpp"

using namespace mulab;
using mulab::test::rel;

namespace {

const QContext kI{cplx(0.0, 1.0)};

}  // namespace

TEST(Borel, MonomialAndG0Coefficients) {
  for (int m = 0; m < 6; ++m) {
    const FormalSeries b = borel_transform(FormalSeries::monomial(m), kI);
    for (int n = 0; n < 8; ++n)
      EXPECT_LT(std::abs(b.coefficient(n) - (n == m ? kI.qpow(0.5 * m * (m - 1)) : 0.0)), 1e-16);
  }
  const FormalSeries g = borel_transform(g0_series(kI), kI);
  for (int n = 0; n < 12; ++n) EXPECT_LT(rel(g.coefficient(n), std::pow(-1.0, n) * kI.qpow(-n)), 1e-13);
}

TEST(Borel, OrderComposes) {
  const QContext c(cplx(0.1, 0.9));
  const FormalSeries g = FormalSeries::polynomial({1.0, cplx(0.3, 0.2), -2.0, cplx(0.0, 0.5)});
  const FormalSeries b3 = borel_transform(g, c, 3);
  const FormalSeries b111 = borel_transform(borel_transform(borel_transform(g, c), c), c);
  for (int n = 0; n < 4; ++n) EXPECT_LT(rel(b3.coefficient(n), b111.coefficient(n)), 1e-13);
}

TEST(Borel, MonomialSummationIsExact) {
  const cplx lam[2] = {cplx(0.0, 0.7), 0.4};
  EXPECT_LT(rel(resum(FormalSeries::monomial(3), 1, lam, kI), std::pow(0.4, 3)), 1e-12);
  // lambda drops out
  const cplx lam2[2] = {cplx(-0.3, 0.45), 0.4};
  EXPECT_LT(rel(resum(FormalSeries::monomial(3), 1, lam2, kI), std::pow(0.4, 3)), 1e-12);
}

TEST(Borel, ZeroSeries) {
  const cplx lam[2] = {cplx(0.0, 0.7), 0.4};
  EXPECT_EQ(resum(FormalSeries::zero(), 1, lam, kI), cplx(0.0));
}

TEST(Borel, G0ResumsToMu) {
  const cplx u(0.2, 0.05), v(0.3, -0.1);
  const cplx lam[2] = {-e2pi(u), e2pi(u - v)};
  const cplx got = -I * epi(u - v) * kI.qpow(-1.0 / 8) * resum(g0_series(kI), 1, lam, kI);
  EXPECT_LT(rel(got, mu_zwegers(u, v, kI)), 1e-9);
}

TEST(Borel, NestedLaplaceMatchesComposition) {
  const QContext c(cplx(-0.1, 1.1));
  const Evaluable g = [](cplx x) { return 1.0 / (1.0 + x * x); };
  const cplx l0(0.3, 0.1), l1(-0.5, 0.4), l2(0.2, -0.6);
  const cplx lams[3] = {l0, l1, l2};
  const Evaluable inner = [&](cplx y) { return laplace_eval(g, y, l0, c); };
  EXPECT_LT(rel(laplace_n_eval(g, lams, c), laplace_eval(inner, l2, l1, c)), 1e-10);
}

TEST(Borel, ArgumentErrors) {
  const Evaluable g = [](cplx) { return cplx(1.0); };
  try {
    laplace_eval(g, 0.0, 0.5, kI);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroArgument);
  }
  try {
    // kernel theta_q(lambda/x) vanishes at lambda/x = -1
    laplace_eval(g, 0.5, -0.5, kI);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::KernelPole);
  }
  const cplx lam[2] = {0.3, 0.4};
  EXPECT_THROW(resum(FormalSeries::monomial(1), 2, lam, kI), Error);
}

TEST(Borel, DivergentSeriesRefusesDirectSum) {
  try {
    evaluate_series(g0_series(kI), 0.3, kI);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivergentSeries);
  }
}
