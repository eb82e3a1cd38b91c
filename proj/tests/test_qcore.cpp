#include <gtest/gtest.h>

#include <random>

#include "mulab/errors.hpp"
#include "mulab/hypergeometric.hpp"
#include "mulab/qcore.hpp"
#include "mulab/summation.hpp"
#include "test_util.hpp"

using namespace mulab;
using mulab::test::rel;

namespace {

const QContext kI{cplx(0.0, 1.0)};

}  // namespace

TEST(QPoch, TrivialValues) {
  EXPECT_EQ(qpoch_inf(0.0, kI), cplx(1.0));
  EXPECT_EQ(qpoch_inf(1.0, kI), cplx(0.0));
  EXPECT_LT(std::abs(qpoch_order(0.37, 0.0, kI) - 1.0), 1e-15);
  const cplx x(0.3, -0.2);
  EXPECT_LT(rel(qpoch_order(x, 1.0, kI), 1.0 - x), 1e-14);
}

TEST(QPoch, FiniteMatchesProduct) {
  const QContext c(cplx(0.1, 0.9));
  const cplx x(0.4, 0.3);
  cplx p = 1.0;
  for (int j = 0; j < 5; ++j) p *= 1.0 - x * c.qpow(j);
  EXPECT_LT(rel(qpoch_finite(x, 5, c), p), 1e-15);
  EXPECT_LT(rel(qpoch_order(x, 5.0, c), p), 1e-13);
}

TEST(QPoch, OrderCocycle) {
  const QContext c(cplx(-0.2, 1.1));
  const cplx x(0.2, 0.5), a(0.3, 0.1), b(-0.45, 0.2);
  EXPECT_LT(rel(qpoch_order(x, a + b, c), qpoch_order(x, a, c) * qpoch_order(x * c.qpow(a), b, c)), 1e-13);
}

TEST(ThetaQ, ZeroAndShift) {
  EXPECT_LT(std::abs(theta_q(-1.0, kI)), 1e-15);
  const cplx x = 0.7;
  EXPECT_LT(rel(theta_q(x, kI), x * theta_q(x * kI.q(), kI)), 1e-12);
}

TEST(ThetaQ, SeriesAgreesWithProduct) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> re(-0.4, 0.4), im(0.7, 1.5), lx(-2.0, 2.0), ph(-3.1, 3.1);
  for (int k = 0; k < 200; ++k) {
    const QContext c(cplx(re(rng), im(rng)));
    const cplx x = std::exp(cplx(lx(rng), ph(rng)));
    EXPECT_LT(rel(theta_q(x, c), theta_q_series(x, c)), 1e-12) << x;
  }
}

TEST(Theta, ZeroAndRelations) {
  EXPECT_EQ(jacobi_theta(0.0, kI), cplx(0.0));
  const cplx u(0.3, 0.1);
  EXPECT_LT(std::abs(jacobi_theta(u + 1.0, kI) + jacobi_theta(u, kI)) / std::abs(jacobi_theta(u, kI)), 1e-12);
  const cplx tau = kI.tau(), v = 0.2;
  const cplx lhs = jacobi_theta(v / tau, kI.with_tau(-1.0 / tau));
  const cplx rhs = -I * sqrt_minus_i_tau(tau) * std::exp(pi * I * v * v / tau) * jacobi_theta(v, kI);
  EXPECT_LT(rel(lhs, rhs), 1e-10);
}

TEST(Theta, SeriesAgreesWithProduct) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> re(-0.4, 0.4), im(0.7, 1.5), ur(-0.5, 0.5), ui(-0.4, 0.4);
  for (int k = 0; k < 200; ++k) {
    const QContext c(cplx(re(rng), im(rng)));
    const cplx u(ur(rng), ui(rng));
    EXPECT_LT(rel(jacobi_theta(u, c), jacobi_theta_series(u, c)), 1e-12) << u;
  }
}

TEST(Eta, Relations) {
  EXPECT_LT(rel(dedekind_eta(kI.with_tau(kI.tau() + 1.0)), epi(1.0 / 12) * dedekind_eta(kI)), 1e-13);
  const cplx tau(0.1, 1.1);
  const QContext c(tau);
  EXPECT_LT(rel(dedekind_eta(c.with_tau(-1.0 / tau)), sqrt_minus_i_tau(tau) * dedekind_eta(c)), 1e-12);
}

TEST(QContext, RejectsLowerHalfPlane) {
  EXPECT_THROW(QContext(cplx(0.0, -1.0)), Error);
  try {
    QContext(cplx(0.3, 0.0));
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
  }
}

TEST(Guards, PoleProximity) {
  try {
    guarded_theta(kI.tau() + 1e-14, kI);
    FAIL() << "expected PoleProximity";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PoleProximity);
  }
  EXPECT_NEAR(lattice_distance(cplx(2.1, 1.0), kI.tau()), 0.1, 1e-14);
  EXPECT_LT(theta_q_zero_distance(-kI.q(), kI), 1e-14);
}

TEST(SymMatrix, HatInverseAndDeterminant) {
  for (int n = 1; n <= 4; ++n) {
    const SymMatrix S = SymMatrix::hat(n);
    EXPECT_NEAR(S.determinant(), n + 1.0, 1e-12);
    const SymMatrix T = S.inverse();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = 0;
        for (int k = 0; k < n; ++k) s += S(i, k) * T(k, j);
        EXPECT_NEAR(s, i == j ? 1.0 : 0.0, 1e-13);
      }
  }
  EXPECT_THROW(SymMatrix(2, {1.0, 2.0, 2.0, 1.0}), Error);
}

TEST(LatticeTheta, IdentityDualIsSelf) {
  const QContext c(cplx(0.1, 0.9));
  const std::vector<cplx> u{cplx(0.1, 0.05), cplx(-0.2, 0.1)};
  const SymMatrix S = SymMatrix::identity(2);
  EXPECT_LT(rel(lattice_theta(S, u, c), lattice_theta_dual(S, u, c)), 1e-14);
}

TEST(LatticeTheta, ModularMap) {
  const cplx tau = I;
  const QContext c(tau);
  const std::vector<cplx> u{0.1, 0.3};
  const SymMatrix S = SymMatrix::hat(2), Si = S.inverse();
  std::vector<cplx> ut;
  for (const cplx x : u) ut.push_back(x / tau);
  cplx quad = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) quad += u[i] * Si(i, j) * u[j];
  const cplx rhs = minus_i_tau_pow(tau, 1.0) * std::exp(pi * I * quad / tau) * lattice_theta_dual(S, u, c) /
                   std::sqrt(S.determinant());
  EXPECT_LT(rel(lattice_theta(S, ut, c.with_tau(-1.0 / tau)), rhs), 1e-9);
}

TEST(Hypergeometric, TerminatesAndDefaults) {
  const QContext c(cplx(0.0, 1.0));
  EXPECT_EQ(q_hypergeometric(std::vector<cplx>{0.3}, std::vector<cplx>{0.0}, 0.0, c), cplx(1.0));
  // 1phi1(q^{-2}; 0; q; x) is a quadratic polynomial: third differences vanish
  const std::vector<cplx> a{c.qpow(-2.0)}, b{0.0};
  const auto f = [&](double x) { return q_hypergeometric(a, b, x, c); };
  const cplx d3 = f(3) - 3.0 * f(2) + 3.0 * f(1) - f(0);
  EXPECT_LT(std::abs(d3) / std::abs(f(3)), 1e-12);
  EXPECT_EQ(terminating_index(c.qpow(-2.0), c), 2);
  EXPECT_FALSE(terminating_index(cplx(0.3, 0.1), c).has_value());
}

TEST(Hypergeometric, ContinuationMatchesClosedForm) {
  // q-binomial: 1phi0(a; -; q; z) = (az)_inf / (z)_inf, valid for |z| < 1 and continued beyond
  const QContext c(cplx(0.05, 0.8));
  const cplx a(0.4, 0.2);
  for (const cplx z : {cplx(0.3, 0.1), cplx(0.8, -0.3), cplx(-2.5, 1.0), cplx(7.0, 3.0)}) {
    const cplx got = hypergeometric_sum(HyperTerms{{a}, {}, 0}, z, c);
    EXPECT_LT(rel(got, qpoch_inf(a * z, c) / qpoch_inf(z, c)), 1e-11) << z;
  }
}

TEST(Hypergeometric, NegativePowerDiverges) {
  const QContext c(cplx(0.0, 1.0));
  try {
    hypergeometric_sum(HyperTerms{{cplx(0.3)}, {}, -1}, 0.2, c);
    FAIL() << "expected DivergentSeries";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivergentSeries);
  }
}

TEST(Summation, CompensatedAndBilateral) {
  CompensatedSum s;
  s.add(1e16);
  for (int k = 0; k < 10; ++k) s.add(1.0);
  s.add(-1e16);
  EXPECT_EQ(s.value(), cplx(10.0));
  const TruncationPolicy p;
  const cplx g = bilateral_sum([](int n) { return cplx(std::exp(-0.5 * n * n)); }, p);
  double ref = 0;
  for (int n = -40; n <= 40; ++n) ref += std::exp(-0.5 * n * n);
  EXPECT_NEAR(g.real(), ref, 1e-14);
  EXPECT_EQ(lattice_sum(0, [](std::span<const int>) { return cplx(2.5); }, p), cplx(2.5));
}
