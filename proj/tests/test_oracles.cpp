// Library values against frozen high-precision values of the defining sums.
#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "mulab/completion.hpp"
#include "mulab/mu.hpp"
#include "mulab/qcore.hpp"
#include "test_util.hpp"

using namespace mulab;

namespace {

struct Oracle {
  const char* fn;
  std::vector<cplx> u;
  cplx v, alpha, tau;
  int k;
  cplx value;
};

const std::vector<Oracle> kOracles{
#include "oracles/frozen_oracles.inc"
};

cplx evaluate(const Oracle& o) {
  const QContext c(o.tau);
  const std::string f = o.fn;
  if (f == "theta") return jacobi_theta(o.u[0], c);
  if (f == "theta_q") return theta_q(o.u[0], c);
  if (f == "eta") return dedekind_eta(c);
  if (f == "qpoch_inf") return qpoch_inf(o.u[0], c);
  if (f == "qpoch") return qpoch_order(o.u[0], o.alpha, c);
  if (f == "phi11") return q_hypergeometric(std::vector<cplx>{c.qpow(1.0 - o.alpha)}, std::vector<cplx>{0.0}, o.u[0], c);
  if (f == "E") return gauss_E(o.u[0].real());
  if (f == "mu") return mu_zwegers(o.u[0], o.v, c);
  if (f == "mu_gen") return mu_generalized(o.u[0], o.v, o.alpha, c);
  if (f == "h") return mordell_h(o.u[0], c);
  if (f == "R") return r_function(o.u[0], c);
  if (f == "muN") return muN_eval(o.u, c);
  if (f == "hat_muN") return hat_muN_eval(o.u, o.alpha, c);
  if (f == "fN") return fN_eval(o.u, o.alpha, c);
  if (f == "nu") return nu_eval(o.u, o.k, c);
  if (f == "lattice_theta_2") return lattice_theta(SymMatrix(1, {2.0}), o.u, c);
  if (f == "lattice_theta_hat") return lattice_theta(SymMatrix::hat(static_cast<int>(o.u.size())), o.u, c);
  throw std::logic_error("no evaluator for " + f);
}

double tolerance_for(const std::string& f) {
  if (f == "h") return 1e-11;
  if (f == "muN" || f == "hat_muN" || f == "fN" || f == "mu_gen") return 1e-11;
  return 1e-12;
}

}  // namespace

TEST(FrozenOracles, AllFunctions) {
  ASSERT_GE(kOracles.size(), 20u);
  for (const auto& o : kOracles) {
    const cplx got = evaluate(o);
    EXPECT_LT(test::rel(got, o.value), tolerance_for(o.fn)) << o.fn << " got " << got << " want " << o.value;
  }
}

TEST(FrozenOracles, SpecialValues) {
  const QContext c(cplx(0.1, 1.05));
  const cplx u(0.13, 0.07), v(-0.21, 0.11);
  EXPECT_LT(test::rel(mu_generalized(u, v, 1.0, c), mu_zwegers(u, v, c)), 1e-12);
  EXPECT_LT(test::rel(mu_generalized(u, v, 0.0, c), -I * c.qpow(-1.0 / 8)), 1e-12);
  const std::vector<cplx> us{u, cplx(0.3, -0.1), cplx(-0.05, 0.02)};
  EXPECT_LT(test::rel(hat_muN_eval(us, 1.0, c), muN_eval(us, c)), 1e-12);
}
