#include "identities/common.hpp"

namespace mulab::ident {

namespace {

DomainSpec w_domain(int n_w, bool guard_ratio = false) {
  DomainSpec d;
  d.n_w = n_w;
  if (guard_ratio) d.guarded_ratios = [](const ParamPoint& p) { return Vec{e2pi(p.w[0])}; };
  return d;
}

Sides mul_theta_modular(const SymMatrix& S, const ParamPoint& p) {
  const QContext ctx = p.ctx();
  const cplx tau = p.tau;
  const QContext inv = ctx.with_tau(-1.0 / tau);
  const int N = S.dim();
  const SymMatrix Si = S.inverse();
  cplx quad = 0;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) quad += p.w[static_cast<std::size_t>(i)] * Si(i, j) * p.w[static_cast<std::size_t>(j)];
  const cplx lhs = lattice_theta(S, scaled(p.w, 1.0 / tau), inv);
  const cplx rhs = minus_i_tau_pow(tau, 0.5 * N) * std::exp(pi * I * quad / tau) / std::sqrt(S.determinant()) *
                   lattice_theta_dual(S, p.w, ctx);
  return eq(lhs, rhs);
}

}  // namespace

void add_theta(Registry& r) {
  const std::string s = "theta";
  r.push_back(make("TH-1", "theta relation 1", s, TolClass::Foundation, u_domain(1), [](const ParamPoint& p) {
    const QContext c = p.ctx();
    return eq(jacobi_theta(p.u[0] + 1.0, c), -jacobi_theta(p.u[0], c));
  }));
  r.push_back(make("TH-2", "theta relation 2", s, TolClass::Foundation, u_domain(1), [](const ParamPoint& p) {
    const QContext c = p.ctx();
    const cplx u = p.u[0];
    return eq(jacobi_theta(u + p.tau, c), -epi(-p.tau - 2.0 * u) * jacobi_theta(u, c));
  }));
  r.push_back(make("TH-3", "theta relation 3", s, TolClass::Foundation, u_domain(1), [](const ParamPoint& p) {
    const QContext c = p.ctx();
    return eq(jacobi_theta(p.u[0], c.with_tau(p.tau + 1.0)), epi(0.25) * jacobi_theta(p.u[0], c));
  }));
  r.push_back(make("TH-4", "theta relation 4", s, TolClass::Series, modular(u_domain(1)), [](const ParamPoint& p) {
    const QContext c = p.ctx();
    const cplx u = p.u[0], tau = p.tau;
    return eq(jacobi_theta(u / tau, c.with_tau(-1.0 / tau)),
              -I * sqrt_minus_i_tau(tau) * std::exp(pi * I * u * u / tau) * jacobi_theta(u, c));
  }));
  r.push_back(make("TH-5", "theta relation 5", s, TolClass::Foundation, w_domain(1, true), [](const ParamPoint& p) {
    const QContext c = p.ctx();
    const cplx x = e2pi(p.w[0]);
    return eq(theta_q(x, c), x * theta_q(x * c.q(), c));
  }));
  r.push_back(make("TH-6", "theta relation 6", s, TolClass::Foundation, w_domain(1, true), [](const ParamPoint& p) {
    const QContext c = p.ctx();
    const cplx x = e2pi(p.w[0]);
    return eq(theta_q(x, c), x * theta_q(1.0 / x, c));
  }));
  r.push_back(make("ETA-1", "eta relation 1", s, TolClass::Foundation, DomainSpec{}, [](const ParamPoint& p) {
    const QContext c = p.ctx();
    return eq(dedekind_eta(c.with_tau(p.tau + 1.0)), epi(1.0 / 12) * dedekind_eta(c));
  }));
  r.push_back(make("ETA-2", "eta relation 2", s, TolClass::Series, modular(DomainSpec{}), [](const ParamPoint& p) {
    const QContext c = p.ctx();
    return eq(dedekind_eta(c.with_tau(-1.0 / p.tau)), sqrt_minus_i_tau(p.tau) * dedekind_eta(c));
  }));
  for (int N : {2, 3})
    r.push_back(make(nid("MULTH-4", N), "mul theta relation 4", s, TolClass::Series, modular(w_domain(N)),
                     [N](const ParamPoint& p) { return mul_theta_modular(SymMatrix::hat(N), p); }));
  r.push_back(make("MULTH-4.S", "mul theta relation 4", s, TolClass::Series, modular(w_domain(2)),
                   [](const ParamPoint& p) { return mul_theta_modular(SymMatrix(2, {3, 1, 1, 2}), p); }));

  // oracle equivalences between the two evaluation paths
  r.push_back(make("TH-SERIES", "op:jacobi_theta", s, TolClass::Tight, DomainSpec{}, [](const ParamPoint& p) {
    const QContext c = p.ctx();
    return eq(jacobi_theta(p.z, c), jacobi_theta_series(p.z, c));
  }));
  {
    DomainSpec d = w_domain(1);
    d.u_box.im_lo = -0.25;
    d.u_box.im_hi = 0.25;
    r.push_back(make("THQ-SERIES", "op:theta_q", s, TolClass::Tight, d, [](const ParamPoint& p) {
      const QContext c = p.ctx();
      const cplx x = e2pi(p.w[0]);
      return eq(theta_q(x, c), theta_q_series(x, c));
    }));
  }
  r.push_back(make("POCH-COCYCLE", "op:qpoch_order", s, TolClass::Tight, w_domain(1), [](const ParamPoint& p) {
    const QContext c = p.ctx();
    const cplx x = e2pi(p.w[0]);
    return eq(qpoch_order(x, p.alpha, c) * qpoch_order(c.qpow(p.alpha) * x, p.z, c),
              qpoch_order(x, p.alpha + p.z, c));
  }));
}

}  // namespace mulab::ident
