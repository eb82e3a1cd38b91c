#include "identities/common.hpp"
#include "mulab/completion.hpp"
#include "mulab/mu.hpp"

namespace mulab::ident {

void add_mu(Registry& r) {
  const std::string s = "mu";
  r.push_back(make("MU-1", "mu relation 1", s, TolClass::Series, u_domain(2), [](const ParamPoint& p) {
    const QContext c = p.ctx();
    const cplx u = p.u[0], v = p.u[1], m = mu_zwegers(u, v, c);
    return eqv({mu_zwegers(u + 1.0, v, c), mu_zwegers(u, v + 1.0, c)}, {-m, -m});
  }));
  r.push_back(make("MU-2", "mu relation 2", s, TolClass::Series, u_domain(2), [](const ParamPoint& p) {
    const QContext c = p.ctx();
    const cplx u = p.u[0], v = p.u[1];
    return eq(mu_zwegers(u + p.tau, v, c),
              -e2pi(u - v) * c.qpow(0.5) * mu_zwegers(u, v, c) - I * epi(u - v) * c.qpow(3.0 / 8));
  }));
  r.push_back(make("MU-3", "mu relation 3", s, TolClass::Series,
                   u_domain(2, [](const ParamPoint& p) { return Vec{p.u[0] + p.z, p.u[1] + p.z}; }),
                   [](const ParamPoint& p) {
                     const QContext c = p.ctx();
                     const cplx u = p.u[0], v = p.u[1], z = p.z;
                     const cplx eta3 = std::pow(dedekind_eta(c), 3);
                     const cplx extra = I * eta3 * jacobi_theta(u + v + z, c) * jacobi_theta(z, c) /
                                        (jacobi_theta(u + z, c) * jacobi_theta(v + z, c) * jacobi_theta(u, c) *
                                         jacobi_theta(v, c));
                     return eq(mu_zwegers(u + z, v + z, c), mu_zwegers(u, v, c) + extra);
                   }));
  r.push_back(make("MU-4", "mu relation 4", s, TolClass::Series, u_domain(2), [](const ParamPoint& p) {
    const QContext c = p.ctx();
    const cplx u = p.u[0], v = p.u[1], m = mu_zwegers(u, v, c);
    return eqv({mu_zwegers(u + p.tau, v + p.tau, c), mu_zwegers(-u, -v, c), mu_zwegers(v, u, c)}, {m, m, m});
  }));
  r.push_back(make("MU-5", "mu relation 5", s, TolClass::Series, u_domain(2), [](const ParamPoint& p) {
    const QContext c = p.ctx();
    const cplx u = p.u[0], v = p.u[1];
    return eq(mu_zwegers(u, v, c.with_tau(p.tau + 1.0)), epi(-0.25) * mu_zwegers(u, v, c));
  }));
  r.push_back(make("MU-6", "mu relation 6", s, TolClass::Quadrature, modular(u_domain(2)), [](const ParamPoint& p) {
    const QContext c = p.ctx();
    const cplx u = p.u[0], v = p.u[1], tau = p.tau;
    const cplx lhs = std::exp(pi * I * (u - v) * (u - v) / tau) / sqrt_minus_i_tau(tau) *
                     mu_zwegers(u / tau, v / tau, c.with_tau(-1.0 / tau));
    return eq(lhs, -mu_zwegers(u, v, c) + mordell_h(u - v, c) / (2.0 * I));
  }));

  // the completed function transforms like a Jacobi form
  r.push_back(make("MUT-1", "mu tilde elliptic 1", s, TolClass::Quadrature, u_domain(2), [](const ParamPoint& p) {
    const QContext c = p.ctx();
    const cplx u = p.u[0], v = p.u[1], m = mu_completed(u, v, c);
    return eqv({mu_completed(u + 1.0, v, c), mu_completed(u, v + 1.0, c)}, {-m, -m});
  }));
  r.push_back(make("MUT-2", "mu tilde elliptic tau", s, TolClass::Quadrature, u_domain(2), [](const ParamPoint& p) {
    const QContext c = p.ctx();
    const cplx u = p.u[0], v = p.u[1], m = mu_completed(u, v, c);
    return eqv({-e2pi(v - u) * c.qpow(-0.5) * mu_completed(u + p.tau, v, c),
                -e2pi(u - v) * c.qpow(-0.5) * mu_completed(u, v + p.tau, c)},
               {m, m});
  }));
  r.push_back(make("MUT-3", "mu tilde T", s, TolClass::Quadrature, u_domain(2), [](const ParamPoint& p) {
    const QContext c = p.ctx();
    const cplx u = p.u[0], v = p.u[1];
    return eq(mu_completed(u, v, c), epi(0.25) * mu_completed(u, v, c.with_tau(p.tau + 1.0)));
  }));
  r.push_back(make("MUT-4", "mu tilde S", s, TolClass::Quadrature, modular(u_domain(2)), [](const ParamPoint& p) {
    const QContext c = p.ctx();
    const cplx u = p.u[0], v = p.u[1], tau = p.tau;
    return eq(mu_completed(u, v, c), -std::exp(pi * I * (u - v) * (u - v) / tau) / sqrt_minus_i_tau(tau) *
                                         mu_completed(u / tau, v / tau, c.with_tau(-1.0 / tau)));
  }));
  r.push_back(make("MUT-SYM", "op:mu_completed", s, TolClass::Series, u_domain(2), [](const ParamPoint& p) {
    const QContext c = p.ctx();
    return eq(mu_completed(p.u[0], p.u[1], c), mu_completed(p.u[1], p.u[0], c));
  }));
}

}  // namespace mulab::ident
