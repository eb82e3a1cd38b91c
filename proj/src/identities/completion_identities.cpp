#include "identities/common.hpp"
#include "mulab/completion.hpp"

namespace mulab::ident {

void add_completion(Registry& r) {
  const std::string s = "completion";
  r.push_back(make("R-1", "eq: R 1", s, TolClass::Series, DomainSpec{}, [](const ParamPoint& p) {
    const QContext c = p.ctx();
    return eq(r_function(p.z + 1.0, c), -r_function(p.z, c));
  }));
  r.push_back(make("R-2", "eq: R 2", s, TolClass::Series, DomainSpec{}, [](const ParamPoint& p) {
    const QContext c = p.ctx();
    const cplx u = p.z;
    return eq(r_function(u + p.tau, c), -e2pi(u) * c.qpow(0.5) * r_function(u, c) + 2.0 * epi(u) * c.qpow(3.0 / 8));
  }));
  r.push_back(make("R-3", "eq: R 3", s, TolClass::Series, DomainSpec{}, [](const ParamPoint& p) {
    const QContext c = p.ctx();
    return eq(r_function(p.z, c.with_tau(p.tau + 1.0)), epi(-0.25) * r_function(p.z, c));
  }));
  r.push_back(make("R-4", "eq: R 4", s, TolClass::Quadrature, modular(DomainSpec{}), [](const ParamPoint& p) {
    const QContext c = p.ctx();
    const cplx u = p.z, tau = p.tau;
    return eq(std::exp(pi * I * u * u / tau) / sqrt_minus_i_tau(tau) * r_function(u / tau, c.with_tau(-1.0 / tau)),
              -r_function(u, c) + mordell_h(u, c));
  }));
  r.push_back(make("H-1", "eq: h relation 1", s, TolClass::Quadrature, DomainSpec{}, [](const ParamPoint& p) {
    const QContext c = p.ctx();
    const cplx u = p.z;
    return eq(mordell_h(u, c) + mordell_h(u + 1.0, c),
              2.0 / sqrt_minus_i_tau(p.tau) * std::exp(pi * I / p.tau * (u + 0.5) * (u + 0.5)));
  }));
  r.push_back(make("H-2", "eq: h relation 2", s, TolClass::Quadrature, DomainSpec{}, [](const ParamPoint& p) {
    const QContext c = p.ctx();
    const cplx u = p.z;
    return eq(mordell_h(u, c) + e2pi(-u) * c.qpow(-0.5) * mordell_h(u + p.tau, c), 2.0 * epi(-u) * c.qpow(-1.0 / 8));
  }));
  r.push_back(make("R-REL", "lem: R relation", s, TolClass::Modular, DomainSpec{}, [](const ParamPoint& p) {
    Vec l, rr;
    for (int N : {2, 3}) {
      const double n = N;
      const QContext c = p.ctx(), cn = c.with_tau(n * p.tau), cs = c.with_tau(p.tau / n);
      const cplx u = p.z;
      cplx rhs = 0.0;
      for (int k = 0; k < N; ++k)
        rhs += std::pow(-1.0, k) * e2pi(-static_cast<double>(k) * u) * c.qpow(-k * (k - n + 1) / (2 * n)) *
               r_function(n * u + static_cast<double>(k) * p.tau - 0.5 * (n - 1) * p.tau + 0.5 * (n + 1), cn);
      l.push_back(std::pow(-I, N + 1) * epi(-(n - 1) * u) * c.qpow((n - 1) * (n - 1) / (8 * n)) * r_function(u, cs));
      rr.push_back(rhs);
    }
    return eqv(l, rr);
  }));
  r.push_back(make("RN-N1", "op:RN_vector N=1", s, TolClass::Tight, DomainSpec{}, [](const ParamPoint& p) {
    const QContext c = p.ctx();
    return eq(RN_vector(p.z, 1, c)[0], -r_function(p.z, c));
  }));
  r.push_back(make("RN-SHIFT", "op:RN_vector", s, TolClass::Series, DomainSpec{}, [](const ParamPoint& p) {
    const QContext c = p.ctx();
    Vec l, rr;
    for (int N : {2, 3}) {
      const Vec a = RN_vector(p.z + static_cast<double>(N), N, c);
      const Vec b = scale(std::pow(-1.0, N), RN_vector(p.z, N, c));
      l.insert(l.end(), a.begin(), a.end());
      rr.insert(rr.end(), b.begin(), b.end());
    }
    return eqv(l, rr);
  }));
  r.push_back(make("MUN-COMPLETED", "eq: modular completion of muN", s, TolClass::Tight, u_domain(3),
                   [](const ParamPoint& p) {
                     const QContext c = p.ctx();
                     return eq(muN_completed(p.u, c), MN_completed(p.u, c)[0]);
                   }));
}

}  // namespace mulab::ident
