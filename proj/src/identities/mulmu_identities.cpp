#include <algorithm>

#include "identities/common.hpp"
#include "mulab/mu.hpp"
#include "mulab/summation.hpp"

namespace mulab::ident {

namespace {

// v_j = u_0 + u_1 - u_{j+1}, j = 1..N-1
Vec v_of(const Vec& us) {
  Vec v;
  for (std::size_t j = 2; j < us.size(); ++j) v.push_back(us[0] + us[1] - us[j]);
  return v;
}

cplx theta_product(const Vec& us, const QContext& c) {
  cplx t = 1.0;
  for (const cplx u : us) t *= jacobi_theta(u, c);
  return t;
}

std::function<Vec(const ParamPoint&)> z_guards() {
  return [](const ParamPoint& p) { return Vec{p.z - p.u[0], p.z + p.u[1]}; };
}

// sum_{n in Z^{N-1}} q^{n S n/2} prod e^{2 pi i n_j v_j} 1phi1(q^{1-alpha}; 0; e^{2 pi i (u_0+u_1+alpha tau)} q^{|n|})
cplx relation4_sum(const ParamPoint& p, const QContext& c) {
  const int N = static_cast<int>(p.u.size()) - 1;
  const Vec v = v_of(p.u);
  const SymMatrix S = SymMatrix::hat(std::max(1, N - 1));
  const cplx A = c.qpow(1.0 - p.alpha), x = e2pi(p.u[0] + p.u[1] + p.alpha * p.tau);
  IndexCache<Scaled> phi([&](int m) { return phi11_shifted(A, x, m, c); });
  std::vector<double> nv(v.size());
  return lattice_sum(
      N - 1,
      [&](std::span<const int> n) {
        int m = 0;
        cplx lin = 0.0;
        for (std::size_t j = 0; j < n.size(); ++j) {
          m += n[j];
          nv[j] = n[j];
          lin += static_cast<double>(n[j]) * v[j];
        }
        const double quad = n.empty() ? 0.0 : S.quadratic(nv);
        const Scaled f = phi(m);
        return std::exp(pi * I * (p.tau * quad + 2.0 * lin) + f.log_scale) * f.value;
      },
      c.trunc());
}

void add_hat(Registry& r, const std::string& s, int N) {
  const auto H = [](const Vec& us, cplx al, const QContext& c) { return hat_muN_eval(us, al, c); };
  const auto n = static_cast<std::size_t>(N);
  r.push_back(make(nid("MULMUA-1", N), "mul mua relation 1", s, TolClass::Modular, u_domain(N + 1),
                   [H, n](const ParamPoint& p) {
                     const QContext c = p.ctx();
                     Vec l, rr;
                     const cplx ref = H(shifted(p.u, 0, p.tau), p.alpha, c);
                     for (std::size_t j = 1; j <= n; ++j) {
                       l.push_back(H(shifted(p.u, j, p.tau), p.alpha, c));
                       rr.push_back(ref);
                     }
                     return eqv(l, rr);
                   }));
  r.push_back(make(nid("MULMUA-2", N), "mul mua relation 2", s, TolClass::Modular, u_domain(N + 1),
                   [H](const ParamPoint& p) {
                     const QContext c = p.ctx();
                     const cplx a = c.qpow(p.alpha), sa = c.qpow(0.5 * p.alpha), sx = epi(p.u_sum());
                     return eq((a - 1.0) * H(p.u, p.alpha + 1.0, c) + sx * H(p.u, p.alpha, c),
                               sa * sx * H(shifted(p.u, 0, p.tau), p.alpha, c));
                   }));
  for (const bool printed : {true, false})
    r.push_back(reading(make("", "mul mua relation 3", s, TolClass::Modular, u_domain(N + 1),
                             [H, N, printed](const ParamPoint& p) {
                               const QContext c = p.ctx();
                               const cplx sa = c.qpow(0.5 * p.alpha), X = e2pi(p.u_sum());
                               Vec t;
                               for (int k = 0; k <= N + 1; ++k) t.push_back(H(shifted(p.u, 0, static_cast<double>(k) * p.tau), p.alpha, c));
                               const cplx sign = printed ? 1.0 : std::pow(-1.0, N + 1);
                               const cplx x0 = printed ? cplx(1.0) : X;
                               const auto k = [&](int i) { return t[static_cast<std::size_t>(i)]; };
                               return eq(k(N + 1) + sign * std::pow(sa, N + 2) * X * k(1),
                                         sa * k(N) + sign * std::pow(sa, N + 1) * x0 * k(0));
                             }),
                        nid("MULMUA-3", N), printed ? "printed" : "corrected"));
  r.push_back(make(nid("MULMUA-4", N), "mul mua relation 4", s, TolClass::Modular, u_domain(N + 1, z_guards()),
                   [H](const ParamPoint& p) {
                     const QContext c = p.ctx();
                     const cplx al = p.alpha, z = p.z, u0 = p.u[0], u1 = p.u[1];
                     Vec w = p.u;
                     w[0] -= z;
                     w[1] += z;
                     const cplx pre = epi((al - 1.0) * p.u_sum() + al * p.tau) * jacobi_theta(al * p.tau, c) *
                                      jacobi_theta(z, c) * jacobi_theta(z - u0 + u1, c) * qpoch_inf(c.q(), c) /
                                      (jacobi_theta(z - u0, c) * jacobi_theta(z + u1, c) * theta_product(p.u, c) *
                                       qpoch_inf(c.qpow(1.0 - al), c));
                     return eq(H(p.u, al, c) - H(w, al, c), pre * relation4_sum(p, c));
                   }));
  r.push_back(make(nid("MULMUA-5", N), "mul mua relation 5", s, TolClass::Modular, u_domain(N + 1),
                   [H](const ParamPoint& p) {
                     const QContext c = p.ctx();
                     Vec rev(p.u.rbegin(), p.u.rend()), rot = p.u;
                     std::rotate(rot.begin(), rot.begin() + 1, rot.end());
                     const cplx m = H(p.u, p.alpha, c);
                     return eqv({H(rev, p.alpha, c), H(rot, p.alpha, c)}, {m, m});
                   }));
  for (const bool literal : {true, false})
    r.push_back(reading(
        make("", "mul mua relation 6", s, TolClass::Modular,
             u_domain(N + 1,
                      [](const ParamPoint& p) {
                        Vec g;
                        for (const cplx u : p.u) g.push_back(u + p.alpha * p.tau);
                        return g;
                      }),
             [H, N, literal](const ParamPoint& p) {
               const QContext c = p.ctx();
               const cplx al = p.alpha, order = literal ? al + 1.0 : al;
               Vec w, shiftd;
               for (const cplx u : p.u) {
                 w.push_back(-al * p.tau - u);
                 shiftd.push_back(u + al * p.tau);
               }
               const cplx lhs = e2pi(al * p.u_sum()) * c.qpow(0.5 * al * al * (N + 1.0)) * H(w, order, c);
               const cplx rhs = std::pow(-1.0, N + 1) * theta_product(p.u, c) / theta_product(shiftd, c) *
                                H(p.u, order, c);
               return eq(lhs, rhs);
             }),
        nid("MULMUA-6", N), literal ? "alpha-plus-one" : "alpha"));
}

void add_mun(Registry& r, const std::string& s, int N) {
  const auto M = [](const Vec& us, const QContext& c) { return muN_eval(us, c); };
  r.push_back(make(nid("MUN-1", N), "mun relation 1", s, TolClass::Modular, u_domain(N + 1),
                   [M](const ParamPoint& p) {
                     const QContext c = p.ctx();
                     return eq(M(shifted(p.u, 0, 1.0), c), -M(p.u, c));
                   }));
  r.push_back(make(nid("MUN-2", N), "mun relation 2", s, TolClass::Modular, u_domain(N + 1),
                   [M, N](const ParamPoint& p) {
                     const QContext c = p.ctx();
                     const cplx u = p.u_sum();
                     return eq(M(shifted(p.u, 0, static_cast<double>(N) * p.tau), c),
                               std::pow(-1.0, N) * e2pi(u) * c.qpow(0.5 * N) * M(p.u, c) +
                                   std::pow(I, N) * epi(u) * c.qpow(3.0 * N / 8));
                   }));
  r.push_back(make(nid("MUN-OP", N), "op:mun factorized operator", s, TolClass::Modular, u_domain(N + 1),
                   [M, N](const ParamPoint& p) {
                     const QContext c = p.ctx();
                     const cplx X = e2pi(p.u_sum()), sgn = std::pow(-1.0, N);
                     Vec t;
                     for (int k = 0; k <= N + 1; ++k) t.push_back(M(shifted(p.u, 0, static_cast<double>(k) * p.tau), c));
                     const auto k = [&](int i) { return t[static_cast<std::size_t>(i)]; };
                     return eq(k(N + 1) + sgn * X * c.qpow(0.5 * (N + 1)) * k(0),
                               c.qpow(0.5) * k(N) + sgn * X * c.qpow(1.0 + 0.5 * N) * k(1));
                   }));
  r.push_back(make(nid("MUN-3", N), "mun relation 3", s, TolClass::Modular, u_domain(N + 1),
                   [M, N](const ParamPoint& p) {
                     const QContext c = p.ctx();
                     const auto n = static_cast<std::size_t>(N);
                     const cplx m = M(p.u, c);
                     return eqv({M(shifted(shifted(p.u, 0, p.tau), n, -p.tau), c),
                                 M(shifted(shifted(p.u, n, p.tau), 0, -p.tau), c)},
                                {m, m});
                   }));
  r.push_back(make(nid("MUN-4", N), "mun relation 4", s, TolClass::Modular, u_domain(N + 1),
                   [M, N](const ParamPoint& p) {
                     const QContext c = p.ctx();
                     return eq(M(scaled(p.u, -1.0), c), std::pow(-1.0, N + 1) * M(p.u, c));
                   }));
  r.push_back(make(nid("MUN-5", N), "mun relation 5", s, TolClass::Modular, u_domain(N + 1),
                   [M](const ParamPoint& p) {
                     const QContext c = p.ctx();
                     Vec rev(p.u.rbegin(), p.u.rend()), rot = p.u;
                     std::rotate(rot.begin(), rot.begin() + 1, rot.end());
                     const cplx m = M(p.u, c);
                     return eqv({M(rev, c), M(rot, c)}, {m, m});
                   }));
  r.push_back(make(nid("MUN-6", N), "mun relation 6", s, TolClass::Modular, u_domain(N + 1, z_guards()),
                   [M, N](const ParamPoint& p) {
                     const QContext c = p.ctx();
                     const cplx z = p.z, u0 = p.u[0], u1 = p.u[1];
                     Vec w = p.u;
                     w[0] -= z;
                     w[1] += z;
                     const cplx pre = I * std::pow(dedekind_eta(c), 3) * jacobi_theta(z, c) *
                                      jacobi_theta(z - u0 + u1, c) /
                                      (jacobi_theta(z - u0, c) * jacobi_theta(z + u1, c) * theta_product(p.u, c));
                     const Vec v = v_of(p.u);
                     const cplx th = N > 1 ? lattice_theta(SymMatrix::hat(N - 1), v, c) : cplx(1.0);
                     return eq(M(w, c), M(p.u, c) + pre * th);
                   }));
}

}  // namespace

void add_mulmu(Registry& r) {
  for (int N : {1, 2, 3}) {
    add_hat(r, "mulmu", N);
    add_mun(r, "mulmu", N);
  }
}

}  // namespace mulab::ident
