#include <algorithm>

#include "identities/common.hpp"
#include "mulab/mu.hpp"

namespace mulab::ident {

namespace {

Vec v_of(const Vec& us) {
  Vec v;
  for (std::size_t j = 2; j < us.size(); ++j) v.push_back(us[0] + us[1] - us[j]);
  return v;
}

cplx sum_of(const Vec& v) {
  cplx s = 0.0;
  for (const cplx x : v) s += x;
  return s;
}

Mat diag(const Vec& d) {
  Mat m(d.size(), Vec(d.size(), 0.0));
  for (std::size_t i = 0; i < d.size(); ++i) m[i][i] = d[i];
  return m;
}

template <class F>
Vec vec(int n, F f) {
  Vec v;
  for (int k = 0; k < n; ++k) v.push_back(f(k));
  return v;
}

// (C+ P)_i = P_{i+1}, (C- P)_i = P_{i-1}, indices mod N
Vec cycle(const Vec& p, int step) {
  const int n = static_cast<int>(p.size());
  return vec(n, [&](int i) { return p[static_cast<std::size_t>(((i + step) % n + n) % n)]; });
}

// v S^{-1} v for complex v
cplx inverse_quadratic(const SymMatrix& S, const Vec& v) {
  const SymMatrix Si = S.inverse();
  cplx s = 0.0;
  for (int i = 0; i < S.dim(); ++i)
    for (int j = 0; j < S.dim(); ++j) s += v[static_cast<std::size_t>(i)] * Si(i, j) * v[static_cast<std::size_t>(j)];
  return s;
}

std::function<Vec(const ParamPoint&)> z_guards() {
  return [](const ParamPoint& p) { return Vec{p.z - p.u[0], p.z + p.u[1]}; };
}

void add_nu(Registry& r, const std::string& s, int N) {
  const double n = N;
  r.push_back(make(nid("NU-1", N), "lem: nu 1", s, TolClass::Series, u_domain(N + 1), [N, n](const ParamPoint& p) {
    const QContext c = p.ctx();
    const Vec sh = shifted(p.u, 0, 1.0);
    return eqv(vec(N, [&](int k) { return nu_eval(sh, k, c); }),
               vec(N, [&](int k) { return zeta(N, -k) * nu_eval(p.u, k, c); }));
  }));
  r.push_back(make(nid("NU-2", N), "lem: nu 2", s, TolClass::Series, u_domain(N + 1), [N, n](const ParamPoint& p) {
    const QContext c = p.ctx();
    const Vec sh = shifted(p.u, 0, p.tau);
    const cplx pre = e2pi(-sum_of(v_of(p.u)) / n) * c.qpow(-(n - 1) / (2 * n));
    return eqv(vec(N, [&](int k) { return nu_eval(sh, k, c); }),
               vec(N, [&](int k) { return pre * nu_eval(p.u, (k + 1) % N, c); }));
  }));
  r.push_back(make(nid("NU-3", N), "lem: nu 3", s, TolClass::Series, u_domain(N + 1), [N, n](const ParamPoint& p) {
    const QContext c = p.ctx(), c1 = c.with_tau(p.tau + 1.0);
    return eqv(vec(N, [&](int k) { return nu_eval(p.u, k, c1); }), vec(N, [&](int k) {
                 return std::pow(-1.0, k) * zeta(2 * N, -k * k) * nu_eval(p.u, k, c);
               }));
  }));
  r.push_back(make(nid("NU-4", N), "lem: nu4", s, TolClass::Series, modular(u_domain(N + 1)),
                   [N, n](const ParamPoint& p) {
                     const QContext c = p.ctx(), cs = c.with_tau(-1.0 / p.tau);
                     const Vec w = scaled(p.u, 1.0 / p.tau);
                     const cplx pre = minus_i_tau_pow(p.tau, 0.5 * (n - 1)) / std::sqrt(n) *
                                      std::exp(pi * I / p.tau * inverse_quadratic(SymMatrix::hat(N - 1), v_of(p.u)));
                     const Vec nus = vec(N, [&](int j) { return nu_eval(p.u, j, c); });
                     return eqv(vec(N, [&](int k) { return nu_eval(w, k, cs); }), vec(N, [&](int k) {
                                  cplx acc = 0.0;
                                  for (int j = 0; j < N; ++j) acc += zeta(N, j * k) * nus[static_cast<std::size_t>(j)];
                                  return pre * acc;
                                }));
                   }));
  r.push_back(make(nid("NU-THETAS", N), "nu to thetaS", s, TolClass::Series, u_domain(N + 1),
                   [N, n](const ParamPoint& p) {
                     const QContext c = p.ctx();
                     const Vec v = v_of(p.u);
                     const cplx u = p.u_sum();
                     return eqv(vec(N, [&](int k) { return nu_eval(p.u, k, c); }), vec(N, [&](int k) {
                                  Vec w = v;
                                  for (auto& x : w) x += static_cast<double>(k) * p.tau;
                                  return e2pi(static_cast<double>(k) * (p.u[0] + p.u[1]) - static_cast<double>(k) * u / n) *
                                         c.qpow(k * k * (n - 1) / (2 * n)) * lattice_theta(SymMatrix::hat(N - 1), w, c);
                                }));
                   }));
  r.push_back(make(nid("THETAS-TRANS", N), "thetaS trans", s, TolClass::Series, u_domain(N + 1),
                   [N, n](const ParamPoint& p) {
                     const QContext c = p.ctx();
                     const Vec v = v_of(p.u);
                     const SymMatrix S = SymMatrix::hat(N - 1);
                     cplx rhs = 0.0;
                     for (int k = 0; k < N; ++k) {
                       Vec w = v;
                       for (auto& x : w) x += static_cast<double>(k) * p.tau;
                       rhs += e2pi(static_cast<double>(k) * sum_of(v) / n) * c.qpow(k * k * (n - 1) / (2 * n)) * lattice_theta(S, w, c);
                     }
                     return eq(lattice_theta_dual(S, v, c), rhs);
                   }));
}

void add_phi(Registry& r, const std::string& s, int N) {
  const double n = N;
  const auto dom = u_domain(N + 1, z_guards());
  r.push_back(make(nid("PHI-1", N), "eq: PhiN 1", s, TolClass::Series, dom, [N](const ParamPoint& p) {
    const QContext c = p.ctx();
    const Vec P = phiN_eval(p.u, p.z, c);
    return eqv(phiN_eval(shifted(p.u, 0, 1.0), p.z, c),
               vec(N, [&](int k) { return -zeta(N, -k) * P[static_cast<std::size_t>(k)]; }));
  }));
  r.push_back(make(nid("PHI-2", N), "eq: PhiN 2", s, TolClass::Series, dom, [n](const ParamPoint& p) {
    const QContext c = p.ctx();
    const cplx pre = -e2pi(p.u_sum() / n) * c.qpow(1 / (2 * n));
    return eqv(phiN_eval(shifted(p.u, 0, p.tau), p.z, c), scale(pre, cycle(phiN_eval(p.u, p.z, c), 1)));
  }));
  r.push_back(make(nid("PHI-3", N), "eq: PhiN 3", s, TolClass::Series, dom, [N, n](const ParamPoint& p) {
    const QContext c = p.ctx();
    const Vec P = phiN_eval(p.u, p.z, c);
    return eqv(phiN_eval(p.u, p.z, c.with_tau(p.tau + 1.0)), vec(N, [&](int k) {
                 return epi(-n / 4) * std::pow(-1.0, k) * zeta(2 * N, -k * k) * P[static_cast<std::size_t>(k)];
               }));
  }));
  r.push_back(make(nid("PHI-4", N), "eq: PhiN 4", s, TolClass::Series, modular(dom), [N, n](const ParamPoint& p) {
    const QContext c = p.ctx();
    const cplx u = p.u_sum(), tau = p.tau;
    const cplx pre = sqrt_minus_i_tau(tau) / (std::pow(-I, N + 1) * std::sqrt(n)) * std::exp(-pi * I * u * u / (n * tau));
    const Mat Z = matrix(N, [&](int j, int k) { return zeta(N, j * k); });
    return eqv(phiN_eval(scaled(p.u, 1.0 / tau), p.z / tau, c.with_tau(-1.0 / tau)),
               scale(pre, mat_apply(Z, phiN_eval(p.u, p.z, c))));
  }));
}

void add_mn(Registry& r, const std::string& s, int N) {
  const double n = N;
  const auto dom = u_domain(N + 1);
  r.push_back(make(nid("MN-1", N), "eq: MN 1", s, TolClass::Series, dom, [N](const ParamPoint& p) {
    const QContext c = p.ctx();
    const Mat D = diag(vec(N, [&](int k) { return zeta(N, k); }));
    return eqv(mat_apply(D, MN_vector(shifted(p.u, 0, 1.0), c)), scale(-1.0, MN_vector(p.u, c)));
  }));
  r.push_back(make(nid("MN-2", N), "eq: MN 2", s, TolClass::Series, dom, [N, n](const ParamPoint& p) {
    const QContext c = p.ctx();
    const cplx u = p.u_sum();
    Vec rhs = scale(-1.0, MN_vector(p.u, c));
    rhs[0] -= std::pow(-I, N) * epi(-u) * c.qpow(-n / 8);
    return eqv(scale(e2pi(-u / n) * c.qpow(-1 / (2 * n)), cycle(MN_vector(shifted(p.u, 0, p.tau), c), -1)), rhs);
  }));
  r.push_back(make(nid("MN-3", N), "eq: MN 3", s, TolClass::Series, u_domain(N + 1, z_guards()),
                   [](const ParamPoint& p) {
                     const QContext c = p.ctx();
                     Vec w = p.u;
                     w[0] -= p.z;
                     w[1] += p.z;
                     return eqv(axpy(-1.0, MN_vector(p.u, c), MN_vector(w, c)), phiN_eval(p.u, p.z, c));
                   }));
  r.push_back(make(nid("MN-4", N), "eq: MN 4", s, TolClass::Series, dom, [](const ParamPoint& p) {
    const QContext c = p.ctx();
    Vec rev(p.u.rbegin(), p.u.rend()), rot = p.u;
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    const Vec m = MN_vector(p.u, c);
    Vec l = MN_vector(rev, c), rr = m;
    const Vec b = MN_vector(rot, c);
    l.insert(l.end(), b.begin(), b.end());
    rr.insert(rr.end(), m.begin(), m.end());
    return eqv(l, rr);
  }));
  r.push_back(make(nid("MN-5", N), "eq: MN 5", s, TolClass::Series, dom, [](const ParamPoint& p) {
    const QContext c = p.ctx();
    const Vec m = MN_vector(p.u, c);
    Vec l = MN_vector(shifted(shifted(p.u, 1, -p.tau), 2, p.tau), c), rr = m;
    const Vec b = MN_vector(shifted(shifted(p.u, 1, -p.tau), 0, p.tau), c);
    l.insert(l.end(), b.begin(), b.end());
    rr.insert(rr.end(), m.begin(), m.end());
    return eqv(l, rr);
  }));
}

}  // namespace

void add_vector(Registry& r) {
  for (int N : {2, 3}) {
    add_nu(r, "MN", N);
    add_phi(r, "MN", N);
    add_mn(r, "MN", N);
  }
}

}  // namespace mulab::ident
