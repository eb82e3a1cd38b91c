#include "identities/common.hpp"
#include "mulab/completion.hpp"
#include "mulab/mu.hpp"

namespace mulab::ident {

namespace {

template <class F>
Vec vec(int n, F f) {
  Vec v;
  for (int k = 0; k < n; ++k) v.push_back(f(k));
  return v;
}

std::string mid(const std::string& base, int N, int m) { return nid(base, N) + ".M" + std::to_string(m); }

cplx ipow(double x) { return epi(0.5 * x); }

Mat Z_of(int N) {
  return matrix(N, [N](int j, int k) { return zeta(N, -j * k); });
}

Mat W_of(int N) {
  return matrix(N, [N](int j, int k) { return j == k ? std::pow(-1.0, k) * zeta(2 * N, k * k) : cplx(0.0); });
}

// (-i)^{N+1} e^{pi i u^2/N tau} / (sqrt N sqrt(-i tau))
cplx s_prefactor(cplx u, int N, cplx tau) {
  return std::pow(-I, N + 1) * std::exp(pi * I * u * u / (static_cast<double>(N) * tau)) /
         (std::sqrt(static_cast<double>(N)) * sqrt_minus_i_tau(tau));
}

// pre Z M_N(u/tau; -1/tau) - M_N(u; tau)
Vec h_tilde(const Vec& us, int N, const QContext& c) {
  const cplx tau = c.tau();
  cplx u = 0.0;
  for (const cplx x : us) u += x;
  const Vec s = scale(s_prefactor(u, N, tau), mat_apply(Z_of(N), MN_vector(scaled(us, 1.0 / tau), c.with_tau(-1.0 / tau))));
  return axpy(-1.0, MN_vector(us, c), s);
}

void add_mn_modular(Registry& r, const std::string& s, int N) {
  const double n = N;
  const auto dom = u_domain(N + 1);
  r.push_back(make(nid("MNMOD-1", N), "eq: MN modular 1", s, TolClass::Series, dom, [N, n](const ParamPoint& p) {
    const QContext c = p.ctx();
    return eqv(MN_vector(p.u, c), scale(epi(n / 4), mat_apply(W_of(N), MN_vector(p.u, c.with_tau(p.tau + 1.0)))));
  }));
  r.push_back(make(nid("MNMOD-2", N), "eq: MN modular 2", s, TolClass::Quadrature, modular(dom),
                   [N](const ParamPoint& p) {
                     const QContext c = p.ctx();
                     const Vec H = HN_vector(p.u_sum(), N, c);
                     return eqv(scale(std::pow(-1.0, N) * I / 2.0, H), h_tilde(p.u, N, c));
                   }));
  r.push_back(make(nid("MNCOMP-1", N), "eq: MN completion 1", s, TolClass::Modular, dom, [N](const ParamPoint& p) {
    const QContext c = p.ctx();
    const Vec m = MN_completed(shifted(p.u, 0, 1.0), c);
    return eqv(vec(N, [&](int k) { return -zeta(N, k) * m[static_cast<std::size_t>(k)]; }), MN_completed(p.u, c));
  }));
  r.push_back(make(nid("MNCOMP-2", N), "eq: MN completion 2", s, TolClass::Modular, dom, [N, n](const ParamPoint& p) {
    const QContext c = p.ctx();
    const Vec m = MN_completed(shifted(p.u, 0, p.tau), c);
    const cplx pre = -e2pi(-p.u_sum() / n) * c.qpow(-1 / (2 * n));
    return eqv(vec(N, [&](int k) { return pre * m[static_cast<std::size_t>((k + N - 1) % N)]; }),
               MN_completed(p.u, c));
  }));
  r.push_back(make(nid("MNCOMP-3", N), "eq: MN completion 3", s, TolClass::Modular, dom, [N, n](const ParamPoint& p) {
    const QContext c = p.ctx();
    return eqv(scale(epi(n / 4), mat_apply(W_of(N), MN_completed(p.u, c.with_tau(p.tau + 1.0)))), MN_completed(p.u, c));
  }));
  r.push_back(make(nid("MNCOMP-4", N), "eq: MN completion 4", s, TolClass::Modular, modular(dom),
                   [N](const ParamPoint& p) {
                     const QContext c = p.ctx();
                     const cplx tau = p.tau;
                     const Vec m = MN_completed(scaled(p.u, 1.0 / tau), c.with_tau(-1.0 / tau));
                     return eqv(scale(s_prefactor(p.u_sum(), N, tau), mat_apply(Z_of(N), m)), MN_completed(p.u, c));
                   }));
  r.push_back(make(nid("TH-REL-1", N), "eq: tH relation 1", s, TolClass::Modular, modular(dom),
                   [N, n](const ParamPoint& p) {
                     const QContext c = p.ctx();
                     const cplx u = p.u_sum();
                     const Vec lhs = axpy(-std::pow(-1.0, N) * e2pi(u) * c.qpow(n / 2), h_tilde(p.u, N, c),
                                          h_tilde(shifted(p.u, 0, n * p.tau), N, c));
                     const cplx pre = -std::pow(I, N) * epi(u) * c.qpow(3 * n / 8);
                     return eqv(lhs, vec(N, [&](int k) {
                                  return pre * std::pow(-1.0, k) * e2pi(-static_cast<double>(k) * u / n) * c.qpow(-k * (k + n) / (2 * n));
                                }));
                   }));
  r.push_back(make(nid("TH-REL-2", N), "eq: tH relation 2", s, TolClass::Modular, modular(dom),
                   [N, n](const ParamPoint& p) {
                     const QContext c = p.ctx();
                     const cplx u = p.u_sum(), tau = p.tau;
                     const Vec lhs =
                         axpy(-std::pow(-1.0, N), h_tilde(p.u, N, c), h_tilde(shifted(p.u, 0, n), N, c));
                     const Vec g = vec(N, [&](int k) {
                       const cplx a = u - static_cast<double>(k) + n / 2;
                       return std::pow(-1.0, k) * std::exp(pi * I / (n * tau) * a * a);
                     });
                     const cplx pre = std::pow(-1.0, N) * I / (std::sqrt(n) * sqrt_minus_i_tau(tau));
                     return eqv(lhs, scale(pre, mat_apply(Z_of(N), g)));
                   }));
  for (const bool printed : {true, false})
    r.push_back(reading(make("", "eq: HN relation 1", s, TolClass::Quadrature, DomainSpec{},
                             [N, n, printed](const ParamPoint& p) {
                               const QContext c = p.ctx();
                               const cplx u = p.z;
                               const Vec lhs = axpy(-std::pow(-1.0, N) * e2pi(u) * c.qpow(n / 2), HN_vector(u, N, c),
                                                    HN_vector(u + n * p.tau, N, c));
                               const cplx coef = printed ? -2.0 * std::pow(-I, N) : 2.0 * std::pow(-I, N - 1);
                               const cplx pre = coef * epi(u) * c.qpow(3 * n / 8);
                               return eqv(lhs, vec(N, [&](int k) {
                                            return pre * std::pow(-1.0, k) * e2pi(-static_cast<double>(k) * u / n) *
                                                   c.qpow(-k / 2.0 - k * k / (2 * n));
                                          }));
                             }),
                        nid("HN-1", N), printed ? "printed" : "corrected"));
  r.push_back(make(nid("HN-2", N), "eq: HN relation 2", s, TolClass::Quadrature, modular(DomainSpec{}),
                   [N, n](const ParamPoint& p) {
                     const QContext c = p.ctx();
                     const cplx u = p.z, tau = p.tau;
                     const Vec lhs = axpy(-std::pow(-1.0, N), HN_vector(u, N, c), HN_vector(u + n, N, c));
                     const cplx pre = 2.0 / (std::sqrt(n) * sqrt_minus_i_tau(tau));
                     return eqv(lhs, vec(N, [&](int k) {
                                  cplx acc = 0.0;
                                  for (int j = 0; j < N; ++j) {
                                    const cplx a = u - static_cast<double>(j) + n / 2;
                                    acc += std::pow(-1.0, j) * zeta(N, -j * k) * std::exp(pi * I / (n * tau) * a * a);
                                  }
                                  return pre * acc;
                                }));
                   }));
  r.push_back(make(nid("H-AND-R", N), "H and R", s, TolClass::Quadrature, modular(DomainSpec{}),
                   [N, n](const ParamPoint& p) {
                     const QContext c = p.ctx();
                     const cplx u = p.z, tau = p.tau;
                     const Vec lhs = axpy(-std::pow(-1.0, N), HN_vector(u, N, c), RN_vector(u, N, c));
                     const QContext cm = c.with_tau(-n / tau);
                     const Vec g = vec(N, [&](int k) {
                       const double kk = k;
                       return std::pow(-1.0, k) * std::exp(pi * I * (-2.0 * kk * u + kk * kk) / (n * tau)) *
                              r_function(u / tau - kk / tau + 0.5 * (n + 1), cm);
                     });
                     return eqv(lhs, scale(s_prefactor(u, N, tau), mat_apply(Z_of(N), g)));
                   }));
}

void add_sts(Registry& r, const std::string& s, int N, int m) {
  const double n = N;
  const auto dom = modular(u_domain(N + 1));
  const auto side = [N, m](const ParamPoint& p) {
    const QContext c = p.ctx();
    const cplx d = static_cast<double>(m) * p.tau - 1.0;
    return MN_completed(scaled(p.u, 1.0 / d), c.with_tau(-p.tau / d));
  };
  // e^{pi i m N/4} e^{pi i m u^2/N d} / (N sqrt(-m tau + 1))
  const auto common = [n, m](const ParamPoint& p) {
    const cplx d = static_cast<double>(m) * p.tau - 1.0, u = p.u_sum();
    return epi(m * n / 4) * std::exp(pi * I * static_cast<double>(m) * u * u / (n * d)) / (n * std::sqrt(-d));
  };
  r.push_back(make(mid("STS", N, m), "eq: modular STS", s, TolClass::Modular, dom, [=](const ParamPoint& p) {
    Mat Wm = matrix(N, [](int j, int k) { return cplx(j == k ? 1.0 : 0.0); });
    for (int i = 0; i < m; ++i) Wm = mat_mul(Wm, W_of(N));
    const Mat A = mat_mul(mat_mul(Z_of(N), Wm), Z_of(N));
    return eqv(MN_completed(p.u, p.ctx()), scale(std::pow(-1.0, N + 1) * common(p), mat_apply(A, side(p))));
  }));
  const auto sts2 = [=](bool with_sign) {
    return [=](const ParamPoint& p) {
      const Mat A = matrix(N, [&](int j, int k) {
        cplx acc = 0.0;
        for (int l = 0; l < N; ++l) acc += std::pow(-1.0, m * l) * zeta(2 * N, m * l * l - 2 * l * (j + k));
        return acc;
      });
      const cplx sign = with_sign ? std::pow(-1.0, N + 1) : 1.0;
      return eqv(MN_completed(p.u, p.ctx()), scale(sign * common(p), mat_apply(A, side(p))));
    };
  };
  if (N % 2 == 1) {
    // both readings coincide for odd N
    r.push_back(make(mid("STS2", N, m), "eq: modular STS 2", s, TolClass::Modular, dom, sts2(false)));
  } else {
    r.push_back(reading(make("", "eq: modular STS 2", s, TolClass::Modular, dom, sts2(false)), mid("STS2", N, m),
                        "printed"));
    r.push_back(reading(make("", "eq: modular STS 2", s, TolClass::Modular, dom, sts2(true)), mid("STS2", N, m),
                        "corrected"));
  }
}

void add_shift(Registry& r, const std::string& s, int N, int m) {
  const double n = N;
  const auto bump = [n, m](const ParamPoint& p, double sign) {
    const QContext c = p.ctx();
    const cplx u = p.u_sum();
    cplx acc = 0.0;
    for (int j = 1; j <= m; ++j) {
      const double o = 2 * j - 1;
      acc += epi(sign * o * (u + n / 2)) * c.qpow(n / 8 * o * (4 * m - 2 * j + 1));
    }
    return acc;
  };
  r.push_back(make(mid("PLUS-MNTAU", N, m), "eq: +mNtau", s, TolClass::Modular, u_domain(N + 1),
                   [=](const ParamPoint& p) {
                     const QContext c = p.ctx();
                     const cplx u = p.u_sum();
                     return eq(muN_eval(shifted(p.u, 0, m * n * p.tau), c),
                               std::pow(-1.0, m * N) * e2pi(static_cast<double>(m) * u) * c.qpow(m * m * n / 2) * muN_eval(p.u, c) +
                                   bump(p, 1.0));
                   }));
  r.push_back(make(mid("MINUS-MNTAU", N, m), "eq: -mNtau", s, TolClass::Modular, u_domain(N + 1),
                   [=](const ParamPoint& p) {
                     const QContext c = p.ctx();
                     const cplx u = p.u_sum();
                     return eq(muN_eval(shifted(p.u, 0, -m * n * p.tau), c),
                               std::pow(-1.0, m * N) * e2pi(-static_cast<double>(m) * u) * c.qpow(m * m * n / 2) * muN_eval(p.u, c) -
                                   bump(p, -1.0));
                   }));
}

void add_odd(Registry& r, const std::string& s, int N, int m) {
  const double n = N;
  const auto dom = modular(u_domain(N + 1));
  r.push_back(make(mid("ODD-TRANS-1", N, m), "eq: odd trans 1", s, TolClass::Modular, u_domain(N + 1),
                   [=](const ParamPoint& p) {
                     const QContext c = p.ctx();
                     return eq(epi(m * n / 4) * muN_completed(p.u, c.with_tau(p.tau + static_cast<double>(m))),
                               muN_completed(p.u, c));
                   }));
  r.push_back(make(mid("ODD-MUN-1", N, m), "eq: odd mun 1", s, TolClass::Modular, u_domain(N + 1),
                   [=](const ParamPoint& p) {
                     const QContext c = p.ctx();
                     return eq(muN_eval(p.u, c), epi(m * n / 4) * muN_eval(p.u, c.with_tau(p.tau + static_cast<double>(m))));
                   }));
  // i^{m/2} e^{pi i m u^2/d} / sqrt(-d) times f(u/d; -tau/d), d = m N tau - 1
  const auto transformed = [=](const ParamPoint& p, auto f) {
    const QContext c = p.ctx();
    const cplx d = m * n * p.tau - 1.0, u = p.u_sum();
    return ipow(0.5 * m) * std::exp(pi * I * static_cast<double>(m) * u * u / d) / std::sqrt(-d) *
           f(scaled(p.u, 1.0 / d), c.with_tau(-p.tau / d));
  };
  r.push_back(make(mid("ODD-TRANS-2", N, m), "eq: odd trans 2", s, TolClass::Quadrature, dom,
                   [=](const ParamPoint& p) {
                     const auto f = [](const Vec& w, const QContext& c) { return muN_completed(w, c); };
                     return eq(transformed(p, f), muN_completed(p.u, p.ctx()));
                   }));
  r.push_back(make(mid("ODD-MUN-2", N, m), "eq: odd mun 2", s, TolClass::Quadrature, dom, [=](const ParamPoint& p) {
    const QContext c = p.ctx();
    const auto f = [](const Vec& w, const QContext& cc) { return muN_eval(w, cc); };
    const cplx corr = ipow(0.5 * (m + 1) - n) / (2.0 * std::sqrt(static_cast<double>(m))) *
                      hN_combination(p.u_sum(), N, m, c);
    return eq(muN_eval(p.u, c), transformed(p, f) - corr);
  }));
}

void add_even(Registry& r, const std::string& s, int N, int m) {
  const double n = N;
  const auto dom = modular(u_domain(N + 1));
  r.push_back(make(mid("EVEN-TRANS-1", N, m), "eq: even trans 1", s, TolClass::Modular, u_domain(N + 1),
                   [=](const ParamPoint& p) {
                     const QContext c = p.ctx();
                     return eq(muN_completed(p.u, c),
                               epi(m * n / 4) * muN_completed(p.u, c.with_tau(p.tau + static_cast<double>(m))));
                   }));
  r.push_back(make(mid("EVEN-MUN-1", N, m), "eq: even mun 1", s, TolClass::Modular, u_domain(N + 1),
                   [=](const ParamPoint& p) {
                     const QContext c = p.ctx();
                     return eq(muN_eval(p.u, c), epi(m * n / 4) * muN_eval(p.u, c.with_tau(p.tau + static_cast<double>(m))));
                   }));
  // -e^{2 pi i m u^2/d} / sqrt(-d) times f(u/d; -tau/d), d = 2 m N tau - 1
  const auto transformed = [=](const ParamPoint& p, auto f) {
    const QContext c = p.ctx();
    const cplx d = 2.0 * m * n * p.tau - 1.0, u = p.u_sum();
    return -std::exp(2.0 * pi * I * static_cast<double>(m) * u * u / d) / std::sqrt(-d) *
           f(scaled(p.u, 1.0 / d), c.with_tau(-p.tau / d));
  };
  r.push_back(make(mid("EVEN-TRANS-2", N, m), "eq: even trans 2", s, TolClass::Quadrature, dom,
                   [=](const ParamPoint& p) {
                     const auto f = [](const Vec& w, const QContext& c) { return muN_completed(w, c); };
                     return eq(muN_completed(p.u, p.ctx()), transformed(p, f));
                   }));
  for (const bool printed : {true, false})
    r.push_back(reading(make("", "eq: even mun 2", s, TolClass::Quadrature, dom,
                             [=](const ParamPoint& p) {
                               const QContext c = p.ctx();
                               const auto f = [](const Vec& w, const QContext& cc) { return muN_eval(w, cc); };
                               const cplx corr = ipow((printed ? -0.5 : 0.5) - n) /
                                                 (2.0 * std::sqrt(2.0 * m)) * hN_combination_even(p.u_sum(), N, m, c);
                               return eq(muN_eval(p.u, c), transformed(p, f) + corr);
                             }),
                        mid("EVEN-MUN-2", N, m), printed ? "printed" : "corrected"));
}

}  // namespace

void add_modular(Registry& r) {
  const std::string s = "modular";
  for (int N : {2, 3}) add_mn_modular(r, s, N);
  for (int N : {1, 2, 3})
    for (int m : {1, 2}) add_sts(r, s, N, m);
  for (int N : {1, 3})
    for (int m : {1, 2}) add_odd(r, s, N, m);
  add_even(r, s, 2, 1);
  for (int N : {1, 2, 3})
    for (int m : {1, 2}) add_shift(r, s, N, m);
}

}  // namespace mulab::ident
