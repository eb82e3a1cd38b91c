#include "identities/common.hpp"
#include "mulab/borel.hpp"
#include "mulab/summation.hpp"
#include "mulab/mu.hpp"

namespace mulab::ident {

namespace {

// tilde f_N(a, x) = sum (a)_n/(q)_n q^{-N n(n+1)/2} (-x)^n
FormalSeries f_tilde_N(cplx a, int N, const QContext& c) {
  return FormalSeries::hypergeometric(HyperTerms{{a}, {}, -N}, (N % 2 ? 1.0 : -1.0) * c.qpow(-N), c);
}

// tilde f_0(a, x) = 2phi0(a, 0; -; x/a)
FormalSeries f_tilde_0(cplx a, const QContext& c) { return FormalSeries::hypergeometric(HyperTerms{{a}, {}, -1}, 1.0 / a, c); }

// lambdas drawn multiplicatively; every consecutive ratio and lambda_0 itself kept off -q^Z
DomainSpec lambda_domain(int n) {
  DomainSpec d;
  d.n_lambda = n;
  d.guarded_ratios = [](const ParamPoint& p) {
    Vec r{p.lambda[0]};
    for (std::size_t j = 1; j < p.lambda.size(); ++j) r.push_back(p.lambda[j - 1] / p.lambda[j]);
    return r;
  };
  return d;
}

Vec coefficients(const FormalSeries& g, int n) {
  Vec out;
  for (int k = 0; k < n; ++k) out.push_back(g.coefficient(k));
  return out;
}

// 1/(1 + xi/q), the Borel image of g_0
cplx g0_image(cplx xi, const QContext& c) { return 1.0 / (1.0 + xi / c.q()); }

const std::vector<std::pair<int, int>> kShifts{{0, 1}, {1, 0}, {1, 2}, {2, 1}};

void add_operator_rules(Registry& r, const std::string& s) {
  r.push_back(make("RES-OP-1", "q-Borel Laplace transformation", s, TolClass::Tight, DomainSpec{},
                   [](const ParamPoint& p) {
                     const QContext c = p.ctx();
                     Vec l, rr;
                     for (int N : {1, 2}) {
                       const FormalSeries g = f_tilde_N(c.qpow(p.alpha), N, c);
                       for (const auto& [m, n] : kShifts) {
                         const Vec a = coefficients(borel_transform(g.shifted(m, n, c), c, N), 12);
                         const Vec b = coefficients(borel_transform(g, c, N).shifted(m, N * m + n, c), 12);
                         const cplx k = c.qpow(0.5 * N * m * (m - 1));
                         for (std::size_t i = 0; i < a.size(); ++i) {
                           l.push_back(a[i]);
                           rr.push_back(k * b[i]);
                         }
                       }
                     }
                     // relative per coefficient: the raw sizes span many decades
                     for (std::size_t i = 0; i < l.size(); ++i) {
                       const double sc = std::max(std::abs(rr[i]), 1e-300);
                       l[i] /= sc;
                       rr[i] /= sc;
                     }
                     return eqv(l, rr);
                   }));
  r.push_back(make("RES-OP-2", "op:laplace operator rule", s, TolClass::Foundation, lambda_domain(2),
                   [](const ParamPoint& p) {
                     const QContext c = p.ctx();
                     const cplx lam = p.lambda[0], x = p.lambda[1];
                     Vec l, rr;
                     for (const auto& [m, n] : kShifts) {
                       const Evaluable G = [&, m, n](cplx xi) {
                         return std::pow(xi, m) * g0_image(xi * c.qpow(n), c);
                       };
                       const Evaluable G0 = [&](cplx xi) { return g0_image(xi, c); };
                       l.push_back(laplace_eval(G, x, lam, c));
                       rr.push_back(c.qpow(-0.5 * m * (m - 1)) * std::pow(x, m) *
                                    laplace_eval(G0, x * c.qpow(n - m), lam, c));
                     }
                     return eqv(l, rr);
                   }));
  r.push_back(make("RES-OP-3", "op:resum operator rule", s, TolClass::Foundation, lambda_domain(2),
                   [](const ParamPoint& p) {
                     const QContext c = p.ctx();
                     const FormalSeries g = g0_series(c);
                     const cplx lam = p.lambda[0], x = p.lambda[1];
                     Vec l, rr;
                     for (const auto& [m, n] : kShifts) {
                       const cplx a[2] = {lam, x}, b[2] = {lam, x * c.qpow(n)};
                       l.push_back(resum(g.shifted(m, n, c), 1, a, c));
                       rr.push_back(std::pow(x, m) * resum(g, 1, b, c));
                     }
                     return eqv(l, rr);
                   }));
  r.push_back(make("RES-OPN-2", "op:laplace_n operator rule", s, TolClass::Foundation, lambda_domain(3),
                   [](const ParamPoint& p) {
                     const QContext c = p.ctx();
                     const int N = 2;
                     Vec l, rr;
                     for (const auto& [m, n] : kShifts) {
                       const Evaluable G = [&, m, n](cplx xi) {
                         return std::pow(xi, m) * g0_image(xi * c.qpow(n), c);
                       };
                       const Evaluable G0 = [&](cplx xi) { return g0_image(xi, c); };
                       Vec lam = p.lambda;
                       l.push_back(laplace_n_eval(G, lam, c));
                       lam[2] *= c.qpow(n - N * m);
                       rr.push_back(c.qpow(-0.5 * N * m * (m - 1)) * std::pow(p.lambda[2], m) * laplace_n_eval(G0, lam, c));
                     }
                     return eqv(l, rr);
                   }));
  r.push_back(make("RES-OPN-3", "op:resum_n operator rule", s, TolClass::Foundation, lambda_domain(3),
                   [](const ParamPoint& p) {
                     const QContext c = p.ctx();
                     const FormalSeries g = f_tilde_N(c.qpow(p.alpha), 2, c);
                     Vec l, rr;
                     for (const auto& [m, n] : kShifts) {
                       Vec lam = p.lambda;
                       l.push_back(resum(g.shifted(m, n, c), 2, lam, c));
                       lam[2] *= c.qpow(n);
                       rr.push_back(std::pow(p.lambda[2], m) * resum(g, 2, lam, c));
                     }
                     return eqv(l, rr);
                   }));
  r.push_back(make("RES-BOREL-COMP", "op:borel_transform order", s, TolClass::Tight, DomainSpec{},
                   [](const ParamPoint& p) {
                     const QContext c = p.ctx();
                     const FormalSeries g = f_tilde_N(c.qpow(p.alpha), 3, c);
                     const FormalSeries plain = FormalSeries::from_coefficients([g](int n) { return g.coefficient(n); });
                     Vec l = coefficients(borel_transform(g, c, 3), 10);
                     Vec rr = coefficients(borel_transform(borel_transform(borel_transform(plain, c), c), c), 10);
                     for (std::size_t i = 0; i < l.size(); ++i) {
                       const double sc = std::max(std::abs(rr[i]), 1e-300);
                       l[i] /= sc;
                       rr[i] /= sc;
                     }
                     return eqv(l, rr);
                   }));
  r.push_back(make("RES-COMP", "op:laplace_n composition", s, TolClass::Series, lambda_domain(3),
                   [](const ParamPoint& p) {
                     const QContext c = p.ctx();
                     const Evaluable G = [&](cplx xi) { return g0_image(xi, c); };
                     const cplx l0 = p.lambda[0];
                     const Evaluable inner = [&](cplx x) { return laplace_eval(G, x, l0, c); };
                     return eq(laplace_n_eval(G, p.lambda, c), laplace_eval(inner, p.lambda[2], p.lambda[1], c));
                   }));
}

void add_resummations(Registry& r, const std::string& s) {
  r.push_back(make("RES-MONO", "mono summation", s, TolClass::Tight, lambda_domain(2), [](const ParamPoint& p) {
    const QContext c = p.ctx();
    const cplx lam[2] = {p.lambda[0], p.lambda[1]};
    Vec l, rr;
    for (int m = 0; m <= 5; ++m) {
      l.push_back(resum(FormalSeries::monomial(m), 1, lam, c));
      rr.push_back(std::pow(lam[1], m));
    }
    return eqv(l, rr);
  }));
  r.push_back(make("RES-LAMBDA", "op:resum lambda independence", s, TolClass::Foundation, lambda_domain(3),
                   [](const ParamPoint& p) {
                     const QContext c = p.ctx();
                     const FormalSeries g = FormalSeries::polynomial({1.0, -2.0, 0.5, I});
                     const cplx a[2] = {p.lambda[0], p.lambda[2]}, b[2] = {p.lambda[1], p.lambda[2]};
                     return eq(resum(g, 1, a, c), resum(g, 1, b, c));
                   }));
  r.push_back(make("RES-MU", "op:g0 resummation", s, TolClass::Series, u_domain(2), [](const ParamPoint& p) {
    const QContext c = p.ctx();
    const cplx u = p.u[0], v = p.u[1];
    const cplx lam[2] = {-e2pi(u), e2pi(u - v)};
    return eq(-I * epi(u - v) * c.qpow(-1.0 / 8) * resum(g0_series(c), 1, lam, c), mu_zwegers(u, v, c));
  }));
  r.push_back(make("RES-G0-CLOSED", "op:g0 resummation closed form", s, TolClass::Series, lambda_domain(2),
                   [](const ParamPoint& p) {
                     const QContext c = p.ctx();
                     const cplx lam = p.lambda[0], x = p.lambda[1];
                     const cplx pair[2] = {lam, x};
                     const cplx closed =
                         bilateral_sum(
                             [&](int n) {
                               const double dn = n;
                               return std::pow(lam / x, dn) * c.qpow(0.5 * dn * (dn + 1)) / (1.0 + lam * c.qpow(dn));
                             },
                             c.trunc()) /
                         theta_q(x / lam, c);
                     return eq(resum(g0_series(c), 1, pair, c), closed);
                   }));
  r.push_back(make("RES-FACT", "factorized eq", s, TolClass::Series, lambda_domain(2), [](const ParamPoint& p) {
    const QContext c = p.ctx();
    const cplx q = c.q(), lam = p.lambda[0], x = p.lambda[1];
    const auto F = [&](cplx y) {
      const cplx pair[2] = {lam, y};
      return resum(g0_series(c), 1, pair, c);
    };
    return eq(F(q * q * x) - (1.0 - x * q) * F(q * x), x * F(x));
  }));
  r.push_back(make("RES-MUAEQ", "eq: mua equation", s, TolClass::Series, lambda_domain(2), [](const ParamPoint& p) {
    const QContext c = p.ctx();
    const cplx a = c.qpow(p.alpha), lam = p.lambda[0];
    const cplx w = std::log(p.lambda[1]) / (2 * pi * I);
    const auto F = [&](cplx ww) {
      const cplx pair[2] = {lam, e2pi(ww)};
      return epi(p.alpha * ww) * resum(f_tilde_0(a, c), 1, pair, c);
    };
    const cplx x = e2pi(w), q = c.q();
    return eq(F(w + 2.0 * p.tau) - (1.0 - x * q) * c.qpow(0.5 * p.alpha) * F(w + p.tau), x * q * F(w));
  }));
  {
    DomainSpec d = u_domain(2, [](const ParamPoint& p) { return Vec{p.u[0] - p.alpha * p.tau}; });
    r.push_back(make("RES-GENMU", "func: mua div sol", s, TolClass::Series, d, [](const ParamPoint& p) {
      const QContext c = p.ctx();
      const cplx u = p.u[0], v = p.u[1], al = p.alpha;
      const cplx lam[2] = {-e2pi(u), e2pi(u - v)};
      return eq(-I * c.qpow(-1.0 / 8) * epi(al * (u - v)) * resum(f_tilde_0(c.qpow(al), c), 1, lam, c),
                mu_generalized(u, v, al, c));
    }));
  }
  for (int N : {1, 2}) {
    r.push_back(make(nid("RES-QBFN", N), "eq: qB and fN", s, TolClass::Series, lambda_domain(N + 1),
                     [N](const ParamPoint& p) {
                       const QContext c = p.ctx();
                       const cplx a = c.qpow(p.alpha);
                       Vec xs{p.lambda[0]};
                       for (int j = 1; j <= N; ++j)
                         xs.push_back(p.lambda[static_cast<std::size_t>(j)] / p.lambda[static_cast<std::size_t>(j - 1)]);
                       return eq(resum(f_tilde_N(a, N, c), N, p.lambda, c), fN_eval(xs, a, c));
                     }));
    r.push_back(make(nid("RES-GMMU", N), "eq: GMmu", s, TolClass::Series, lambda_domain(N + 1),
                     [N](const ParamPoint& p) {
                       const QContext c = p.ctx();
                       const cplx a = c.qpow(p.alpha), x = p.lambda.back();
                       const FormalSeries g = f_tilde_N(a, N, c);
                       Vec t;
                       for (int k = 0; k <= N + 1; ++k) {
                         Vec lam = p.lambda;
                         lam.back() *= c.qpow(k);
                         t.push_back(resum(g, N, lam, c));
                       }
                       const auto k = [&](int i) { return t[static_cast<std::size_t>(i)]; };
                       return eq(k(N + 1) + a * x * k(1), k(N) + x * k(0));
                     }));
    // the display resums tilde f_0; only tilde f_N is consistent with the f_N form
    for (const bool printed : {true, false})
      r.push_back(reading(
          make("", "eq: mul mua and qB", s, TolClass::Series, u_domain(N + 1),
               [N, printed](const ParamPoint& p) {
                 const QContext c = p.ctx();
                 const cplx a = c.qpow(p.alpha);
                 Vec lam;
                 cplx acc = 0.0;
                 for (int j = 0; j <= N; ++j) {
                   acc += p.u[static_cast<std::size_t>(j)];
                   lam.push_back((j % 2 ? 1.0 : -1.0) * e2pi(acc));
                 }
                 const FormalSeries g = printed ? f_tilde_0(a, c) : f_tilde_N(a, N, c);
                 return eq(hat_muN_eval(p.u, p.alpha, c),
                           std::pow(I, N) * epi(p.alpha * p.u_sum()) * c.qpow(-N / 8.0) * resum(g, N, lam, c));
               }),
          nid("RES-MULMUA-QB", N), printed ? "f0" : "fN"));
  }
}

}  // namespace

void add_borel(Registry& r) {
  const std::string s = "borel";
  add_operator_rules(r, s);
  add_resummations(r, s);
}

}  // namespace mulab::ident
