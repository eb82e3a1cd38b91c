#include <algorithm>

#include "identities/common.hpp"
#include "mulab/mu.hpp"
#include "mulab/summation.hpp"

namespace mulab::ident {

namespace {

// x_j = -e^{2 pi i w_j}; theta_q(x_j) vanishes exactly when w_j is a lattice point
Vec xs_of(const ParamPoint& p) {
  Vec xs;
  for (const cplx w : p.w) xs.push_back(-e2pi(w));
  return xs;
}

cplx prod(const Vec& v) {
  cplx r = 1.0;
  for (const cplx x : v) r *= x;
  return r;
}

DomainSpec f_domain(int n_x, std::function<Vec(const ParamPoint&)> ratios = {}) {
  DomainSpec d;
  d.n_w = n_x;
  d.guarded = [](const ParamPoint& p) { return p.w; };
  if (ratios) d.guarded_ratios = std::move(ratios);
  return d;
}

// the y-deformation ratios x_0/y and x_N y
Vec y_ratios(const ParamPoint& p) {
  const Vec xs = xs_of(p);
  return {xs.front() / p.y, xs.back() * p.y};
}

Vec a_ratios(const ParamPoint& p) {
  const QContext c = p.ctx();
  Vec out;
  for (const cplx x : xs_of(p)) out.push_back(c.qpow(p.alpha) * x);
  return out;
}

cplx fN(const Vec& xs, cplx a, const QContext& c) { return fN_eval(xs, a, c); }

// sum over Z^{N-1} of prod x_j^{-n_j} q^{n_j(n_j+1)/2}/theta_q(x_j) f_1(x_0 q^{|n|}, x_N)
cplx fN_by_slices(const Vec& xs, cplx a, const QContext& c) {
  const int N = static_cast<int>(xs.size()) - 1;
  std::vector<IndexCache<cplx>> factor;
  for (int j = 1; j < N; ++j) {
    const cplx xj = xs[static_cast<std::size_t>(j)], th = theta_q(xj, c), lx = std::log(xj);
    factor.emplace_back([=, tau = c.tau()](int n) {
      const double dn = n;
      return std::exp(-dn * lx + pi * I * tau * dn * (dn + 1)) / th;
    });
  }
  IndexCache<cplx> slice([&](int m) { return f1_eval(xs[0] * c.qpow(m), xs.back(), a, c); });
  return lattice_sum(
      N - 1,
      [&](std::span<const int> n) {
        int m = 0;
        cplx t = 1.0;
        for (std::size_t j = 0; j < n.size(); ++j) {
          m += n[j];
          t *= factor[j](n[j]);
        }
        return t * slice(m);
      },
      c.trunc());
}

// the theta-series correction of the y-deformation; a = q collapses the 1phi1 factors
Sides fN_y_shift(const Vec& xs, cplx a, bool a_is_q, const ParamPoint& p) {
  const QContext c = p.ctx();
  const int N = static_cast<int>(xs.size()) - 1;
  const cplx q = c.q(), y = p.y, x0 = xs[0], xN = xs.back();
  const auto th = [&](cplx x) { return theta_q(x, c); };
  cplx pre;
  if (a_is_q) {
    pre = std::pow(qpoch_inf(q, c), 3) * th(-y) * th(-xN * y / x0) / (th(y / x0) * th(xN * y));
    for (const cplx x : xs) pre /= th(x);
  } else {
    pre = qpoch_inf(q, c) * th(-a) * th(-y) * th(-xN * y / x0) /
          (qpoch_inf(q / a, c) * th(y / x0) * th(xN * y) * th(x0) * th(xN));
  }
  const SymMatrix S = SymMatrix::hat(std::max(1, N - 1));
  std::vector<double> nv(static_cast<std::size_t>(std::max(0, N - 1)));
  Vec log_ratio, inner_theta;
  for (int j = 1; j < N; ++j) {
    log_ratio.push_back(std::log(-x0 * xN / xs[static_cast<std::size_t>(j)]));
    inner_theta.push_back(a_is_q ? 1.0 : th(xs[static_cast<std::size_t>(j)]));
  }
  IndexCache<Scaled> phi([&](int m) { return a_is_q ? Scaled{0.0, 1.0} : phi11_shifted(q / a, a * x0 * xN, m, c); });
  const cplx sum = lattice_sum(
      N - 1,
      [&](std::span<const int> n) {
        int m = 0;
        cplx expo = 0.0, t = 1.0;
        for (std::size_t j = 0; j < n.size(); ++j) {
          m += n[j];
          nv[j] = n[j];
          expo += static_cast<double>(n[j]) * log_ratio[j];
          t /= inner_theta[j];
        }
        const double quad = n.empty() ? 0.0 : S.quadratic(nv);
        const Scaled f = phi(m);
        return t * std::exp(expo + pi * I * p.tau * quad + f.log_scale) * f.value;
      },
      c.trunc());
  Vec w = xs;
  w.front() /= y;
  w.back() *= y;
  return eq(fN(xs, a, c), fN(w, a, c) + pre * sum);
}

Vec q_shift(Vec xs, std::size_t r, const QContext& c) {
  xs[r] *= c.q();
  return xs;
}

Sides shift_symmetry(const Vec& xs, cplx a, const QContext& c) {
  Vec l, rr;
  const cplx ref = fN(q_shift(xs, xs.size() - 1, c), a, c);
  for (std::size_t j = 0; j + 1 < xs.size(); ++j) {
    l.push_back(fN(q_shift(xs, j, c), a, c));
    rr.push_back(ref);
  }
  return eqv(l, rr);
}

Sides permutation_symmetry(const Vec& xs, cplx a, const QContext& c) {
  Vec rev(xs.rbegin(), xs.rend()), rot = xs;
  std::rotate(rot.begin(), rot.begin() + 1, rot.end());
  const cplx f = fN(xs, a, c);
  return eqv({fN(rev, a, c), fN(rot, a, c)}, {f, f});
}

void add_f1(Registry& r, const std::string& s) {
  const auto Y = [](const ParamPoint& p) {
    const Vec xs = xs_of(p);
    return Vec{xs[0] / p.y, xs[1] * p.y, p.y};
  };
  r.push_back(make("F1-1", "eq: f1 1", s, TolClass::Series, f_domain(2, Y), [](const ParamPoint& p) {
    const QContext c = p.ctx();
    const Vec x = xs_of(p);
    const cplx q = c.q(), a = c.qpow(p.alpha), y = p.y;
    const auto th = [&](cplx v) { return theta_q(v, c); };
    const cplx k = qpoch_inf(q, c) * th(-a) * th(-y) * th(-x[1] * y / x[0]) /
                   (qpoch_inf(q / a, c) * th(x[0]) * th(x[1]) * th(y / x[0]) * th(x[1] * y));
    return eq(f1_eval(x[0], x[1], a, c), f1_eval(x[0] / y, x[1] * y, a, c) + k * phi11(q / a, a * x[0] * x[1], c));
  }));
  r.push_back(make("F1-2", "eq: f1 2", s, TolClass::Series, f_domain(2), [](const ParamPoint& p) {
    const QContext c = p.ctx();
    const Vec x = xs_of(p);
    const cplx a = c.qpow(p.alpha);
    return eq(f1_eval(x[0] * c.q(), x[1], a, c), f1_eval(x[0], x[1] * c.q(), a, c));
  }));
  r.push_back(make("F1-3", "eq: f1 3", s, TolClass::Series, f_domain(2), [](const ParamPoint& p) {
    const QContext c = p.ctx();
    const Vec x = xs_of(p);
    const cplx a = c.qpow(p.alpha);
    return eq(f1_eval(x[0], x[1], a, c), f1_eval(x[1], x[0], a, c));
  }));
  r.push_back(make("F1-4", "eq: f1 4", s, TolClass::Series, f_domain(2, a_ratios), [](const ParamPoint& p) {
    const QContext c = p.ctx();
    const Vec x = xs_of(p);
    const cplx a = c.qpow(p.alpha), q = c.q();
    const cplx k = theta_q(a * x[0], c) * theta_q(a * x[1], c) / (theta_q(x[0], c) * theta_q(x[1], c));
    return eq(f1_eval(x[0], x[1], a, c), k * f1_eval(q / (a * x[0]), q / (a * x[1]), a, c));
  }));

  // q-difference equations in x_0 and a; f(k, l) = f_1(x_0 q^k, x_1; a q^l)
  struct F {
    Vec x;
    cplx a;
    QContext c;
    cplx operator()(int k, int l) const { return f1_eval(x[0] * c.qpow(k), x[1], a * c.qpow(l), c); }
    cplx X() const { return x[0] * x[1]; }
  };
  const auto mk = [](const ParamPoint& p) {
    const QContext c = p.ctx();
    return F{xs_of(p), c.qpow(p.alpha), c};
  };
  r.push_back(make("F1-Q1", "qeq: f1 1", s, TolClass::Series, f_domain(2), [mk](const ParamPoint& p) {
    const F f = mk(p);
    return eq(f(1, 1) + f.a * f.X() * f(0, 1), f(1, 0));
  }));
  r.push_back(make("F1-Q2", "qeq: f1 2", s, TolClass::Series, f_domain(2), [mk](const ParamPoint& p) {
    const F f = mk(p);
    const cplx a = f.a;
    return eq((1.0 - a + a * a * f.X()) * f(0, 1) + a * f(1, 1), f(0, 0));
  }));
  r.push_back(make("F1-Q3", "qeq: f1 3", s, TolClass::Series, f_domain(2), [mk](const ParamPoint& p) {
    const F f = mk(p);
    const cplx a = f.a;
    return eq((1.0 - a + a * a * f.X()) * f(1, 0) - (1.0 - a) * f(1, 1), a * f.X() * f(0, 0));
  }));
  r.push_back(make("F1-Q4", "qeq: f1 4", s, TolClass::Series, f_domain(2), [mk](const ParamPoint& p) {
    const F f = mk(p);
    return eq((1.0 - f.a) * f(0, 1) + f.a * f(1, 0), f(0, 0));
  }));
  r.push_back(make("F1-Q5", "qeq: f1 5", s, TolClass::Series, f_domain(2), [mk](const ParamPoint& p) {
    const F f = mk(p);
    return eq(f(2, 0), (1.0 - f.a * f.X()) * f(1, 0) + f.X() * f(0, 0));
  }));
  // (1 - aq) T_a^2 - (1 + (1 - a + a^2 X) q) T_a + c0 with c0 = 1 as printed, q as derived
  for (const bool printed : {true, false})
    r.push_back(reading(make("", "qeq: f1 6", s, TolClass::Series, f_domain(2),
                             [mk, printed](const ParamPoint& p) {
                               const F f = mk(p);
                               const cplx a = f.a, q = f.c.q();
                               const cplx c0 = printed ? cplx(1.0) : q;
                               return eq((1.0 - a * q) * f(0, 2) + c0 * f(0, 0),
                                         (1.0 + (1.0 - a + a * a * f.X()) * q) * f(0, 1));
                             }),
                        "F1-Q6", printed ? "printed" : "corrected"));
}

void add_fN(Registry& r, const std::string& s, int N) {
  const int n_x = N + 1;
  const auto A = [](const ParamPoint& p) { return p.ctx().qpow(p.alpha); };
  r.push_back(make(nid("FN-1", N), "eq: fN 1", s, TolClass::Series, f_domain(n_x), [A](const ParamPoint& p) {
    const QContext c = p.ctx();
    const Vec x = xs_of(p);
    return eq(fN(x, A(p), c), fN_by_slices(x, A(p), c));
  }));
  r.push_back(make(nid("FN-2", N), "eq: fN 2", s, TolClass::Series, f_domain(n_x, y_ratios),
                   [A](const ParamPoint& p) { return fN_y_shift(xs_of(p), A(p), false, p); }));
  r.push_back(make(nid("FN-3", N), "eq: fN 3", s, TolClass::Series, f_domain(n_x),
                   [A](const ParamPoint& p) { return shift_symmetry(xs_of(p), A(p), p.ctx()); }));
  r.push_back(make(nid("FN-4", N), "eq: fN 4", s, TolClass::Series, f_domain(n_x),
                   [A](const ParamPoint& p) { return permutation_symmetry(xs_of(p), A(p), p.ctx()); }));
  r.push_back(make(nid("FN-5", N), "eq: fN 5", s, TolClass::Series, f_domain(n_x, a_ratios), [A](const ParamPoint& p) {
    const QContext c = p.ctx();
    const Vec x = xs_of(p);
    const cplx a = A(p);
    cplx k = 1.0;
    Vec inv;
    for (const cplx v : x) {
      k *= theta_q(a * v, c) / theta_q(v, c);
      inv.push_back(c.q() / (a * v));
    }
    return eq(fN(x, a, c), k * fN(inv, a, c));
  }));
  r.push_back(make(nid("FN-6", N), "eq: fN 6", s, TolClass::Series, f_domain(n_x), [A](const ParamPoint& p) {
    const QContext c = p.ctx();
    const Vec x = xs_of(p);
    const cplx a = A(p);
    return eq((1.0 - a) * fN(x, a * c.q(), c) + a * fN(q_shift(x, 0, c), a, c), fN(x, a, c));
  }));
  r.push_back(make(nid("FN-7", N), "eq: fN 7", s, TolClass::Series, f_domain(n_x), [A, N](const ParamPoint& p) {
    const QContext c = p.ctx();
    const Vec x = xs_of(p);
    const cplx a = A(p), X = prod(x);
    Vec t;
    for (int k = 0; k <= N + 1; ++k) {
      Vec w = x;
      w[0] *= c.qpow(k);
      t.push_back(fN(w, a, c));
    }
    return eq(t[static_cast<std::size_t>(N + 1)] + a * X * t[1], t[static_cast<std::size_t>(N)] + X * t[0]);
  }));

  // a = q
  r.push_back(make(nid("FNQ-1", N), "eq: fNq 1", s, TolClass::Series, f_domain(n_x), [](const ParamPoint& p) {
    const QContext c = p.ctx();
    const Vec x = xs_of(p);
    return eq(fN(x, c.q(), c), fN_by_slices(x, c.q(), c));
  }));
  r.push_back(make(nid("FNQ-2", N), "eq: fNq 2", s, TolClass::Series, f_domain(n_x, y_ratios),
                   [](const ParamPoint& p) { return fN_y_shift(xs_of(p), p.ctx().q(), true, p); }));
  r.push_back(make(nid("FNQ-3", N), "eq: fNq 3", s, TolClass::Series, f_domain(n_x), [](const ParamPoint& p) {
    const QContext c = p.ctx();
    return shift_symmetry(xs_of(p), c.q(), c);
  }));
  r.push_back(make(nid("FNQ-4", N), "eq: fNq 4", s, TolClass::Series, f_domain(n_x), [](const ParamPoint& p) {
    const QContext c = p.ctx();
    return permutation_symmetry(xs_of(p), c.q(), c);
  }));
  r.push_back(make(nid("FNQ-5", N), "eq: fNq 5", s, TolClass::Series, f_domain(n_x), [](const ParamPoint& p) {
    const QContext c = p.ctx();
    const Vec x = xs_of(p);
    Vec inv;
    for (const cplx v : x) inv.push_back(1.0 / v);
    return eq(fN(inv, c.q(), c), prod(x) * fN(x, c.q(), c));
  }));
  r.push_back(make(nid("FNQ-6", N), "eq: fNq 6", s, TolClass::Series, f_domain(n_x), [N](const ParamPoint& p) {
    const QContext c = p.ctx();
    const Vec x = xs_of(p);
    Vec w = x;
    w[0] *= c.qpow(N);
    return eq(fN(w, c.q(), c), -prod(x) * fN(x, c.q(), c) + 1.0);
  }));
}

}  // namespace

void add_genmu(Registry& r) {
  const std::string s = "genmu";
  const auto gen_domain = [] {
    return u_domain(2, [](const ParamPoint& p) { return Vec{p.u[0] - p.alpha * p.tau}; });
  };
  r.push_back(make("GENMU-A0", "op:mu_generalized alpha=0", s, TolClass::Series, u_domain(2), [](const ParamPoint& p) {
    const QContext c = p.ctx();
    return eq(mu_generalized(p.u[0], p.u[1], 0.0, c), -I * c.qpow(-1.0 / 8));
  }));
  r.push_back(make("GENMU-A1", "op:mu_generalized alpha=1", s, TolClass::Series, u_domain(2), [](const ParamPoint& p) {
    const QContext c = p.ctx();
    return eq(mu_generalized(p.u[0], p.u[1], 1.0, c), mu_zwegers(p.u[0], p.u[1], c));
  }));
  r.push_back(make("GENMU-F1", "relation between the generalized mu function and the function f1", s,
                   TolClass::Series, gen_domain(), [](const ParamPoint& p) {
                     const QContext c = p.ctx();
                     const cplx u = p.u[0], v = p.u[1], al = p.alpha;
                     const cplx f = f1_eval(-e2pi(u - al * p.tau), -e2pi(p.tau - v), c.qpow(al), c);
                     return eq(-I * c.qpow(-1.0 / 8) * epi(al * (u - v)) * f, mu_generalized(u, v, al, c));
                   }));

  // three readings of the N = 1 specialisation; v is u[1]
  {
    const auto lhs = [](const ParamPoint& p, cplx second) {
      const QContext c = p.ctx();
      const Vec us{p.u[0] - p.alpha * p.tau, second};
      return -epi(p.alpha * (p.alpha - 1.0) * p.tau) * hat_muN_eval(us, p.alpha, c);
    };
    r.push_back(reading(make("", "eq: mul mua and mua", s, TolClass::Series, gen_domain(),
                             [lhs](const ParamPoint& p) {
                               return eq(lhs(p, -p.u[1]), mu_generalized(p.u[0], -p.u[1], p.alpha, p.ctx()));
                             }),
                        "MULMUA-MUA", "u1-is-minus-v"));
    r.push_back(reading(make("", "eq: mul mua and mua", s, TolClass::Series, gen_domain(),
                             [lhs](const ParamPoint& p) {
                               return eq(lhs(p, -p.u[1]), mu_generalized(p.u[0], p.u[1], p.alpha, p.ctx()));
                             }),
                        "MULMUA-MUA", "u1-is-v"));
    r.push_back(reading(make("", "eq: mul mua and mua", s, TolClass::Series, gen_domain(),
                             [lhs](const ParamPoint& p) {
                               return eq(lhs(p, p.tau - p.u[1]), mu_generalized(p.u[0], p.u[1], p.alpha, p.ctx()));
                             }),
                        "MULMUA-MUA", "tau-minus-v"));
  }
  for (int N : {1, 2, 3}) {
    r.push_back(make(nid("MULMUA-MU", N), "eq: mul mua and mul mu", s, TolClass::Series, u_domain(N + 1),
                     [](const ParamPoint& p) {
                       const QContext c = p.ctx();
                       return eq(hat_muN_eval(p.u, 1.0, c), muN_eval(p.u, c));
                     }));
    for (const auto rd : {HatMuReading::Printed, HatMuReading::Corrected})
      r.push_back(reading(make("", "op:hat_muN definition", s, TolClass::Series, u_domain(N + 1),
                               [rd](const ParamPoint& p) {
                                 const QContext c = p.ctx();
                                 return eq(hat_muN_definition(p.u, p.alpha, c, rd), hat_muN_eval(p.u, p.alpha, c));
                               }),
                          nid("MULMUA-DEF", N), rd == HatMuReading::Printed ? "printed" : "corrected"));
  }
  r.push_back(reading(make("", "op:muN_eval N=1", s, TolClass::Series, u_domain(2),
                           [](const ParamPoint& p) {
                             const QContext c = p.ctx();
                             return eq(muN_eval(p.u, c), mu_zwegers(p.u[0], -p.u[1], c));
                           }),
                      "MU1-MU", "plus"));
  r.push_back(reading(make("", "op:muN_eval N=1", s, TolClass::Series, u_domain(2),
                           [](const ParamPoint& p) {
                             const QContext c = p.ctx();
                             return eq(muN_eval(p.u, c), -mu_zwegers(p.u[0], -p.u[1], c));
                           }),
                      "MU1-MU", "minus"));

  add_f1(r, s);
  for (int N : {2, 3}) add_fN(r, s, N);
}

}  // namespace mulab::ident
