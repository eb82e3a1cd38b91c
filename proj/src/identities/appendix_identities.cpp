#include <algorithm>

#include "identities/common.hpp"
#include "mulab/borel.hpp"
#include "mulab/qdiff.hpp"

namespace mulab::ident {

namespace {

const std::vector<std::pair<int, int>> kShapes{{1, 0}, {2, 0}, {2, 1}, {3, 1}};

// generic parameters: a_0 follows the sampled alpha, the rest are fixed off the resonant set
QDiffProblem problem(int N, int M, const ParamPoint& p) {
  const QContext c = p.ctx();
  const std::vector<cplx> a_all{c.qpow(p.alpha), -c.qpow(cplx(0.55, -0.1)), I * c.qpow(cplx(0.8, 0.2)),
                                0.7 * c.qpow(0.15)};
  const std::vector<cplx> b_all{0.9 * e2pi(0.07), -I * c.qpow(cplx(0.45, 0.1))};
  return QDiffProblem(N, M, {a_all.begin(), a_all.begin() + N + 1}, {b_all.begin(), b_all.begin() + M + 1}, c);
}

std::string shape_id(const std::string& base, int N, int M) {
  return base + ".N" + std::to_string(N) + "M" + std::to_string(M);
}

// the arguments of every theta_q in a denominator
DomainSpec theta_domain(int n_lambda, std::function<Vec(const ParamPoint&)> dens) {
  DomainSpec d;
  d.n_lambda = n_lambda;
  d.guarded_ratios = std::move(dens);
  return d;
}

Vec chain_dens(const ParamPoint& p) {
  Vec r{-p.lambda[0]};
  for (std::size_t j = 1; j < p.lambda.size(); ++j) r.push_back(p.lambda[j] / p.lambda[j - 1]);
  return r;
}

Vec xs_dens(const ParamPoint& p) {
  Vec r;
  for (const cplx x : p.lambda) r.push_back(-x);
  return r;
}

cplx th(cplx x, const QContext& c) { return theta_q(x, c); }

cplx poch(cplx x, const QContext& c) { return qpoch_inf(x, c); }

void add_solutions(Registry& r, const std::string& s) {
  for (const auto& [N, M] : kShapes) {
    r.push_back(make(shape_id("APP-CONV", N, M), "conv solution", s, TolClass::Series,
                     theta_domain(1, [](const ParamPoint& p) { return Vec{p.lambda[0]}; }),
                     [N, M](const ParamPoint& p) {
                       const QDiffProblem pr = problem(N, M, p);
                       Vec l, rr;
                       for (int j = 0; j <= N; ++j) {
                         const auto o = apply_operator(
                             pr, [&](cplx x) { return convergent_solution(pr, j, x); }, p.lambda[0]);
                         l.push_back(o.lhs);
                         rr.push_back(o.rhs);
                       }
                       return eqv(l, rr);
                     }));
    r.push_back(make(shape_id("APP-CONN", N, M), "lem: qK CP", s, TolClass::Series,
                     theta_domain(N - M + 1,
                                  [N, M](const ParamPoint& p) {
                                    Vec d = chain_dens(p);
                                    d.erase(d.begin());
                                    const QDiffProblem pr = problem(N, M, p);
                                    for (const cplx b : pr.b) d.push_back(-std::pow(b, N - M) * p.lambda[0]);
                                    return d;
                                  }),
                     [N, M](const ParamPoint& p) {
                       const QDiffProblem pr = problem(N, M, p);
                       Vec l, rr;
                       for (int k = 0; k <= M; ++k) {
                         l.push_back(resummed_solution(pr, k, p.lambda));
                         rr.push_back(connection_rhs(pr, k, p.lambda));
                       }
                       return eqv(l, rr);
                     }));
  }
}

// sum_m (a_j)_m ({a_j/b_s})_m / ({a_j q/a_r}_{r != j})_m (q)_m z^m
cplx inner_series(const QDiffProblem& pr, int j, cplx z) {
  const cplx aj = pr.a[static_cast<std::size_t>(j)];
  HyperTerms h{{aj}, {}, 0};
  for (std::size_t s = 1; s < pr.b.size(); ++s) h.upper.push_back(aj / pr.b[s]);
  for (std::size_t k = 0; k < pr.a.size(); ++k)
    if (static_cast<int>(k) != j) h.lower.push_back(aj * pr.ctx.q() / pr.a[k]);
  return hypergeometric_sum(h, z, pr.ctx);
}

void add_phi_tilde(Registry& r, const std::string& s) {
  for (const auto& [N, M] : std::vector<std::pair<int, int>>{{1, 0}, {2, 0}}) {
    r.push_back(make(shape_id("APP-TPHI-QB", N, M), "eq: tphi qB", s, TolClass::Series,
                     theta_domain(N - M + 1, chain_dens), [N, M](const ParamPoint& p) {
                       const QDiffProblem pr = problem(N, M, p);
                       const QContext& c = pr.ctx;
                       HyperTerms h{pr.a, {}, 0};
                       for (std::size_t k = 1; k < pr.b.size(); ++k) h.lower.push_back(pr.b[k] * c.q());
                       const Evaluable G = [&](cplx xi) { return hypergeometric_sum(h, xi * c.qpow(-(N - M)), c); };
                       Vec xs{p.lambda[0]};
                       for (std::size_t l = 1; l < p.lambda.size(); ++l) xs.push_back(-p.lambda[l] / p.lambda[l - 1]);
                       return eq(laplace_n_eval(G, p.lambda, c), n_tilde_phi_M(pr, xs));
                     }));
  }
  for (const auto& [N, M] : std::vector<std::pair<int, int>>{{1, 0}, {2, 0}, {2, 1}}) {
    const int n_x = N - M + 1;
    r.push_back(make(shape_id("APP-A1-1", N, M), "prop: appendix 1", s, TolClass::Series, theta_domain(n_x, xs_dens),
                     [N, M](const ParamPoint& p) {
                       const QDiffProblem pr = problem(N, M, p);
                       QDiffProblem rev = pr;
                       std::reverse(rev.a.begin(), rev.a.end());
                       const Vec xr(p.lambda.rbegin(), p.lambda.rend());
                       const cplx base = n_tilde_phi_M(pr, p.lambda);
                       return eqv({n_tilde_phi_M(pr, xr), n_tilde_phi_M(rev, p.lambda)}, {base, base});
                     }));
    r.push_back(make(shape_id("APP-A1-2", N, M), "prop: appendix 1", s, TolClass::Series, theta_domain(n_x, xs_dens),
                     [N, M](const ParamPoint& p) {
                       const QDiffProblem pr = problem(N, M, p);
                       Vec bs{1.0};
                       bs.insert(bs.end(), pr.b.begin() + 1, pr.b.end());
                       Vec P(static_cast<std::size_t>(N - M), 0.0);
                       const Vec tail = linear_factor_product(bs);
                       P.insert(P.end(), tail.begin(), tail.end());
                       const Vec Q = linear_factor_product(pr.a);
                       cplx X = 1.0;
                       for (const cplx x : p.lambda) X *= x;
                       const auto at = [&](int k) {
                         Vec w = p.lambda;
                         w.back() *= pr.ctx.qpow(k);
                         return n_tilde_phi_M(pr, w);
                       };
                       cplx lhs = 0.0, rhs = 0.0;
                       for (std::size_t k = 0; k < std::max(P.size(), Q.size()); ++k) {
                         const cplx v = at(static_cast<int>(k));
                         if (k < P.size()) lhs += P[k] * v;
                         if (k < Q.size()) rhs += Q[k] * v;
                       }
                       return eq(lhs, ((N - M) % 2 ? -1.0 : 1.0) * X * rhs);
                     }));
    r.push_back(make(shape_id("APP-A1-3", N, M), "tildephi", s, TolClass::Series,
                     [n_x] {
                       DomainSpec d = theta_domain(n_x, [](const ParamPoint& p) {
                         Vec g = xs_dens(p);
                         g.push_back(-p.y / p.lambda[0]);
                         g.push_back(-p.lambda[1] * p.y);
                         g.push_back(-p.lambda[0] / p.y);
                         return g;
                       });
                       return d;
                     }(),
                     [N, M](const ParamPoint& p) {
                       const QDiffProblem pr = problem(N, M, p);
                       const QContext& c = pr.ctx;
                       const Vec& x = p.lambda;
                       const cplx y = p.y;
                       Vec w = x;
                       w[0] /= y;
                       w[1] *= y;
                       cplx pre = th(-y, c) * th(-x[1] * y / x[0], c) / (th(-y / x[0], c) * th(-x[1] * y, c));
                       cplx z = std::pow(c.q(), N + 1);
                       for (const cplx xv : x) {
                         pre /= th(-xv, c);
                         z /= xv;
                       }
                       for (std::size_t k = 1; k < pr.b.size(); ++k) z *= pr.b[k];
                       for (const cplx a : pr.a) z /= a;
                       cplx sum = 0.0;
                       for (int j = 0; j <= N; ++j) {
                         const cplx aj = pr.a[static_cast<std::size_t>(j)];
                         cplx k = th(-aj, c) * th(-aj * x[0] * x[1], c);
                         for (std::size_t l = 2; l < x.size(); ++l) k *= th(-aj * x[l], c);
                         for (std::size_t s2 = 1; s2 < pr.b.size(); ++s2)
                           k *= poch(pr.b[s2] * c.q() / aj, c) / poch(pr.b[s2] * c.q(), c);
                         for (int r2 = 0; r2 <= N; ++r2)
                           if (r2 != j)
                             k *= poch(pr.a[static_cast<std::size_t>(r2)], c) /
                                  poch(pr.a[static_cast<std::size_t>(r2)] / aj, c);
                         sum += k * inner_series(pr, j, z);
                       }
                       return eq(n_tilde_phi_M(pr, x) - n_tilde_phi_M(pr, w), pre * sum);
                     }));
  }
}

void add_riemann(Registry& r, const std::string& s) {
  // lambda = (a, x_0, x_1), y from the point
  const auto dom = theta_domain(3, [](const ParamPoint& p) {
    const cplx x0 = p.lambda[1], x1 = p.lambda[2], y = p.y;
    return Vec{-x0, -x1, x1, -y / x0, -x1 * y, -x0 / y};
  });
  for (const bool printed : {true, false})
    r.push_back(reading(make("", "tildephi", s, TolClass::Series, dom,
                             [printed](const ParamPoint& p) {
                               const QContext c = p.ctx();
                               const cplx a = p.lambda[0], x0 = p.lambda[1], x1 = p.lambda[2], y = p.y;
                               const cplx lhs =
                                   th(-a * x0, c) * th(-a * x1, c) / (th(-x0, c) * th(-x1, c)) -
                                   th(-a * x0 / y, c) * th(-a * x1 * y, c) / (th(-x0 / y, c) * th(-x1 * y, c));
                               const cplx d1 = printed ? th(x1, c) : th(-x1, c);
                               const cplx rhs = th(-a, c) * th(-y, c) * th(-a * x0 * x1, c) * th(-x1 * y / x0, c) /
                                                (th(-x0, c) * d1 * th(-y / x0, c) * th(-x1 * y, c));
                               return eq(lhs, rhs);
                             }),
                        "APP-RIEMANN", printed ? "printed" : "corrected"));
}

}  // namespace

void add_appendix(Registry& r) {
  const std::string s = "appendix";
  const auto first = static_cast<std::ptrdiff_t>(r.size());
  add_solutions(r, s);
  add_phi_tilde(r, s);
  add_riemann(r, s);
  // theta quotients throughout, except for the plain operator residuals
  for (auto it = r.begin() + first; it != r.end(); ++it)
    if (!it->id.starts_with("APP-CONV")) it->tol = 1e-8;
}

}  // namespace mulab::ident
