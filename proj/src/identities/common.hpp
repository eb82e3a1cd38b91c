#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "mulab/identities.hpp"

namespace mulab::ident {

using Vec = std::vector<cplx>;
using Mat = std::vector<Vec>;
using Registry = std::vector<IdentitySpec>;

inline Sides eq(cplx l, cplx r) { return {{l}, {r}}; }
inline Sides eqv(Vec l, Vec r) { return {std::move(l), std::move(r)}; }

inline IdentitySpec make(std::string id, std::string tag, std::string suite, TolClass tc, DomainSpec dom,
                         std::function<Sides(const ParamPoint&)> fn) {
  IdentitySpec s;
  s.id = std::move(id);
  s.paper_tag = std::move(tag);
  s.suite = std::move(suite);
  s.tol_class = tc;
  s.tol = tolerance(tc);
  s.domain = std::move(dom);
  s.sides = std::move(fn);
  return s;
}

// Marks s as one reading of a display whose correct form is being adjudicated.
inline IdentitySpec reading(IdentitySpec s, std::string group, std::string name) {
  s.group = std::move(group);
  s.reading = std::move(name);
  s.candidate = true;
  s.id = s.group + "." + s.reading;
  return s;
}

// n_u additive variables, each guarded against the zeros of theta, plus extra guarded arguments.
inline DomainSpec u_domain(int n_u, std::function<Vec(const ParamPoint&)> extra = {}) {
  DomainSpec d;
  d.n_u = n_u;
  d.guarded = [extra](const ParamPoint& p) {
    Vec g = p.u;
    if (extra) {
      const Vec e = extra(p);
      g.insert(g.end(), e.begin(), e.end());
    }
    return g;
  };
  return d;
}

inline DomainSpec modular(DomainSpec d) {
  d.tau_box = DomainSpec::modular_tau_box();
  return d;
}

inline Vec shifted(Vec us, std::size_t r, cplx d) {
  us[r] += d;
  return us;
}

inline Vec scaled(const Vec& us, cplx c) {
  Vec out;
  for (const cplx u : us) out.push_back(u * c);
  return out;
}

inline cplx zeta(int n, double k) { return e2pi(k / n); }

inline Vec mat_apply(const Mat& m, const Vec& v) {
  Vec out(m.size(), 0.0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat out(n, Vec(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

template <class F>
Mat matrix(int n, F entry) {
  Mat m(static_cast<std::size_t>(n), Vec(static_cast<std::size_t>(n), 0.0));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) m[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = entry(j, k);
  return m;
}

inline Vec axpy(cplx a, const Vec& x, const Vec& y) {
  Vec out = y;
  for (std::size_t i = 0; i < x.size(); ++i) out[i] += a * x[i];
  return out;
}

inline Vec scale(cplx a, Vec x) {
  for (auto& v : x) v *= a;
  return x;
}

inline std::string nid(const std::string& base, int N) { return base + ".N" + std::to_string(N); }

// 1phi1(A; 0; q; x) with terms (A)_n/(q)_n (-1)^n q^{n(n-1)/2} x^n
cplx phi11(cplx A, cplx x, const QContext& ctx);

struct Scaled {
  cplx log_scale;
  cplx value;
};

// phi11(A, x q^m) = exp(log_scale) value; for m = -k < 0 the growth (-x)^k q^{-k(k+1)/2} is split off
Scaled phi11_shifted(cplx A, cplx x, int m, const QContext& ctx);

void add_theta(Registry& r);
void add_mu(Registry& r);
void add_genmu(Registry& r);
void add_mulmu(Registry& r);
void add_vector(Registry& r);
void add_completion(Registry& r);
void add_modular(Registry& r);
void add_borel(Registry& r);
void add_appendix(Registry& r);

}  // namespace mulab::ident
