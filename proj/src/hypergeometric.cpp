#include "mulab/hypergeometric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mulab {

namespace {

constexpr double vanish_tol = 1e-13;
constexpr int max_terms = 200000;
constexpr double direct_radius = 0.5;

// t_{n+1}/t_n
cplx term_ratio(const HyperTerms& h, cplx z, int n, cplx qn, const QContext& ctx) {
  cplx r = z / (1.0 - qn * ctx.q());
  for (const cplx a : h.upper) r *= 1.0 - a * qn;
  for (const cplx b : h.lower) {
    const cplx d = 1.0 - b * qn;
    if (std::abs(d) < vanish_tol)
      throw PoleInDenominator("lower parameter hits q^{-" + std::to_string(n) + "}");
    r /= d;
  }
  if (h.power != 0) r *= std::pow(-qn, h.power);
  return r;
}

std::optional<int> termination(const HyperTerms& h, const QContext& ctx) {
  std::optional<int> best;
  for (const cplx a : h.upper) {
    const auto m = terminating_index(a, ctx);
    if (m && (!best || *m < *best)) best = m;
  }
  return best;
}

cplx finite_sum(const HyperTerms& h, cplx z, int last, const QContext& ctx) {
  cplx t = 1.0, s = 1.0, qn = 1.0;
  for (int n = 0; n < last; ++n) {
    t *= term_ratio(h, z, n, qn, ctx);
    s += t;
    qn *= ctx.q();
  }
  return s;
}

cplx direct_sum(const HyperTerms& h, cplx z, const QContext& ctx) {
  const double eps = ctx.trunc().eps_term;
  cplx t = 1.0, s = 1.0, qn = 1.0;
  double prev = 1.0;
  int quiet = 0;
  for (int n = 0; n < max_terms; ++n) {
    t *= term_ratio(h, z, n, qn, ctx);
    s += t;
    qn *= ctx.q();
    const double a = std::abs(t);
    if (!std::isfinite(a)) throw NonConvergent("hypergeometric series overflowed");
    if (a <= eps * std::abs(s) && a <= prev)
      ++quiet;
    else
      quiet = 0;
    prev = a;
    if (quiet >= 4) return s;
  }
  throw NonConvergent("hypergeometric series did not converge in " + std::to_string(max_terms) + " terms");
}

std::vector<cplx> poly_mul(const std::vector<cplx>& p, cplx c) {
  // p(T) * (1 - c T)
  std::vector<cplx> out(p.size() + 1, 0.0);
  for (std::size_t k = 0; k < p.size(); ++k) {
    out[k] += p[k];
    out[k + 1] -= c * p[k];
  }
  return out;
}

// power = 0 series beyond the direct radius: the sum F satisfies P(T)F = z Q(T)F with
// P(T) = (1-T) prod (1 - b q^{-1} T), Q(T) = prod (1 - a T), T: z -> qz. Evaluate
// directly where |z q^d| is small and run the relation back out to z.
cplx continued_sum(const HyperTerms& h, cplx z, const QContext& ctx) {
  std::vector<cplx> P{1.0, -1.0}, Q{1.0};
  for (const cplx b : h.lower)
    if (b != 0.0) P = poly_mul(P, b / ctx.q());
  for (const cplx a : h.upper)
    if (a != 0.0) Q = poly_mul(Q, a);
  const std::size_t K = std::max(P.size(), Q.size()) - 1;
  P.resize(K + 1, 0.0);
  Q.resize(K + 1, 0.0);

  const double aq = std::abs(ctx.q());
  const int D = static_cast<int>(std::ceil(std::log(direct_radius / std::abs(z)) / std::log(aq)));
  if (D > max_terms) throw NonConvergent("continuation depth too large");
  // F(z q^d) for d = D .. D+K-1, then walk d downward.
  std::vector<cplx> window(K);
  for (std::size_t j = 0; j < K; ++j) window[j] = direct_sum(h, z * ctx.qpow(static_cast<double>(D) + j), ctx);
  for (int d = D - 1; d >= 0; --d) {
    const cplx zd = z * ctx.qpow(d);
    const cplx den = 1.0 - zd;
    if (std::abs(den) < 1e-12)
      throw PoleProximity("continued hypergeometric series at a pole z q^" + std::to_string(d) + " = 1");
    cplx acc = 0.0;
    for (std::size_t k = 1; k <= K; ++k) acc -= (P[k] - zd * Q[k]) * window[k - 1];
    const cplx f = acc / den;
    for (std::size_t k = K - 1; k > 0; --k) window[k] = window[k - 1];
    window[0] = f;
  }
  return window[0];
}

}  // namespace

std::optional<int> terminating_index(cplx a, const QContext& ctx) {
  if (a == 0.0) return std::nullopt;
  const double m = std::round(std::log(std::abs(a)) / (2 * pi * ctx.t()));
  if (m < 0 || m > max_terms) return std::nullopt;
  if (std::abs(1.0 - a * ctx.qpow(m)) < vanish_tol) return static_cast<int>(m);
  return std::nullopt;
}

cplx hypergeometric_sum(const HyperTerms& h, cplx z, const QContext& ctx) {
  if (z == 0.0) return 1.0;
  if (const auto m = termination(h, ctx)) return finite_sum(h, z, *m, ctx);
  if (h.power < 0) throw DivergentSeries("non-terminating series with negative q-power");
  if (h.power > 0 || std::abs(z) <= direct_radius) return direct_sum(h, z, ctx);
  return continued_sum(h, z, ctx);
}

cplx hypergeometric_coefficient(const HyperTerms& h, cplx scale, int n, const QContext& ctx) {
  if (n < 0) return 0.0;
  cplx c = 1.0, qk = 1.0;
  for (int k = 0; k < n; ++k) {
    c *= term_ratio(h, scale, k, qk, ctx);
    qk *= ctx.q();
  }
  return c;
}

}  // namespace mulab
