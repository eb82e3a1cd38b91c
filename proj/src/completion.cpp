#include "mulab/completion.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numeric>

#include "mulab/mu.hpp"
#include "mulab/summation.hpp"

namespace mulab {

namespace {

const double sqrt_pi = std::sqrt(pi);

cplx sum_of(std::span<const cplx> us) { return std::accumulate(us.begin(), us.end(), cplx(0.0)); }

// Gauss-Legendre over [a, b] split into n equal panels
template <class F>
cplx composite_gauss(const F& f, double a, double b, int n, double* l1) {
  using rule = boost::math::quadrature::gauss<double, 30>;
  CompensatedSum s;
  double mass = 0;
  const double w = (b - a) / n;
  for (int k = 0; k < n; ++k) {
    double m = 0;
    s.add(rule::integrate(f, a + k * w, a + (k + 1) * w, &m));
    mass += m;
  }
  if (l1) *l1 = mass;
  return s.value();
}

MuVector scaled_vector(cplx u, int N, double offset, const QContext& ctx, cplx (*g)(cplx, const QContext&)) {
  if (N < 1) throw InvalidArgument("vector length N must be positive");
  const QContext big = ctx.with_tau(static_cast<double>(N) * ctx.tau());
  MuVector out;
  for (int k = 0; k < N; ++k) {
    const double dk = k;
    const cplx pre = (k % 2 ? -1.0 : 1.0) * std::exp(-2.0 * pi * I * dk * u / static_cast<double>(N) -
                                                      pi * I * ctx.tau() * dk * dk / static_cast<double>(N));
    out.push_back(pre * g(u + dk * ctx.tau() + offset, big));
  }
  return out;
}

cplx h_plain(cplx u, const QContext& ctx) { return mordell_h(u, ctx); }

}  // namespace

double gauss_E(double x) { return std::erf(sqrt_pi * x); }

double erfcx(double y) {
  if (y < 25.0) return std::exp(y * y) * std::erfc(y);
  // asymptotic series, ample at y >= 25
  const double r = 1.0 / (2.0 * y * y);
  double term = 1.0, s = 1.0;
  for (int k = 1; k < 8; ++k) {
    term *= -(2.0 * k - 1.0) * r;
    s += term;
  }
  return s / (y * sqrt_pi);
}

double sgn_minus_E(double nu, double x) {
  const double s = nu > 0 ? 1.0 : -1.0;
  if ((x > 0) == (s > 0)) return s * std::erfc(sqrt_pi * std::abs(x));
  return s - gauss_E(x);
}

cplx r_function(cplx u, const QContext& ctx) {
  const double t = ctx.t();
  const double a = u.imag() / t;
  const double rt = std::sqrt(2.0 * t);
  const cplx tau = ctx.tau();
  const int center = static_cast<int>(std::lround(-a - 0.5));
  return bilateral_sum(
      [&](int m) {
        const double nu = m + 0.5;
        const double x = (nu + a) * rt;
        const double s = nu > 0 ? 1.0 : -1.0;
        // (-1)^m e^{-2 pi i nu u} q^{-nu^2/2}
        const cplx e = pi * I * (static_cast<double>(m) - 2.0 * nu * u - tau * nu * nu);
        if ((x > 0) == (s > 0)) {
          // erfc(y) = erfcx(y) e^{-y^2}; fold e^{-y^2} into the exponent to avoid overflow
          const double y = sqrt_pi * std::abs(x);
          return s * erfcx(y) * std::exp(e - y * y);
        }
        return (s - gauss_E(x)) * std::exp(e);
      },
      ctx.trunc(), center);
}

cplx mordell_h(cplx u, const QContext& ctx, QuadratureInfo* info) {
  const double t = ctx.t();
  const double ru = u.real();
  const cplx tau = ctx.tau();
  // log envelope: -pi t x^2 - 2 pi Re(u) x - pi |x|
  const auto env = [&](double x) { return -pi * t * x * x - 2 * pi * ru * x - pi * std::abs(x); };
  const double xr = std::max(0.0, -(2 * ru + 1) / (2 * t));
  const double xl = std::min(0.0, (1 - 2 * ru) / (2 * t));
  const double c = std::max(env(xr), env(xl)) - 46.0;  // e^{-46} ~ 1e-20 below the peak
  const double br = pi * (2 * ru + 1), bl = pi * (2 * ru - 1);
  // where each side of the envelope falls to c; a side whose maximum is already below c is cut at 0
  const double x_hi = std::max(0.0, (-br + std::sqrt(std::max(0.0, br * br - 4 * pi * t * c))) / (2 * pi * t));
  const double x_lo = std::min(0.0, -(bl + std::sqrt(std::max(0.0, bl * bl - 4 * pi * t * c))) / (2 * pi * t));

  const auto f = [&](double x) { return std::exp(pi * I * x * x * tau - 2 * pi * x * u) / std::cosh(pi * x); };
  int n = std::max(8, static_cast<int>(std::ceil(x_hi - x_lo)));
  double l1 = 0;
  cplx prev = composite_gauss(f, x_lo, x_hi, n, &l1);
  for (int round = 0; round < 14; ++round) {
    n *= 2;
    const cplx cur = composite_gauss(f, x_lo, x_hi, n, &l1);
    const double change = std::abs(cur - prev);
    if (change <= 1e-13 * std::abs(cur) || change <= 1e-15 * l1) {
      if (info) *info = QuadratureInfo{n, change, x_lo, x_hi};
      return cur;
    }
    prev = cur;
  }
  throw QuadratureFailure("Mordell integral did not stabilise under panel doubling");
}

cplx mu_completed(cplx u, cplx v, const QContext& ctx) { return mu_zwegers(u, v, ctx) + 0.5 * I * r_function(u - v, ctx); }

MuVector RN_vector(cplx u, int N, const QContext& ctx) { return scaled_vector(u, N, 0.5 * (N + 1), ctx, r_function); }

MuVector HN_vector(cplx u, int N, const QContext& ctx) { return scaled_vector(u, N, -0.5 * (N - 1), ctx, h_plain); }

MuVector MN_completed(std::span<const cplx> us, const QContext& ctx) {
  MuVector m = MN_vector(us, ctx);
  const MuVector r = RN_vector(sum_of(us), static_cast<int>(us.size()) - 1, ctx);
  for (std::size_t k = 0; k < m.size(); ++k) m[k] += 0.5 * I * r[k];
  return m;
}

cplx muN_completed(std::span<const cplx> us, const QContext& ctx) {
  const int N = static_cast<int>(us.size()) - 1;
  const QContext big = ctx.with_tau(static_cast<double>(N) * ctx.tau());
  return muN_eval(us, ctx) + 0.5 * I * r_function(sum_of(us) + 0.5 * (N + 1), big);
}

cplx hN_combination(cplx u, int N, int m, const QContext& ctx) {
  if (N < 1 || m < 1) throw InvalidArgument("hN_combination needs N, m >= 1");
  const QContext shifted = ctx.with_tau(static_cast<double>(N) * ctx.tau() - 1.0 / m);
  cplx s = 0.0;
  for (int j = 1; j <= m; ++j) {
    const double o = 2.0 * j - 1.0;
    s += (j % 2 ? -1.0 : 1.0) * epi(o * o / (4.0 * m)) * mordell_h(u + o / (2.0 * m) - 0.5, shifted);
  }
  return s;
}

cplx hN_combination_even(cplx u, int N, int m, const QContext& ctx) {
  if (N < 1 || m < 1) throw InvalidArgument("hN_combination_even needs N, m >= 1");
  const QContext shifted = ctx.with_tau(static_cast<double>(N) * ctx.tau() - 1.0 / (2.0 * m));
  cplx s = 0.0;
  for (int j = 1; j <= 2 * m; ++j) {
    const double o = 2.0 * j - 1.0;
    s += epi(o * o / (8.0 * m)) * mordell_h(u + o / (4.0 * m) - 0.5, shifted);
  }
  return s;
}

}  // namespace mulab
