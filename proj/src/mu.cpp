#include "mulab/mu.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "mulab/summation.hpp"

namespace mulab {

namespace {

cplx sum_of(std::span<const cplx> us) { return std::accumulate(us.begin(), us.end(), cplx(0.0)); }

int center_for(cplx v, const QContext& ctx) { return static_cast<int>(std::lround(-v.imag() / ctx.t() - 0.5)); }

// 1/(1 - y) with a pole guard
cplx guarded_reciprocal(cplx y, const char* what) {
  const cplx d = 1.0 - y;
  if (std::abs(d) < 1e-12 * std::max(1.0, std::abs(y))) throw PoleProximity(std::string(what) + ": argument on the pole lattice");
  return 1.0 / d;
}

cplx guarded_ratio(cplx num, cplx den, const QContext& ctx, const char* what) {
  try {
    return qpoch_ratio(num, den, ctx);
  } catch (const PoleError&) {
    throw PoleProximity(std::string(what) + ": Pochhammer denominator vanishes");
  }
}

void require_arity(std::span<const cplx> us, const char* what) {
  if (us.size() < 2) throw InvalidArgument(std::string(what) + " needs at least two arguments");
}

// (-1)^n e^{-2 pi i n u} q^{n(n+1)/2} / theta(u), cached by n
IndexCache<cplx> mu_factor(cplx u, const QContext& ctx) {
  const cplx th = guarded_theta(u, ctx);
  const cplx tau = ctx.tau();
  return IndexCache<cplx>([=](int n) {
    const double dn = n;
    return std::exp(pi * I * (dn - 2.0 * dn * u + tau * dn * (dn + 1))) / th;
  });
}

cplx lattice_over_rest(std::span<const cplx> us, IndexCache<cplx>& head, const QContext& ctx) {
  const int N = static_cast<int>(us.size()) - 1;
  std::vector<IndexCache<cplx>> factor;
  factor.reserve(static_cast<std::size_t>(N));
  for (int j = 1; j <= N; ++j) factor.push_back(mu_factor(us[static_cast<std::size_t>(j)], ctx));
  return lattice_sum(
      N,
      [&](std::span<const int> n) {
        int m = 0;
        cplx t = 1.0;
        for (int j = 0; j < N; ++j) {
          m += n[static_cast<std::size_t>(j)];
          t *= factor[static_cast<std::size_t>(j)](n[static_cast<std::size_t>(j)]);
        }
        return t * head(m);
      },
      ctx.trunc());
}

}  // namespace

cplx mu_zwegers(cplx u, cplx v, const QContext& ctx) {
  const cplx th = guarded_theta(v, ctx);
  const cplx x = e2pi(u);
  const cplx tau = ctx.tau();
  const cplx s = bilateral_sum(
      [&](int n) {
        const double dn = n;
        return std::exp(pi * I * (dn + 2.0 * dn * v + tau * dn * (dn + 1))) *
               guarded_reciprocal(x * ctx.qpow(dn), "mu");
      },
      ctx.trunc(), center_for(v, ctx));
  return epi(u) * s / th;
}

cplx mu_generalized(cplx u, cplx v, cplx alpha, const QContext& ctx) {
  const cplx th = guarded_theta(v, ctx);
  const cplx x = e2pi(u);
  const cplx tau = ctx.tau();
  const cplx s = bilateral_sum(
      [&](int n) {
        const double dn = n;
        return std::exp(pi * I * (dn + 2.0 * (dn + 0.5) * v + tau * dn * (dn + 1))) *
               guarded_ratio(x * ctx.qpow(dn + 1), x * ctx.qpow(dn - alpha + 1.0), ctx, "generalized mu");
      },
      ctx.trunc(), center_for(v, ctx));
  return epi(alpha * (u - v)) * s / th;
}

cplx fN_eval(std::span<const cplx> xs, cplx a, const QContext& ctx) {
  if (xs.size() < 2) throw InvalidArgument("f_N needs x_0..x_N with N >= 1");
  const int N = static_cast<int>(xs.size()) - 1;
  const cplx tau = ctx.tau();
  std::vector<IndexCache<cplx>> factor;
  factor.reserve(static_cast<std::size_t>(N));
  for (int j = 1; j <= N; ++j) {
    const cplx xj = xs[static_cast<std::size_t>(j)];
    if (xj == 0.0) throw ZeroArgument("f_N: x_j = 0");
    if (theta_q_zero_distance(xj, ctx) < 1e-10) throw PoleProximity("f_N: theta_q(x_j) vanishes");
    const cplx th = theta_q(xj, ctx);
    const cplx lx = std::log(xj);
    factor.emplace_back([=](int n) {
      const double dn = n;
      return std::exp(-dn * lx + pi * I * tau * dn * (dn + 1)) / th;
    });
  }
  const cplx x0 = xs[0];
  IndexCache<cplx> head([&](int m) {
    const cplx y = -x0 * ctx.qpow(m);
    return guarded_ratio(a * y, y, ctx, "f_N");
  });
  return lattice_sum(
      N,
      [&](std::span<const int> n) {
        int m = 0;
        cplx t = 1.0;
        for (int j = 0; j < N; ++j) {
          m += n[static_cast<std::size_t>(j)];
          t *= factor[static_cast<std::size_t>(j)](n[static_cast<std::size_t>(j)]);
        }
        return t * head(m);
      },
      ctx.trunc());
}

cplx f1_eval(cplx x0, cplx x1, cplx a, const QContext& ctx) {
  const cplx xs[2] = {x0, x1};
  return fN_eval(xs, a, ctx);
}

cplx muN_eval(std::span<const cplx> us, const QContext& ctx) {
  require_arity(us, "mu_N");
  const cplx x0 = e2pi(us[0]);
  const cplx pre = epi(us[0]);
  IndexCache<cplx> head([&](int m) { return pre * guarded_reciprocal(x0 * ctx.qpow(m), "mu_N"); });
  return lattice_over_rest(us, head, ctx);
}

cplx hat_muN_eval(std::span<const cplx> us, cplx alpha, const QContext& ctx) {
  require_arity(us, "hat mu_N");
  const int N = static_cast<int>(us.size()) - 1;
  std::vector<cplx> xs;
  xs.reserve(us.size());
  for (const cplx u : us) xs.push_back(-e2pi(u));
  return epi(0.5 * N) * epi(alpha * sum_of(us)) * ctx.qpow(-N / 8.0) * fN_eval(xs, ctx.qpow(alpha), ctx);
}

cplx hat_muN_definition(std::span<const cplx> us, cplx alpha, const QContext& ctx, HatMuReading reading) {
  require_arity(us, "hat mu_N");
  const cplx u0 = us[0];
  const cplx top = reading == HatMuReading::Corrected ? e2pi(u0 + alpha * ctx.tau())
                                                      : std::exp(pi * I * u0 + alpha * ctx.tau());
  const cplx x0 = e2pi(u0);
  const cplx pre = epi(u0);
  IndexCache<cplx> head([&](int m) {
    const cplx qm = ctx.qpow(m);
    return pre * guarded_ratio(top * qm, x0 * qm, ctx, "hat mu_N");
  });
  return epi((alpha - 1.0) * sum_of(us)) * lattice_over_rest(us, head, ctx);
}

cplx nu_eval(std::span<const cplx> us, int k, const QContext& ctx) {
  require_arity(us, "nu");
  const int N = static_cast<int>(us.size()) - 1;
  if (N == 1) return 1.0;
  std::vector<cplx> v;
  for (int j = 1; j <= N - 1; ++j) v.push_back(us[0] + us[1] - us[static_cast<std::size_t>(j + 1)]);
  const std::vector<double> shift(static_cast<std::size_t>(N - 1), static_cast<double>(k) / N);
  return lattice_theta_shifted(SymMatrix::hat(N - 1), v, shift, ctx);
}

MuVector phiN_eval(std::span<const cplx> us, cplx z, const QContext& ctx) {
  require_arity(us, "Phi_N");
  const int N = static_cast<int>(us.size()) - 1;
  const cplx u0 = us[0], u1 = us[1];
  const cplx eta = dedekind_eta(ctx);
  cplx pre = I * eta * eta * eta * jacobi_theta(z, ctx) * jacobi_theta(z - u0 + u1, ctx) /
             (guarded_theta(z - u0, ctx) * guarded_theta(z + u1, ctx));
  for (const cplx u : us) pre /= guarded_theta(u, ctx);
  MuVector out;
  for (int k = 0; k < N; ++k) out.push_back(pre * nu_eval(us, k, ctx));
  return out;
}

MuVector MN_vector(std::span<const cplx> us, const QContext& ctx) {
  require_arity(us, "M_N");
  const int N = static_cast<int>(us.size()) - 1;
  const cplx u = sum_of(us);
  std::vector<cplx> shifted(us.begin(), us.end());
  MuVector out;
  for (int k = 0; k < N; ++k) {
    shifted[0] = us[0] + static_cast<double>(k) * ctx.tau();
    const double dk = k;
    const cplx pre = (k % 2 ? -1.0 : 1.0) * std::exp(-2.0 * pi * I * dk * u / static_cast<double>(N) -
                                                      pi * I * dk * dk * ctx.tau() / static_cast<double>(N));
    out.push_back(pre * muN_eval(shifted, ctx));
  }
  return out;
}

}  // namespace mulab
