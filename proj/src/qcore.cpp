#include "mulab/qcore.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mulab/hypergeometric.hpp"
#include "mulab/summation.hpp"

namespace mulab {

namespace {

constexpr double zero_factor_tol = 0x1p-50;
constexpr long max_product_factors = 2'000'000;

using Dense = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;

Dense dense(const std::vector<double>& a, int n) { return Dense(a.data(), n, n); }

bool is_nonnegative_integer(cplx a, int& out) {
  const double r = std::round(a.real());
  if (r < 0 || std::abs(a.real() - r) > 1e-14 || std::abs(a.imag()) > 1e-14) return false;
  out = static_cast<int>(r);
  return true;
}

}  // namespace

void TruncationPolicy::validate() const {
  if (!(eps_term > 0)) throw InvalidArgument("eps_term must be positive");
  if (max_index < 8) throw InvalidArgument("max_index must be at least 8");
  if (!(lattice_shell_eps > 0)) throw InvalidArgument("lattice_shell_eps must be positive");
  if (quiet_shells < 1) throw InvalidArgument("quiet_shells must be at least 1");
}

QContext::QContext(cplx tau, TruncationPolicy trunc) : tau_(tau), trunc_(trunc) {
  if (!(tau.imag() > 0)) throw InvalidArgument("Im(tau) must be positive");
  trunc_.validate();
  q_ = e2pi(tau);
}

cplx QContext::qpow(cplx c) const { return e2pi(tau_ * c); }

cplx e2pi(cplx x) { return std::exp(2.0 * pi * I * x); }
cplx epi(cplx x) { return std::exp(pi * I * x); }

cplx minus_i_tau_pow(cplx tau, double p) { return std::exp(p * std::log(-I * tau)); }

SymMatrix::SymMatrix(int dim, std::vector<double> entries) : SymMatrix(dim, std::move(entries), true) {}

SymMatrix::SymMatrix(int dim, std::vector<double> entries, bool check) : dim_(dim), a_(std::move(entries)) {
  if (dim < 1 || a_.size() != static_cast<std::size_t>(dim * dim))
    throw InvalidArgument("SymMatrix: entries do not match dimension");
  if (!check) return;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < i; ++j)
      if ((*this)(i, j) != (*this)(j, i)) throw InvalidArgument("SymMatrix: not symmetric");
  const auto m = dense(a_, dim);
  for (int k = 1; k <= dim; ++k)
    if (!(m.topLeftCorner(k, k).determinant() > 0))
      throw InvalidArgument("SymMatrix: not positive definite (leading minor " + std::to_string(k) + ")");
}

SymMatrix SymMatrix::identity(int dim) {
  std::vector<double> a(static_cast<std::size_t>(dim * dim), 0.0);
  for (int i = 0; i < dim; ++i) a[static_cast<std::size_t>(i * dim + i)] = 1.0;
  return SymMatrix(dim, std::move(a));
}

SymMatrix SymMatrix::hat(int dim) {
  std::vector<double> a(static_cast<std::size_t>(dim * dim), 1.0);
  for (int i = 0; i < dim; ++i) a[static_cast<std::size_t>(i * dim + i)] = 2.0;
  return SymMatrix(dim, std::move(a));
}

double SymMatrix::determinant() const { return dense(a_, dim_).determinant(); }

SymMatrix SymMatrix::inverse() const {
  Eigen::MatrixXd inv = dense(a_, dim_).inverse();
  Eigen::MatrixXd sym = 0.5 * (inv + inv.transpose());
  std::vector<double> out(a_.size());
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) out[static_cast<std::size_t>(i * dim_ + j)] = sym(i, j);
  return SymMatrix(dim_, std::move(out), false);
}

double SymMatrix::quadratic(std::span<const double> n) const {
  double s = 0;
  for (int i = 0; i < dim_; ++i) {
    double row = 0;
    for (int j = 0; j < dim_; ++j) row += (*this)(i, j) * n[static_cast<std::size_t>(j)];
    s += n[static_cast<std::size_t>(i)] * row;
  }
  return s;
}

cplx qpoch_inf(cplx x, const QContext& ctx) {
  const cplx q = ctx.q();
  const double eps = ctx.trunc().eps_term;
  cplx p = 1.0;
  cplx t = x;
  for (long j = 0; j < max_product_factors; ++j) {
    const cplx f = 1.0 - t;
    if (std::abs(f) <= zero_factor_tol) return 0.0;
    p *= f;
    if (std::abs(t) < eps) return p;
    t *= q;
  }
  throw NonConvergent("qpoch_inf: product did not settle");
}

cplx qpoch_finite(cplx x, int n, const QContext& ctx) {
  if (n < 0) throw InvalidArgument("qpoch_finite: negative order");
  cplx p = 1.0;
  cplx t = x;
  for (int j = 0; j < n; ++j) {
    p *= 1.0 - t;
    t *= ctx.q();
  }
  return p;
}

cplx qpoch_ratio(cplx num, cplx den, const QContext& ctx) {
  const cplx q = ctx.q();
  const double eps = ctx.trunc().eps_term;
  cplx p = 1.0;
  cplx a = num, b = den;
  for (long j = 0; j < max_product_factors; ++j) {
    const cplx d = 1.0 - b;
    if (std::abs(d) < 1e-12 * std::max(1.0, std::abs(b)))
      throw PoleError("Pochhammer ratio: denominator factor vanishes at j=" + std::to_string(j));
    p *= (1.0 - a) / d;
    if (std::abs(a) < eps && std::abs(b) < eps) return p;
    a *= q;
    b *= q;
  }
  throw NonConvergent("qpoch_ratio: product did not settle");
}

cplx qpoch_order(cplx x, cplx alpha, const QContext& ctx) {
  int n = 0;
  if (is_nonnegative_integer(alpha, n)) return qpoch_finite(x, n, ctx);
  return qpoch_ratio(x, x * ctx.qpow(alpha), ctx);
}

cplx theta_q(cplx x, const QContext& ctx) {
  if (x == 0.0) throw ZeroArgument("theta_q at x = 0");
  return qpoch_inf(ctx.q(), ctx) * qpoch_inf(-x, ctx) * qpoch_inf(-ctx.q() / x, ctx);
}

cplx theta_q_series(cplx x, const QContext& ctx) {
  if (x == 0.0) throw ZeroArgument("theta_q_series at x = 0");
  const cplx lx = std::log(x);
  const cplx tau = ctx.tau();
  // shells centred on the peak of |x^n q^{n(n-1)/2}|
  const int center = static_cast<int>(std::lround(0.5 + lx.real() / (2 * pi * ctx.t())));
  return bilateral_sum(
      [&](int n) {
        const double dn = n;
        return std::exp(dn * lx + pi * I * tau * dn * (dn - 1));
      },
      ctx.trunc(), center);
}

cplx jacobi_theta(cplx u, const QContext& ctx) {
  const cplx x = e2pi(u);
  const cplx q = ctx.q();
  return -I * epi(-u) * ctx.qpow(0.125) * qpoch_inf(q, ctx) * qpoch_inf(x, ctx) * qpoch_inf(q / x, ctx);
}

cplx jacobi_theta_series(cplx u, const QContext& ctx) {
  const cplx tau = ctx.tau();
  const int center = static_cast<int>(std::lround(-u.imag() / ctx.t()));
  return bilateral_sum(
      [&](int m) {
        const double nu = m + 0.5;
        return std::exp(2.0 * pi * I * nu * (u + 0.5) + pi * I * tau * nu * nu);
      },
      ctx.trunc(), center);
}

cplx dedekind_eta(const QContext& ctx) { return ctx.qpow(1.0 / 24.0) * qpoch_inf(ctx.q(), ctx); }

namespace {

cplx quadratic_lattice(const SymMatrix& Q, std::span<const cplx> lin, std::span<const double> shift,
                       const QContext& ctx) {
  const int dim = Q.dim();
  if (static_cast<int>(lin.size()) != dim || static_cast<int>(shift.size()) != dim)
    throw InvalidArgument("lattice theta: dimension mismatch");
  const cplx tau = ctx.tau();
  std::vector<double> v(static_cast<std::size_t>(dim));
  return lattice_sum(
      dim,
      [&](std::span<const int> n) {
        cplx l = 0;
        for (int j = 0; j < dim; ++j) {
          const auto k = static_cast<std::size_t>(j);
          v[k] = n[k] + shift[k];
          l += lin[k] * v[k];
        }
        return std::exp(pi * I * tau * Q.quadratic(v) + 2.0 * pi * I * l);
      },
      ctx.trunc());
}

}  // namespace

cplx lattice_theta(const SymMatrix& S, std::span<const cplx> u, const QContext& ctx) {
  const std::vector<double> zero(static_cast<std::size_t>(S.dim()), 0.0);
  return quadratic_lattice(S, u, zero, ctx);
}

cplx lattice_theta_shifted(const SymMatrix& S, std::span<const cplx> u, std::span<const double> shift,
                           const QContext& ctx) {
  return quadratic_lattice(S, u, shift, ctx);
}

cplx lattice_theta_dual(const SymMatrix& S, std::span<const cplx> u, const QContext& ctx) {
  const SymMatrix inv = S.inverse();
  const int dim = S.dim();
  if (static_cast<int>(u.size()) != dim) throw InvalidArgument("lattice_theta_dual: dimension mismatch");
  // t u S^{-1} n = (S^{-1} u, n)
  std::vector<cplx> lin(static_cast<std::size_t>(dim), 0.0);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) lin[static_cast<std::size_t>(i)] += inv(i, j) * u[static_cast<std::size_t>(j)];
  const std::vector<double> zero(static_cast<std::size_t>(dim), 0.0);
  return quadratic_lattice(inv, lin, zero, ctx);
}

cplx q_hypergeometric(std::span<const cplx> a_list, std::span<const cplx> b_list, cplx x, const QContext& ctx) {
  HyperTerms h;
  h.upper.assign(a_list.begin(), a_list.end());
  h.lower.assign(b_list.begin(), b_list.end());
  h.power = 1 + static_cast<int>(b_list.size()) - static_cast<int>(a_list.size());
  return hypergeometric_sum(h, x, ctx);
}

double lattice_distance(cplx u, cplx tau) {
  const double n0 = std::round(u.imag() / tau.imag());
  double best = std::abs(u);
  for (int dn = -1; dn <= 1; ++dn) {
    const cplx w = u - (n0 + dn) * tau;
    const double m0 = std::round(w.real());
    for (int dm = -1; dm <= 1; ++dm) best = std::min(best, std::abs(w - (m0 + dm)));
  }
  return best;
}

cplx guarded_theta(cplx u, const QContext& ctx) {
  const cplx th = jacobi_theta(u, ctx);
  if (std::abs(th) < 1e-10 * std::exp(-2 * pi * ctx.t() / 8))
    throw PoleProximity("theta(u) vanishes at u = (" + std::to_string(u.real()) + ", " +
                        std::to_string(u.imag()) + ")");
  return th;
}

double theta_q_zero_distance(cplx r, const QContext& ctx) {
  if (r == 0.0) return 0.0;
  const double k0 = std::round(std::log(std::abs(r)) / (2 * pi * ctx.t()));
  double best = std::numeric_limits<double>::infinity();
  for (int dk = -1; dk <= 1; ++dk) best = std::min(best, std::abs(1.0 + r * ctx.qpow(k0 + dk)));
  return best;
}

}  // namespace mulab
