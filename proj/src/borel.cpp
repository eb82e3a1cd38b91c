#include "mulab/borel.hpp"

#include <cmath>
#include <memory>
#include <string>

#include "mulab/summation.hpp"

namespace mulab {

FormalSeries FormalSeries::from_coefficients(Coefficient c) {
  FormalSeries g;
  g.coeff_ = std::move(c);
  return g;
}

FormalSeries FormalSeries::polynomial(std::vector<cplx> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0.0) coeffs.pop_back();
  auto shared = std::make_shared<const std::vector<cplx>>(std::move(coeffs));
  FormalSeries g;
  g.coeff_ = [shared](int n) { return n < static_cast<int>(shared->size()) ? (*shared)[static_cast<std::size_t>(n)] : 0.0; };
  g.degree_ = static_cast<int>(shared->size()) - 1;
  return g;
}

FormalSeries FormalSeries::monomial(int m, cplx c) {
  if (m < 0) throw InvalidArgument("monomial: negative exponent");
  std::vector<cplx> coeffs(static_cast<std::size_t>(m) + 1, 0.0);
  coeffs.back() = c;
  return polynomial(std::move(coeffs));
}

FormalSeries FormalSeries::hypergeometric(HyperTerms terms, cplx scale, const QContext& ctx) {
  return hypergeometric(Hyper{std::move(terms), scale}, ctx);
}

FormalSeries FormalSeries::hypergeometric(Hyper h, const QContext& ctx) {
  FormalSeries g;
  g.coeff_ = [h, ctx](int n) { return h.factor * hypergeometric_coefficient(h.terms, h.scale, n - h.offset, ctx); };
  g.hyper_ = std::move(h);
  return g;
}

FormalSeries FormalSeries::shifted(int m, int n, const QContext& ctx) const {
  if (m < 0) throw InvalidArgument("shifted: negative power of x");
  if (hyper_) {
    Hyper h = *hyper_;
    h.factor *= ctx.qpow(static_cast<double>(n) * h.offset);
    h.scale *= ctx.qpow(n);
    h.offset += m;
    return hypergeometric(std::move(h), ctx);
  }
  FormalSeries g;
  g.coeff_ = [src = coeff_, m, n, ctx](int k) {
    if (k < m) return cplx(0.0);
    return src(k - m) * ctx.qpow(static_cast<double>(n) * (k - m));
  };
  if (degree_) g.degree_ = *degree_ < 0 ? *degree_ : *degree_ + m;
  return g;
}

FormalSeries g0_series(const QContext& ctx) {
  // (q)_n/(q)_n * ((-1)^n q^{n(n-1)/2})^{-1} * q^{-n}
  return FormalSeries::hypergeometric(HyperTerms{{ctx.q()}, {}, -1}, 1.0 / ctx.q(), ctx);
}

FormalSeries borel_transform(const FormalSeries& g, const QContext& ctx, int order) {
  if (order < 0) throw InvalidArgument("borel_transform: negative order");
  if (order == 0) return g;
  if (g.hyper()) {
    // with n = j + offset, q^{order n(n-1)/2} = q^{order (j(j-1)/2 + j offset + offset(offset-1)/2)}
    FormalSeries::Hyper h = *g.hyper();
    const double d = h.offset;
    h.terms.power += order;
    h.scale *= (order % 2 ? -1.0 : 1.0) * ctx.qpow(order * d);
    h.factor *= ctx.qpow(0.5 * order * d * (d - 1));
    return FormalSeries::hypergeometric(std::move(h), ctx);
  }
  if (g.degree()) {
    std::vector<cplx> c;
    for (int n = 0; n <= *g.degree(); ++n)
      c.push_back(g.coefficient(n) * ctx.qpow(0.5 * order * n * (n - 1.0)));
    return FormalSeries::polynomial(std::move(c));
  }
  return FormalSeries::from_coefficients(
      [g, ctx, order](int n) { return g.coefficient(n) * ctx.qpow(0.5 * order * n * (n - 1.0)); });
}

cplx evaluate_series(const FormalSeries& g, cplx x, const QContext& ctx) {
  if (g.degree()) {
    cplx s = 0.0;
    for (int n = *g.degree(); n >= 0; --n) s = s * x + g.coefficient(n);
    return s;
  }
  if (const auto& h = g.hyper()) return h->factor * std::pow(x, h->offset) * hypergeometric_sum(h->terms, h->scale * x, ctx);
  const auto& p = ctx.trunc();
  CompensatedSum s;
  cplx xn = 1.0;
  int quiet = 0;
  bool finite = true;
  for (int n = 0; n <= 64 * p.max_index; ++n) {
    const cplx t = g.coefficient(n) * xn;
    if (!std::isfinite(std::abs(t))) {
      finite = false;
      break;
    }
    s.add(t);
    const bool small = s.value() != 0.0 && std::abs(t) <= p.eps_term * std::abs(s.value());
    quiet = small ? quiet + 1 : 0;
    if (quiet >= p.quiet_shells && n > 8) return s.value();
    xn *= x;
  }
  if (finite && s.value() == 0.0) return 0.0;
  throw DivergentSeries("formal series does not converge at the requested point");
}

Evaluable as_function(const FormalSeries& g, const QContext& ctx) {
  return [g, ctx](cplx x) { return evaluate_series(g, x, ctx); };
}

namespace {

cplx guarded_kernel_theta(cplx r, const QContext& ctx) {
  if (theta_q_zero_distance(r, ctx) < 1e-10)
    throw KernelPole("lambda ratio lies on the zero set of theta_q");
  return theta_q(r, ctx);
}

}  // namespace

cplx laplace_eval(const Evaluable& g, cplx x, cplx lambda, const QContext& ctx) {
  if (x == 0.0 || lambda == 0.0) throw ZeroArgument("laplace_eval: x and lambda must be nonzero");
  // theta_q(r q^n) = theta_q(r) r^{-n} q^{-n(n-1)/2}, r = lambda/x
  const cplx r = lambda / x;
  const cplx th = guarded_kernel_theta(r, ctx);
  const cplx lr = std::log(r);
  const cplx tau = ctx.tau();
  const int center = static_cast<int>(std::lround(0.5 + lr.real() / (2 * pi * ctx.t())));
  return bilateral_sum(
             [&](int n) {
               const double dn = n;
               return g(lambda * ctx.qpow(dn)) * std::exp(dn * lr + pi * I * tau * dn * (dn - 1));
             },
             ctx.trunc(), center) /
         th;
}

cplx laplace_n_eval(const Evaluable& g, std::span<const cplx> lambdas, const QContext& ctx) {
  if (lambdas.size() < 2) throw InvalidArgument("laplace_n_eval needs lambda_0..lambda_N with N >= 1");
  for (const cplx l : lambdas)
    if (l == 0.0) throw ZeroArgument("laplace_n_eval: lambdas must be nonzero");
  const int N = static_cast<int>(lambdas.size()) - 1;
  const cplx tau = ctx.tau();
  std::vector<IndexCache<cplx>> factor;
  factor.reserve(static_cast<std::size_t>(N));
  for (int j = 1; j <= N; ++j) {
    const cplx r = lambdas[static_cast<std::size_t>(j - 1)] / lambdas[static_cast<std::size_t>(j)];
    const cplx th = guarded_kernel_theta(r, ctx);
    const cplx lr = std::log(r);
    factor.emplace_back([=](int n) {
      const double dn = n;
      return std::exp(dn * lr + pi * I * tau * dn * (dn - 1)) / th;
    });
  }
  const cplx l0 = lambdas[0];
  IndexCache<cplx> gval([&](int m) { return g(l0 * ctx.qpow(m)); });
  return lattice_sum(
      N,
      [&](std::span<const int> n) {
        int m = 0;
        cplx t = 1.0;
        for (int j = 0; j < N; ++j) {
          m += n[static_cast<std::size_t>(j)];
          t *= factor[static_cast<std::size_t>(j)](n[static_cast<std::size_t>(j)]);
        }
        return t * gval(m);
      },
      ctx.trunc());
}

cplx resum(const FormalSeries& g, int order, std::span<const cplx> lambdas, const QContext& ctx) {
  if (order < 1) throw InvalidArgument("resum: order must be at least 1");
  if (static_cast<int>(lambdas.size()) != order + 1)
    throw InvalidArgument("resum: need order+1 lambda values");
  const FormalSeries b = borel_transform(g, ctx, order);
  const Evaluable f = as_function(b, ctx);
  if (order == 1) return laplace_eval(f, lambdas[1], lambdas[0], ctx);
  return laplace_n_eval(f, lambdas, ctx);
}

}  // namespace mulab
