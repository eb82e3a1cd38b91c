#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "mulab/hypergeometric.hpp"
#include "mulab/qcore.hpp"

namespace mulab {

// Coefficients A_n, n >= 0, held as a closure so divergent series never need summing.
// Series with a known hypergeometric shape keep it, which lets their Borel images be
// summed beyond the disc of convergence.
class FormalSeries {
 public:
  using Coefficient = std::function<cplx(int)>;
  // factor * x^offset * sum_n c_n (scale x)^n with c_n from terms
  struct Hyper {
    HyperTerms terms;
    cplx scale;
    int offset = 0;
    cplx factor = 1.0;
  };

  static FormalSeries from_coefficients(Coefficient c);
  static FormalSeries polynomial(std::vector<cplx> coeffs);
  static FormalSeries monomial(int m, cplx c = 1.0);
  static FormalSeries zero() { return polynomial({}); }
  static FormalSeries hypergeometric(HyperTerms terms, cplx scale, const QContext& ctx);
  static FormalSeries hypergeometric(Hyper h, const QContext& ctx);

  cplx coefficient(int n) const { return n < 0 ? cplx(0.0) : coeff_(n); }
  const std::optional<int>& degree() const { return degree_; }
  const std::optional<Hyper>& hyper() const { return hyper_; }

  // x^m T_x^n g: coefficient k becomes A_{k-m} q^{n(k-m)}
  FormalSeries shifted(int m, int n, const QContext& ctx) const;

 private:
  Coefficient coeff_;
  std::optional<int> degree_;
  std::optional<Hyper> hyper_;
};

// g_0(x) = sum (-x)^n q^{-n(n+1)/2}
FormalSeries g0_series(const QContext& ctx);

// Coefficient n multiplied by q^{order n(n-1)/2}.
FormalSeries borel_transform(const FormalSeries& g, const QContext& ctx, int order = 1);

// Analytic sum of a series at x: finite sums, hypergeometric shapes (with continuation),
// otherwise direct summation. DivergentSeries if the terms do not decay.
cplx evaluate_series(const FormalSeries& g, cplx x, const QContext& ctx);

using Evaluable = std::function<cplx(cplx)>;
Evaluable as_function(const FormalSeries& g, const QContext& ctx);

// sum_n g(lambda q^n) / theta_q(lambda q^n / x)
cplx laplace_eval(const Evaluable& g, cplx x, cplx lambda, const QContext& ctx);

// sum_{n in Z^N} g(lambda_0 q^{|n|}) prod (lambda_{j-1}/lambda_j)^{n_j} q^{n_j(n_j-1)/2} / theta_q(lambda_{j-1}/lambda_j)
cplx laplace_n_eval(const Evaluable& g, std::span<const cplx> lambdas, const QContext& ctx);

cplx resum(const FormalSeries& g, int order, std::span<const cplx> lambdas, const QContext& ctx);

}  // namespace mulab
