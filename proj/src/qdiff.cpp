#include "mulab/qdiff.hpp"

#include <cmath>
#include <string>

#include "mulab/hypergeometric.hpp"

namespace mulab {

namespace {

cplx product(std::span<const cplx> v) {
  cplx p = 1.0;
  for (const cplx c : v) p *= c;
  return p;
}

cplx guarded_theta_q(cplx x, const QContext& ctx) {
  if (theta_q_zero_distance(x, ctx) < 1e-10) throw PoleProximity("theta_q denominator vanishes");
  return theta_q(x, ctx);
}

// prod_{r != j} (a_r)_inf / (a_r/a_j)_inf style coefficient pieces
cplx poch_quotient(std::span<const cplx> num, std::span<const cplx> den, const QContext& ctx) {
  cplx c = 1.0;
  for (const cplx x : num) c *= qpoch_inf(x, ctx);
  for (const cplx x : den) {
    const cplx d = qpoch_inf(x, ctx);
    if (std::abs(d) < 1e-14) throw ParameterDegeneracy("connection coefficient denominator vanishes");
    c /= d;
  }
  return c;
}

// inner convergent series of the j-th solution: upper {a_j/b_s}, N-M zeros; lower {a_j q/a_r}_{r != j}
HyperTerms solution_terms(const QDiffProblem& p, int j) {
  const cplx aj = p.a[static_cast<std::size_t>(j)];
  HyperTerms h;
  for (const cplx bs : p.b) h.upper.push_back(aj / bs);
  for (int k = 0; k < p.N - p.M; ++k) h.upper.push_back(0.0);
  for (int r = 0; r <= p.N; ++r)
    if (r != j) h.lower.push_back(aj * p.ctx.q() / p.a[static_cast<std::size_t>(r)]);
  return h;
}

cplx solution_argument(const QDiffProblem& p, cplx x) {
  const double sign = (p.N - p.M) % 2 ? -1.0 : 1.0;
  return sign * product(p.b) * p.ctx.qpow(p.N + 1.0) / (product(p.a) * x);
}

}  // namespace

QDiffProblem::QDiffProblem(int N_, int M_, std::vector<cplx> a_, std::vector<cplx> b_, QContext ctx_)
    : N(N_), M(M_), a(std::move(a_)), b(std::move(b_)), ctx(ctx_) {
  if (!(0 <= M && M < N)) throw InvalidArgument("QDiffProblem needs 0 <= M < N");
  if (a.size() != static_cast<std::size_t>(N + 1) || b.size() != static_cast<std::size_t>(M + 1))
    throw InvalidArgument("QDiffProblem: expected N+1 a-parameters and M+1 b-parameters");
  for (const cplx c : a)
    if (c == 0.0) throw InvalidArgument("QDiffProblem: a-parameters must be nonzero");
  for (const cplx c : b)
    if (c == 0.0) throw InvalidArgument("QDiffProblem: b-parameters must be nonzero");
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (r != j && theta_q_zero_distance(-a[r] / a[j], ctx) < 1e-8)
        throw ParameterDegeneracy("a_" + std::to_string(r) + "/a_" + std::to_string(j) + " lies in q^Z");
}

std::vector<cplx> linear_factor_product(std::span<const cplx> c) {
  std::vector<cplx> p{1.0};
  for (const cplx ck : c) {
    std::vector<cplx> out(p.size() + 1, 0.0);
    for (std::size_t k = 0; k < p.size(); ++k) {
      out[k] += p[k];
      out[k + 1] -= ck * p[k];
    }
    p = std::move(out);
  }
  return p;
}

OperatorSides apply_operator(const QDiffProblem& p, const std::function<cplx(cplx)>& f, cplx x) {
  std::vector<cplx> P(static_cast<std::size_t>(p.N - p.M), 0.0);
  for (const cplx c : linear_factor_product(p.b)) P.push_back(c);
  const std::vector<cplx> Q = linear_factor_product(p.a);
  const std::size_t K = std::max(P.size(), Q.size());
  std::vector<cplx> vals;
  for (std::size_t k = 0; k < K; ++k) vals.push_back(f(x * p.ctx.qpow(static_cast<double>(k))));
  cplx lhs = 0.0, rhs = 0.0;
  for (std::size_t k = 0; k < P.size(); ++k) lhs += P[k] * vals[k];
  for (std::size_t k = 0; k < Q.size(); ++k) rhs += Q[k] * vals[k];
  return {lhs, x * rhs};
}

cplx convergent_solution(const QDiffProblem& p, int j, cplx x) {
  if (j < 0 || j > p.N) throw InvalidArgument("convergent_solution: j out of range");
  if (x == 0.0) throw ZeroArgument("convergent_solution at x = 0");
  const cplx aj = p.a[static_cast<std::size_t>(j)];
  return theta_q(aj * x, p.ctx) / guarded_theta_q(x, p.ctx) *
         hypergeometric_sum(solution_terms(p, j), solution_argument(p, x), p.ctx);
}

FormalSeries divergent_series(const QDiffProblem& p, int k) {
  if (k < 0 || k > p.M) throw InvalidArgument("divergent_series: k out of range");
  const cplx bk = p.b[static_cast<std::size_t>(k)];
  HyperTerms h;
  for (const cplx ar : p.a) h.upper.push_back(ar / bk);
  for (int s = 0; s <= p.M; ++s)
    if (s != k) h.lower.push_back(p.b[static_cast<std::size_t>(s)] * p.ctx.q() / bk);
  h.power = p.M - p.N;
  return FormalSeries::hypergeometric(std::move(h), std::pow(-bk / p.ctx.q(), p.N - p.M), p.ctx);
}

cplx resummed_solution(const QDiffProblem& p, int k, std::span<const cplx> lambdas) {
  return resum(divergent_series(p, k), p.N - p.M, lambdas, p.ctx);
}

cplx connection_rhs(const QDiffProblem& p, int k, std::span<const cplx> lambdas) {
  if (k < 0 || k > p.M) throw InvalidArgument("connection_rhs: k out of range");
  const int D = p.N - p.M;
  if (static_cast<int>(lambdas.size()) != D + 1) throw InvalidArgument("connection_rhs: need N-M+1 lambdas");
  const QContext& ctx = p.ctx;
  const cplx bk = p.b[static_cast<std::size_t>(k)];
  const cplx l0 = lambdas[0];
  cplx s = 0.0;
  for (int j = 0; j <= p.N; ++j) {
    const cplx aj = p.a[static_cast<std::size_t>(j)];
    std::vector<cplx> num, den;
    for (int t = 0; t <= p.M; ++t) {
      if (t == k) continue;
      num.push_back(p.b[static_cast<std::size_t>(t)] * ctx.q() / aj);
      den.push_back(p.b[static_cast<std::size_t>(t)] * ctx.q() / bk);
    }
    for (int r = 0; r <= p.N; ++r) {
      if (r == j) continue;
      num.push_back(p.a[static_cast<std::size_t>(r)] / bk);
      den.push_back(p.a[static_cast<std::size_t>(r)] / aj);
    }
    cplx c = poch_quotient(num, den, ctx);
    c *= theta_q(-aj * std::pow(bk, D - 1) * l0, ctx) / guarded_theta_q(-std::pow(bk, D) * l0, ctx);
    for (int l = 1; l <= D; ++l) {
      const cplx ratio = lambdas[static_cast<std::size_t>(l)] / lambdas[static_cast<std::size_t>(l - 1)];
      c *= theta_q(aj * ratio / bk, ctx) / guarded_theta_q(ratio, ctx);
    }
    s += c * hypergeometric_sum(solution_terms(p, j), solution_argument(p, lambdas[static_cast<std::size_t>(D)]), ctx);
  }
  return s;
}

double connection_residual(const QDiffProblem& p, int k, std::span<const cplx> lambdas) {
  const cplx lhs = resummed_solution(p, k, lambdas);
  const cplx rhs = connection_rhs(p, k, lambdas);
  return std::abs(lhs - rhs) / std::max(std::abs(lhs), 1e-300);
}

cplx n_tilde_phi_M(const QDiffProblem& p, std::span<const cplx> xs) {
  const int D = p.N - p.M;
  if (static_cast<int>(xs.size()) != D + 1) throw InvalidArgument("n_tilde_phi_M: need N-M+1 arguments");
  const QContext& ctx = p.ctx;
  const std::span<const cplx> b1(p.b.data() + 1, p.b.size() - 1);
  const cplx z = product(b1) * ctx.qpow(p.N + 1.0) / (product(p.a) * product(xs));
  cplx s = 0.0;
  for (int j = 0; j <= p.N; ++j) {
    const cplx aj = p.a[static_cast<std::size_t>(j)];
    std::vector<cplx> num, den;
    for (const cplx bs : b1) {
      num.push_back(bs * ctx.q() / aj);
      den.push_back(bs * ctx.q());
    }
    for (int r = 0; r <= p.N; ++r) {
      if (r == j) continue;
      num.push_back(p.a[static_cast<std::size_t>(r)]);
      den.push_back(p.a[static_cast<std::size_t>(r)] / aj);
    }
    cplx c = poch_quotient(num, den, ctx);
    for (const cplx x : xs) c *= theta_q(-aj * x, ctx) / guarded_theta_q(-x, ctx);
    HyperTerms h;
    h.upper.push_back(aj);
    for (const cplx bs : b1) h.upper.push_back(aj / bs);
    for (int r = 0; r <= p.N; ++r)
      if (r != j) h.lower.push_back(aj * ctx.q() / p.a[static_cast<std::size_t>(r)]);
    s += c * hypergeometric_sum(h, z, ctx);
  }
  return s;
}

}  // namespace mulab
