#pragma once

#include <functional>
#include <span>
#include <vector>

#include "mulab/borel.hpp"
#include "mulab/qcore.hpp"

namespace mulab {

// [T^{N-M} (1 - b_0 T) ... (1 - b_M T) - x (1 - a_0 T) ... (1 - a_N T)] f = 0, 0 <= M < N, T: x -> qx
struct QDiffProblem {
  int N = 1;
  int M = 0;
  std::vector<cplx> a;  // a_0..a_N
  std::vector<cplx> b;  // b_0..b_M
  QContext ctx;

  QDiffProblem(int N, int M, std::vector<cplx> a, std::vector<cplx> b, QContext ctx);
};

// theta_q(a_j x)/theta_q(x) * {N+1}phi_N(...; (-1)^{N-M} b_0..b_M q^{N+1} / (a_0..a_N x))
cplx convergent_solution(const QDiffProblem& p, int j, cplx x);

// The divergent formal solution tilde f_k (without its theta_q(b_k x)/theta_q(x) prefactor).
FormalSeries divergent_series(const QDiffProblem& p, int k);

// L^{N-M} B^{N-M} (tilde f_k) at (lambda_0, ..., lambda_{N-M})
cplx resummed_solution(const QDiffProblem& p, int k, std::span<const cplx> lambdas);

// Right side of the connection formula: sum over j of connection coefficients, theta quotients
// and the convergent series at x = lambda_{N-M}.
cplx connection_rhs(const QDiffProblem& p, int k, std::span<const cplx> lambdas);

// |LHS - RHS| / |LHS|
double connection_residual(const QDiffProblem& p, int k, std::span<const cplx> lambdas);

// N tilde phi M (a_0..a_N; b_1..b_M; x_0..x_{N-M}); b_0 does not enter.
cplx n_tilde_phi_M(const QDiffProblem& p, std::span<const cplx> xs);

// Both sides of the defining operator applied to f at x by shifted re-evaluation.
struct OperatorSides {
  cplx lhs;
  cplx rhs;
};
OperatorSides apply_operator(const QDiffProblem& p, const std::function<cplx(cplx)>& f, cplx x);

// Coefficients of a polynomial prod_k (1 - c_k T), lowest degree first.
std::vector<cplx> linear_factor_product(std::span<const cplx> c);

}  // namespace mulab
