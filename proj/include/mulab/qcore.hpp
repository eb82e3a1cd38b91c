#pragma once

#include <complex>
#include <numbers>
#include <span>
#include <vector>

#include "mulab/errors.hpp"

namespace mulab {

using cplx = std::complex<double>;
using MuVector = std::vector<cplx>;

inline constexpr double pi = std::numbers::pi;
inline constexpr cplx I{0.0, 1.0};

struct TruncationPolicy {
  double eps_term = 1e-16;
  int max_index = 512;
  double lattice_shell_eps = 1e-16;
  int quiet_shells = 4;  // consecutive negligible shells before a sum stops

  void validate() const;
};

// Modular parameter with its derived nome. q is never supplied independently.
class QContext {
 public:
  explicit QContext(cplx tau, TruncationPolicy trunc = {});

  cplx tau() const { return tau_; }
  cplx q() const { return q_; }
  double t() const { return tau_.imag(); }
  const TruncationPolicy& trunc() const { return trunc_; }

  // q^c = exp(2 pi i tau c)
  cplx qpow(cplx c) const;
  QContext with_tau(cplx tau) const { return QContext(tau, trunc_); }

 private:
  cplx tau_;
  cplx q_;
  TruncationPolicy trunc_;
};

// exp(2 pi i x) and exp(pi i x)
cplx e2pi(cplx x);
cplx epi(cplx x);

// Principal branch of (-i tau)^p; Re(-i tau) > 0 so this is unambiguous.
cplx minus_i_tau_pow(cplx tau, double p);
inline cplx sqrt_minus_i_tau(cplx tau) { return minus_i_tau_pow(tau, 0.5); }

// Positive definite symmetric matrix; the distinguished instance is S_hat = I + J.
class SymMatrix {
 public:
  SymMatrix(int dim, std::vector<double> entries);
  static SymMatrix identity(int dim);
  static SymMatrix hat(int dim);

  int dim() const { return dim_; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * dim_ + j)]; }
  double determinant() const;
  SymMatrix inverse() const;
  double quadratic(std::span<const double> n) const;

 private:
  SymMatrix(int dim, std::vector<double> entries, bool check);
  int dim_;
  std::vector<double> a_;
};

cplx qpoch_inf(cplx x, const QContext& ctx);
cplx qpoch_finite(cplx x, int n, const QContext& ctx);
// (x;q)_alpha = (x;q)_inf / (q^alpha x;q)_inf
cplx qpoch_order(cplx x, cplx alpha, const QContext& ctx);
// prod_j (1 - num q^j)/(1 - den q^j) formed termwise
cplx qpoch_ratio(cplx num, cplx den, const QContext& ctx);

cplx theta_q(cplx x, const QContext& ctx);
cplx theta_q_series(cplx x, const QContext& ctx);

cplx jacobi_theta(cplx u, const QContext& ctx);
cplx jacobi_theta_series(cplx u, const QContext& ctx);

cplx dedekind_eta(const QContext& ctx);

cplx lattice_theta(const SymMatrix& S, std::span<const cplx> u, const QContext& ctx);
cplx lattice_theta_dual(const SymMatrix& S, std::span<const cplx> u, const QContext& ctx);
// Sum over Z^N + shift.
cplx lattice_theta_shifted(const SymMatrix& S, std::span<const cplx> u, std::span<const double> shift,
                           const QContext& ctx);

// r phi s (a_list; b_list; q; x) with the ((-1)^n q^{n(n-1)/2})^{1+s-r} factor.
cplx q_hypergeometric(std::span<const cplx> a_list, std::span<const cplx> b_list, cplx x, const QContext& ctx);

// Distance from u to the lattice Z + tau Z.
double lattice_distance(cplx u, cplx tau);

// Throws PoleProximity when |theta(u)| < 1e-10 |q|^{1/8}; returns theta(u) otherwise.
cplx guarded_theta(cplx u, const QContext& ctx);

// Distance of r from the zero set -q^Z of theta_q, measured after reducing into |q| < |r| <= 1.
double theta_q_zero_distance(cplx r, const QContext& ctx);

}  // namespace mulab
