#pragma once

#include <span>

#include "mulab/qcore.hpp"

namespace mulab {

// E(x) = 2 int_0^x e^{-pi z^2} dz = erf(sqrt(pi) x)
double gauss_E(double x);

// sgn(nu) - E(x) without cancellation when the signs agree. nu != 0.
double sgn_minus_E(double nu, double x);

// e^{y^2} erfc(y) for y >= 0
double erfcx(double y);

// R(u; tau)
cplx r_function(cplx u, const QContext& ctx);

struct QuadratureInfo {
  int panels = 0;
  double last_change = 0;  // |I_2n - I_n| at acceptance
  double x_lo = 0, x_hi = 0;
};

// Mordell integral h(u; tau) = int e^{pi i x^2 tau - 2 pi x u} / cosh(pi x) dx
cplx mordell_h(cplx u, const QContext& ctx, QuadratureInfo* info = nullptr);

// mu(u, v) + (i/2) R(u - v)
cplx mu_completed(cplx u, cplx v, const QContext& ctx);

// [(-1)^k e^{-2 pi i k u/N} q^{-k^2/2N} R(u + k tau + (N+1)/2; N tau)]
MuVector RN_vector(cplx u, int N, const QContext& ctx);

// [(-1)^k e^{-2 pi i k u/N} q^{-k^2/2N} h(u + k tau - (N-1)/2; N tau)]
MuVector HN_vector(cplx u, int N, const QContext& ctx);

// M_N + (i/2) R_N(u), u = u_0 + ... + u_N
MuVector MN_completed(std::span<const cplx> us, const QContext& ctx);

// mu_N + (i/2) R(u + (N+1)/2; N tau)
cplx muN_completed(std::span<const cplx> us, const QContext& ctx);

// sum_{j=1}^m (-1)^j e^{pi i (2j-1)^2/4m} h(u + (2j-1)/2m - 1/2; N tau - 1/m)
cplx hN_combination(cplx u, int N, int m, const QContext& ctx);

// sum_{j=1}^{2m} e^{pi i (2j-1)^2/8m} h(u + (2j-1)/4m - 1/2; N tau - 1/2m)
cplx hN_combination_even(cplx u, int N, int m, const QContext& ctx);

}  // namespace mulab
