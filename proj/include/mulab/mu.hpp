#pragma once

#include <span>

#include "mulab/qcore.hpp"

namespace mulab {

// mu(u, v; tau), Appell-Lerch normalization.
cplx mu_zwegers(cplx u, cplx v, const QContext& ctx);

// mu(u, v; alpha; tau); alpha = 1 recovers mu_zwegers.
cplx mu_generalized(cplx u, cplx v, cplx alpha, const QContext& ctx);

// f_N(x_0, ..., x_N; a; q) for xs of length N+1, N >= 1.
cplx fN_eval(std::span<const cplx> xs, cplx a, const QContext& ctx);
cplx f1_eval(cplx x0, cplx x1, cplx a, const QContext& ctx);

// Multivariable mu_N(u_0, ..., u_N).
cplx muN_eval(std::span<const cplx> us, const QContext& ctx);

// hat mu_N(u_0, ..., u_N; alpha) = i^N e^{pi i alpha u} q^{-N/8} f_N(-e^{2 pi i u_j}; q^alpha).
cplx hat_muN_eval(std::span<const cplx> us, cplx alpha, const QContext& ctx);

// The lattice-sum form of hat mu_N. Printed uses the Pochhammer top e^{pi i u_0 + alpha tau},
// Corrected uses e^{2 pi i (u_0 + alpha tau)}.
enum class HatMuReading { Corrected, Printed };
cplx hat_muN_definition(std::span<const cplx> us, cplx alpha, const QContext& ctx,
                        HatMuReading reading = HatMuReading::Corrected);

// nu_{N,k}: theta_S_hat over Z^{N-1} + (k/N)(1,...,1) at v_j = u_0 + u_1 - u_{j+1}. 1 when N = 1.
cplx nu_eval(std::span<const cplx> us, int k, const QContext& ctx);

MuVector phiN_eval(std::span<const cplx> us, cplx z, const QContext& ctx);

// [(-1)^k e^{-2 pi i k u/N - pi i k^2 tau/N} mu_N(u_0 + k tau, u_1, ..., u_N)]_{k=0..N-1}
MuVector MN_vector(std::span<const cplx> us, const QContext& ctx);

}  // namespace mulab
