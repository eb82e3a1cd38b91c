#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "mulab/identities.hpp"

namespace mulab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Bit-exact across standard libraries, unlike uniform_real_distribution.
class Draw {
 public:
  Draw(std::uint64_t seed, std::uint64_t index) : rng_(splitmix64(splitmix64(seed) ^ index)) {}
  double unit() { return static_cast<double>(rng_() >> 11) * 0x1p-53; }
  double in(double lo, double hi) { return lo + (hi - lo) * unit(); }
  cplx in(const Box& b) { return {in(b.re_lo, b.re_hi), in(b.im_lo, b.im_hi)}; }

 private:
  std::mt19937_64 rng_;
};

bool accepted(const DomainSpec& spec, const ParamPoint& p) {
  const QContext ctx = p.ctx();
  if (spec.guarded)
    for (const cplx w : spec.guarded(p))
      if (!(std::abs(jacobi_theta(w, ctx)) >= spec.theta_guard)) return false;
  if (spec.guarded_ratios)
    for (const cplx r : spec.guarded_ratios(p))
      if (!(theta_q_zero_distance(r, ctx) >= spec.ratio_guard)) return false;
  return true;
}

}  // namespace

cplx ParamPoint::u_sum() const { return std::accumulate(u.begin(), u.end(), cplx(0.0)); }

ParamPoint sample_point(const DomainSpec& spec, std::uint64_t seed, std::uint64_t index) {
  Draw d(seed, index);
  for (int attempt = 0; attempt <= spec.max_resamples; ++attempt) {
    ParamPoint p;
    p.tau = d.in(spec.tau_box);
    for (int j = 0; j < spec.n_u; ++j) p.u.push_back(d.in(spec.u_box));
    p.alpha = d.in(spec.alpha_box);
    p.z = d.in(spec.z_box);
    p.y = e2pi(d.in(spec.u_box));
    for (int j = 0; j < spec.n_lambda; ++j) p.lambda.push_back(e2pi(d.in(spec.u_box)));
    for (int j = 0; j < spec.n_w; ++j) p.w.push_back(d.in(spec.u_box));
    if (!(p.tau.imag() > 0)) throw InvalidArgument("sample_point: tau box leaves the upper half plane");
    if (accepted(spec, p)) return p;
  }
  throw SamplingExhausted("no point passed the guards after " + std::to_string(spec.max_resamples) +
                          " resamples (seed " + std::to_string(seed) + ", index " + std::to_string(index) + ")");
}

}  // namespace mulab
