#pragma once

#include <functional>
#include <span>
#include <vector>

#include "mulab/qcore.hpp"

namespace mulab {

// Neumaier-compensated complex accumulator.
class CompensatedSum {
 public:
  void add(cplx x);
  cplx value() const { return {re_ + cre_, im_ + cim_}; }

 private:
  static void step(double& s, double& c, double x);
  double re_ = 0, im_ = 0, cre_ = 0, cim_ = 0;
};

// Sum over n in Z, visited as center, center +- 1, center +- 2, ...
// Stops after policy.quiet_shells consecutive shells whose absolute mass is below
// eps_term * max(|sum|, largest term seen).
cplx bilateral_sum(const std::function<cplx(int)>& f, const TruncationPolicy& policy, int center = 0);

// Sum over n >= 0 with the same stopping rule (one term per shell).
cplx unilateral_sum(const std::function<cplx(int)>& f, const TruncationPolicy& policy);

// Sum over Z^dim in cubical shells max|n_j| = k. dim = 0 gives f of the empty point.
cplx lattice_sum(int dim, const std::function<cplx(std::span<const int>)>& f, const TruncationPolicy& policy);

// Lazily filled table f(n), n in Z.
template <class T>
class IndexCache {
 public:
  explicit IndexCache(std::function<T(int)> f) : f_(std::move(f)) {}

  const T& operator()(int n) {
    auto& side = n >= 0 ? pos_ : neg_;
    const auto k = static_cast<std::size_t>(n >= 0 ? n : -n - 1);
    while (side.size() <= k) {
      const int m = static_cast<int>(side.size());
      side.push_back(f_(n >= 0 ? m : -m - 1));
    }
    return side[k];
  }

 private:
  std::function<T(int)> f_;
  std::vector<T> pos_, neg_;
};

}  // namespace mulab
