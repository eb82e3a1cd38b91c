#pragma once

#include <optional>
#include <vector>

#include "mulab/qcore.hpp"

namespace mulab {

// Coefficient shape (A)_n / ((q)_n (B)_n) * ((-1)^n q^{n(n-1)/2})^power * z^n.
struct HyperTerms {
  std::vector<cplx> upper;
  std::vector<cplx> lower;
  int power = 0;
};

// Smallest m >= 0 with a q^m = 1, if any (the series then terminates at n = m).
std::optional<int> terminating_index(cplx a, const QContext& ctx);

// Sum of the series. power > 0: entire. power = 0: radius 1, continued past |z| = 1/2
// through the q-difference equation the series satisfies. power < 0: only terminating
// series are accepted.
cplx hypergeometric_sum(const HyperTerms& h, cplx z, const QContext& ctx);

// Coefficient of z^n (z-independent part times scale^n).
cplx hypergeometric_coefficient(const HyperTerms& h, cplx scale, int n, const QContext& ctx);

}  // namespace mulab
