#pragma once

#include <algorithm>
#include <complex>
#include <vector>

namespace mulab::test {

inline double rel(std::complex<double> a, std::complex<double> b) {
  const double s = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / s;
}

inline double rel(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b) {
  double d = 0, s = 1e-300;
  for (std::size_t k = 0; k < a.size(); ++k) {
    d = std::max(d, std::abs(a[k] - b[k]));
    s = std::max({s, std::abs(a[k]), std::abs(b[k])});
  }
  return d / s;
}

}  // namespace mulab::test
