#include "mulab/summation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mulab {

void CompensatedSum::step(double& s, double& c, double x) {
  const double t = s + x;
  if (std::abs(s) >= std::abs(x))
    c += (s - t) + x;
  else
    c += (x - t) + s;
  s = t;
}

void CompensatedSum::add(cplx x) {
  step(re_, cre_, x.real());
  step(im_, cim_, x.imag());
}

namespace {

// Shared shell bookkeeping for all three summation shapes.
class ShellStopper {
 public:
  explicit ShellStopper(const TruncationPolicy& p, double eps) : p_(p), eps_(eps) {}

  // Returns true when summation may stop.
  bool close_shell(const CompensatedSum& sum, double mass, double peak, int k, const char* what) {
    if (!std::isfinite(mass))
      throw NonConvergent(std::string(what) + ": non-finite term in shell " + std::to_string(k));
    peak_ = std::max(peak_, peak);
    const double scale = std::max(std::abs(sum.value()), peak_);
    if (mass <= eps_ * scale)
      ++quiet_;
    else
      quiet_ = 0;
    if (quiet_ >= p_.quiet_shells && k >= 2) return true;
    if (k >= p_.max_index)
      throw NonConvergent(std::string(what) + ": max_index " + std::to_string(p_.max_index) + " reached");
    return false;
  }

 private:
  const TruncationPolicy& p_;
  double eps_;
  double peak_ = 0;
  int quiet_ = 0;
};

void walk_shell(int dim, int k, int j, bool on_boundary, std::vector<int>& n,
                const std::function<void(std::span<const int>)>& visit) {
  if (j == dim) {
    visit(n);
    return;
  }
  if (j == dim - 1 && !on_boundary) {
    n[j] = -k;
    visit(n);
    n[j] = k;
    visit(n);
    return;
  }
  for (int v = -k; v <= k; ++v) {
    n[j] = v;
    walk_shell(dim, k, j + 1, on_boundary || v == k || v == -k, n, visit);
  }
}

}  // namespace

cplx bilateral_sum(const std::function<cplx(int)>& f, const TruncationPolicy& policy, int center) {
  CompensatedSum sum;
  const cplx f0 = f(center);
  sum.add(f0);
  ShellStopper stop(policy, policy.eps_term);
  if (stop.close_shell(sum, std::abs(f0), std::abs(f0), 0, "bilateral_sum")) return sum.value();
  for (int k = 1;; ++k) {
    const cplx a = f(center + k);
    const cplx b = f(center - k);
    sum.add(a);
    sum.add(b);
    const double mass = std::abs(a) + std::abs(b);
    if (stop.close_shell(sum, mass, std::max(std::abs(a), std::abs(b)), k, "bilateral_sum")) break;
  }
  return sum.value();
}

cplx unilateral_sum(const std::function<cplx(int)>& f, const TruncationPolicy& policy) {
  CompensatedSum sum;
  ShellStopper stop(policy, policy.eps_term);
  for (int k = 0;; ++k) {
    const cplx a = f(k);
    sum.add(a);
    if (stop.close_shell(sum, std::abs(a), std::abs(a), k, "unilateral_sum")) break;
  }
  return sum.value();
}

cplx lattice_sum(int dim, const std::function<cplx(std::span<const int>)>& f, const TruncationPolicy& policy) {
  if (dim < 0) throw InvalidArgument("lattice_sum: negative dimension");
  std::vector<int> n(static_cast<std::size_t>(dim), 0);
  if (dim == 0) return f(n);
  CompensatedSum sum;
  const cplx f0 = f(n);
  sum.add(f0);
  ShellStopper stop(policy, policy.lattice_shell_eps);
  if (stop.close_shell(sum, std::abs(f0), std::abs(f0), 0, "lattice_sum")) return sum.value();
  for (int k = 1;; ++k) {
    CompensatedSum shell;
    double mass = 0, peak = 0;
    walk_shell(dim, k, 0, false, n, [&](std::span<const int> p) {
      const cplx t = f(p);
      shell.add(t);
      const double a = std::abs(t);
      mass += a;
      peak = std::max(peak, a);
    });
    sum.add(shell.value());
    if (stop.close_shell(sum, mass, peak, k, "lattice_sum")) break;
  }
  return sum.value();
}

}  // namespace mulab
