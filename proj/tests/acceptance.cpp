// One PASS/FAIL line per acceptance criterion. Thresholds here are the criteria's own,
// applied as tolerance overrides, independent of the registry's tolerance classes.
#include <boost/math/quadrature/gauss.hpp>
#include <chrono>
#include <cstdio>
#include <random>
#include <regex>
#include <string>
#include <vector>

#include "mulab/completion.hpp"
#include "mulab/identities.hpp"

using namespace mulab;

namespace {

struct Check {
  std::string pattern;  // full-match regex on the identity id
  double tol;
};

struct Outcome {
  bool pass = true;
  int count = 0;
  double worst = 0;  // worst residual / threshold
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome run_checks(const std::vector<Check>& checks, int samples) {
  Outcome o;
  std::vector<std::regex> res;
  for (const auto& c : checks) res.emplace_back(c.pattern);
  for (const auto& s : registry()) {
    for (std::size_t k = 0; k < checks.size(); ++k) {
      if (!std::regex_match(s.id, res[k])) continue;
      const auto r = verify_identity(s, 1, samples, checks[k].tol);
      ++o.count;
      o.worst = std::max(o.worst, r.max_rel_residual / checks[k].tol);
      if (!r.pass) {
        o.pass = false;
        char buf[256];
        std::snprintf(buf, sizeof buf, " %s=%.2e(tol %.0e)%s", r.id.c_str(), r.max_rel_residual, checks[k].tol,
                      r.error.empty() ? "" : "[error]");
        o.detail += buf;
      }
      break;
    }
  }
  if (o.count == 0) {
    o.pass = false;
    o.detail = " no identity matched";
  }
  return o;
}

int failures = 0;

void report(const char* name, const Outcome& o, int samples, double secs, double limit,
            const char* unit = "identities") {
  const bool fast = limit <= 0 || secs < limit;
  const bool ok = o.pass && fast;
  failures += ok ? 0 : 1;
  std::printf("%s %-24s %3d %-10s x %2d points, worst residual/tol %.2e, %.1f s%s%s\n", ok ? "PASS" : "FAIL",
              name, o.count, unit, samples, o.worst, secs, fast ? "" : " (over time limit)", o.detail.c_str());
  std::fflush(stdout);
}

void criterion(const char* name, int samples, double limit, const std::vector<Check>& checks) {
  const auto t0 = std::chrono::steady_clock::now();
  const Outcome o = run_checks(checks, samples);
  report(name, o, samples, seconds_since(t0), limit);
}

// h against an independent composite Gauss rule on twice the accepted panel count
Outcome panel_doubling(int samples) {
  using rule = boost::math::quadrature::gauss<double, 30>;
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> d(-0.45, 0.45), t(0.7, 1.5);
  Outcome o;
  for (int k = 0; k < samples; ++k) {
    const QContext c(cplx(0.5 * d(rng), t(rng)));
    const cplx u(d(rng), d(rng));
    QuadratureInfo info;
    const cplx h = mordell_h(u, c, &info);
    const auto f = [&](double x) { return std::exp(pi * I * x * x * c.tau() - 2 * pi * x * u) / std::cosh(pi * x); };
    const int n = 2 * info.panels;
    const double w = (info.x_hi - info.x_lo) / n;
    cplx s = 0.0;
    for (int j = 0; j < n; ++j) s += rule::integrate(f, info.x_lo + j * w, info.x_lo + (j + 1) * w);
    const double r = std::abs(s - h) / std::max(std::abs(h), 1e-300);
    o.worst = std::max(o.worst, r / 1e-10);
    if (r >= 1e-10) o.pass = false;
  }
  o.count = 1;
  return o;
}

}  // namespace

int main() {
  criterion("foundation", 50, 30,
            {{"TH-[12356]|ETA-1", 1e-10}, {"TH-4|ETA-2|MULTH-4\\..*", 1e-9}});

  criterion("mu", 30, 120, {{"MU-[1-5]", 1e-9}, {"MU-6|MUT-[1-4]", 1e-6}});

  criterion("resummation", 20, 0,
            {{"RES-MONO", 1e-12},
             {"RES-QBFN\\.N[12]|RES-MULMUA-QB\\.N[12]\\.fN", 1e-8},
             {"RES-OP-[123]|RES-OPN-[23]|RES-COMP|RES-BOREL-COMP", 1e-10}});

  criterion("multivariable", 10, 600,
            {{"MULMUA-[46]\\.N[123](\\.alpha-plus-one)?", 1e-7},
             {"MULMUA-[1235]\\.N[123](\\.corrected)?", 1e-8},
             {"MUN-[1-6]\\.N[123]|MUN-OP\\.N[123]", 1e-8}});

  criterion("f-function", 20, 0,
            {{"F1-[1-4]|F1-Q[1-5]|F1-Q6\\.corrected", 1e-9}, {"FNQ?-[1-7]\\.N[23]", 1e-9}});

  criterion("vector/modular", 5, 900,
            {{"MNMOD-2\\.N[23]|MNCOMP-[1-4]\\.N[23]|R-REL", 1e-6},
             {"MN-[1-5]\\.N[23]|NU-[1-4]\\.N[23]|PHI-[1-4]\\.N[23]|MNMOD-1\\.N[23]", 1e-8}});

  criterion("odd/even transformations", 20, 0,
            {{"ODD-(TRANS|MUN)-[12]\\.N[13]\\.M[12]", 1e-6}, {"EVEN-(TRANS|MUN)-[12]\\.N2\\.M1(\\.corrected)?", 1e-6}});

  criterion("appendix", 20, 0,
            {{"APP-CONV\\..*", 1e-9}, {"APP-TPHI-QB\\.N[12]M0", 1e-8}, {"APP-A1-[123]\\..*", 1e-8}});

  {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = run_checks({{"THQ-SERIES|TH-SERIES", 1e-12}, {"NU-THETAS\\.N[23]", 1e-9}}, 50);
    const Outcome h = panel_doubling(50);
    o.pass = o.pass && h.pass;
    o.count += h.count;
    o.worst = std::max(o.worst, h.worst);
    if (!h.pass) o.detail += " h panel doubling";
    report("oracle equivalence", o, 50, seconds_since(t0), 0);
  }

  {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<VerificationReport> reps;
    for (const auto& s : registry())
      if (s.candidate) reps.push_back(verify_identity(s, 1, 20));
    Outcome o;
    for (const auto& g : adjudicate(reps)) {
      ++o.count;
      std::string which;
      for (const auto& p : g.passing) which += (which.empty() ? "" : "+") + p;
      o.detail += " " + g.group + ":" + (which.empty() ? "none" : which);
      o.pass = o.pass && g.resolved;
    }
    if (o.count == 0) o.pass = false;
    report("typo adjudication", o, 20, seconds_since(t0), 0, "groups");
  }
  return failures == 0 ? 0 : 1;
}
