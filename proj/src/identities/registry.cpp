#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <limits>
#include <map>
#include <thread>

#include "identities/common.hpp"
#include "mulab/hypergeometric.hpp"

namespace mulab {

double tolerance(TolClass c) {
  switch (c) {
    case TolClass::Tight: return 1e-12;
    case TolClass::Foundation: return 1e-10;
    case TolClass::Series: return 1e-9;
    case TolClass::Modular: return 1e-8;
    case TolClass::Quadrature: return 1e-6;
  }
  return 0;
}

const char* tol_class_name(TolClass c) {
  switch (c) {
    case TolClass::Tight: return "TIGHT";
    case TolClass::Foundation: return "FOUNDATION";
    case TolClass::Series: return "SERIES";
    case TolClass::Modular: return "MODULAR";
    case TolClass::Quadrature: return "QUADRATURE";
  }
  return "?";
}

double relative_residual(const Sides& s) {
  if (s.lhs.size() != s.rhs.size()) throw InvalidArgument("identity sides differ in length");
  double diff = 0, scale = 1e-30;
  for (std::size_t i = 0; i < s.lhs.size(); ++i) {
    diff = std::max(diff, std::abs(s.lhs[i] - s.rhs[i]));
    scale = std::max({scale, std::abs(s.lhs[i]), std::abs(s.rhs[i])});
  }
  if (!std::isfinite(diff) || !std::isfinite(scale)) throw NonConvergent("identity side is not finite");
  return diff / scale;
}

namespace ident {

cplx phi11(cplx A, cplx x, const QContext& ctx) {
  return hypergeometric_sum(HyperTerms{{A}, {0.0}, 1}, x, ctx);
}

// F(z) = (1-z) F(qz) + A z F(q^2 z); with H_k = F(x q^{-k}) / ((-x)^k q^{-k(k+1)/2}):
// H_k = (1 - q^k/x) H_{k-1} + A q^{k-1}/x H_{k-2}
Scaled phi11_shifted(cplx A, cplx x, int m, const QContext& ctx) {
  if (m >= 0) return {0.0, phi11(A, x * ctx.qpow(m), ctx)};
  const int k = -m;
  cplx prev = -x * phi11(A, x * ctx.q(), ctx), cur = phi11(A, x, ctx), qj = 1.0;
  for (int j = 1; j <= k; ++j) {
    const cplx qprev = qj;
    qj *= ctx.q();
    const cplx next = (1.0 - qj / x) * cur + A * qprev / x * prev;
    prev = cur;
    cur = next;
  }
  const double dk = k;
  return {dk * std::log(-x) - pi * I * ctx.tau() * dk * (dk + 1), cur};
}

}  // namespace ident

const std::vector<IdentitySpec>& registry() {
  static const std::vector<IdentitySpec> reg = [] {
    ident::Registry r;
    ident::add_theta(r);
    ident::add_mu(r);
    ident::add_genmu(r);
    ident::add_mulmu(r);
    ident::add_vector(r);
    ident::add_completion(r);
    ident::add_modular(r);
    ident::add_borel(r);
    ident::add_appendix(r);
    return r;
  }();
  return reg;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"theta", "mu",    "genmu",  "mulmu",    "MN",
                                              "completion", "modular", "borel", "appendix", "all"};
  return names;
}

std::vector<const IdentitySpec*> find_identity(const std::string& id) {
  std::vector<const IdentitySpec*> out;
  for (const auto& s : registry())
    if (s.id == id) return {&s};
  for (const auto& s : registry())
    if (s.id.size() > id.size() && s.id.compare(0, id.size(), id) == 0 && s.id[id.size()] == '.') out.push_back(&s);
  if (out.empty()) throw UnknownIdentity("no identity registered as '" + id + "'");
  return out;
}

double evaluate_identity(const IdentitySpec& spec, const ParamPoint& point) {
  try {
    return relative_residual(spec.sides(point));
  } catch (const Error& e) {
    std::string msg = e.what();
    const std::string prefix = std::string(kind_name(e.kind())) + ": ";
    if (msg.starts_with(prefix)) msg.erase(0, prefix.size());
    throw Error(e.kind(), msg + " [identity " + spec.id + ", tau = (" +
                              std::to_string(point.tau.real()) + ", " + std::to_string(point.tau.imag()) + ")]");
  }
}

double evaluate_identity(const std::string& id, const ParamPoint& point) {
  const auto specs = find_identity(id);
  double worst = 0;
  for (const auto* s : specs) worst = std::max(worst, evaluate_identity(*s, point));
  return worst;
}

int max_threads() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (const char* env = std::getenv("MU_LAB_MAX_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) n = n > 0 ? std::min(n, cap) : cap;
  }
  return std::max(1, n);
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

struct SampleOutcome {
  double residual = 0;
  std::string error;
};

}  // namespace

VerificationReport verify_identity(const IdentitySpec& spec, std::uint64_t seed, int n_samples,
                                   std::optional<double> tol_override) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.id = spec.id;
  rep.paper_tag = spec.paper_tag;
  rep.suite = spec.suite;
  rep.seed = seed;
  rep.n_samples = std::max(0, n_samples);
  rep.tol = tol_override.value_or(spec.tol);
  rep.group = spec.group;
  rep.reading = spec.reading;
  rep.candidate = spec.candidate;
  if (rep.n_samples == 0) {
    rep.pass = true;
    rep.note = "no samples";
    return rep;
  }

  const std::uint64_t stream = seed ^ fnv1a(spec.id);
  std::vector<SampleOutcome> out(static_cast<std::size_t>(rep.n_samples));
  std::atomic<int> next{0};
  auto work = [&] {
    for (int i = next++; i < rep.n_samples; i = next++) {
      auto& o = out[static_cast<std::size_t>(i)];
      try {
        o.residual = evaluate_identity(spec, sample_point(spec.domain, stream, static_cast<std::uint64_t>(i)));
      } catch (const std::exception& e) {
        o.error = "sample " + std::to_string(i) + ": " + e.what();
      }
    }
  };
  const int workers = std::min(max_threads(), rep.n_samples);
  std::vector<std::jthread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  pool.clear();

  // fixed-order reduction keeps reports bit-identical across thread counts
  double sum = 0;
  int ok = 0;
  for (const auto& o : out) {
    if (!o.error.empty()) {
      if (rep.error.empty()) rep.error = o.error;
      continue;
    }
    rep.max_rel_residual = std::max(rep.max_rel_residual, o.residual);
    sum += o.residual;
    ++ok;
  }
  rep.mean_rel_residual = ok ? sum / ok : 0.0;
  if (!rep.error.empty() && ok == 0) rep.max_rel_residual = std::numeric_limits<double>::infinity();
  rep.pass = rep.error.empty() && rep.max_rel_residual <= rep.tol;
  rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::vector<VerificationReport> run_suite(const std::string& suite, std::uint64_t seed, int n_samples,
                                          std::optional<double> tol_override) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw InvalidArgument("unknown suite '" + suite + "'");
  std::vector<VerificationReport> reports;
  for (const auto& s : registry())
    if (suite == "all" || s.suite == suite) reports.push_back(verify_identity(s, seed, n_samples, tol_override));
  return reports;
}

std::vector<GroupVerdict> adjudicate(const std::vector<VerificationReport>& reports) {
  std::map<std::string, GroupVerdict> groups;
  for (const auto& r : reports) {
    if (r.group.empty()) continue;
    auto& g = groups[r.group];
    g.group = r.group;
    if (r.pass && r.n_samples > 0) g.passing.push_back(r.reading);
  }
  std::vector<GroupVerdict> out;
  for (auto& [name, g] : groups) {
    g.resolved = g.passing.size() == 1;
    out.push_back(std::move(g));
  }
  return out;
}

bool all_pass(const std::vector<VerificationReport>& reports) {
  bool sampled = false;
  for (const auto& r : reports) {
    if (!r.candidate && !r.pass) return false;
    sampled = sampled || r.n_samples > 0;
  }
  if (!sampled) return true;
  for (const auto& g : adjudicate(reports))
    if (!g.resolved) return false;
  return true;
}

}  // namespace mulab
