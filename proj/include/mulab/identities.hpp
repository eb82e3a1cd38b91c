#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mulab/qcore.hpp"

namespace mulab {

enum class TolClass { Tight, Foundation, Series, Modular, Quadrature };

double tolerance(TolClass c);
const char* tol_class_name(TolClass c);

struct Box {
  double re_lo, re_hi, im_lo, im_hi;
};

// One sampled parameter tuple. y and lambda are multiplicative variables e^{2 pi i s}
// drawn from additive coordinates s in the u box; w carries further additive variables.
struct ParamPoint {
  cplx tau{0.0, 1.0};
  std::vector<cplx> u;
  cplx alpha = 0.0;
  cplx z = 0.0;
  cplx y = 1.0;
  std::vector<cplx> lambda;
  std::vector<cplx> w;

  QContext ctx() const { return QContext(tau); }
  cplx u_sum() const;
};

struct DomainSpec {
  Box tau_box{-0.3, 0.3, 0.8, 1.4};
  Box u_box{-0.45, 0.45, -0.3, 0.3};
  Box alpha_box{0.2, 0.8, -0.15, 0.15};
  Box z_box{-0.45, 0.45, -0.3, 0.3};
  int n_u = 0;
  int n_lambda = 0;
  int n_w = 0;
  double theta_guard = 0.05;  // min |theta(w)| over guarded()
  double ratio_guard = 0.05;  // min distance of guarded_ratios() to -q^Z
  int max_resamples = 100;
  std::function<std::vector<cplx>(const ParamPoint&)> guarded;
  std::function<std::vector<cplx>(const ParamPoint&)> guarded_ratios;

  // tau near i so that q and the image of q under tau -> -1/tau are both small
  static Box modular_tau_box() { return {-0.2, 0.2, 0.9, 1.2}; }
};

// Deterministic in (seed, index); throws SamplingExhausted when no draw passes the guards.
ParamPoint sample_point(const DomainSpec& spec, std::uint64_t seed, std::uint64_t index);

struct Sides {
  std::vector<cplx> lhs;
  std::vector<cplx> rhs;
};

// max|lhs - rhs| / max(max|lhs|, max|rhs|, 1e-30)
double relative_residual(const Sides& s);

struct IdentitySpec {
  std::string id;
  std::string paper_tag;
  std::string suite;
  TolClass tol_class = TolClass::Series;
  double tol = 1e-9;
  DomainSpec domain;
  std::function<Sides(const ParamPoint&)> sides;
  // Competing readings of one display share a group; exactly one should hold.
  std::string group;
  std::string reading;
  bool candidate = false;
};

const std::vector<IdentitySpec>& registry();
const std::vector<std::string>& suite_names();
// Exact id, or every id of the form "<id>.<suffix>". Throws UnknownIdentity.
std::vector<const IdentitySpec*> find_identity(const std::string& id);
double evaluate_identity(const IdentitySpec& spec, const ParamPoint& point);
double evaluate_identity(const std::string& id, const ParamPoint& point);

struct VerificationReport {
  std::string id;
  std::string paper_tag;
  std::string suite;
  std::uint64_t seed = 0;
  int n_samples = 0;
  double max_rel_residual = 0;
  double mean_rel_residual = 0;
  double tol = 0;
  bool pass = false;
  double wall_time = 0;
  std::string note;
  std::string error;
  std::string group;
  std::string reading;
  bool candidate = false;
};

VerificationReport verify_identity(const IdentitySpec& spec, std::uint64_t seed, int n_samples,
                                   std::optional<double> tol_override = std::nullopt);
// Throws InvalidArgument for an unknown suite.
std::vector<VerificationReport> run_suite(const std::string& suite, std::uint64_t seed, int n_samples,
                                          std::optional<double> tol_override = std::nullopt);

struct GroupVerdict {
  std::string group;
  std::vector<std::string> passing;  // readings that passed
  bool resolved = false;             // exactly one passing reading
};

std::vector<GroupVerdict> adjudicate(const std::vector<VerificationReport>& reports);
// Every non-candidate passes and every group is resolved.
bool all_pass(const std::vector<VerificationReport>& reports);

// Worker cap: MU_LAB_MAX_THREADS if set, else hardware concurrency.
int max_threads();

}  // namespace mulab
