// mulab: evaluate the library's functions and verify the registered identities.
#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mulab/completion.hpp"
#include "mulab/errors.hpp"
#include "mulab/identities.hpp"
#include "mulab/mu.hpp"
#include "mulab/qcore.hpp"

using mulab::cplx;
using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitEval = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_real(const std::string& s, const std::string& whole) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE) throw UsageError("bad complex literal '" + whole + "'");
  return v;
}

// "a", "bi", "a+bi", "a-bi", exponents allowed ("1e-3-2.5E+1i")
cplx parse_complex(std::string s) {
  std::erase(s, ' ');
  if (s.empty()) throw UsageError("empty complex literal");
  if (s.back() != 'i' && s.back() != 'j') return {parse_real(s, s), 0.0};
  const std::string body = s.substr(0, s.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;)
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  if (split == std::string::npos) return {0.0, parse_real(body, s)};
  return {parse_real(body.substr(0, split), s), parse_real(body.substr(split), s)};
}

std::string format_complex(cplx z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.15g%+.15gi", z.real(), z.imag());
  return buf;
}

struct EvalArgs {
  std::string function;
  std::vector<std::string> u, x;
  std::string v, tau, alpha, a, z;
  std::optional<double> tau_re, tau_im;
  int k = 0, N = 0;
};

cplx need(const std::string& lit, const char* name) {
  if (lit.empty()) throw UsageError(std::string("missing --") + name);
  return parse_complex(lit);
}

std::vector<cplx> need_list(const std::vector<std::string>& lits, const char* name, std::size_t min) {
  if (lits.size() < min)
    throw UsageError(std::string("need at least ") + std::to_string(min) + " values of --" + name);
  std::vector<cplx> out;
  for (const auto& s : lits) out.push_back(parse_complex(s));
  return out;
}

cplx tau_of(const EvalArgs& e) {
  if (!e.tau.empty()) return parse_complex(e.tau);
  if (e.tau_im) return {e.tau_re.value_or(0.0), *e.tau_im};
  throw UsageError("missing --tau (or --tau-im)");
}

using Values = std::vector<cplx>;

const std::map<std::string, std::string>& function_help() {
  static const std::map<std::string, std::string> h{
      {"theta", "--u --tau"},
      {"theta_q", "--x --tau"},
      {"eta", "--tau"},
      {"qpoch", "--x --tau [--alpha]"},
      {"mu", "--u --v --tau"},
      {"mu_gen", "--u --v --alpha --tau"},
      {"mu_completed", "--u --v --tau"},
      {"h", "--u --tau"},
      {"R", "--u --tau"},
      {"muN", "--u u0 --u u1 ... --tau"},
      {"hat_muN", "--u u0 ... --alpha --tau"},
      {"fN", "--x x0 --x x1 ... --a --tau"},
      {"nu", "--u u0 ... --k --tau"},
      {"MN", "--u u0 ... --tau"},
      {"MN_completed", "--u u0 ... --tau"},
      {"lattice_theta_hat", "--u v1 ... --tau"},
  };
  return h;
}

Values evaluate(const EvalArgs& e) {
  const std::string& f = e.function;
  if (!function_help().contains(f)) throw UsageError("unknown function '" + f + "'");
  const mulab::QContext ctx(tau_of(e));
  const auto one = [&](const char* name) {
    const auto& list = std::string(name) == "x" ? e.x : e.u;
    return need_list(list, name, 1).front();
  };
  if (f == "theta") return {mulab::jacobi_theta(one("u"), ctx)};
  if (f == "theta_q") return {mulab::theta_q(one("x"), ctx)};
  if (f == "eta") return {mulab::dedekind_eta(ctx)};
  if (f == "qpoch") {
    const cplx x = one("x");
    return {e.alpha.empty() ? mulab::qpoch_inf(x, ctx) : mulab::qpoch_order(x, parse_complex(e.alpha), ctx)};
  }
  if (f == "mu") return {mulab::mu_zwegers(one("u"), need(e.v, "v"), ctx)};
  if (f == "mu_gen") return {mulab::mu_generalized(one("u"), need(e.v, "v"), need(e.alpha, "alpha"), ctx)};
  if (f == "mu_completed") return {mulab::mu_completed(one("u"), need(e.v, "v"), ctx)};
  if (f == "h") return {mulab::mordell_h(one("u"), ctx)};
  if (f == "R") return {mulab::r_function(one("u"), ctx)};
  if (f == "muN") return {mulab::muN_eval(need_list(e.u, "u", 2), ctx)};
  if (f == "hat_muN") return {mulab::hat_muN_eval(need_list(e.u, "u", 2), need(e.alpha, "alpha"), ctx)};
  if (f == "fN") return {mulab::fN_eval(need_list(e.x, "x", 2), need(e.a, "a"), ctx)};
  if (f == "nu") return {mulab::nu_eval(need_list(e.u, "u", 2), e.k, ctx)};
  if (f == "MN") return mulab::MN_vector(need_list(e.u, "u", 2), ctx);
  if (f == "MN_completed") return mulab::MN_completed(need_list(e.u, "u", 2), ctx);
  const auto v = need_list(e.u, "u", 1);
  return {mulab::lattice_theta(mulab::SymMatrix::hat(static_cast<int>(v.size())), v, ctx)};
}

json report_json(const std::string& suite, std::uint64_t seed, int samples,
                 const std::vector<mulab::VerificationReport>& reps) {
  json results = json::array();
  for (const auto& r : reps) {
    json j{{"id", r.id},
           {"paper_tag", r.paper_tag},
           {"suite", r.suite},
           {"n_samples", r.n_samples},
           {"max_rel_residual", r.max_rel_residual},
           {"mean_rel_residual", r.mean_rel_residual},
           {"tol", r.tol},
           {"pass", r.pass},
           {"wall_time", r.wall_time}};
    if (!r.note.empty()) j["note"] = r.note;
    if (!r.error.empty()) j["error"] = r.error;
    if (r.candidate) {
      j["group"] = r.group;
      j["reading"] = r.reading;
    }
    results.push_back(std::move(j));
  }
  json groups = json::array();
  for (const auto& g : mulab::adjudicate(reps))
    groups.push_back({{"group", g.group}, {"passing", g.passing}, {"resolved", g.resolved}});
  json tolerances = json::object();
  for (auto c : {mulab::TolClass::Tight, mulab::TolClass::Foundation, mulab::TolClass::Series,
                 mulab::TolClass::Modular, mulab::TolClass::Quadrature})
    tolerances[mulab::tol_class_name(c)] = mulab::tolerance(c);
  return {{"suite", suite},
          {"seed", seed},
          {"samples", samples},
          {"tolerances", tolerances},
          {"max_threads", mulab::max_threads()},
          {"results", results},
          {"groups", groups},
          {"all_pass", mulab::all_pass(reps)}};
}

void print_human(const std::vector<mulab::VerificationReport>& reps) {
  for (const auto& r : reps) {
    const char* status = r.pass ? "PASS" : (r.candidate ? "REJECTED" : "FAIL");
    std::printf("%-9s %-28s %-34s max %.3e  tol %.0e  %.2fs\n", status, r.id.c_str(), r.paper_tag.c_str(),
                r.max_rel_residual, r.tol, r.wall_time);
    if (!r.error.empty()) std::printf("          %s\n", r.error.c_str());
  }
  for (const auto& g : mulab::adjudicate(reps)) {
    std::string which;
    for (const auto& p : g.passing) which += (which.empty() ? "" : ", ") + p;
    std::printf("reading   %-28s %s\n", g.group.c_str(),
                g.resolved ? ("holds: " + which).c_str() : ("unresolved: [" + which + "]").c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mulab: q-series, mu-functions and identity verification"};
  app.require_subcommand(1);

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "evaluate a function at one point");
  eval->add_option("function", ev.function, "function name (see `mulab eval --help`)")->required();
  eval->add_option("--u", ev.u, "additive variable(s), complex literal a+bi");
  eval->add_option("--x", ev.x, "multiplicative variable(s)");
  eval->add_option("--v", ev.v);
  eval->add_option("--tau", ev.tau);
  eval->add_option("--tau-re", ev.tau_re);
  eval->add_option("--tau-im", ev.tau_im);
  eval->add_option("--alpha", ev.alpha);
  eval->add_option("--a", ev.a);
  eval->add_option("--k", ev.k);
  std::string footer = "functions:";
  for (const auto& [name, args] : function_help()) footer += "\n  " + name + " " + args;
  eval->footer(footer);

  std::string suite, id;
  std::uint64_t seed = 1;
  int samples = 20;
  std::optional<double> tol;
  bool as_json = false;
  std::string report_path;
  auto* verify = app.add_subcommand("verify", "verify identities at sampled points");
  auto* suite_opt = verify->add_option("--suite", suite);
  verify->add_option("--id", id)->excludes(suite_opt);
  verify->add_option("--seed", seed);
  verify->add_option("--samples", samples)->check(CLI::NonNegativeNumber);
  verify->add_option("--tol", tol, "override every tolerance");
  verify->add_flag("--json", as_json);
  verify->add_option("--report", report_path, "also write the JSON report here");

  std::string list_suite;
  bool list_json = false;
  auto* list = app.add_subcommand("list", "list registered identities");
  list->add_option("--suite", list_suite);
  list->add_flag("--json", list_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*eval) {
      for (const cplx v : evaluate(ev)) std::cout << format_complex(v) << "\n";
      return 0;
    }
    if (*list) {
      const auto& names = mulab::suite_names();
      if (!list_suite.empty() && std::find(names.begin(), names.end(), list_suite) == names.end())
        throw UsageError("unknown suite '" + list_suite + "'");
      json arr = json::array();
      for (const auto& s : mulab::registry()) {
        if (!list_suite.empty() && list_suite != "all" && s.suite != list_suite) continue;
        if (list_json)
          arr.push_back({{"id", s.id},
                         {"paper_tag", s.paper_tag},
                         {"suite", s.suite},
                         {"tol_class", mulab::tol_class_name(s.tol_class)},
                         {"tol", s.tol}});
        else
          std::printf("%-28s %-34s %-10s %s\n", s.id.c_str(), s.paper_tag.c_str(), s.suite.c_str(),
                      mulab::tol_class_name(s.tol_class));
      }
      if (list_json) std::cout << arr.dump(2) << "\n";
      return 0;
    }
    std::vector<mulab::VerificationReport> reps;
    std::string label;
    if (!id.empty()) {
      for (const auto* s : mulab::find_identity(id)) reps.push_back(mulab::verify_identity(*s, seed, samples, tol));
      label = id;
    } else {
      label = suite.empty() ? "all" : suite;
      reps = mulab::run_suite(label, seed, samples, tol);
    }
    const json rep = report_json(label, seed, samples, reps);
    if (!report_path.empty()) {
      std::ofstream out(report_path);
      if (!out) throw UsageError("cannot write " + report_path);
      out << rep.dump(2) << "\n";
    }
    if (as_json)
      std::cout << rep.dump(2) << "\n";
    else
      print_human(reps);
    return rep["all_pass"].get<bool>() ? 0 : kExitFail;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const mulab::Error& e) {
    const auto k = e.kind();
    std::cerr << "error: " << e.what() << "\n";
    return k == mulab::ErrorKind::InvalidArgument || k == mulab::ErrorKind::UnknownIdentity ? kExitUsage : kExitEval;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEval;
  }
}
