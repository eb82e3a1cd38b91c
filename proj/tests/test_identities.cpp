#include <gtest/gtest.h>

#include <set>

#include "mulab/errors.hpp"
#include "mulab/identities.hpp"

using namespace mulab;

TEST(Registry, IdsUniqueAndTagged) {
  const auto& reg = registry();
  EXPECT_GE(reg.size(), 60u);
  std::set<std::string> ids;
  const auto& suites = suite_names();
  for (const auto& s : reg) {
    EXPECT_TRUE(ids.insert(s.id).second) << "duplicate " << s.id;
    EXPECT_FALSE(s.paper_tag.empty()) << s.id;
    EXPECT_NE(std::find(suites.begin(), suites.end(), s.suite), suites.end()) << s.id;
    EXPECT_TRUE(static_cast<bool>(s.sides)) << s.id;
    EXPECT_GT(s.tol, 0.0);
    EXPECT_EQ(s.candidate, !s.group.empty()) << s.id;
  }
}

TEST(Registry, ToleranceClasses) {
  EXPECT_EQ(tolerance(TolClass::Series), 1e-9);
  EXPECT_EQ(tolerance(TolClass::Modular), 1e-8);
  EXPECT_EQ(tolerance(TolClass::Quadrature), 1e-6);
  EXPECT_STREQ(tol_class_name(TolClass::Quadrature), "QUADRATURE");
}

TEST(Registry, FindIdentity) {
  EXPECT_EQ(find_identity("MU-1").size(), 1u);
  EXPECT_GE(find_identity("MULMUA-4").size(), 3u);  // MULMUA-4.N1..N3
  try {
    find_identity("NOPE");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownIdentity);
  }
}

TEST(Sampling, Deterministic) {
  DomainSpec d;
  d.n_u = 3;
  d.n_lambda = 2;
  const ParamPoint a = sample_point(d, 42, 3), b = sample_point(d, 42, 3), c = sample_point(d, 42, 4);
  EXPECT_EQ(a.tau, b.tau);
  EXPECT_EQ(a.u, b.u);
  EXPECT_EQ(a.lambda, b.lambda);
  EXPECT_NE(a.tau, c.tau);
}

TEST(Sampling, GuardsHold) {
  DomainSpec d;
  d.n_u = 4;
  d.guarded = [](const ParamPoint& p) { return p.u; };
  const ParamPoint p = sample_point(d, 7, 0);
  const QContext c = p.ctx();
  for (const cplx u : p.u) EXPECT_GT(std::abs(jacobi_theta(u, c)), d.theta_guard);
}

TEST(Sampling, DegenerateBoxExhausts) {
  DomainSpec d;
  d.n_u = 1;
  d.u_box = {0.0, 0.0, 0.0, 0.0};
  d.guarded = [](const ParamPoint& p) { return p.u; };
  try {
    sample_point(d, 1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SamplingExhausted);
  }
}

TEST(Evaluate, SingleIdentities) {
  DomainSpec d;
  d.n_u = 2;
  const ParamPoint p = sample_point(d, 3, 0);
  EXPECT_LT(evaluate_identity("MU-1", p), 1e-9);
  const auto rep = verify_identity(*find_identity("RES-MONO").front(), 1, 5);
  EXPECT_TRUE(rep.pass);
  EXPECT_LT(rep.max_rel_residual, 1e-12);
  const auto comp = verify_identity(*find_identity("MNCOMP-4.N2").front(), 1, 3);
  EXPECT_TRUE(comp.pass) << comp.max_rel_residual << " " << comp.error;
  EXPECT_LT(comp.max_rel_residual, 1e-6);
}

TEST(Suites, ThetaAndCompletion) {
  EXPECT_TRUE(all_pass(run_suite("theta", 1, 20)));
  const auto reps = run_suite("completion", 1, 10);
  for (const auto& r : reps) EXPECT_TRUE(r.pass) << r.id << " " << r.max_rel_residual << " " << r.error;
}

TEST(Suites, NoSamplesIsVacuous) {
  const auto reps = run_suite("all", 1, 0);
  ASSERT_EQ(reps.size(), registry().size());
  for (const auto& r : reps) {
    EXPECT_EQ(r.n_samples, 0);
    EXPECT_EQ(r.note, "no samples");
  }
  EXPECT_TRUE(all_pass(reps));
}

TEST(Suites, UnknownSuite) {
  EXPECT_THROW(run_suite("nope", 1, 1), Error);
}

TEST(Suites, ReportsIndependentOfThreadCount) {
  const auto& spec = *find_identity("MN-3.N2").front();
  setenv("MU_LAB_MAX_THREADS", "1", 1);
  const auto a = verify_identity(spec, 5, 6);
  setenv("MU_LAB_MAX_THREADS", "4", 1);
  const auto b = verify_identity(spec, 5, 6);
  unsetenv("MU_LAB_MAX_THREADS");
  EXPECT_EQ(a.max_rel_residual, b.max_rel_residual);
  EXPECT_EQ(a.mean_rel_residual, b.mean_rel_residual);
}

TEST(Adjudication, ExactlyOneReading) {
  VerificationReport good, bad, other;
  good.group = bad.group = "G";
  good.reading = "a";
  bad.reading = "b";
  good.candidate = bad.candidate = true;
  good.n_samples = bad.n_samples = other.n_samples = 3;
  good.pass = true;
  other.pass = true;
  EXPECT_TRUE(all_pass({good, bad, other}));
  auto v = adjudicate({good, bad});
  ASSERT_EQ(v.size(), 1u);
  EXPECT_TRUE(v[0].resolved);
  EXPECT_EQ(v[0].passing, std::vector<std::string>{"a"});
  bad.pass = true;
  EXPECT_FALSE(all_pass({good, bad, other}));
  good.pass = bad.pass = false;
  EXPECT_FALSE(all_pass({good, bad, other}));
}
