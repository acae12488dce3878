#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "specbisect/experiment.hpp"
#include "specbisect/generators.hpp"

namespace specbisect {
namespace {

TEST(BisectReport, RoachAlg1Values) {
  const Graph roach = gen_roach(4);
  const auto outcome = bisect_report(roach, "roach-4", BisectMethod::alg1);
  const CutReport& report = outcome.report;
  EXPECT_EQ(report.n, 16);
  EXPECT_EQ(report.m, 18);
  EXPECT_EQ(report.sb_cut, 4);
  ASSERT_TRUE(report.alg1_cut.has_value());
  EXPECT_EQ(*report.alg1_cut, 2);
  EXPECT_NEAR(*report.improvement, 0.5, 1e-12);
  EXPECT_LT(report.lambda2, report.lambda3);
  EXPECT_EQ(cut_size(roach, outcome.partition), 2);
}

TEST(BisectReport, SbMethodLeavesAlg1Empty) {
  const auto outcome =
      bisect_report(gen_roach(4), "roach-4", BisectMethod::sb);
  EXPECT_EQ(outcome.report.sb_cut, 4);
  EXPECT_FALSE(outcome.report.alg1_cut.has_value());
  EXPECT_EQ(cut_size(gen_roach(4), outcome.partition), 4);
}

TEST(BisectReport, RejectsOddOrDisconnected) {
  EXPECT_THROW(bisect_report(gen_fixture(FixtureKind::path, 5), "p5",
                             BisectMethod::alg1),
               DomainError);
  EXPECT_THROW(bisect_report(build_graph(4, {{0, 1}, {2, 3}}), "dis",
                             BisectMethod::alg1),
               DomainError);
}

TEST(Experiment, DeterministicForFixedSeed) {
  ExperimentParams params;
  params.n = 16;
  params.p = 0.3;
  params.samples = 24;
  params.seed = 99;
  const ExperimentSummary a = run_experiment(params);
  const ExperimentSummary b = run_experiment(params);
  EXPECT_EQ(a.mean_improvement, b.mean_improvement);
  EXPECT_EQ(a.discarded_disconnected, b.discarded_disconnected);

  params.threads = 1;  // scheduling must not affect the outcome
  const ExperimentSummary c = run_experiment(params);
  EXPECT_EQ(a.mean_improvement, c.mean_improvement);
}

TEST(Experiment, GainsAreNonNegativeAndDiscardsCounted) {
  ExperimentParams params;
  params.n = 10;
  params.p = 0.22;  // sparse enough that some draws disconnect
  params.samples = 60;
  params.seed = 5;
  const ExperimentSummary summary = run_experiment(params);
  EXPECT_EQ(summary.samples, 60);
  EXPECT_GE(summary.mean_improvement, 0.0);
  EXPECT_GT(summary.discarded_disconnected, 0);
  EXPECT_LT(summary.discarded_disconnected, 60);
}

TEST(Experiment, MatchesPerSampleRuns) {
  ExperimentParams params;
  params.n = 12;
  params.p = 0.5;
  params.samples = 10;
  params.seed = 321;
  const ExperimentSummary summary = run_experiment(params);

  double total = 0.0;
  int kept = 0;
  for (int i = 0; i < params.samples; ++i) {
    const Graph g = gen_erdos_renyi(params.n, params.p,
                                    detail::sample_seed(params.seed, i));
    if (!is_connected(g)) continue;
    const auto outcome = bisect_report(g, "g", BisectMethod::alg1);
    total += *outcome.report.improvement;
    ++kept;
  }
  ASSERT_GT(kept, 0);
  EXPECT_NEAR(summary.mean_improvement, total / kept, 1e-15);
  EXPECT_EQ(summary.discarded_disconnected, params.samples - kept);
}

TEST(Experiment, RejectsBadParameters) {
  ExperimentParams params;
  params.n = 7;
  EXPECT_THROW(run_experiment(params), InputError);
  params.n = 16;
  params.samples = 0;
  EXPECT_THROW(run_experiment(params), InputError);
  params.samples = 5;
  params.p = 1.5;
  EXPECT_THROW(run_experiment(params), InputError);
}

}  // namespace
}  // namespace specbisect
