#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "qmeur/error.hpp"
#include "qmeur/scenario.hpp"

namespace qmeur {
namespace {

constexpr double kPi = std::numbers::pi;

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

TEST(SweepAxis, InclusiveGrid) {
  const auto pts = SweepAxis{"alpha", 0.0, kPi, 200}.points();
  ASSERT_EQ(pts.size(), 200u);
  EXPECT_EQ(pts.front(), 0.0);
  EXPECT_EQ(pts.back(), kPi);
  EXPECT_EQ(SweepAxis("p", 0.3, 0.9, 1).points(), std::vector<double>{0.3});
}

TEST(OneMemory, Endpoints) {
  const auto mixed = run_one_memory_case({"alpha", 0.0, kPi, 5}, 0.0);
  const std::size_t thm1 = mixed.bound_column("thm1");
  for (const auto& row : mixed.rows) {
    EXPECT_NEAR(row.lhs, 3.0, 1e-12);
    EXPECT_NEAR(row.bounds[thm1], 3.0, 1e-12);
  }
  const auto bell = run_one_memory_case({"p", 1.0, 1.0, 1}, kPi / 4);
  EXPECT_NEAR(bell.rows[0].lhs, 0.0, 1e-12);
  EXPECT_NEAR(bell.rows[0].bounds[thm1], 0.0, 1e-12);
}

TEST(OneMemory, BoundsHoldAndThm1DominatesThm2) {
  const auto r = run_one_memory_case({"alpha", 0.0, kPi, 41}, 0.5);
  EXPECT_EQ(r.parameter_names, (std::vector<std::string>{"alpha", "p"}));
  const std::size_t thm1 = r.bound_column("thm1");
  const std::size_t thm2 = r.bound_column("thm2");
  const std::size_t xie = r.bound_column("xie");
  for (const auto& row : r.rows) {
    for (double b : row.bounds) EXPECT_GE(row.lhs, b - 1e-9);
    EXPECT_GE(row.bounds[thm1], row.bounds[thm2] - 1e-9);
    EXPECT_NEAR(row.bounds[thm1], row.bounds[xie], 1e-12);
  }
  EXPECT_EQ(summarize(r).violations, 0u);
}

TEST(OneMemory, RejectsBadAxis) {
  EXPECT_THROW(run_one_memory_case({"beta", 0, 1, 3}, 0.5), Error);
  EXPECT_THROW(run_one_memory_case({"alpha", 0, 1, 0}, 0.5), Error);
}

TEST(WState, ProductEndpoint) {
  // alpha = 0 is |100>: sigma_x on B contributes 1, sigma_y and sigma_z on C give 1 + 0.
  const auto r = run_two_memory_case({"alpha", 0.0, 0.0, 1}, kPi / 5);
  EXPECT_NEAR(r.rows[0].lhs, 2.0, 1e-12);
}

TEST(WState, BoundsHold) {
  for (const SweepAxis& axis : {SweepAxis{"alpha", 0.0, kPi, 31}, SweepAxis{"beta", 0.0, 2 * kPi, 31}}) {
    const auto r = run_two_memory_case(axis, axis.name == "alpha" ? kPi / 5 : 2 * kPi / 3);
    ASSERT_EQ(r.rows.size(), 31u);
    for (const auto& row : r.rows) {
      for (double b : row.bounds) EXPECT_GE(row.lhs, b - 1e-9);
      EXPECT_GE(row.bounds[1], row.bounds[0]);
      EXPECT_GE(row.bounds[2], row.bounds[0]);
    }
  }
}

TEST(Ensemble, BoundsHoldAndThm1BeatsWu) {
  const auto r = run_three_memory_ensemble(200, 7);
  ASSERT_EQ(r.rows.size(), 200u);
  const std::size_t wu = r.bound_column("wu");
  const std::size_t thm1 = r.bound_column("thm1");
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const auto& row = r.rows[i];
    EXPECT_EQ(row.sample_index, i);
    EXPECT_EQ(row.sample_seed, derive_seed(7, i));
    for (double b : row.bounds) EXPECT_GE(row.lhs, b - 1e-9);
    EXPECT_GE(row.bounds[thm1], row.bounds[wu] - 1e-9);
    EXPECT_NEAR(row.extras[0], row.bounds[thm1] - row.bounds[wu], 0.0);
  }
}

TEST(Ensemble, DeterministicAcrossThreadCounts) {
  const auto serial = run_three_memory_ensemble(40, 99, {}, 1);
  const auto parallel = run_three_memory_ensemble(40, 99, {}, 4);
  EXPECT_EQ(to_csv(serial), to_csv(parallel));
  EXPECT_NE(to_csv(serial), to_csv(run_three_memory_ensemble(40, 100, {}, 1)));
}

TEST(Ensemble, SortByWu) {
  auto r = run_three_memory_ensemble(50, 3);
  sort_by_wu(r);
  const std::size_t wu = r.bound_column("wu");
  for (std::size_t i = 1; i < r.rows.size(); ++i) EXPECT_LE(r.rows[i - 1].bounds[wu], r.rows[i].bounds[wu]);
  auto grid = run_one_memory_case({"p", 0, 1, 3}, 0.1);
  EXPECT_THROW(sort_by_wu(grid), Error);
}

TEST(Csv, HeaderAndRows) {
  const auto grid = to_csv(run_one_memory_case({"alpha", 0, kPi, 7}, 0.5));
  EXPECT_EQ(count_lines(grid), 8u);
  EXPECT_EQ(grid.substr(0, grid.find('\n')),
            "alpha,p,lhs,scb,thm1,thm2,xie,delta_raw_thm1,delta_raw_thm2,delta_raw_xie");
  const auto ens = to_csv(run_three_memory_ensemble(3, 1));
  EXPECT_EQ(ens.substr(0, ens.find('\n')),
            "sample_index,sample_seed,lhs,scb,thm1,thm2,wu,thm1_minus_wu,thm2_minus_wu,"
            "delta_raw_thm1,delta_raw_thm2,delta_raw_wu");
  EXPECT_EQ(count_lines(ens), 4u);
}

TEST(RunSweep, DispatchAndDefaults) {
  SweepSpec spec;
  spec.scenario = "one-memory";
  auto r = run_sweep(spec);
  EXPECT_EQ(r.rows.size(), kDefaultGridSteps);
  EXPECT_EQ(r.rows[0].parameters[1], 0.5);

  spec.scenario = "w-state";
  r = run_sweep(spec);
  EXPECT_NEAR(r.rows[0].parameters[1], kPi / 5, 1e-15);
  spec.axis = SweepAxis{"beta", 0.0, 2 * kPi, 10};
  r = run_sweep(spec);
  EXPECT_NEAR(r.rows[0].parameters[1], 2 * kPi / 3, 1e-15);

  spec.scenario = "random-ensemble";
  spec.samples = 5;
  EXPECT_EQ(run_sweep(spec).rows.size(), 5u);
  spec.samples = 0;
  EXPECT_THROW(run_sweep(spec), Error);

  spec.scenario = "nope";
  try {
    run_sweep(spec);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownScenario);
  }
}

}  // namespace
}  // namespace qmeur
