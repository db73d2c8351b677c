#include <sstream>

#include <gtest/gtest.h>

#include "brauer/sweep.hpp"

using namespace brauer;

TEST(SweepConfig, ParsesKeyValueFiles) {
  std::istringstream in(R"(
# small grid
families = sd, d
sd_params = 2
d_params = 6,8
primes = 3   # inline comment
degrees = 1
dimv = 1,2
poly_action = regular
jobs = 2
)");
  const SweepConfig c = parse_config(in);
  EXPECT_EQ(c.families.size(), 2u);
  EXPECT_EQ(c.sd_params, std::vector<int>{2});
  EXPECT_EQ(c.d_params, (std::vector<int>{6, 8}));
  EXPECT_EQ(c.primes, std::vector<int>{3});
  EXPECT_EQ(c.degrees, std::vector<int>{1});
  EXPECT_EQ(c.dim_vs, (std::vector<int>{1, 2}));
  EXPECT_EQ(c.jobs, 2);
}

TEST(SweepConfig, RejectsMalformedInput) {
  std::istringstream bad_key("colour = blue\n");
  EXPECT_THROW(parse_config(bad_key), ConfigError);
  std::istringstream bad_line("primes 3\n");
  EXPECT_THROW(parse_config(bad_line), ConfigError);
  std::istringstream bad_int("primes = 3,x\n");
  EXPECT_THROW(parse_config(bad_int), ConfigError);
  EXPECT_THROW(load_config("/nonexistent/brauer.cfg"), ConfigError);
}

TEST(SweepConfig, GuardsRefuseBeforeWork) {
  SweepConfig c;
  c.primes = {4};
  EXPECT_THROW(check_guards(c), GuardError);
  EXPECT_THROW(run_sweep(c), GuardError);
  c = {};
  c.sd_params = {7};
  EXPECT_THROW(check_guards(c), GuardError);
  c = {};
  c.degrees = {4};
  EXPECT_THROW(check_guards(c), GuardError);
  c = {};
  c.dim_vs = {5};
  EXPECT_THROW(check_guards(c), GuardError);
  EXPECT_NO_THROW(check_guards(SweepConfig{}));
}

TEST(SweepConfig, OutputIndependentOfJobs) {
  SweepConfig c;
  c.sd_params = {2};
  c.d_params = {6};
  c.primes = {3, 5};
  c.dim_vs = {1, 2};
  c.jobs = 1;
  const std::string one = sweep_summary_json(run_sweep(c)).dump();
  c.jobs = 3;
  const std::string three = sweep_summary_json(run_sweep(c)).dump();
  EXPECT_EQ(one, three);
  EXPECT_EQ(sweep_summary_json(run_sweep(c))["clean"], true);
}
