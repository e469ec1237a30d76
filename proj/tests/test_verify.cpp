#include <gtest/gtest.h>

#include "hplus/error.hpp"
#include "hplus/json_io.hpp"
#include "hplus/verify.hpp"

using namespace hplus;

TEST(Verify, SuiteNamesKnown) {
  const auto& names = suite_names();
  EXPECT_EQ(names.size(), 14u);
  for (const auto& n : names) EXPECT_FALSE(suite_description(n).empty());
  EXPECT_THROW(run_suite("no-such-suite", SuiteConfig{}), InvalidArgument);
}

TEST(Verify, BadConfig) {
  SuiteConfig cfg;
  cfg.jobs = 0;
  EXPECT_THROW(run_suite("ring", cfg), InvalidArgument);
  cfg = SuiteConfig{};
  cfg.max_len = 50;
  EXPECT_THROW(run_suite("ring", cfg), ResourceCap);
  cfg = SuiteConfig{};
  cfg.group = "cyclic:0";
  EXPECT_THROW(run_suite("ring", cfg), InvalidArgument);
}

TEST(Verify, ReportsAreDeterministic) {
  SuiteConfig cfg;
  cfg.group = "cyclic:3";
  cfg.max_len = 2;
  cfg.samples = 50;
  auto a = report_to_json(run_suite("ring", cfg)).dump();
  auto b = report_to_json(run_suite("ring", cfg)).dump();
  EXPECT_EQ(a, b);
  cfg.jobs = 3;
  auto c = report_to_json(run_suite("ring", cfg)).dump();
  EXPECT_EQ(a, c);
}

TEST(Verify, NotApplicableOnTrivialGroup) {
  SuiteConfig cfg;
  cfg.group = "trivial";
  auto r = run_suite("support-separation", cfg);
  EXPECT_FALSE(r.applicable);
  EXPECT_TRUE(r.ok());
}

TEST(Verify, SmallSuitesPass) {
  SuiteConfig cfg;
  cfg.max_len = 2;
  cfg.samples = 30;
  for (const char* name : {"one-point-counts", "coefficient-law", "trivial-multiplicity", "mprime", "dimension"}) {
    auto r = run_suite(name, cfg);
    EXPECT_TRUE(r.ok()) << name;
    EXPECT_GT(r.cases, 0u) << name;
  }
}
