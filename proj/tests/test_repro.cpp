#include <gtest/gtest.h>

#include <set>

#include "chipfire/repro.hpp"

using namespace chipfire;

TEST(Repro, OneRowPerCriterion) {
  std::set<std::string> ids;
  for (const auto& c : repro::criteria()) EXPECT_TRUE(ids.insert(c.id).second) << c.id;
  for (int i = 1; i <= 17; ++i) EXPECT_TRUE(ids.count(std::to_string(i))) << i;
  EXPECT_TRUE(ids.count("6-long"));
  EXPECT_TRUE(ids.count("L5"));
}

TEST(Repro, QuickModeSkipsLongRows) {
  repro::ReproOptions o;
  for (const auto& c : repro::criteria())
    if (c.long_running) {
      EXPECT_EQ(repro::run_criterion(c, o).status, repro::Status::skipped_long);
    }
}

TEST(Repro, ReportIsIdenticalAcrossThreadCounts) {
  repro::ReproOptions one, many;
  many.jobs = 3;
  const std::string a = repro::format_report(repro::run_all(one));
  const std::string b = repro::format_report(repro::run_all(many));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, repro::format_report(repro::run_all(one)));
}
