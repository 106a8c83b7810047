#include <fstream>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "fixture_set.hpp"
#include "fixtures_access.hpp"

namespace fx = testing_fixtures;

TEST(Fixtures, RegenerationIsBitIdentical) {
  std::ifstream in(SPINCOVER_FIXTURE_PATH);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), oracle::build_fixtures().dump(2) + "\n");
}

TEST(Fixtures, EveryEntryIsComplete) {
  std::set<std::string> names;
  for (const auto& f : fx::all()) {
    ASSERT_TRUE(f.contains("name") && f.contains("input") && f.contains("expected") && f.contains("oracle"));
    EXPECT_FALSE(f["oracle"].get<std::string>().empty());
    EXPECT_TRUE(names.insert(f["name"].get<std::string>()).second) << f["name"];
  }
  EXPECT_GE(names.size(), 60u);
}

TEST(Oracle, NaiveGroupsAreClosed) {
  // the oracle's own enumeration must be a group before anything is compared against it
  auto grp = oracle::orth_group(3);
  std::set<oracle::Mat> set(grp.begin(), grp.end());
  for (const auto& a : grp) {
    for (const auto& b : grp) EXPECT_TRUE(set.count(oracle::mul(a, b)));
  }
}
