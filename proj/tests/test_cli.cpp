#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>
#include <sys/wait.h>

#include "fixtures_access.hpp"

namespace fx = testing_fixtures;

namespace {

struct Run {
  int exit_code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(SPINCOVER_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string matrix_file(const std::string& tag, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("spincover_cli_" + tag + ".txt");
  std::ofstream(path) << text;
  return path.string();
}

fx::FJson json_of(const Run& r) { return fx::FJson::parse(r.out); }

}  // namespace

TEST(Cli, NoArgumentsPrintsHelpAndFails) {
  auto r = run("");
  EXPECT_EQ(r.exit_code, 2);
}

TEST(Cli, BadInputIsUsageError) {
  EXPECT_EQ(run("classify-o --g 2 --rho 01").exit_code, 2);
  EXPECT_EQ(run("lift --matrix /nonexistent/matrix.txt").exit_code, 2);
  EXPECT_EQ(run("lift --matrix " + matrix_file("bad", "11\n01\n")).exit_code, 2);
  EXPECT_EQ(run("verify --theorem nosuch").exit_code, 2);
}

TEST(Cli, LiftOfSwap) {
  auto r = run("lift --matrix " + matrix_file("swap", "01\n10\n"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_FALSE(r.out.empty());
}

TEST(Cli, EnumerateCounts) {
  auto j = json_of(run("enumerate --g 3 --format json"));
  EXPECT_EQ(j["count"].get<int>(), 16);
  auto e = json_of(run("enumerate --g 3 --epi --format json"));
  EXPECT_EQ(e["count"].get<int>(), 8);
}

TEST(Cli, ClassifyOrthogonal) {
  const auto& in = fx::input("classify_o_g2_json");
  auto r = run(in["args"].get<std::string>());
  ASSERT_EQ(r.exit_code, 0);
  auto j = json_of(r);
  EXPECT_EQ(j["schema"], "spincover/1");
  std::vector<std::size_t> sizes;
  for (const auto& o : j["orbits"]) sizes.push_back(o["size"].get<std::size_t>());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, fx::expected("classify_o_g2_json")["sizes"].get<std::vector<std::size_t>>());
}

TEST(Cli, PresentationRelator) {
  auto j = json_of(run("presentation --g 1 --psi 10 --format json"));
  EXPECT_EQ(j["presentation"]["relator"], "w0^2 w1^2 k^1");
}

TEST(Cli, ClassifySymplectic) {
  auto j = json_of(run("classify-sp --g 2 --r 0000 --mode both --format json"));
  std::vector<std::size_t> sizes;
  for (const auto& o : j["orbits"]) sizes.push_back(o["size"].get<std::size_t>());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{2, 2}));
  EXPECT_TRUE(j["partitions_agree"].get<bool>());
}

TEST(Cli, VerifySingleTheorems) {
  auto an = run("verify --theorem an --g 2 --format json");
  ASSERT_EQ(an.exit_code, 0);
  auto facts = json_of(an)["results"][0]["facts"];
  EXPECT_EQ(facts["weak equivalence g=2.pairs"], "64");
  EXPECT_EQ(facts["weak equivalence g=2.consistent"], "64");
  EXPECT_EQ(run("verify --theorem 2=4 --g 2 --r 1010").exit_code, 0);
}

TEST(Cli, VerifyAllSmall) {
  const auto& in = fx::input("verify_all_max_g3");
  EXPECT_EQ(run(in["args"].get<std::string>()).exit_code, fx::expected("verify_all_max_g3")["exit"].get<int>());
}

TEST(Cli, OutputIsDeterministic) {
  auto a = run("verify --all --max-g 2 --format json");
  auto b = run("verify --all --max-g 2 --format json");
  ASSERT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(json_of(a)["passed"].get<bool>());
}
