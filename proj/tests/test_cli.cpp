#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#ifndef DSPECHT_CLI
#error "DSPECHT_CLI must name the dspecht executable"
#endif

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run shell(const std::string& cmd) {
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// Arguments are passed through the shell; stderr is discarded.
Run cli(const std::string& args) { return shell(std::string("\"") + DSPECHT_CLI + "\" " + args + " 2>/dev/null"); }

// Captures stderr instead of stdout.
Run cli_stderr(const std::string& args) {
  return shell(std::string("\"") + DSPECHT_CLI + "\" " + args + " 2>&1 1>/dev/null");
}

using nlohmann::json;

}  // namespace

TEST(Cli, PosetJson) {
  for (auto [n, nodes, edges] : {std::tuple{4, 13u, 19u}, std::tuple{5, 18u, 25u}}) {
    const auto r = cli("poset --group D --n " + std::to_string(n));
    ASSERT_EQ(r.status, 0);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["nodes"].size(), nodes);
    EXPECT_EQ(j["edges"].size(), edges);
  }
}

TEST(Cli, PosetDot) {
  const auto r = cli("poset --group B --n 2 --format dot");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("digraph"), std::string::npos);
}

TEST(Cli, Poly) {
  const auto r = cli("poly --group D --shape '(1)|-'");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "x1 - x2\n");
  EXPECT_EQ(cli("poly --group S --shape '(3)'").out, "1\n");
  EXPECT_EQ(cli("poly --group B --shape '(1)|(1)' --tableau '{\"left\":[[1]],\"right\":[[1]]}'").status, 2);
}

TEST(Cli, Member) {
  auto r = cli("member --group B --shape '(2)|(1)' --poly 'x1'");
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(json::parse(r.out)["member"].get<bool>());
  r = cli("member --group S --shape '(2,1)' --poly 'x1+x2+x3'");
  ASSERT_EQ(r.status, 0);
  EXPECT_FALSE(json::parse(r.out)["member"].get<bool>());
}

TEST(Cli, Reps) {
  const auto r = cli("reps --n 2");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json::parse(r.out).size(), 5u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli("").status, 2);
  EXPECT_EQ(cli("poset --group D --n 9").status, 2);
  EXPECT_EQ(cli("poset --group Q --n 3").status, 2);
  EXPECT_EQ(cli("verify --suite nope").status, 2);
  EXPECT_EQ(cli("member --group D --shape '(2)|(2)' --poly x1").status, 2);
}

TEST(Cli, ParseErrorReportsPosition) {
  const auto r = cli_stderr("member --group S --shape '(2,1)' --poly 'x1+*x2'");
  EXPECT_EQ(r.status, 2);
  const auto j = json::parse(r.out);
  EXPECT_TRUE(j.contains("error"));
  EXPECT_EQ(j["position"].get<int>(), 3);
}

TEST(Cli, VerifyIsDeterministic) {
  const auto a = cli("verify --suite dihedral --n 6");
  const auto b = cli("verify --suite dihedral --n 6");
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(json::parse(a.out)["passed"].get<bool>());
}
