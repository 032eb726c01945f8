// Runs the ybetool binary on the sample documents. The machine form
// (--json-lines) is pinned; the human form is checked for its key lines.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

#ifndef YBETOOL_PATH
#error "YBETOOL_PATH must be defined"
#endif
#ifndef YBE_DATA_DIR
#error "YBE_DATA_DIR must be defined"
#endif

namespace {

struct CmdResult {
  int code = -1;
  std::string out;
};

CmdResult run(const std::string& args) {
  const std::string cmd = std::string(YBETOOL_PATH) + " " + args + " 2>/dev/null";
  CmdResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string doc(const std::string& name) { return std::string(YBE_DATA_DIR) + "/" + name; }

nlohmann::json first_json(const std::string& out) { return nlohmann::json::parse(out.substr(0, out.find('\n'))); }

}  // namespace

TEST(Cli, VerifyHuman) {
  const CmdResult s = run("verify " + doc("s.json"));
  EXPECT_EQ(s.code, 0);
  EXPECT_NE(s.out.find("solution: yes; involutive: yes; square-free: no"), std::string::npos) << s.out;

  const CmdResult f = run("verify " + doc("flip3.json"));
  EXPECT_EQ(f.code, 0);
  EXPECT_NE(f.out.find("solution: yes; involutive: yes; square-free: yes; non-degenerate: yes; bijective: yes"),
            std::string::npos);

  EXPECT_EQ(run("verify " + doc("not_a_solution.json")).code, 2);
  EXPECT_EQ(run("verify " + doc("truncated.json")).code, 1);
  EXPECT_EQ(run("verify " + doc("missing.json")).code, 1);
}

TEST(Cli, VerifyMachine) {
  const CmdResult s = run("verify --json-lines " + doc("s.json"));
  EXPECT_EQ(s.out,
            R"({"command":"verify","n":2,"solution":true,"involutive":true,"squarefree":false,"nondegenerate":true,)"
            R"("bijective":true,"operator_identities":true,"identities_agree":true,"linear_ybe":true})"
            "\n");
}

TEST(Cli, Retract) {
  const CmdResult t = run("retract " + doc("t.json"));
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("tower: [4, 1]; mpl: 1; retraction trivial: yes"), std::string::npos) << t.out;

  const CmdResult one = run("retract " + doc("single.json"));
  EXPECT_NE(one.out.find("mpl: 0"), std::string::npos);

  const CmdResult m = run("retract --tower --json-lines " + doc("nontrivial_retraction.json"));
  EXPECT_EQ(m.code, 0);
  const auto j = first_json(m.out);
  EXPECT_EQ(j["tower"], nlohmann::json::parse("[4,2,1]"));
  EXPECT_EQ(j["mpl"], 2);
  EXPECT_EQ(j["retraction_trivial"], false);
  EXPECT_EQ(j["permutation_maps"]["f"], nlohmann::json::parse("[2,1]"));
  EXPECT_EQ(j["levels"].size(), 3u);

  const CmdResult ill = run("retract " + doc("ill_defined.json"));
  EXPECT_EQ(ill.code, 2);
  EXPECT_EQ(run("retract " + doc("not_a_solution.json")).code, 2);
}

TEST(Cli, RetractWitnessOnStderr) {
  const std::string cmd = std::string(YBETOOL_PATH) + " retract " + doc("ill_defined.json") + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string out;
  std::array<char, 1024> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  pclose(pipe);
  EXPECT_NE(out.find("class pair (1,2)"), std::string::npos) << out;
}

TEST(Cli, QMatrix) {
  const CmdResult s = run("qmatrix --json-lines " + doc("s.json"));
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(s.out,
            R"({"command":"qmatrix","n":2,"modulus":2,"basis":[["1","1"],["1","-1"]],"class_of":[1,1],)"
            R"("qmatrix":[["1","-1"],["-1","1"]],"qexponents":[[0,1],[1,0]],"commutation":[[1,2,"-1"]],)"
            R"("zero_squares":[],"zero_products":[]})"
            "\n");
  const CmdResult t = run("qmatrix --json-lines " + doc("t.json"));
  EXPECT_EQ(first_json(t.out)["zero_squares"], nlohmann::json::parse("[3]"));
  EXPECT_EQ(run("qmatrix " + doc("nontrivial_retraction.json")).code, 2);
}

TEST(Cli, Lie) {
  const CmdResult t = run("lie " + doc("t.json"));
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("dim g: 2; abelian: yes; theorem: a=b=c=yes"), std::string::npos) << t.out;
  const CmdResult m = run("lie --json-lines " + doc("nontrivial_retraction.json"));
  const auto j = first_json(m.out);
  EXPECT_EQ(j["abelian"], false);
  EXPECT_EQ(j["theorem_agrees"], true);
  EXPECT_EQ(run("lie " + doc("ill_defined.json")).code, 2);
}

TEST(Cli, Enumerate) {
  const CmdResult one = run("enumerate 1");
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, "{\"n\":1,\"r\":[[[1,1]]]}\n");
  const CmdResult two = run("enumerate 2 --filter solution,nondegenerate");
  EXPECT_EQ(std::count(two.out.begin(), two.out.end(), '\n'), 4);
  EXPECT_EQ(run("enumerate 3").code, 2);
  EXPECT_EQ(run("enumerate 2 --filter nonsense").code, 1);
}

TEST(Cli, Experiment) {
  const CmdResult e = run("experiment 2 --filter involutive --json-lines");
  EXPECT_EQ(e.code, 0);
  std::size_t lines = 0;
  std::size_t start = 0;
  while (start < e.out.size()) {
    const std::size_t end = e.out.find('\n', start);
    const auto j = nlohmann::json::parse(e.out.substr(start, end - start));
    if (!j.contains("summary")) {
      EXPECT_TRUE(j["theorem_agrees"].get<bool>());
      EXPECT_TRUE(j["involutive"].get<bool>());
      ++lines;
    }
    start = end + 1;
  }
  EXPECT_EQ(lines, 2u);
  EXPECT_EQ(run("experiment 5").code, 2);
  EXPECT_EQ(run("experiment 2").out, run("experiment 2").out);
}
