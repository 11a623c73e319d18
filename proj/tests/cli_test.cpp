#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ko7/cli.hpp"
#include "ko7/json.hpp"

using namespace ko7;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(KO7_GOLDEN_DIR) + "/" + name);
  EXPECT_TRUE(in) << name;
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(CliGolden, NormalizeIntegrateDelta) {
  Result r = run_cli({"normalize", "(integrate (delta void))"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, golden("normalize_integrate_delta.txt"));
}

TEST(CliGolden, WitnessNonjoin) {
  Result r = run_cli({"witness", "nonjoin"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, golden("witness_nonjoin.txt"));
}

TEST(CliGolden, NogoTreeDepth) {
  Result r = run_cli({"check", "nogo", "--family", "tree-depth"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, golden("nogo_tree_depth.txt"));
}

TEST(Cli, ParseEchoesCanonicalForm) {
  Result r = run_cli({"parse", "( merge  void\n(delta void) )"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "(merge void (delta void))\n");
}

TEST(Cli, ParseErrorsExitTwoWithOffset) {
  Result r = run_cli({"parse", "(merge void"});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("at byte 11"), std::string::npos);
  r = run_cli({"measure", "(app void)"});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("app"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli({}).status, 2);
  EXPECT_EQ(run_cli({"bogus"}).status, 2);
  EXPECT_EQ(run_cli({"check"}).status, 2);
  EXPECT_EQ(run_cli({"step", "void", "--relation", "sideways"}).status, 2);
  EXPECT_EQ(run_cli({"check", "nogo", "--family", "nope"}).status, 2);
  EXPECT_EQ(run_cli({"check", "local-join", "--relation", "full"}).status, 2);
  EXPECT_EQ(run_cli({"parse"}).status, 2);
  EXPECT_EQ(run_cli({"--help"}).status, 0);
}

TEST(Cli, StepAndMeasure) {
  Result r = run_cli({"step", "(eqw void void)", "--relation", "full"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out,
            "eq-refl @ []: (eqw void void) -> void\n"
            "eq-diff @ []: (eqw void void) -> (integrate (merge void void))\n");
  r = run_cli({"step", "(delta (merge void void))"});
  EXPECT_EQ(r.out, "no safe steps from (delta (merge void void))\n");
  r = run_cli({"measure", "(rec void void (delta void))"});
  EXPECT_EQ(r.out, "dflag: 1\nkappaM: {5}\ntau: 5\n");
}

TEST(Cli, NormalizeRelations) {
  Result r = run_cli({"normalize", "(integrate (merge void void))", "--relation", "full"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "(integrate void)\n");
  r = run_cli({"normalize", "(rec void void (delta (delta void)))", "--relation", "full", "--fuel", "1"});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("fuel exhausted"), std::string::npos);
}

TEST(Cli, Reaches) {
  Result r = run_cli({"reaches", "(integrate (delta (delta void)))", "void"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "true\n");
  r = run_cli({"reaches", "(eqw (delta void) void)", "void"});
  EXPECT_EQ(r.out, "false\n");
  r = run_cli({"reaches", "void", "(eqw void void)"});
  EXPECT_EQ(r.status, 2);
}

TEST(Cli, ChecksPass) {
  EXPECT_EQ(run_cli({"check", "decrease", "--max-size", "5"}).status, 0);
  EXPECT_EQ(run_cli({"check", "local-join", "--max-size", "4"}).status, 0);
  EXPECT_EQ(run_cli({"check", "local-join", "--relation", "safe-ctx", "--max-size", "4"}).status, 0);
  EXPECT_EQ(run_cli({"check", "unique-nf", "--max-size", "5"}).status, 0);
  EXPECT_EQ(run_cli({"check", "stress"}).status, 0);
  EXPECT_EQ(run_cli({"check", "nogo"}).status, 0);
  EXPECT_EQ(run_cli({"check", "nogo", "--family", "measure3"}).status, 0);
  EXPECT_EQ(run_cli({"check", "kbo", "--bound", "2"}).status, 0);
  EXPECT_EQ(run_cli({"check", "poly", "--bound", "1"}).status, 0);
}

TEST(Cli, JsonOutputsParse) {
  std::vector<std::vector<std::string>> cases = {
      {"parse", "(merge void void)", "--json"},
      {"step", "(merge void void)", "--json"},
      {"normalize", "(eqw void void)", "--json"},
      {"normalize", "(eqw void void)", "--relation", "full", "--json"},
      {"measure", "(rec void void void)", "--json"},
      {"check", "decrease", "--max-size", "4", "--json"},
      {"check", "local-join", "--max-size", "4", "--json"},
      {"check", "unique-nf", "--max-size", "4", "--json"},
      {"check", "nogo", "--json"},
      {"check", "nogo", "--family", "kbo-weight", "--json"},
      {"check", "stress", "--json"},
      {"check", "kbo", "--bound", "1", "--json"},
      {"reaches", "void", "void", "--json"},
      {"witness", "nonjoin", "--json"},
      {"--json", "parse", "void"},
  };
  for (const auto& args : cases) {
    Result r = run_cli(args);
    ASSERT_EQ(r.status, 0) << args[0] << " " << r.err;
    ASSERT_TRUE(json::accept(r.out)) << r.out;
    ASSERT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1) << args[0];
  }
}

TEST(Cli, JsonRoundTrips) {
  Result r = run_cli({"parse", "(rec void (delta void) (delta void))", "--json"});
  EXPECT_EQ(json::parse(r.out).get<Term>(), parse("(rec void (delta void) (delta void))"));
  r = run_cli({"normalize", "(integrate (delta void))", "--json"});
  Trace tr = json::parse(r.out).get<Trace>();
  EXPECT_EQ(tr.normal_form, Term());
  EXPECT_EQ(tr.steps.size(), 1u);
  r = run_cli({"step", "(merge void void)", "--json"});
  auto ws = json::parse(r.out).get<std::vector<StepWitness>>();
  EXPECT_EQ(ws, root_steps_safe(parse("(merge void void)")));
}

TEST(Cli, FileBatch) {
  auto path = std::filesystem::temp_directory_path() / "ko7_cli_batch.txt";
  {
    std::ofstream f(path);
    f << "(integrate (delta void))\n\n(eqw (delta void) void)\n";
  }
  Result r = run_cli({"normalize", "--file", path.string()});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "void\n(integrate (merge (delta void) void))\n");
  r = run_cli({"parse", "--file", path.string(), "--json"});
  EXPECT_EQ(json::parse(r.out).size(), 2u);
  EXPECT_EQ(run_cli({"parse", "--file", "/nonexistent/ko7"}).status, 2);
  std::filesystem::remove(path);
}

TEST(Cli, OutputIndependentOfWorkerCount) {
  std::vector<std::vector<std::string>> cases = {
      {"check", "decrease", "--max-size", "6", "--json"},
      {"check", "local-join", "--relation", "safe-ctx", "--max-size", "5", "--json"},
      {"check", "unique-nf", "--json"},
      {"check", "nogo", "--json"},
      {"check", "kbo", "--bound", "2", "--json"},
  };
  for (const auto& args : cases) {
    setenv("KO7_WORKERS", "1", 1);
    std::string one = run_cli(args).out;
    setenv("KO7_WORKERS", "5", 1);
    std::string five = run_cli(args).out;
    unsetenv("KO7_WORKERS");
    EXPECT_EQ(one, five) << args[1];
  }
}
