#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "confalg/commands.hpp"
#include "confalg/config.hpp"
#include "confalg/report.hpp"

namespace confalg::cli {
namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "confalg_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string read(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int run_tool(const std::string& args) {
  const std::string cmd = std::string(CONFALG_TOOL) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

nlohmann::json strip_seconds(nlohmann::json j) {
  if (j.is_object()) {
    j.erase("seconds");
    for (auto& [k, v] : j.items()) v = strip_seconds(v);
  } else if (j.is_array()) {
    for (auto& v : j) v = strip_seconds(v);
  }
  return j;
}

TEST(Config, ParsesFieldsAndDefaults) {
  const RunConfig c = load_config(R"({"algebra": "chv", "a": 1, "b": "1/2", "window": 4, "grid": "0,0;1,0",
                                      "degrees": [0], "d": "3"})");
  EXPECT_EQ(c.algebra, "chv");
  EXPECT_EQ(c.a, "1");
  EXPECT_EQ(c.b, "1/2");
  EXPECT_EQ(c.window, 4);
  EXPECT_FALSE(c.gen_bound);
  EXPECT_EQ(c.grid.size(), 2u);
  EXPECT_EQ(c.degrees, std::vector<int>{0});
  EXPECT_EQ(c.dext, "3");
  EXPECT_EQ(c.seed, 20240611u);
}

TEST(Config, DiagnosticsNameLineOrField) {
  try {
    load_config("{\n  \"algebra\": \"csv\",\n  \"window\": ,\n}", "cfg.json");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("cfg.json: line 3"), std::string::npos) << e.what();
  }
  try {
    load_config(R"({"windw": 3})");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("unknown field 'windw'"), std::string::npos);
  }
  try {
    load_config(R"({"a": 0.5})");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("field 'a'"), std::string::npos);
  }
  EXPECT_THROW(load_config(R"({"seed": -1})"), ConfigError);
  EXPECT_THROW(load_config(R"([1, 2])"), ConfigError);
}

TEST(Config, ParameterLiterals) {
  EXPECT_EQ(parameter("a", "sym", Var("a")), MPoly(Var("a")));
  EXPECT_EQ(parameter("a", "1/2+3i", Var("a")), MPoly(Scalar::parse("1/2+3i")));
  EXPECT_THROW(numeric("a", "sym"), ConfigError);
  EXPECT_THROW(parse_grid("0;1,0"), ConfigError);
}

TEST(Commands, SolveConstructionReportsLocus) {
  const Report r = cmd_solve_construction(RunConfig{});
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.records.at(0).details["a_prime"], "(1/2)*a + 1");
  EXPECT_EQ(r.records.at(0).details["b_prime"], "(1/2)*b");
}

TEST(Commands, VerifyAxiomsSymbolicCsvIsZero) {
  const Report r = cmd_verify_axioms(RunConfig{});
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.records.size(), 16u);
  for (const auto& rec : r.records) EXPECT_EQ(rec.status, Status::zero);
}

TEST(Commands, ClassifyRankOneFlagsOnlyOrigin) {
  RunConfig c;
  c.grid = parse_grid("0,0;1,0;0,1;2,5");
  const Report r = cmd_classify(c);
  ASSERT_TRUE(r.ok());
  std::vector<std::string> outcomes;
  for (const auto& rec : r.records) outcomes.push_back(rec.details["outcome"]);
  EXPECT_EQ(outcomes, (std::vector<std::string>{"extension", "none", "none", "none"}));
}

TEST(Commands, ConfigErrorsSurface) {
  RunConfig c;
  c.algebra = "nope";
  EXPECT_THROW(cmd_verify_axioms(c), ConfigError);
  c = RunConfig{};
  c.mode = "bogus";
  c.a = "1";
  c.b = "0";
  EXPECT_THROW(cmd_derivations(c), ConfigError);
}

TEST(Report, JsonSchemaAndTextSummary) {
  RunConfig c;
  c.algebra = "mfam";
  const Report r = cmd_verify_axioms(c);
  EXPECT_FALSE(r.ok());
  const auto j = to_json(r);
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
  EXPECT_EQ(j["summary"]["failed"], r.failed());
  EXPECT_NE(to_text(r).find("FAIL jacobi:L,Y,Y"), std::string::npos);
}

TEST(Tool, PrecedenceCliOverFileOverDefaults) {
  const fs::path cfg = scratch("prec.json"), out = scratch("prec_report.json");
  write(cfg, R"({"algebra": "csv", "a": "1", "b": "2", "seed": 5})");
  ASSERT_EQ(run_tool("verify-axioms --config " + cfg.string() + " --b 3 --report " + out.string()), 0);
  const auto j = nlohmann::json::parse(read(out));
  EXPECT_EQ(j["config"]["a"], "1");
  EXPECT_EQ(j["config"]["b"], "3");
  EXPECT_EQ(j["config"]["seed"], 5);
  EXPECT_EQ(j["config"]["exhaustive"], false);
}

TEST(Tool, ReportsAreDeterministicUpToTiming) {
  const fs::path a = scratch("det_a.json"), b = scratch("det_b.json");
  const std::string args = "classify --kind VAb --samples 2 --grid 1,0 --seed 99 --report ";
  ASSERT_EQ(run_tool(args + a.string()), 0);
  ASSERT_EQ(run_tool(args + b.string()), 0);
  EXPECT_EQ(strip_seconds(nlohmann::json::parse(read(a))), strip_seconds(nlohmann::json::parse(read(b))));
  const fs::path c = scratch("det_c.json");
  ASSERT_EQ(run_tool("classify --kind VAb --samples 2 --grid 1,0 --seed 100 --report " + c.string()), 0);
  EXPECT_NE(strip_seconds(nlohmann::json::parse(read(a))), strip_seconds(nlohmann::json::parse(read(c))));
}

TEST(Tool, ExitCodes) {
  EXPECT_EQ(run_tool("verify-axioms --algebra csv"), 0);
  EXPECT_EQ(run_tool("verify-axioms --algebra mfam"), 1);
  EXPECT_EQ(run_tool("check-module --kind rank1 --a 1 --b 1 --d sym"), 1);
  EXPECT_EQ(run_tool("verify-axioms --algebra nope"), 2);
  EXPECT_EQ(run_tool("verify-axioms --window x"), 2);
  EXPECT_EQ(run_tool("no-such-command"), 2);
  EXPECT_EQ(run_tool("verify-axioms --config /nonexistent.json"), 2);
  EXPECT_EQ(run_tool("--help"), 0);
}

TEST(Tool, JsonOnStdout) {
  const fs::path out = scratch("stdout.json");
  const std::string cmd = std::string(CONFALG_TOOL) + " derivations --a 1 --b 0 --degrees 0 --format json > " +
                          out.string();
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  const auto j = nlohmann::json::parse(read(out));
  EXPECT_EQ(j["records"][0]["details"]["quotient_dim"], 1);
  EXPECT_EQ(j["summary"]["ok"], true);
}

}  // namespace
}  // namespace confalg::cli
