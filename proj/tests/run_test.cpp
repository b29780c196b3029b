#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "oam/run.hpp"

using namespace oam;

namespace {

Json load(const std::filesystem::path& p) {
  std::ifstream in(p);
  return Json::parse(in);
}

Json base_config() {
  return Json::parse(R"({"module": {"kind": "rectangular", "dims": [3, 3]},
                         "map": {"kind": "pure_quadratic", "phi": "trace"},
                         "seed": 42, "samples": 100, "suite_samples": 40})");
}

Json without_clock(Json report) {
  report.erase("wall_clock_seconds");
  return report;
}

int tool_exit(const std::string& args) {
  const std::string cmd = std::string(OAMTOOL_PATH) + " --quiet " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Config, RejectsSchemaViolations) {
  auto bad = [](const char* patch) {
    Json c = base_config();
    c.merge_patch(Json::parse(patch));
    return c;
  };
  EXPECT_THROW(parse_config(bad(R"({"module": {"dims": [-1, 2]}})")), ConfigError);
  EXPECT_THROW(parse_config(bad(R"({"module": {"dims": [2]}})")), ConfigError);
  EXPECT_THROW(parse_config(bad(R"({"module": {"flavor": "frobenius"}})")), ConfigError);
  EXPECT_THROW(parse_config(bad(R"({"module": {"kind": "torus"}})")), ConfigError);
  EXPECT_THROW(parse_config(bad(R"({"map": {"kind": "diagonal_cube"}})")), ConfigError);
  EXPECT_THROW(parse_config(bad(R"({"map": {"phi": [[[[1, 0]]]]}})")), ConfigError);
  EXPECT_THROW(parse_config(bad(R"({"map": {"phi": "trace", "codomain_dim": 2}})")), ConfigError);
  EXPECT_THROW(parse_config(bad(R"({"seed": -3})")), ConfigError);
  EXPECT_THROW(parse_config(bad(R"({"frame": "diagonal"})")), ConfigError);
  EXPECT_THROW(parse_config(bad(R"({"tolerances": {"residual": 0}})")), ConfigError);
  EXPECT_THROW(parse_config(bad(R"({"extra": 1})")), ConfigError);
  EXPECT_THROW(parse_config(Json::array()), ConfigError);
}

TEST(Config, ParsesModulesAndExplicitTables) {
  const Json c = Json::parse(R"({"module": {"kind": "direct_sum", "flavor": "hilbert_schmidt", "children": [
                                   {"kind": "rectangular", "dims": [2, 1], "flavor": "hilbert_schmidt"},
                                   {"kind": "pair", "dims": [1], "flavor": "hilbert_schmidt"}]},
                                 "map": {"kind": "pure_quadratic", "phi": [[[[[2, 0]]]], [[[[0, 1]]]]]}})");
  const RunConfig rc = parse_config(c);
  EXPECT_EQ(rc.module.kind(), ModuleKind::DirectSum);
  EXPECT_EQ(rc.module.flavor(), Flavor::HilbertSchmidt);
  const RunResult r = run(rc);
  EXPECT_EQ(r.exit_code, 0);
  const Json& phi = r.report["decomposition"]["phi"];
  EXPECT_NEAR(phi[0][0][0][0][0].get<double>(), 2.0, 1e-12);
  EXPECT_NEAR(phi[1][0][0][0][1].get<double>(), 1.0, 1e-12);
}

TEST(Run, TraceConfigRecoversTheTrace) {
  const RunResult r = run(parse_config(base_config()));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_LT(r.report["decomposition"]["residual"]["max"].get<double>(), 1e-9);
  EXPECT_TRUE(r.report["decomposition"]["ground_truth"]["pass"].get<bool>());
  EXPECT_TRUE(r.report["suite"]["verdict"].get<bool>());
  EXPECT_EQ(r.report["schema_version"], kReportSchemaVersion);
}

TEST(Run, DeterministicModuloWallClock) {
  Json c = base_config();
  c["map"] = Json::parse(R"({"kind": "additive_plus_quadratic", "phi": "random", "codomain_dim": 2})");
  c["frame"] = "random";
  const RunConfig rc = parse_config(c);
  EXPECT_EQ(without_clock(run(rc).report).dump(), without_clock(run(rc).report).dump());
}

TEST(Run, DiagonalCubeRecordsTheAdditivityWitness) {
  const Json c = Json::parse(R"({"module": {"kind": "diagonal", "dims": [4]}, "map": {"kind": "diagonal_cube"},
                                 "suite_samples": 30})");
  const RunResult r = run(parse_config(c));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_FALSE(r.report["decomposition"]["applicable"].get<bool>());
  EXPECT_NEAR(r.report["witnesses"][0]["value"].get<double>(), 6.0, 1e-12);
  for (const auto& p : r.report["suite"]["properties"]) {
    if (p["name"] == "orthogonal_additivity") EXPECT_TRUE(p["holds"].get<bool>());
    if (p["name"] == "odd_part_additive") EXPECT_FALSE(p["holds"].get<bool>());
  }
}

TEST(Run, PerturbedMapIsFlaggedWithoutBreach) {
  Json c = base_config();
  c["map"] = Json::parse(R"({"kind": "perturbed", "epsilon": 0.1, "perturbation": "cubic",
                             "base": {"kind": "additive_plus_quadratic", "phi": "random"}})");
  const RunResult r = run(parse_config(c));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(r.report["decomposition"]["residual"]["flagged"].get<bool>());
  EXPECT_GT(r.report["decomposition"]["residual"]["max"].get<double>(), 0.01);
}

TEST(Run, ImpossibleToleranceIsAnUnexpectedBreach) {
  Json c = base_config();
  c["map"] = Json::parse(R"({"kind": "additive_plus_quadratic", "phi": "random"})");
  c["tolerances"] = Json::parse(R"({"residual": 1e-300, "phi": 1e-300})");
  const RunResult r = run(parse_config(c));
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_FALSE(r.report["status"]["breaches"].empty());
  EXPECT_TRUE(r.report.contains("suite"));
}

TEST(Golden, ExampleConfigReproducesExampleReport) {
  const std::filesystem::path docs(OAM_DOCS_DIR);
  const RunResult r = run(parse_config(load(docs / "config.example.json")));
  EXPECT_EQ(r.exit_code, 0);
  const Json golden = load(docs / "report.example.json");
  EXPECT_EQ(without_clock(golden).dump(), without_clock(r.report).dump());
}

TEST(Tool, ExitCodes) {
  const std::filesystem::path docs(OAM_DOCS_DIR);
  const auto tmp = std::filesystem::temp_directory_path() / "oamtool_run_test";
  std::filesystem::create_directories(tmp);
  EXPECT_EQ(tool_exit("--config " + (docs / "config.example.json").string() + " --out " +
                      (tmp / "report.json").string()),
            0);
  EXPECT_TRUE(load(tmp / "report.json").contains("suite"));

  std::ofstream(tmp / "bad.json") << R"({"module": {"kind": "rectangular", "dims": [-2, 2]}, "map": {"kind": "pure_quadratic"}})";
  EXPECT_EQ(tool_exit("--config " + (tmp / "bad.json").string()), 2);
  std::ofstream(tmp / "garbage.json") << "{not json";
  EXPECT_EQ(tool_exit("--config " + (tmp / "garbage.json").string()), 2);
  EXPECT_EQ(tool_exit(""), 2);

  std::ofstream(tmp / "seeded.json") << base_config().dump();
  EXPECT_EQ(tool_exit("--config " + (tmp / "seeded.json").string() + " --seed 7 --out " +
                      (tmp / "seeded_report.json").string()),
            0);
  EXPECT_EQ(load(tmp / "seeded_report.json")["config"]["seed"], 7);
}
