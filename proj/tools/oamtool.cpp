#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "oam/run.hpp"

namespace {

void write_report(const oam::Json& report, const std::string& out) {
  const std::string text = report.dump(2) + "\n";
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(out);
  if (!file) throw std::runtime_error("cannot open " + out + " for writing");
  file << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decompose an orthogonally additive map on a finite Hilbert module and verify it"};
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out;
  bool quiet = false;
  app.add_option("--config", config_path, "JSON run configuration")->required()->check(CLI::ExistingFile);
  app.add_option("--seed", seed, "Override the configured seed");
  app.add_option("--out", out, "Report path (default: stdout)");
  app.add_flag("--quiet", quiet, "Suppress progress logs on stderr");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::ostream* log = quiet ? nullptr : &std::cerr;
  std::optional<oam::RunConfig> config;
  try {
    std::ifstream in(config_path);
    oam::Json raw = oam::Json::parse(in);
    if (seed && raw.is_object()) raw["seed"] = *seed;
    config = oam::parse_config(raw);
  } catch (const oam::Json::parse_error& e) {
    std::cerr << "oamtool: config is not valid JSON: " << e.what() << '\n';
    return 2;
  } catch (const oam::ConfigError& e) {
    std::cerr << "oamtool: bad config: " << e.what() << '\n';
    return 2;
  }

  try {
    const oam::RunResult result = oam::run(*config, log);
    write_report(result.report, out);
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "oamtool: " << e.what() << '\n';
    oam::Json partial{{"schema_version", oam::kReportSchemaVersion},
                      {"version", oam::kToolVersion},
                      {"config", config->raw},
                      {"status", {{"exit_code", 1}, {"error", e.what()}}}};
    try {
      write_report(partial, out);
    } catch (const std::exception&) {
    }
    return 1;
  }
}
