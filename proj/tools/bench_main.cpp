#include "relm/errors.hpp"
#include "relm/experiment.hpp"
#include "relm/version.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

// Exit codes: 0 success, 2 config error, 3 dataset error,
// 4 run completed with partial solver failures, 1 anything unexpected.
constexpr int kOk = 0;
constexpr int kUnexpected = 1;
constexpr int kConfigError = 2;
constexpr int kDataError = 3;
constexpr int kPartialFailure = 4;

int run_command(const std::string& config_path, const std::string& out_dir,
                const std::vector<std::string>& formats, int threads) {
  relm::ExperimentConfig cfg = relm::load_experiment_config(config_path);
  if (!out_dir.empty()) cfg.out_dir = out_dir;
  if (!formats.empty()) cfg.formats = formats;

  const relm::ExperimentReport report = relm::run_experiment(cfg, threads);
  const auto written = relm::emit_report(report, cfg.out_dir, cfg.formats);
  for (const auto& path : written) {
    std::cout << "wrote " << path << "\n";
  }

  int failures = 0;
  for (const auto& t : report.trials) {
    if (!t.error.empty()) ++failures;
  }
  if (failures > 0) {
    std::cout << failures << " solver cell(s) failed; details in the report\n";
    return kPartialFailure;
  }
  return kOk;
}

int curves_command(const std::string& report_path, std::string out_path) {
  std::ifstream in(report_path);
  if (!in) throw relm::DataError("cannot open report '" + report_path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const relm::ExperimentReport report = relm::parse_report_json(buf.str());
  if (out_path.empty()) {
    out_path =
        (std::filesystem::path(report_path).parent_path() / "curves.csv").string();
  }
  relm::emit_curves(report, out_path);
  std::cout << "wrote " << out_path << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relm bench: regularized ELM benchmark harness"};
  app.set_version_flag("--version", RELM_VERSION);
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Run an experiment from a JSON config");
  std::string config_path;
  std::string out_dir;
  std::vector<std::string> formats;
  int threads = 1;
  run->add_option("--config", config_path, "Experiment config (JSON)")->required();
  run->add_option("--out-dir", out_dir, "Override the config's output directory");
  run->add_option("--format", formats, "Restrict output formats")
      ->check(CLI::IsMember({"markdown", "csv", "json"}));
  run->add_option("--threads", threads, "Worker threads over (N, trial) cells")
      ->check(CLI::Range(1, 1024));

  auto* curves = app.add_subcommand(
      "curves", "Emit accuracy-vs-nodes curve data from a report.json");
  std::string report_path;
  std::string curves_out;
  curves->add_option("--report", report_path, "report.json produced by 'run'")
      ->required();
  curves->add_option("--out", curves_out, "Output CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (run->parsed()) {
      return run_command(config_path, out_dir, formats, threads);
    }
    return curves_command(report_path, curves_out);
  } catch (const relm::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const relm::DataError& e) {
    std::cerr << "dataset error: " << e.what() << "\n";
    return kDataError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUnexpected;
  }
}
