#pragma once

#include "relm/data.hpp"
#include "relm/solvers.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace relm {

enum class SolverId { Elm, L2, L1, Half, L2L1, L2Half };

std::string to_string(SolverId id);
SolverId solver_id_from_string(const std::string& s);  // throws ConfigError
std::string display_name(SolverId id);                 // e.g. "L2-L0.5-ELM"

struct SolverSpec {
  SolverId id = SolverId::Elm;
  RegConfig cfg;
};

struct DatasetConfig {
  std::string name;
  std::string path;
  bool label_is_index = true;
  int label_index = 0;
  std::string label_name;
  bool has_header = false;
  char delimiter = ',';
};

struct ExperimentConfig {
  DatasetConfig dataset;
  std::vector<SolverSpec> solvers;
  std::vector<int> node_counts;
  int trials = 1;
  double train_fraction = 0.5;
  bool stratified = true;
  std::uint64_t base_seed = 0;
  bool standardize = true;
  double weight_range = 1.0;
  std::string out_dir = "out";
  std::vector<std::string> formats = {"markdown", "csv", "json"};
  std::string note;  // free-form, echoed in the report
};

struct TrialResult {
  std::string solver;
  int nodes = 0;
  int trial = 0;
  std::uint64_t layer_seed = 0;
  double accuracy = 0.0;
  int remaining_nodes = 0;
  int iterations = 0;
  double wall_time_s = 0.0;
  std::string error;  // empty on success
};

struct CellSummary {
  std::string solver;
  int nodes = 0;
  int trials_ok = 0;
  int failures = 0;
  double mean_accuracy = 0.0;
  double std_accuracy = 0.0;
  double mean_remaining_nodes = 0.0;
  double mean_iterations = 0.0;
  double mean_time_s = 0.0;
};

struct ExperimentReport {
  std::string library_version;
  ExperimentConfig config;
  std::vector<TrialResult> trials;    // ordered by (N, trial, solver)
  std::vector<CellSummary> summary;   // ordered by (solver order, N order)
};

// Parses and validates a JSON experiment config. Throws ConfigError.
ExperimentConfig load_experiment_config(const std::string& path);

// Runs the full protocol: per (N, trial) one split (seed base_seed+trial),
// one hidden layer, and every listed solver trained on that same H so the
// comparison isolates the penalty. Solver errors abort only their cell.
// Deterministic given cfg, independent of the thread count.
ExperimentReport run_experiment(const ExperimentConfig& cfg, int threads = 1);

std::string render_markdown(const ExperimentReport& report);
std::string render_trials_csv(const ExperimentReport& report);
std::string render_json(const ExperimentReport& report);
ExperimentReport parse_report_json(const std::string& text);  // throws ConfigError

// Long-format (solver, N, mean_accuracy, std_accuracy) rows for plotting.
// Throws ConfigError when the report covers fewer than two node counts.
std::string render_curves_csv(const ExperimentReport& report);

// Writes report.md / trials.csv / report.json (per formats) atomically
// (write-temp-rename). Returns the list of paths written.
std::vector<std::string> emit_report(const ExperimentReport& report,
                                     const std::string& out_dir,
                                     const std::vector<std::string>& formats);

// Writes render_curves_csv atomically to out_path.
void emit_curves(const ExperimentReport& report, const std::string& out_path);

}  // namespace relm
