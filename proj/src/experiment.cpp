#include "relm/experiment.hpp"

#include "relm/errors.hpp"
#include "relm/version.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>
#include <utility>

namespace relm {

namespace {

using nlohmann::json;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Layer seed per (N, trial): decorrelated from the split seed base_seed+t.
std::uint64_t layer_seed_for(std::uint64_t base_seed, int nodes, int trial) {
  std::uint64_t s = splitmix64(base_seed);
  s = splitmix64(s ^ static_cast<std::uint64_t>(nodes));
  s = splitmix64(s ^ static_cast<std::uint64_t>(trial));
  return s;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

const char* kSolverNames[] = {"elm", "l2", "l1", "half", "l2l1", "l2half"};
const char* kDisplayNames[] = {"ELM",      "L2-ELM",    "L1-ELM",
                               "L0.5-ELM", "L2-L1-ELM", "L2-L0.5-ELM"};

SolverOutput dispatch(SolverId id, const Matrix& H, const Matrix& T,
                      const RegConfig& cfg) {
  switch (id) {
    case SolverId::Elm: return train_elm(H, T, cfg);
    case SolverId::L2: return train_l2(H, T, cfg);
    case SolverId::L1: return train_l1(H, T, cfg);
    case SolverId::Half: return train_half(H, T, cfg);
    case SolverId::L2L1: return train_hybrid_soft(H, T, cfg);
    case SolverId::L2Half: return train_hybrid_half(H, T, cfg);
  }
  throw ConfigError("unknown solver id");
}

bool solver_needs_lambda(SolverId id) {
  return id == SolverId::L1 || id == SolverId::Half || id == SolverId::L2L1 ||
         id == SolverId::L2Half;
}

json reg_config_to_json(SolverId id, const RegConfig& c) {
  json j;
  j["id"] = to_string(id);
  if (solver_needs_lambda(id)) {
    j["lambda"] = c.lambda;
    j["gamma"] = c.gamma;
    j["epsilon"] = c.epsilon;
    j["xi"] = c.xi;
    j["hard_iter_cap"] = c.hard_iter_cap;
    j["record_objective_trace"] = c.record_objective_trace;
    if (c.delta_policy == DeltaPolicy::Fixed) j["delta"] = c.delta_fixed;
  }
  if (id == SolverId::L2) j["mu"] = c.mu;
  if (id == SolverId::Elm) j["ridge_floor"] = c.ridge_floor;
  return j;
}

SolverSpec solver_spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("id")) {
    throw ConfigError("solver entry must be an object with an \"id\" field");
  }
  SolverSpec spec;
  spec.id = solver_id_from_string(j.at("id").get<std::string>());
  RegConfig& c = spec.cfg;
  if (solver_needs_lambda(spec.id)) {
    if (!j.contains("lambda")) {
      throw ConfigError("solver '" + to_string(spec.id) + "' requires \"lambda\"");
    }
    c.lambda = j.at("lambda").get<double>();
    if (!(c.lambda > 0.0)) {
      throw ConfigError("solver '" + to_string(spec.id) + "': lambda must be > 0");
    }
  }
  c.gamma = j.value("gamma", 1.0);
  c.epsilon = j.value("epsilon", 0.0);
  c.xi = j.value("xi", 1e-4);
  c.hard_iter_cap = j.value("hard_iter_cap", 10000);
  c.record_objective_trace = j.value("record_objective_trace", true);
  c.ridge_floor = j.value("ridge_floor", 1e-10);
  if (j.contains("delta")) {
    c.delta_policy = DeltaPolicy::Fixed;
    c.delta_fixed = j.at("delta").get<double>();
  }
  if (spec.id == SolverId::L2) {
    if (!j.contains("mu")) {
      throw ConfigError("solver 'l2' requires \"mu\"");
    }
    c.mu = j.at("mu").get<double>();
    if (!(c.mu >= 0.0)) {
      throw ConfigError("solver 'l2': mu must be >= 0");
    }
  }
  if (!(c.gamma >= 0.0) || !(c.epsilon >= 0.0)) {
    throw ConfigError("solver '" + to_string(spec.id) +
                      "': gamma and epsilon must be >= 0");
  }
  if (!(c.xi > 0.0) || c.hard_iter_cap < 1) {
    throw ConfigError("solver '" + to_string(spec.id) +
                      "': xi must be > 0 and hard_iter_cap >= 1");
  }
  return spec;
}

json config_to_json(const ExperimentConfig& cfg) {
  json d;
  d["name"] = cfg.dataset.name;
  d["path"] = cfg.dataset.path;
  if (cfg.dataset.label_is_index) {
    d["label_column"] = cfg.dataset.label_index;
  } else {
    d["label_column"] = cfg.dataset.label_name;
  }
  d["has_header"] = cfg.dataset.has_header;
  d["delimiter"] = std::string(1, cfg.dataset.delimiter);

  json j;
  j["dataset"] = d;
  json solvers = json::array();
  for (const auto& s : cfg.solvers) solvers.push_back(reg_config_to_json(s.id, s.cfg));
  j["solvers"] = solvers;
  j["node_counts"] = cfg.node_counts;
  j["trials"] = cfg.trials;
  j["train_fraction"] = cfg.train_fraction;
  j["stratified"] = cfg.stratified;
  j["base_seed"] = cfg.base_seed;
  j["standardize"] = cfg.standardize;
  j["weight_range"] = cfg.weight_range;
  j["output"] = {{"dir", cfg.out_dir}, {"formats", cfg.formats}};
  if (!cfg.note.empty()) j["note"] = cfg.note;
  return j;
}

ExperimentConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("config root must be a JSON object");
  ExperimentConfig cfg;

  if (!j.contains("dataset")) {
    throw ConfigError("config requires a \"dataset\" object or schema path");
  }
  // The dataset block may be inline or a reference to a schema file with the
  // same fields ({name, path, label_column, has_header, delimiter}).
  json schema;
  if (j.at("dataset").is_string()) {
    const auto schema_path = j.at("dataset").get<std::string>();
    std::ifstream in(schema_path);
    if (!in) throw ConfigError("cannot open dataset schema '" + schema_path + "'");
    try {
      in >> schema;
    } catch (const json::parse_error& e) {
      throw ConfigError("dataset schema '" + schema_path +
                        "' is not valid JSON: " + e.what());
    }
  } else if (j.at("dataset").is_object()) {
    schema = j.at("dataset");
  } else {
    throw ConfigError("\"dataset\" must be an object or a schema file path");
  }
  const json& d = schema;
  if (!d.contains("path")) throw ConfigError("dataset requires \"path\"");
  cfg.dataset.path = d.at("path").get<std::string>();
  cfg.dataset.name = d.value("name", cfg.dataset.path);
  if (!d.contains("label_column")) throw ConfigError("dataset requires \"label_column\"");
  if (d.at("label_column").is_number_integer()) {
    cfg.dataset.label_is_index = true;
    cfg.dataset.label_index = d.at("label_column").get<int>();
  } else if (d.at("label_column").is_string()) {
    cfg.dataset.label_is_index = false;
    cfg.dataset.label_name = d.at("label_column").get<std::string>();
  } else {
    throw ConfigError("dataset.label_column must be an index or a column name");
  }
  cfg.dataset.has_header = d.value("has_header", false);
  const std::string delim = d.value("delimiter", std::string(","));
  if (delim.size() != 1 ||
      (delim[0] != ',' && delim[0] != ';' && delim[0] != '\t')) {
    throw ConfigError("dataset.delimiter must be one of \",\" \";\" \"\\t\"");
  }
  cfg.dataset.delimiter = delim[0];
  if (!cfg.dataset.label_is_index && !cfg.dataset.has_header) {
    throw ConfigError("label_column by name requires has_header = true");
  }

  if (!j.contains("solvers") || !j.at("solvers").is_array() || j.at("solvers").empty()) {
    throw ConfigError("config requires a non-empty \"solvers\" array");
  }
  for (const auto& s : j.at("solvers")) cfg.solvers.push_back(solver_spec_from_json(s));

  if (!j.contains("node_counts") || !j.at("node_counts").is_array() ||
      j.at("node_counts").empty()) {
    throw ConfigError("config requires a non-empty \"node_counts\" array");
  }
  for (const auto& v : j.at("node_counts")) {
    const int n = v.get<int>();
    if (n < 1) throw ConfigError("node_counts entries must be >= 1");
    cfg.node_counts.push_back(n);
  }

  cfg.trials = j.value("trials", 1);
  if (cfg.trials < 1) throw ConfigError("trials must be >= 1");
  cfg.train_fraction = j.value("train_fraction", 0.5);
  if (!(cfg.train_fraction > 0.0) || !(cfg.train_fraction < 1.0)) {
    throw ConfigError("train_fraction must lie in (0, 1)");
  }
  cfg.stratified = j.value("stratified", true);
  cfg.base_seed = j.value("base_seed", std::uint64_t{0});
  cfg.standardize = j.value("standardize", true);
  cfg.weight_range = j.value("weight_range", 1.0);
  if (!(cfg.weight_range > 0.0)) throw ConfigError("weight_range must be > 0");
  if (j.contains("output")) {
    const json& o = j.at("output");
    cfg.out_dir = o.value("dir", std::string("out"));
    if (o.contains("formats")) {
      cfg.formats.clear();
      for (const auto& f : o.at("formats")) {
        const auto name = f.get<std::string>();
        if (name != "markdown" && name != "csv" && name != "json") {
          throw ConfigError("unknown output format '" + name + "'");
        }
        cfg.formats.push_back(name);
      }
      if (cfg.formats.empty()) throw ConfigError("output.formats must be non-empty");
    }
  }
  cfg.note = j.value("note", std::string());
  return cfg;
}

json trial_to_json(const TrialResult& t) {
  json j;
  j["solver"] = t.solver;
  j["nodes"] = t.nodes;
  j["trial"] = t.trial;
  j["layer_seed"] = t.layer_seed;
  j["accuracy"] = t.accuracy;
  j["remaining_nodes"] = t.remaining_nodes;
  j["iterations"] = t.iterations;
  j["wall_time_s"] = t.wall_time_s;
  j["error"] = t.error;
  return j;
}

TrialResult trial_from_json(const json& j) {
  TrialResult t;
  t.solver = j.at("solver").get<std::string>();
  t.nodes = j.at("nodes").get<int>();
  t.trial = j.at("trial").get<int>();
  t.layer_seed = j.at("layer_seed").get<std::uint64_t>();
  t.accuracy = j.at("accuracy").get<double>();
  t.remaining_nodes = j.at("remaining_nodes").get<int>();
  t.iterations = j.at("iterations").get<int>();
  t.wall_time_s = j.at("wall_time_s").get<double>();
  t.error = j.at("error").get<std::string>();
  return t;
}

json summary_to_json(const CellSummary& c) {
  json j;
  j["solver"] = c.solver;
  j["nodes"] = c.nodes;
  j["trials_ok"] = c.trials_ok;
  j["failures"] = c.failures;
  j["mean_accuracy"] = c.mean_accuracy;
  j["std_accuracy"] = c.std_accuracy;
  j["mean_remaining_nodes"] = c.mean_remaining_nodes;
  j["mean_iterations"] = c.mean_iterations;
  j["mean_time_s"] = c.mean_time_s;
  return j;
}

CellSummary summary_from_json(const json& j) {
  CellSummary c;
  c.solver = j.at("solver").get<std::string>();
  c.nodes = j.at("nodes").get<int>();
  c.trials_ok = j.at("trials_ok").get<int>();
  c.failures = j.at("failures").get<int>();
  c.mean_accuracy = j.at("mean_accuracy").get<double>();
  c.std_accuracy = j.at("std_accuracy").get<double>();
  c.mean_remaining_nodes = j.at("mean_remaining_nodes").get<double>();
  c.mean_iterations = j.at("mean_iterations").get<double>();
  c.mean_time_s = j.at("mean_time_s").get<double>();
  return c;
}

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) {
    fs::create_directories(target.parent_path());
  }
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + tmp.string() + "'");
    out << content;
    if (!out) throw Error("short write to '" + tmp.string() + "'");
  }
  fs::rename(tmp, target);
}

struct CellJob {
  int node_idx = 0;
  int trial = 0;
};

std::vector<TrialResult> run_cell(const ExperimentConfig& cfg, const Dataset& full,
                                  int nodes, int trial) {
  std::vector<TrialResult> results(cfg.solvers.size());
  const std::uint64_t layer_seed = layer_seed_for(cfg.base_seed, nodes, trial);
  for (std::size_t s = 0; s < cfg.solvers.size(); ++s) {
    results[s].solver = to_string(cfg.solvers[s].id);
    results[s].nodes = nodes;
    results[s].trial = trial;
    results[s].layer_seed = layer_seed;
  }

  try {
    SplitSpec spec;
    spec.train_fraction = cfg.train_fraction;
    spec.stratified = cfg.stratified;
    spec.seed = cfg.base_seed + static_cast<std::uint64_t>(trial);
    auto [train, test] = split(full, spec);

    Matrix test_X = test.X;
    if (cfg.standardize) {
      auto [train_std, tf] = standardize(train);
      train = std::move(train_std);
      test_X = tf.apply(test.X);
    }

    const Matrix T = one_hot(train.labels, full.encoding);
    const HiddenLayer layer =
        init_hidden(train.p(), nodes, cfg.weight_range, layer_seed);
    const Matrix H_train = hidden_matrix(layer, train.X);
    const Matrix H_test = hidden_matrix(layer, test_X);

    std::vector<int> truth;
    truth.reserve(test.labels.size());
    for (const auto& label : test.labels) {
      truth.push_back(full.encoding.index_of(label));
    }

    for (std::size_t s = 0; s < cfg.solvers.size(); ++s) {
      try {
        const SolverOutput out = dispatch(cfg.solvers[s].id, H_train, T,
                                          cfg.solvers[s].cfg);
        const std::vector<int> pred = argmax_rows(H_test * out.beta);
        results[s].accuracy = accuracy(pred, truth);
        results[s].remaining_nodes = remaining_nodes(out.beta, 1e-8);
        results[s].iterations = out.iterations;
        results[s].wall_time_s = out.wall_time_s;  // solver call only
      } catch (const std::exception& e) {
        results[s].error = e.what();
      }
    }
  } catch (const std::exception& e) {
    for (auto& r : results) {
      if (r.error.empty()) r.error = std::string("cell setup failed: ") + e.what();
    }
  }
  return results;
}

}  // namespace

std::string to_string(SolverId id) { return kSolverNames[static_cast<int>(id)]; }

std::string display_name(SolverId id) { return kDisplayNames[static_cast<int>(id)]; }

SolverId solver_id_from_string(const std::string& s) {
  for (int i = 0; i < 6; ++i) {
    if (s == kSolverNames[i]) return static_cast<SolverId>(i);
  }
  throw ConfigError("unknown solver id '" + s +
                    "' (expected one of elm, l2, l1, half, l2l1, l2half)");
}

ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError("config '" + path + "' is not valid JSON: " + e.what());
  }
  return config_from_json(j);
}

ExperimentReport run_experiment(const ExperimentConfig& cfg, int threads) {
  Dataset full = cfg.dataset.label_is_index
                     ? load_csv(cfg.dataset.path, cfg.dataset.label_index,
                                cfg.dataset.has_header, cfg.dataset.delimiter)
                     : load_csv(cfg.dataset.path, cfg.dataset.label_name,
                                cfg.dataset.has_header, cfg.dataset.delimiter);
  full.name = cfg.dataset.name;

  std::vector<CellJob> jobs;
  for (int n_idx = 0; n_idx < static_cast<int>(cfg.node_counts.size()); ++n_idx) {
    for (int t = 0; t < cfg.trials; ++t) jobs.push_back({n_idx, t});
  }
  std::vector<std::vector<TrialResult>> slots(jobs.size());

  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(jobs.size())));
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) break;
      slots[i] = run_cell(cfg, full, cfg.node_counts[jobs[i].node_idx],
                          jobs[i].trial);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers - 1; ++w) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
  }

  ExperimentReport report;
  report.library_version = RELM_VERSION;
  report.config = cfg;
  for (const auto& slot : slots) {
    for (const auto& r : slot) report.trials.push_back(r);
  }

  // Two-pass mean/std (sample standard deviation, n-1) over successful trials.
  for (const auto& solver : cfg.solvers) {
    const std::string name = to_string(solver.id);
    for (int nodes : cfg.node_counts) {
      CellSummary cell;
      cell.solver = name;
      cell.nodes = nodes;
      std::vector<const TrialResult*> ok;
      for (const auto& t : report.trials) {
        if (t.solver == name && t.nodes == nodes) {
          if (t.error.empty()) ok.push_back(&t);
          else ++cell.failures;
        }
      }
      cell.trials_ok = static_cast<int>(ok.size());
      if (!ok.empty()) {
        double sum_acc = 0, sum_rem = 0, sum_it = 0, sum_time = 0;
        for (const auto* t : ok) {
          sum_acc += t->accuracy;
          sum_rem += t->remaining_nodes;
          sum_it += t->iterations;
          sum_time += t->wall_time_s;
        }
        const double n = static_cast<double>(ok.size());
        cell.mean_accuracy = sum_acc / n;
        cell.mean_remaining_nodes = sum_rem / n;
        cell.mean_iterations = sum_it / n;
        cell.mean_time_s = sum_time / n;
        if (ok.size() > 1) {
          double ss = 0;
          for (const auto* t : ok) {
            const double d = t->accuracy - cell.mean_accuracy;
            ss += d * d;
          }
          cell.std_accuracy = std::sqrt(ss / (n - 1.0));
        }
      }
      report.summary.push_back(cell);
    }
  }
  return report;
}

std::string render_markdown(const ExperimentReport& r) {
  std::ostringstream md;
  md << "# Benchmark report\n\n";
  md << "- dataset: " << r.config.dataset.name << " (`" << r.config.dataset.path
     << "`)\n";
  md << "- trials: " << r.config.trials
     << ", train_fraction: " << fmt("%g", r.config.train_fraction)
     << ", stratified: " << (r.config.stratified ? "true" : "false")
     << ", standardize: " << (r.config.standardize ? "true" : "false") << "\n";
  md << "- weight_range: " << fmt("%g", r.config.weight_range)
     << ", base_seed: " << r.config.base_seed << "\n";
  md << "- library: relm " << r.library_version << "\n";
  if (!r.config.note.empty()) md << "- note: " << r.config.note << "\n";

  for (int nodes : r.config.node_counts) {
    md << "\n## N = " << nodes << "\n\n";
    md << "| Methods | Times(s) | Remaining Nodes | Accuracy(% \xC2\xB1 %) |\n";
    md << "|---|---:|---:|---:|\n";
    for (const auto& cell : r.summary) {
      if (cell.nodes != nodes) continue;
      const SolverId id = solver_id_from_string(cell.solver);
      md << "| " << display_name(id) << " | " << fmt("%.4f", cell.mean_time_s)
         << " | " << fmt("%.1f", cell.mean_remaining_nodes) << " | "
         << fmt("%.2f", 100.0 * cell.mean_accuracy) << " \xC2\xB1 "
         << fmt("%.2f", 100.0 * cell.std_accuracy) << " |\n";
    }
  }

  int failed = 0;
  for (const auto& t : r.trials) {
    if (!t.error.empty()) ++failed;
  }
  if (failed > 0) {
    md << "\n## Failed cells (" << failed << ")\n\n";
    for (const auto& t : r.trials) {
      if (!t.error.empty()) {
        md << "- " << t.solver << " N=" << t.nodes << " trial=" << t.trial << ": "
           << t.error << "\n";
      }
    }
  }
  return md.str();
}

std::string render_trials_csv(const ExperimentReport& r) {
  std::ostringstream csv;
  csv << "solver,nodes,trial,layer_seed,accuracy,remaining_nodes,iterations,"
         "wall_time_s,error\n";
  for (const auto& t : r.trials) {
    csv << t.solver << ',' << t.nodes << ',' << t.trial << ',' << t.layer_seed
        << ',' << fmt("%.17g", t.accuracy) << ',' << t.remaining_nodes << ','
        << t.iterations << ',' << fmt("%.9g", t.wall_time_s) << ','
        << csv_escape(t.error) << "\n";
  }
  return csv.str();
}

std::string render_json(const ExperimentReport& r) {
  json j;
  j["library_version"] = r.library_version;
  j["config"] = config_to_json(r.config);
  json trials = json::array();
  for (const auto& t : r.trials) trials.push_back(trial_to_json(t));
  j["trials"] = trials;
  json summary = json::array();
  for (const auto& c : r.summary) summary.push_back(summary_to_json(c));
  j["summary"] = summary;
  return j.dump(2) + "\n";
}

ExperimentReport parse_report_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("report is not valid JSON: ") + e.what());
  }
  try {
    ExperimentReport r;
    r.library_version = j.at("library_version").get<std::string>();
    r.config = config_from_json(j.at("config"));
    for (const auto& t : j.at("trials")) r.trials.push_back(trial_from_json(t));
    for (const auto& c : j.at("summary")) r.summary.push_back(summary_from_json(c));
    return r;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed report JSON: ") + e.what());
  }
}

std::string render_curves_csv(const ExperimentReport& r) {
  std::vector<int> distinct = r.config.node_counts;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() < 2) {
    throw ConfigError(
        "curves need at least two distinct node counts; this report has " +
        std::to_string(distinct.size()) +
        " (run the experiment with a node_counts sweep)");
  }
  std::ostringstream csv;
  csv << "solver,nodes,mean_accuracy,std_accuracy\n";
  for (const auto& c : r.summary) {
    csv << c.solver << ',' << c.nodes << ',' << fmt("%.17g", c.mean_accuracy)
        << ',' << fmt("%.17g", c.std_accuracy) << "\n";
  }
  return csv.str();
}

std::vector<std::string> emit_report(const ExperimentReport& report,
                                     const std::string& out_dir,
                                     const std::vector<std::string>& formats) {
  namespace fs = std::filesystem;
  std::vector<std::string> written;
  for (const auto& format : formats) {
    fs::path path(out_dir);
    if (format == "markdown") {
      path /= "report.md";
      write_atomic(path.string(), render_markdown(report));
    } else if (format == "csv") {
      path /= "trials.csv";
      write_atomic(path.string(), render_trials_csv(report));
    } else if (format == "json") {
      path /= "report.json";
      write_atomic(path.string(), render_json(report));
    } else {
      throw ConfigError("unknown output format '" + format + "'");
    }
    written.push_back(path.string());
  }
  return written;
}

void emit_curves(const ExperimentReport& report, const std::string& out_path) {
  write_atomic(out_path, render_curves_csv(report));
}

}  // namespace relm
