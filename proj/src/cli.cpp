// Copyright 2026 The kpkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kpkit/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kpkit/error.hpp"
#include "kpkit/graph.hpp"
#include "kpkit/ingest.hpp"
#include "kpkit/keyplayer.hpp"
#include "kpkit/report.hpp"
#include "kpkit/synth.hpp"

namespace kpkit {
namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

// Input failure tagged with the file it came from.
struct InputError {
  std::string path;
  Error error;
};

struct ConfigError {
  std::string message;
};

struct GraphInputs {
  std::string photos;
  std::string photos_format;
  std::string interactions;
  std::string interactions_format;
  std::string roles;

  void attach(CLI::App* cmd, bool with_roles) {
    cmd->add_option("--photos", photos, "Photo co-appearance log (csv or jsonl)");
    cmd->add_option("--photos-format", photos_format, "csv | jsonl (default: by extension)")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    cmd->add_option("--interactions", interactions, "Dyadic interaction log (csv or jsonl)");
    cmd->add_option("--interactions-format", interactions_format,
                    "csv | jsonl (default: by extension)")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    if (with_roles) cmd->add_option("--roles", roles, "Role table CSV (node_id,role)");
  }
};

LogFormat FormatFor(const std::string& path, const std::string& explicit_format) {
  if (!explicit_format.empty()) return ParseLogFormat(explicit_format);
  return fs::path(path).extension() == ".jsonl" ? LogFormat::kJsonl : LogFormat::kCsv;
}

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError{path, Error(ErrorCode::kParseError, "cannot open file")};
  }
  return in;
}

template <typename Fn>
auto ParseFile(const std::string& path, Fn&& fn) {
  auto in = OpenInput(path);
  try {
    return fn(in);
  } catch (const Error& e) {
    throw InputError{path, e};
  }
}

struct LoadedInputs {
  Dataset dataset;
  ordered_json manifest_inputs = ordered_json::array();
};

LoadedInputs LoadInputs(const GraphInputs& in) {
  if (in.photos.empty() && in.interactions.empty()) {
    throw ConfigError{"at least one of --photos or --interactions is required"};
  }
  LoadedInputs out;
  Graph graph;
  std::string provenance;
  if (!in.photos.empty()) {
    auto format = FormatFor(in.photos, in.photos_format);
    auto photos = ParseFile(in.photos, [&](std::istream& s) { return parse_photo_log(s, format); });
    graph = co_appearance_network(photos);
    provenance = "photos:" + in.photos;
    out.manifest_inputs.push_back(
        {{"kind", "photos"}, {"path", in.photos}, {"format", format == LogFormat::kCsv ? "csv" : "jsonl"}});
  }
  if (!in.interactions.empty()) {
    auto format = FormatFor(in.interactions, in.interactions_format);
    auto records = ParseFile(in.interactions,
                             [&](std::istream& s) { return parse_interaction_log(s, format); });
    graph = merge_graphs(graph, interaction_network(records));
    if (!provenance.empty()) provenance += " + ";
    provenance += "interactions:" + in.interactions;
    out.manifest_inputs.push_back({{"kind", "interactions"},
                                   {"path", in.interactions},
                                   {"format", format == LogFormat::kCsv ? "csv" : "jsonl"}});
  }
  RoleTable roles;
  if (!in.roles.empty()) {
    roles = ParseFile(in.roles, [](std::istream& s) { return parse_roles(s); });
    out.manifest_inputs.push_back({{"kind", "roles"}, {"path", in.roles}, {"format", "csv"}});
  }
  out.dataset = make_dataset(std::move(graph), roles, provenance);
  return out;
}

NodeSet ReadNodeList(const std::string& path) {
  return ParseFile(path, [](std::istream& s) {
    NodeSet ids;
    std::string line;
    while (std::getline(s, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      ids.insert(line);
    }
    return ids;
  });
}

void WriteFile(const fs::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  out << contents;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

fs::path PrepareOutDir(const std::string& dir) {
  fs::path p(dir);
  fs::create_directories(p);
  return p;
}

std::size_t ThreadsFromEnv() {
  const char* v = std::getenv("KPKIT_THREADS");
  if (!v || !*v) return 1;
  char* end = nullptr;
  long long n = std::strtoll(v, &end, 10);
  if (*end != '\0' || n < 0) throw ConfigError{"KPKIT_THREADS must be a non-negative integer"};
  return static_cast<std::size_t>(n);
}

std::size_t PositiveCount(long long value, std::string_view name) {
  if (value < 1) throw ConfigError{std::string(name) + " must be ≥ 1"};
  return static_cast<std::size_t>(value);
}

ordered_json ConfigJson(const KpConfig& cfg) {
  return {{"k", cfg.k},
          {"restarts", cfg.restarts},
          {"rng_seed", cfg.rng_seed},
          {"reach_distance_m", cfg.reach_distance_m},
          {"max_sweeps", cfg.max_sweeps}};
}

// --- analyze ---------------------------------------------------------------

struct AnalyzeOptions {
  GraphInputs inputs;
  long long k = 5;
  std::string method = "both";
  long long restarts = 20;
  std::uint64_t seed = 1;
  long long reach_m = 1;
  long long max_sweeps = 1000;
  std::string out_dir = ".";
  std::string format = "json";
  std::optional<double> auto_k_reach;
};

int RunAnalyze(const AnalyzeOptions& o, std::ostream& out) {
  auto loaded = LoadInputs(o.inputs);
  const Graph& g = loaded.dataset.graph;

  KpConfig cfg;
  cfg.k = PositiveCount(o.k, "k");
  cfg.restarts = PositiveCount(o.restarts, "restarts");
  cfg.rng_seed = o.seed;
  cfg.reach_distance_m = PositiveCount(o.reach_m, "reach-m");
  cfg.max_sweeps = PositiveCount(o.max_sweeps, "max-sweeps");
  cfg.threads = ThreadsFromEnv();
  const bool run_neg = o.method != "pos";
  const bool run_pos = o.method != "neg";

  std::vector<KeyPlayerResult> results;
  ordered_json auto_k = nullptr;
  std::optional<KeyPlayerResult> pos_result;
  if (o.auto_k_reach) {
    const double threshold = *o.auto_k_reach;
    if (!(threshold > 0.0 && threshold <= 1.0)) {
      throw ConfigError{"auto-k-reach must be in (0, 1]"};
    }
    if (g.node_count() < 2) throw ConfigError{"auto-k needs at least 2 nodes"};
    ordered_json probes = ordered_json::array();
    for (std::size_t k = 1; k < g.node_count(); ++k) {
      KpConfig probe = cfg;
      probe.k = k;
      auto r = select_key_players(g, KpMethod::kPos, probe);
      probes.push_back({{"k", k}, {"reach", r.fit}});
      if (r.fit >= threshold) {
        cfg.k = k;
        pos_result = std::move(r);
        break;
      }
    }
    if (!pos_result) {
      throw ConfigError{"no k below the node count reaches " + format_fraction(threshold)};
    }
    auto_k = {{"threshold", threshold}, {"chosen_k", cfg.k}, {"probes", probes}};
  }

  validate_config(cfg, g);
  if (run_neg) results.push_back(select_key_players(g, KpMethod::kNeg, cfg));
  if (run_pos) {
    results.push_back(pos_result ? *pos_result : select_key_players(g, KpMethod::kPos, cfg));
  }

  const auto report = build_report(g, loaded.dataset.roles, results);
  const auto format = ParseReportFormat(o.format);
  const std::string report_name = format == ReportFormat::kJson   ? "report.json"
                                  : format == ReportFormat::kCsv ? "report.csv"
                                                                 : "report.txt";
  const fs::path dir = PrepareOutDir(o.out_dir);
  WriteFile(dir / report_name, render_report(report, format));

  ordered_json manifest;
  manifest["tool_version"] = kToolVersion;
  manifest["command"] = "analyze";
  manifest["inputs"] = loaded.manifest_inputs;
  manifest["method"] = o.method;
  manifest["cfg"] = ConfigJson(cfg);
  manifest["auto_k"] = auto_k;
  manifest["outputs"] = {report_name, "manifest.json"};
  manifest["seed_used"] = cfg.rng_seed;
  WriteFile(dir / "manifest.json", manifest.dump(2) + "\n");

  out << render_report(report, ReportFormat::kText);
  out << "\nwrote " << (dir / report_name).string() << " and " << (dir / "manifest.json").string()
      << '\n';
  return kExitOk;
}

// --- fragment --------------------------------------------------------------

struct FragmentOptions {
  GraphInputs inputs;
  std::string remove;
};

int RunFragment(const FragmentOptions& o, std::ostream& out) {
  auto loaded = LoadInputs(o.inputs);
  NodeSet removal;
  if (!o.remove.empty()) removal = ReadNodeList(o.remove);
  auto d = removal_impact(loaded.dataset.graph, removal);
  out << "initial " << format_fraction(d.initial) << " final " << format_fraction(d.final)
      << " change " << format_fraction(d.change) << '\n';
  return kExitOk;
}

// --- export ----------------------------------------------------------------

struct ExportOptions {
  GraphInputs inputs;
  std::string format = "dot";
  std::string highlight_report;
  std::string highlight_method = "neg";
  std::string highlight_file;
  std::string out_dir = ".";
};

int RunExport(const ExportOptions& o, std::ostream& out) {
  const auto format = ParseGraphFormat(o.format);
  auto loaded = LoadInputs(o.inputs);
  NodeSet highlight;
  if (!o.highlight_report.empty()) {
    auto report = ParseFile(o.highlight_report, [](std::istream& s) {
      std::stringstream buf;
      buf << s.rdbuf();
      return parse_report_json(buf.str());
    });
    const KpMethod wanted = ParseKpMethod(o.highlight_method);
    bool found = false;
    for (const auto& kp : report.kp_results) {
      if (kp.method == wanted) {
        highlight.insert(kp.chosen.begin(), kp.chosen.end());
        found = true;
      }
    }
    if (!found) {
      throw ConfigError{"report has no " + std::string(KpMethodName(wanted)) + " result"};
    }
  }
  if (!o.highlight_file.empty()) {
    auto more = ReadNodeList(o.highlight_file);
    highlight.insert(more.begin(), more.end());
  }
  const std::string text =
      export_graph(loaded.dataset.graph, loaded.dataset.roles, highlight, format);
  const fs::path dir = PrepareOutDir(o.out_dir);
  const fs::path file = dir / (format == GraphFormat::kDot ? "graph.dot" : "graph.graphml");
  WriteFile(file, text);
  out << "wrote " << file.string() << " (" << loaded.dataset.graph.node_count() << " nodes, "
      << highlight.size() << " highlighted)\n";
  return kExitOk;
}

// --- simulate --------------------------------------------------------------

struct SimulateOptions {
  long long clusters = 5;
  long long cluster_size = 6;
  long long animators = 2;
  double density = 0.8;
  std::uint64_t seed = 42;
  std::string out_dir = ".";
};

int RunSimulate(const SimulateOptions& o, std::ostream& out) {
  if (o.clusters < 0 || o.cluster_size < 0 || o.animators < 0) {
    throw ConfigError{"scenario sizes must be non-negative"};
  }
  ScenarioConfig cfg;
  cfg.clusters = static_cast<std::size_t>(o.clusters);
  cfg.cluster_size = static_cast<std::size_t>(o.cluster_size);
  cfg.animators = static_cast<std::size_t>(o.animators);
  cfg.intra_cluster_density = o.density;
  cfg.rng_seed = o.seed;
  auto truth = generate_animator_scenario(cfg);

  const fs::path dir = PrepareOutDir(o.out_dir);
  std::ostringstream interactions, roles, truth_json;
  write_interaction_log_csv(interactions, truth.interactions);
  write_roles_csv(roles, truth.dataset.roles);
  write_truth_json(truth_json, cfg, truth);
  WriteFile(dir / "interactions.csv", interactions.str());
  WriteFile(dir / "roles.csv", roles.str());
  WriteFile(dir / "truth.json", truth_json.str());
  out << "wrote " << truth.dataset.graph.node_count() << "-node scenario with "
      << truth.planted_animators.size() << " planted animators to " << dir.string() << '\n';
  return kExitOk;
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownNode: return kExitUnknownNode;
    case ErrorCode::kInvalidConfig:
    case ErrorCode::kDegenerateGraph:
    case ErrorCode::kDegenerateResidual:
    case ErrorCode::kEmptySet:
    case ErrorCode::kTooLarge: return kExitConfig;
    default: return kExitParse;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"kpkit: key player analysis of interaction networks", "kpkit"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  AnalyzeOptions analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Find key players and report their impact");
  analyze.inputs.attach(analyze_cmd, true);
  analyze_cmd->add_option("--k", analyze.k, "Key player set size")->capture_default_str();
  analyze_cmd->add_option("--method", analyze.method, "neg | pos | both")
      ->check(CLI::IsMember({"neg", "pos", "both"}))
      ->capture_default_str();
  analyze_cmd->add_option("--restarts", analyze.restarts, "Greedy restarts")->capture_default_str();
  analyze_cmd->add_option("--seed", analyze.seed, "RNG seed")->capture_default_str();
  analyze_cmd->add_option("--reach-m", analyze.reach_m, "KPP-POS reach distance in hops")
      ->capture_default_str();
  analyze_cmd->add_option("--max-sweeps", analyze.max_sweeps, "Sweep cap per restart")
      ->capture_default_str();
  analyze_cmd->add_option("--out-dir", analyze.out_dir, "Output directory")->capture_default_str();
  analyze_cmd->add_option("--format", analyze.format, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  analyze_cmd->add_option("--auto-k-reach", analyze.auto_k_reach,
                          "Pick the smallest k whose KPP-POS reach meets this share");

  FragmentOptions fragment;
  auto* fragment_cmd = app.add_subcommand("fragment", "Fragmentation before and after removal");
  fragment.inputs.attach(fragment_cmd, false);
  fragment_cmd->add_option("--remove", fragment.remove, "File with one node id per line");

  ExportOptions exp;
  auto* export_cmd = app.add_subcommand("export", "Write a role-colored DOT or GraphML graph");
  exp.inputs.attach(export_cmd, true);
  export_cmd->add_option("--format", exp.format, "dot | graphml")
      ->check(CLI::IsMember({"dot", "graphml"}))
      ->capture_default_str();
  export_cmd->add_option("--highlight", exp.highlight_report,
                         "report.json whose key players are highlighted");
  export_cmd->add_option("--highlight-method", exp.highlight_method, "neg | pos")
      ->check(CLI::IsMember({"neg", "pos"}))
      ->capture_default_str();
  export_cmd->add_option("--highlight-file", exp.highlight_file,
                         "File with one node id per line to highlight");
  export_cmd->add_option("--out-dir", exp.out_dir, "Output directory")->capture_default_str();

  SimulateOptions sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Generate a planted-animator dataset");
  sim_cmd->add_option("--clusters", sim.clusters)->capture_default_str();
  sim_cmd->add_option("--cluster-size", sim.cluster_size)->capture_default_str();
  sim_cmd->add_option("--animators", sim.animators)->capture_default_str();
  sim_cmd->add_option("--density", sim.density, "Intra-cluster edge density")
      ->capture_default_str();
  sim_cmd->add_option("--seed", sim.seed)->capture_default_str();
  sim_cmd->add_option("--out-dir", sim.out_dir)->capture_default_str();

  std::vector<std::string> argv_storage = {"kpkit"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*analyze_cmd) return RunAnalyze(analyze, out);
    if (*fragment_cmd) return RunFragment(fragment, out);
    if (*export_cmd) return RunExport(exp, out);
    if (*sim_cmd) return RunSimulate(sim, out);
  } catch (const InputError& e) {
    err << "error: " << e.path << ": " << e.error.what() << '\n';
    return ExitCodeFor(e.error.code());
  } catch (const ConfigError& e) {
    err << "error: " << e.message << '\n';
    return kExitConfig;
  } catch (const Error& e) {
    err << "error: " << ErrorCodeName(e.code()) << ": " << e.what() << '\n';
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace kpkit
