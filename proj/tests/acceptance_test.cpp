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

// Acceptance suite: one PASS/FAIL line per criterion; exits nonzero if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "kpkit/cli.hpp"
#include "kpkit/graph.hpp"
#include "kpkit/ingest.hpp"
#include "kpkit/keyplayer.hpp"
#include "kpkit/random.hpp"
#include "kpkit/report.hpp"
#include "kpkit/synth.hpp"
#include "test_graphs.hpp"

namespace kpkit {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failed expectation.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && outcome_.pass) {
      outcome_.pass = false;
      outcome_.detail = what;
    }
  }
  void note(const std::string& detail) {
    if (outcome_.pass) outcome_.detail = detail;
  }
  Outcome result() const { return outcome_; }

 private:
  Outcome outcome_;
};

std::string Fixed(double v, int digits = 3) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(digits);
  s << v;
  return s.str();
}

// Independent oracle: per-source BFS counting unreachable unordered pairs.
double PairwiseFragmentation(const Graph& g) {
  const std::size_t n = g.node_count();
  std::size_t unreachable = 0;
  for (NodeIndex u = 0; u < n; ++u) {
    auto dist = bfs_distances_by_index(g, std::vector<NodeIndex>{u});
    for (NodeIndex v = u + 1; v < n; ++v) unreachable += dist[v] ? 0 : 1;
  }
  return static_cast<double>(unreachable) / (static_cast<double>(n) * (n - 1) / 2.0);
}

Outcome FragmentationOracle() {
  Checker c;
  Rng rng(1);
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 2 + uniform_below(rng, 9);
    const double p = uniform_unit(rng);
    auto g = generate_random_graph(n, p, rng());
    const double diff = std::fabs(fragmentation(g) - PairwiseFragmentation(g));
    worst = std::max(worst, diff);
    c.expect(diff <= 1e-12, "graph " + std::to_string(i) + " differs by " + std::to_string(diff));
  }
  std::ostringstream msg;
  msg << "500 graphs, max |diff| = " << std::scientific << worst;
  c.note(msg.str());
  return c.result();
}

Outcome ClosedForms() {
  Checker c;
  auto near = [](double a, double b) { return std::fabs(a - b) <= 1e-9; };
  c.expect(near(fragmentation(testing::Complete(4)), 0.0), "K4");
  c.expect(near(fragmentation(build_graph({"a", "b", "c", "d", "e"}, {})), 1.0), "5 isolates");
  c.expect(near(fragmentation(build_graph({"a", "b", "c", "d", "e"},
                                          {{"a", "b"}, {"b", "c"}, {"d", "e"}})),
                0.6),
           "components {3,2}");
  auto path = testing::Path({"a", "b", "c", "d", "e"});
  // Residual components {2,2}: 1 - 4/12.
  c.expect(near(fit_neg(path, {"c"}), 2.0 / 3.0), "path minus center");
  c.note("K4 0.0, isolates 1.0, {3,2} 0.6, path-minus-center " + Fixed(fit_neg(path, {"c"}), 4));
  return c.result();
}

Outcome GreedyVsBruteForce() {
  Checker c;
  Rng rng(2026);
  const double kProbabilities[] = {0.15, 0.3, 0.5};
  std::size_t matched_neg = 0, matched_pos = 0;
  const std::size_t instances = 200;
  for (std::size_t i = 0; i < instances; ++i) {
    const std::size_t k = 1 + uniform_below(rng, 3);
    const std::size_t n = k + 2 + uniform_below(rng, 12 - (k + 2) + 1);
    const double p = kProbabilities[i % 3];
    auto g = generate_random_graph(n, p, rng());
    KpConfig cfg;
    cfg.k = k;
    cfg.restarts = 20;
    cfg.rng_seed = rng();
    for (auto method : {KpMethod::kNeg, KpMethod::kPos}) {
      auto greedy = select_key_players(g, method, cfg);
      auto [set, best] = brute_force_key_players(g, method, k, cfg.reach_distance_m);
      if (std::fabs(greedy.fit - best) <= 1e-12) {
        (method == KpMethod::kNeg ? matched_neg : matched_pos)++;
      }
      c.expect(greedy.fit <= best + 1e-12, "greedy exceeded the exhaustive optimum");
    }
  }
  const double neg_rate = static_cast<double>(matched_neg) / instances;
  const double pos_rate = static_cast<double>(matched_pos) / instances;
  c.expect(neg_rate >= 0.95, "NEG match rate " + Fixed(neg_rate));
  c.expect(pos_rate >= 0.95, "POS match rate " + Fixed(pos_rate));

  KpConfig one;
  one.k = 1;
  one.restarts = 20;
  auto star = select_key_players(testing::Star("c", 4), KpMethod::kNeg, one);
  c.expect(star.chosen == std::vector<NodeId>{"c"} && star.fit == 1.0, "star");
  auto barbell = select_key_players(testing::Barbell(), KpMethod::kNeg, one);
  c.expect(barbell.chosen == std::vector<NodeId>{"x"} && std::fabs(barbell.fit - 0.6) <= 1e-9,
           "barbell bridge");
  c.expect(degree_ranking(testing::Barbell()).front() == "a1" &&
               fit_neg(testing::Barbell(), {"a1"}) < barbell.fit,
           "barbell hub should lose to the bridge");
  KpConfig two = one;
  two.k = 2;
  auto path = select_key_players(testing::Path({"a", "b", "c", "d", "e"}), KpMethod::kPos, two);
  c.expect(path.fit == 1.0, "path-of-5 POS");
  c.note("match NEG " + Fixed(neg_rate) + ", POS " + Fixed(pos_rate) +
         " over 200 instances; star/barbell/path exact");
  return c.result();
}

Outcome PublishedTables() {
  Checker c;
  const GroupFragmentationRow rows[] = {
      {"Table 2 developers", 2, 0.854, 0.947, 0.093},
      {"Table 2 early adopters", 3, 0.854, 0.895, 0.041},
      {"Table 2 all", 5, 0.854, 0.988, 0.134},
      {"Table 4 developers", 6, 0.872, 0.986, 0.114},
      {"Table 4 early adopters", 4, 0.872, 0.936, 0.064},
      {"Table 4 all", 10, 0.872, 0.994, 0.122},
  };
  for (const auto& row : rows) {
    c.expect(row_is_consistent(row, 1e-9), row.group_label);
    c.expect(format_fraction(row.final - row.initial) == format_fraction(row.change),
             row.group_label + " rendering");
  }
  c.note("6 published rows consistent");
  return c.result();
}

Outcome PlantedRecovery() {
  Checker c;
  struct Shape {
    std::size_t clusters, size, animators;
  };
  std::vector<Shape> shapes;
  for (std::size_t cl = 3; cl <= 5; ++cl) {
    for (std::size_t s = 3; s <= 6; ++s) {
      for (std::size_t a = 1; a <= 2; ++a) {
        if (cl * s + a <= 12) shapes.push_back({cl, s, a});
      }
    }
  }
  const double kDensities[] = {0.5, 0.8, 1.0};
  for (std::size_t i = 0; i < 50; ++i) {
    const Shape& shape = shapes[i % shapes.size()];
    ScenarioConfig cfg{shape.clusters, shape.size, shape.animators, kDensities[i % 3], 1000 + i};
    auto truth = generate_animator_scenario(cfg);
    KpConfig kp;
    kp.k = shape.animators;
    kp.rng_seed = i;
    auto greedy = select_key_players(truth.dataset.graph, KpMethod::kNeg, kp);
    auto [exact, value] = brute_force_key_players(truth.dataset.graph, KpMethod::kNeg, kp.k, 1);
    const NodeSet chosen(greedy.chosen.begin(), greedy.chosen.end());
    c.expect(chosen == truth.planted_animators, "scenario " + std::to_string(i) + " greedy");
    c.expect(NodeSet(exact.begin(), exact.end()) == truth.planted_animators,
             "scenario " + std::to_string(i) + " brute force");
  }

  auto large = generate_animator_scenario(ScenarioConfig{5, 6, 2, 0.8, 42});
  KpConfig kp;
  kp.k = 2;
  kp.rng_seed = 1;
  auto neg = select_key_players(large.dataset.graph, KpMethod::kNeg, kp);
  const NodeSet chosen(neg.chosen.begin(), neg.chosen.end());
  auto delta = removal_impact(large.dataset.graph, chosen);
  auto parts = connected_components(remove_nodes(large.dataset.graph, chosen));
  c.expect(delta.change >= 0.3, "large scenario change " + Fixed(delta.change));
  c.expect(parts.components.size() >= 5, "large scenario components");
  c.note("50 small scenarios recovered (" + std::to_string(shapes.size()) +
         " shapes); n=32 change " + Fixed(delta.change) + ", " +
         std::to_string(parts.components.size()) + " components");
  return c.result();
}

Outcome RoleClassification() {
  Checker c;
  RoleTable roles;
  for (const char* d : {"d1", "d2", "d3", "d4", "d5", "d6"}) roles.assign(d, Role::kSeededDeveloper);
  KeyPlayerResult five;
  five.chosen = {"d1", "d2", "e1", "e2", "e3"};
  c.expect(classify_key_players(five, roles) == RoleBreakdown{BreakdownMethod::kKppNeg, 2, 3},
           "5 with 2 developers");
  KeyPlayerResult ten;
  ten.chosen = {"d1", "d2", "d3", "d4", "d5", "d6", "e1", "e2", "e3", "e4"};
  c.expect(classify_key_players(ten, roles) == RoleBreakdown{BreakdownMethod::kKppNeg, 6, 4},
           "10 with 6 developers");
  c.note("{2,3} and {6,4}");
  return c.result();
}

Outcome CliqueConstruction() {
  Checker c;
  for (std::size_t p = 1; p <= 6; ++p) {
    PhotoRecord photo{"s", {}, std::nullopt};
    for (std::size_t i = 0; i < p; ++i) photo.participants.push_back("m" + std::to_string(i));
    c.expect(co_appearance_network({photo}).edge_count() == p * (p - 1) / 2,
             "clique p=" + std::to_string(p));
  }
  auto g = co_appearance_network({{"s1", {"p1", "p2"}, std::nullopt},
                                  {"s2", {"p2", "p4"}, std::nullopt}});
  c.expect(g.edges() == EdgeList{{"p1", "p2"}, {"p2", "p4"}}, "pendant path");
  auto d = removal_impact(g, {"p2"});
  c.expect(std::fabs(d.initial) <= 1e-12 && std::fabs(d.final - 1.0) <= 1e-12,
           "cut vertex p2");
  c.note("p(p-1)/2 edges for p=1..6; p2 removal 0.0 -> 1.0");
  return c.result();
}

int Cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  if (code != 0) std::cerr << err.str();
  return code;
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Outcome EndToEndDeterminism() {
  Checker c;
  const fs::path root = fs::current_path() / "acceptance_e2e";
  fs::remove_all(root);
  std::vector<std::string> reports, exports;
  for (int run = 0; run < 2; ++run) {
    // Second run uses parallel restarts; output must not change.
    ::setenv("KPKIT_THREADS", run == 0 ? "1" : "4", 1);
    const fs::path dir = root / ("run" + std::to_string(run));
    const std::string data = (dir / "data").string();
    const std::string out = (dir / "out").string();
    c.expect(Cli({"simulate", "--clusters", "5", "--cluster-size", "6", "--animators", "2",
                  "--seed", "42", "--out-dir", data}) == 0,
             "simulate");
    c.expect(Cli({"analyze", "--interactions", data + "/interactions.csv", "--roles",
                  data + "/roles.csv", "--k", "5", "--method", "both", "--seed", "1",
                  "--out-dir", out}) == 0,
             "analyze");
    c.expect(Cli({"export", "--interactions", data + "/interactions.csv", "--roles",
                  data + "/roles.csv", "--highlight", out + "/report.json", "--format", "dot",
                  "--out-dir", out}) == 0,
             "export dot");
    c.expect(Cli({"export", "--interactions", data + "/interactions.csv", "--roles",
                  data + "/roles.csv", "--highlight", out + "/report.json", "--format",
                  "graphml", "--out-dir", out}) == 0,
             "export graphml");
    reports.push_back(Slurp(dir / "out" / "report.json"));
    exports.push_back(Slurp(dir / "out" / "graph.dot") + Slurp(dir / "out" / "graph.graphml"));
  }
  ::unsetenv("KPKIT_THREADS");
  c.expect(!reports[0].empty() && reports[0] == reports[1], "report.json differs");
  c.expect(!exports[0].empty() && exports[0] == exports[1], "exports differ");
  c.note("report.json (" + std::to_string(reports[0].size()) + " bytes) and exports identical");
  return c.result();
}

Outcome AutoK() {
  Checker c;
  const fs::path dir = fs::current_path() / "acceptance_autok";
  fs::remove_all(dir);
  const std::string data = (dir / "data").string();
  const std::string out = (dir / "out").string();
  c.expect(Cli({"simulate", "--clusters", "5", "--cluster-size", "6", "--animators", "2",
                "--seed", "42", "--out-dir", data}) == 0,
           "simulate");
  c.expect(Cli({"analyze", "--interactions", data + "/interactions.csv", "--roles",
                data + "/roles.csv", "--auto-k-reach", "0.90", "--seed", "1", "--out-dir",
                out}) == 0,
           "analyze");
  auto manifest = nlohmann::json::parse(Slurp(dir / "out" / "manifest.json"));
  const std::size_t k = manifest["auto_k"]["chosen_k"].get<std::size_t>();
  auto report = parse_report_json(Slurp(dir / "out" / "report.json"));

  auto truth = generate_animator_scenario(ScenarioConfig{5, 6, 2, 0.8, 42});
  const Graph& g = truth.dataset.graph;
  // No smaller set can reach 90%: check k-1 exhaustively.
  if (k > 1) {
    auto [set, best] = brute_force_key_players(g, KpMethod::kPos, k - 1, 1);
    c.expect(best < 0.90, "k-1 already reaches " + Fixed(best));
  }
  const KeyPlayerResult* neg = nullptr;
  for (const auto& r : report.kp_results) {
    c.expect(r.chosen.size() == k, "result size differs from auto k");
    if (r.method == KpMethod::kPos) c.expect(r.fit >= 0.90, "POS reach below threshold");
    if (r.method == KpMethod::kNeg) neg = &r;
  }
  c.expect(neg != nullptr, "NEG result missing");
  if (neg) {
    const NodeSet chosen(neg->chosen.begin(), neg->chosen.end());
    auto delta = removal_impact(g, chosen);
    auto parts = connected_components(remove_nodes(g, chosen));
    c.expect(delta.change >= 0.3, "NEG change " + Fixed(delta.change));
    c.expect(parts.components.size() >= 5, "NEG components");
    c.note("auto k = " + std::to_string(k) + "; NEG change " + Fixed(delta.change) + ", " +
           std::to_string(parts.components.size()) + " components");
  }
  return c.result();
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0 = no runtime bound
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace kpkit

int main() {
  using namespace kpkit;
  const Criterion criteria[] = {
      {1, "fragmentation oracle equivalence", 5.0, FragmentationOracle},
      {2, "closed-form spot checks", 0.0, ClosedForms},
      {3, "greedy vs brute force", 60.0, GreedyVsBruteForce},
      {4, "published table arithmetic", 0.0, PublishedTables},
      {5, "planted animator recovery", 30.0, PlantedRecovery},
      {6, "role classification", 0.0, RoleClassification},
      {7, "clique construction", 0.0, CliqueConstruction},
      {8, "end-to-end determinism", 0.0, EndToEndDeterminism},
      {9, "auto-k reach rule", 0.0, AutoK},
  };
  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (criterion.limit_seconds > 0 && seconds > criterion.limit_seconds) {
      outcome.pass = false;
      outcome.detail += " (runtime " + Fixed(seconds, 2) + "s over " +
                        Fixed(criterion.limit_seconds, 0) + "s)";
    }
    failures += outcome.pass ? 0 : 1;
    std::cout << (outcome.pass ? "PASS" : "FAIL") << "  criterion " << criterion.id << ": "
              << criterion.name << " [" << Fixed(seconds, 2) << "s] " << outcome.detail << '\n';
  }
  std::cout << (failures == 0 ? "all acceptance criteria passed" : "acceptance FAILED") << '\n';
  return failures == 0 ? 0 : 1;
}
