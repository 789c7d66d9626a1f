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

#include "kpkit/synth.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "json.hpp"
#include "kpkit/error.hpp"
#include "kpkit/random.hpp"

namespace kpkit {
namespace {

std::string Padded(std::size_t value, std::size_t upper) {
  std::size_t width = std::to_string(upper > 0 ? upper - 1 : 0).size();
  std::string s = std::to_string(value);
  return std::string(width - std::min(width, s.size()), '0') + s;
}

}  // namespace

void validate_scenario(const ScenarioConfig& cfg) {
  if (cfg.clusters < 2) throw Error(ErrorCode::kInvalidConfig, "clusters must be >= 2");
  if (cfg.cluster_size < 2) throw Error(ErrorCode::kInvalidConfig, "cluster size must be >= 2");
  if (cfg.animators < 1) throw Error(ErrorCode::kInvalidConfig, "animators must be >= 1");
  if (!(cfg.intra_cluster_density > 0.0 && cfg.intra_cluster_density <= 1.0)) {
    throw Error(ErrorCode::kInvalidConfig, "intra-cluster density must be in (0, 1]");
  }
}

ScenarioTruth generate_animator_scenario(const ScenarioConfig& cfg) {
  validate_scenario(cfg);
  Rng rng(substream_seed(cfg.rng_seed, 0));

  NodeSet nodes;
  std::vector<std::vector<NodeId>> clusters(cfg.clusters);
  for (std::size_t c = 0; c < cfg.clusters; ++c) {
    for (std::size_t j = 0; j < cfg.cluster_size; ++j) {
      clusters[c].push_back("g" + Padded(c, cfg.clusters) + "_" + Padded(j, cfg.cluster_size));
      nodes.insert(clusters[c].back());
    }
  }

  EdgeList edges;
  for (const auto& members : clusters) {
    const std::size_t s = members.size();
    std::vector<std::vector<std::uint8_t>> linked(s, std::vector<std::uint8_t>(s, 0));
    // Random spanning tree: shuffle, then attach each node to an earlier one.
    std::vector<std::size_t> order(s);
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t i = s - 1; i > 0; --i) {
      std::swap(order[i], order[uniform_below(rng, i + 1)]);
    }
    for (std::size_t i = 1; i < s; ++i) {
      std::size_t a = order[i];
      std::size_t b = order[uniform_below(rng, i)];
      linked[a][b] = linked[b][a] = 1;
    }
    for (std::size_t a = 0; a < s; ++a) {
      for (std::size_t b = a + 1; b < s; ++b) {
        if (!linked[a][b] && bernoulli(rng, cfg.intra_cluster_density)) {
          linked[a][b] = linked[b][a] = 1;
        }
      }
    }
    for (std::size_t a = 0; a < s; ++a) {
      for (std::size_t b = a + 1; b < s; ++b) {
        if (linked[a][b]) edges.emplace_back(members[a], members[b]);
      }
    }
  }

  ScenarioTruth truth;
  RoleTable roles;
  for (std::size_t a = 0; a < cfg.animators; ++a) {
    NodeId id = "animator" + Padded(a, cfg.animators);
    nodes.insert(id);
    truth.planted_animators.insert(id);
    roles.assign(id, Role::kSeededDeveloper);
    for (const auto& members : clusters) {
      edges.emplace_back(id, members[uniform_below(rng, members.size())]);
    }
  }
  for (const auto& members : clusters) {
    for (const auto& id : members) roles.assign(id, Role::kParticipant);
  }

  static constexpr InteractionKind kKinds[] = {InteractionKind::kWave, InteractionKind::kLike,
                                               InteractionKind::kComment, InteractionKind::kTag};
  for (const auto& [a, b] : edges) {
    InteractionRecord r;
    const bool flip = uniform_below(rng, 2) == 1;
    r.source = flip ? b : a;
    r.target = flip ? a : b;
    r.kind = kKinds[uniform_below(rng, std::size(kKinds))];
    truth.interactions.push_back(std::move(r));
  }

  truth.dataset = make_dataset(build_graph(nodes, edges), roles,
                               "synthetic animator scenario (seed " +
                                   std::to_string(cfg.rng_seed) + ")");
  return truth;
}

Graph generate_random_graph(std::size_t n, double p, std::uint64_t rng_seed) {
  if (n < 2) throw Error(ErrorCode::kInvalidConfig, "random graph needs n >= 2");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kInvalidConfig, "edge probability must be in [0, 1]");
  }
  Rng rng(substream_seed(rng_seed, 1));
  std::vector<NodeId> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("v" + Padded(i, std::max<std::size_t>(n, 10)));
  EdgeList edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (bernoulli(rng, p)) edges.emplace_back(ids[a], ids[b]);
    }
  }
  return build_graph(NodeSet(ids.begin(), ids.end()), edges);
}

void write_truth_json(std::ostream& out, const ScenarioConfig& cfg, const ScenarioTruth& truth) {
  nlohmann::ordered_json j;
  j["planted_animators"] = std::vector<NodeId>(truth.planted_animators.begin(),
                                               truth.planted_animators.end());
  j["config"] = {{"clusters", cfg.clusters},
                 {"cluster_size", cfg.cluster_size},
                 {"animators", cfg.animators},
                 {"intra_cluster_density", cfg.intra_cluster_density},
                 {"rng_seed", cfg.rng_seed}};
  j["nodes"] = truth.dataset.graph.node_count();
  j["edges"] = truth.dataset.graph.edge_count();
  out << j.dump(2) << '\n';
}

}  // namespace kpkit
