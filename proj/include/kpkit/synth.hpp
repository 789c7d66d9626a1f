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

#ifndef KPKIT_SYNTH_HPP_
#define KPKIT_SYNTH_HPP_

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <vector>

#include "kpkit/graph.hpp"
#include "kpkit/ingest.hpp"

namespace kpkit {

struct ScenarioConfig {
  std::size_t clusters = 5;
  std::size_t cluster_size = 6;
  std::size_t animators = 2;
  double intra_cluster_density = 0.8;
  std::uint64_t rng_seed = 0;
};

void validate_scenario(const ScenarioConfig& cfg);  // throws kInvalidConfig

struct ScenarioTruth {
  Dataset dataset;
  NodeSet planted_animators;
  // The interaction log the graph was built from, in ingest's CSV format.
  std::vector<InteractionRecord> interactions;
};

// Disjoint clusters, each a random spanning tree plus Bernoulli(density)
// extra edges, bridged only by animator nodes that attach to exactly one
// uniformly chosen member of every cluster. Cluster members are named
// "g<cluster>_<member>" and animators "animator<i>", zero-padded so NodeId
// order follows numeric order.
ScenarioTruth generate_animator_scenario(const ScenarioConfig& cfg);

// Erdos-Renyi G(n, p) on zero-padded nodes "v0", "v1", .... Throws kInvalidConfig unless
// n >= 2 and p in [0, 1].
Graph generate_random_graph(std::size_t n, double p, std::uint64_t rng_seed);

// truth.json payload: planted animators plus the generating config.
void write_truth_json(std::ostream& out, const ScenarioConfig& cfg, const ScenarioTruth& truth);

}  // namespace kpkit

#endif  // KPKIT_SYNTH_HPP_
