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

#ifndef KPKIT_KEYPLAYER_HPP_
#define KPKIT_KEYPLAYER_HPP_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "kpkit/graph.hpp"

namespace kpkit {

// NEG: the set whose removal most fragments the residual network.
// POS: the set reaching the largest share of nodes within m hops.
enum class KpMethod { kNeg, kPos };

std::string_view KpMethodName(KpMethod method);  // "KPP-NEG" / "KPP-POS"
KpMethod ParseKpMethod(std::string_view name);   // throws kInvalidConfig

struct KpConfig {
  std::size_t k = 5;
  std::size_t restarts = 20;
  std::uint64_t rng_seed = 0;
  std::size_t reach_distance_m = 1;
  std::size_t max_sweeps = 1000;
  // Restart parallelism cap; 0 selects hardware concurrency. Results do not
  // depend on this value.
  std::size_t threads = 1;

  friend bool operator==(const KpConfig&, const KpConfig&) = default;
};

// Throws kInvalidConfig unless 1 <= k < n, restarts >= 1, m >= 1,
// max_sweeps >= 1.
void validate_config(const KpConfig& cfg, const Graph& g);

struct KeyPlayerResult {
  KpMethod method = KpMethod::kNeg;
  std::vector<NodeId> chosen;  // sorted
  double fit = 0.0;
  std::size_t restarts_run = 0;
  std::vector<std::size_t> sweeps_per_restart;
  std::uint64_t seed_used = 0;

  friend bool operator==(const KeyPlayerResult&, const KeyPlayerResult&) = default;
};

struct FragmentationDelta {
  double initial = 0.0;
  double final = 0.0;
  double change = 0.0;
};

// Fragmentation of g with s removed. Throws kUnknownNode, and
// kDegenerateResidual when fewer than 2 nodes remain.
double fit_neg(const Graph& g, const NodeSet& s);
Ratio fit_neg_exact(const Graph& g, std::span<const NodeIndex> s);

// Share of all nodes within m hops of s (members at distance 0).
// Throws kUnknownNode, kEmptySet.
double fit_pos(const Graph& g, const NodeSet& s, std::size_t m);
Ratio fit_pos_exact(const Graph& g, std::span<const NodeIndex> s, std::size_t m);

double fit(const Graph& g, KpMethod method, const NodeSet& s, std::size_t m);

// Greedy best-improvement single-swap ascent from `cfg.restarts` random
// starts. Each restart draws from its own substream of cfg.rng_seed, and the
// winner is the highest fit with ties going to the lexicographically smallest
// set, so the result is independent of cfg.threads.
KeyPlayerResult select_key_players(const Graph& g, KpMethod method, const KpConfig& cfg);

// Exhaustive search over all k-subsets. Throws kTooLarge when C(n, k) > 1e6.
std::pair<std::vector<NodeId>, double> brute_force_key_players(const Graph& g,
                                                               KpMethod method,
                                                               std::size_t k,
                                                               std::size_t m);

inline constexpr std::uint64_t kBruteForceLimit = 1'000'000;

FragmentationDelta removal_impact(const Graph& g, const NodeSet& s);

}  // namespace kpkit

#endif  // KPKIT_KEYPLAYER_HPP_
