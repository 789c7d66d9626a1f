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

#include "kpkit/keyplayer.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <optional>
#include <thread>

#include "kpkit/error.hpp"
#include "kpkit/random.hpp"

namespace kpkit {
namespace {

std::vector<NodeIndex> ToIndices(const Graph& g, const NodeSet& s) {
  std::vector<NodeIndex> out;
  out.reserve(s.size());
  for (const auto& id : s) out.push_back(g.require_index(id));
  return out;
}

std::vector<NodeId> ToIds(const Graph& g, std::vector<NodeIndex> idx) {
  std::sort(idx.begin(), idx.end());
  std::vector<NodeId> out;
  out.reserve(idx.size());
  for (NodeIndex i : idx) out.push_back(g.node(i));
  return out;
}

Ratio Evaluate(const Graph& g, KpMethod method, std::span<const NodeIndex> s,
               std::size_t m) {
  return method == KpMethod::kNeg ? fit_neg_exact(g, s) : fit_pos_exact(g, s, m);
}

struct RestartOutcome {
  std::vector<NodeIndex> chosen;  // sorted
  Ratio fit;
  std::size_t sweeps = 0;
};

RestartOutcome RunRestart(const Graph& g, KpMethod method, const KpConfig& cfg,
                          std::size_t restart) {
  const std::size_t n = g.node_count();
  Rng rng(substream_seed(cfg.rng_seed, restart));

  // Partial Fisher-Yates: the first k slots become a uniform k-subset.
  std::vector<NodeIndex> pool(n);
  std::iota(pool.begin(), pool.end(), NodeIndex{0});
  for (std::size_t i = 0; i < cfg.k; ++i) {
    std::size_t j = i + uniform_below(rng, n - i);
    std::swap(pool[i], pool[j]);
  }
  std::vector<NodeIndex> current(pool.begin(), pool.begin() + cfg.k);
  std::sort(current.begin(), current.end());
  std::vector<std::uint8_t> in_set(n, 0);
  for (NodeIndex u : current) in_set[u] = 1;

  RestartOutcome out;
  Ratio current_fit = Evaluate(g, method, current, cfg.reach_distance_m);
  std::vector<NodeIndex> candidate;
  while (out.sweeps < cfg.max_sweeps) {
    ++out.sweeps;
    Ratio best = current_fit;
    std::optional<std::pair<std::size_t, NodeIndex>> best_swap;
    // Ascending (u, v) with strict improvement keeps the smallest tied swap.
    for (std::size_t pos = 0; pos < current.size(); ++pos) {
      for (NodeIndex v = 0; v < n; ++v) {
        if (in_set[v]) continue;
        candidate = current;
        candidate[pos] = v;
        Ratio f = Evaluate(g, method, candidate, cfg.reach_distance_m);
        if (f > best) {
          best = f;
          best_swap = {pos, v};
        }
      }
    }
    if (!best_swap) break;
    in_set[current[best_swap->first]] = 0;
    in_set[best_swap->second] = 1;
    current[best_swap->first] = best_swap->second;
    std::sort(current.begin(), current.end());
    current_fit = best;
  }
  out.chosen = std::move(current);
  out.fit = current_fit;
  return out;
}

bool Better(const RestartOutcome& a, const RestartOutcome& b) {
  if (a.fit != b.fit) return a.fit > b.fit;
  return a.chosen < b.chosen;
}

std::uint64_t Binomial(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Wide c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
    if (c > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(c);
}

}  // namespace

std::string_view KpMethodName(KpMethod method) {
  return method == KpMethod::kNeg ? "KPP-NEG" : "KPP-POS";
}

KpMethod ParseKpMethod(std::string_view name) {
  if (name == "KPP-NEG" || name == "neg") return KpMethod::kNeg;
  if (name == "KPP-POS" || name == "pos") return KpMethod::kPos;
  throw Error(ErrorCode::kInvalidConfig, "unknown key player method '" + std::string(name) + "'");
}

void validate_config(const KpConfig& cfg, const Graph& g) {
  if (cfg.k < 1) throw Error(ErrorCode::kInvalidConfig, "k must be ≥ 1");
  if (cfg.k >= g.node_count()) {
    throw Error(ErrorCode::kInvalidConfig,
                "k must be smaller than the node count (k=" + std::to_string(cfg.k) +
                    ", n=" + std::to_string(g.node_count()) + ")");
  }
  if (cfg.restarts < 1) throw Error(ErrorCode::kInvalidConfig, "restarts must be >= 1");
  if (cfg.reach_distance_m < 1) {
    throw Error(ErrorCode::kInvalidConfig, "reach distance m must be >= 1");
  }
  if (cfg.max_sweeps < 1) throw Error(ErrorCode::kInvalidConfig, "max_sweeps must be >= 1");
}

Ratio fit_neg_exact(const Graph& g, std::span<const NodeIndex> s) {
  std::vector<std::uint8_t> removed(g.node_count(), 0);
  std::size_t distinct = 0;
  for (NodeIndex i : s) {
    if (!removed[i]) ++distinct;
    removed[i] = 1;
  }
  if (g.node_count() - distinct < 2) {
    throw Error(ErrorCode::kDegenerateResidual,
                "removing " + std::to_string(distinct) + " of " +
                    std::to_string(g.node_count()) + " nodes leaves fewer than 2");
  }
  return fragmentation_from_sizes(component_sizes(g, removed));
}

double fit_neg(const Graph& g, const NodeSet& s) {
  return fit_neg_exact(g, ToIndices(g, s)).value();
}

Ratio fit_pos_exact(const Graph& g, std::span<const NodeIndex> s, std::size_t m) {
  if (s.empty()) throw Error(ErrorCode::kEmptySet, "reach needs a nonempty set");
  auto dist = bfs_distances_by_index(g, s);
  std::uint64_t reached = 0;
  for (const auto& d : dist) {
    if (d && *d <= m) ++reached;
  }
  return Ratio{reached, g.node_count()};
}

double fit_pos(const Graph& g, const NodeSet& s, std::size_t m) {
  return fit_pos_exact(g, ToIndices(g, s), m).value();
}

double fit(const Graph& g, KpMethod method, const NodeSet& s, std::size_t m) {
  return method == KpMethod::kNeg ? fit_neg(g, s) : fit_pos(g, s, m);
}

KeyPlayerResult select_key_players(const Graph& g, KpMethod method, const KpConfig& cfg) {
  validate_config(cfg, g);
  if (method == KpMethod::kNeg && g.node_count() - cfg.k < 2) {
    throw Error(ErrorCode::kDegenerateResidual,
                "KPP-NEG with k=" + std::to_string(cfg.k) + " on " +
                    std::to_string(g.node_count()) + " nodes leaves fewer than 2");
  }

  std::vector<RestartOutcome> outcomes(cfg.restarts);
  std::size_t threads = cfg.threads == 0 ? std::thread::hardware_concurrency() : cfg.threads;
  threads = std::clamp<std::size_t>(threads, 1, cfg.restarts);
  if (threads == 1) {
    for (std::size_t r = 0; r < cfg.restarts; ++r) outcomes[r] = RunRestart(g, method, cfg, r);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    for (std::size_t t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        for (std::size_t r = next++; r < cfg.restarts; r = next++) {
          outcomes[r] = RunRestart(g, method, cfg, r);
        }
      });
    }
  }

  const RestartOutcome* best = &outcomes.front();
  for (const auto& o : outcomes) {
    if (Better(o, *best)) best = &o;
  }

  KeyPlayerResult result;
  result.method = method;
  result.chosen = ToIds(g, best->chosen);
  result.fit = best->fit.value();
  result.restarts_run = cfg.restarts;
  for (const auto& o : outcomes) result.sweeps_per_restart.push_back(o.sweeps);
  result.seed_used = cfg.rng_seed;
  return result;
}

std::pair<std::vector<NodeId>, double> brute_force_key_players(const Graph& g,
                                                               KpMethod method,
                                                               std::size_t k,
                                                               std::size_t m) {
  const std::size_t n = g.node_count();
  if (k > n) {
    throw Error(ErrorCode::kInvalidConfig, "k exceeds the node count");
  }
  const std::uint64_t combos = Binomial(n, k, kBruteForceLimit);
  if (combos > kBruteForceLimit) {
    throw Error(ErrorCode::kTooLarge, "C(" + std::to_string(n) + ", " + std::to_string(k) +
                                          ") exceeds the exhaustive-search limit");
  }
  std::vector<NodeIndex> combo(k);
  std::iota(combo.begin(), combo.end(), NodeIndex{0});
  std::optional<std::vector<NodeIndex>> best_set;
  Ratio best_fit;
  // Lexicographic enumeration; strict improvement keeps the smallest tie.
  while (true) {
    Ratio f = Evaluate(g, method, combo, m);
    if (!best_set || f > best_fit) {
      best_fit = f;
      best_set = combo;
    }
    std::size_t i = k;
    while (i > 0 && combo[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++combo[i - 1];
    for (std::size_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
  }
  return {ToIds(g, *best_set), best_fit.value()};
}

FragmentationDelta removal_impact(const Graph& g, const NodeSet& s) {
  FragmentationDelta d;
  d.initial = fragmentation(g);
  d.final = fit_neg(g, s);
  d.change = d.final - d.initial;
  return d;
}

}  // namespace kpkit
