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

#include "kpkit/graph.hpp"

#include <algorithm>
#include <deque>

#include "kpkit/error.hpp"

namespace kpkit {

std::optional<NodeIndex> Graph::index_of(std::string_view id) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id,
                             [](const NodeId& a, std::string_view b) { return a < b; });
  if (it == nodes_.end() || *it != id) return std::nullopt;
  return static_cast<NodeIndex>(it - nodes_.begin());
}

NodeIndex Graph::require_index(std::string_view id) const {
  auto index = index_of(id);
  if (!index) {
    throw Error(ErrorCode::kUnknownNode, "unknown node '" + std::string(id) + "'");
  }
  return *index;
}

bool Graph::has_edge(std::string_view a, std::string_view b) const {
  auto ia = index_of(a);
  auto ib = index_of(b);
  if (!ia || !ib) return false;
  const auto& adj = adjacency_[*ia];
  return std::binary_search(adj.begin(), adj.end(), *ib);
}

EdgeList Graph::edges() const {
  EdgeList out;
  out.reserve(edge_count_);
  for (NodeIndex u = 0; u < nodes_.size(); ++u) {
    for (NodeIndex v : adjacency_[u]) {
      if (u < v) out.emplace_back(nodes_[u], nodes_[v]);
    }
  }
  return out;
}

Graph build_graph(const NodeSet& nodes, const EdgeList& edges) {
  Graph g;
  g.nodes_.assign(nodes.begin(), nodes.end());
  if (!g.nodes_.empty() && g.nodes_.front().empty()) {
    throw Error(ErrorCode::kEmptyNodeId, "node identifiers must be non-empty");
  }
  g.adjacency_.resize(g.nodes_.size());
  for (const auto& [a, b] : edges) {
    auto ia = g.index_of(a);
    auto ib = g.index_of(b);
    if (!ia || !ib) {
      throw Error(ErrorCode::kUnknownEndpoint,
                  "edge (" + a + ", " + b + ") references '" + (ia ? b : a) +
                      "', which is not a node");
    }
    if (*ia == *ib) {
      throw Error(ErrorCode::kSelfLoop, "self-loop on '" + a + "'");
    }
    g.adjacency_[*ia].push_back(*ib);
    g.adjacency_[*ib].push_back(*ia);
  }
  std::size_t endpoints = 0;
  for (auto& adj : g.adjacency_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    endpoints += adj.size();
  }
  g.edge_count_ = endpoints / 2;
  return g;
}

std::vector<std::size_t> component_sizes(const Graph& g,
                                         std::span<const std::uint8_t> removed) {
  const std::size_t n = g.node_count();
  std::vector<std::uint8_t> seen(n, 0);
  if (!removed.empty()) std::copy(removed.begin(), removed.end(), seen.begin());
  std::vector<std::size_t> sizes;
  std::vector<NodeIndex> stack;
  for (NodeIndex start = 0; start < n; ++start) {
    if (seen[start]) continue;
    seen[start] = 1;
    stack.push_back(start);
    std::size_t size = 0;
    while (!stack.empty()) {
      NodeIndex u = stack.back();
      stack.pop_back();
      ++size;
      for (NodeIndex v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    sizes.push_back(size);
  }
  return sizes;
}

ComponentPartition connected_components(const Graph& g) {
  const std::size_t n = g.node_count();
  ComponentPartition out;
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<NodeIndex> stack;
  for (NodeIndex start = 0; start < n; ++start) {
    if (seen[start]) continue;
    seen[start] = 1;
    stack.push_back(start);
    std::vector<NodeIndex> members;
    while (!stack.empty()) {
      NodeIndex u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (NodeIndex v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    std::sort(members.begin(), members.end());
    std::vector<NodeId> ids;
    ids.reserve(members.size());
    for (NodeIndex m : members) ids.push_back(g.node(m));
    out.sizes.push_back(ids.size());
    out.components.push_back(std::move(ids));
  }
  return out;
}

Ratio fragmentation_from_sizes(std::span<const std::size_t> sizes) {
  std::uint64_t n = 0;
  std::uint64_t reachable = 0;
  for (std::size_t s : sizes) {
    n += s;
    reachable += static_cast<std::uint64_t>(s) * (s - (s > 0 ? 1 : 0));
  }
  if (n < 2) {
    throw Error(ErrorCode::kDegenerateGraph,
                "fragmentation needs at least 2 nodes, got " + std::to_string(n));
  }
  const std::uint64_t pairs = n * (n - 1);
  return Ratio{pairs - reachable, pairs};
}

Ratio fragmentation_exact(const Graph& g) {
  return fragmentation_from_sizes(component_sizes(g));
}

double fragmentation(const Graph& g) { return fragmentation_exact(g).value(); }

std::map<NodeId, std::size_t> degree_centrality(const Graph& g) {
  std::map<NodeId, std::size_t> out;
  for (NodeIndex i = 0; i < g.node_count(); ++i) out.emplace(g.node(i), g.degree(i));
  return out;
}

std::vector<NodeId> degree_ranking(const Graph& g) {
  std::vector<NodeIndex> order(g.node_count());
  for (NodeIndex i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](NodeIndex a, NodeIndex b) {
    return g.degree(a) > g.degree(b);
  });
  std::vector<NodeId> out;
  out.reserve(order.size());
  for (NodeIndex i : order) out.push_back(g.node(i));
  return out;
}

double graph_density(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n < 2) {
    throw Error(ErrorCode::kDegenerateGraph,
                "density needs at least 2 nodes, got " + std::to_string(n));
  }
  return static_cast<double>(g.edge_count()) /
         (static_cast<double>(n) * static_cast<double>(n - 1) / 2.0);
}

std::vector<Distance> bfs_distances_by_index(const Graph& g,
                                             std::span<const NodeIndex> sources,
                                             std::span<const std::uint8_t> removed) {
  std::vector<Distance> dist(g.node_count());
  std::deque<NodeIndex> queue;
  for (NodeIndex s : sources) {
    if (!removed.empty() && removed[s]) continue;
    if (!dist[s]) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    NodeIndex u = queue.front();
    queue.pop_front();
    for (NodeIndex v : g.neighbors(u)) {
      if (dist[v] || (!removed.empty() && removed[v])) continue;
      dist[v] = *dist[u] + 1;
      queue.push_back(v);
    }
  }
  return dist;
}

std::map<NodeId, Distance> bfs_distances(const Graph& g, const NodeSet& sources) {
  if (sources.empty()) {
    throw Error(ErrorCode::kEmptySet, "bfs_distances needs at least one source");
  }
  std::vector<NodeIndex> idx;
  for (const auto& s : sources) idx.push_back(g.require_index(s));
  auto dist = bfs_distances_by_index(g, idx);
  std::map<NodeId, Distance> out;
  for (NodeIndex i = 0; i < g.node_count(); ++i) out.emplace(g.node(i), dist[i]);
  return out;
}

Graph remove_nodes(const Graph& g, const NodeSet& s) {
  std::vector<std::uint8_t> removed(g.node_count(), 0);
  for (const auto& id : s) removed[g.require_index(id)] = 1;

  constexpr NodeIndex kGone = static_cast<NodeIndex>(-1);
  std::vector<NodeIndex> remap(g.node_count(), kGone);
  Graph out;
  for (NodeIndex i = 0; i < g.node_count(); ++i) {
    if (removed[i]) continue;
    remap[i] = static_cast<NodeIndex>(out.nodes_.size());
    out.nodes_.push_back(g.node(i));
  }
  out.adjacency_.resize(out.nodes_.size());
  std::size_t endpoints = 0;
  for (NodeIndex i = 0; i < g.node_count(); ++i) {
    if (removed[i]) continue;
    auto& adj = out.adjacency_[remap[i]];
    for (NodeIndex v : g.neighbors(i)) {
      if (remap[v] != kGone) adj.push_back(remap[v]);
    }
    endpoints += adj.size();
  }
  out.edge_count_ = endpoints / 2;
  return out;
}

}  // namespace kpkit
