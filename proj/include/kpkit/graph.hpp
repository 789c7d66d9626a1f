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

#ifndef KPKIT_GRAPH_HPP_
#define KPKIT_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kpkit {

// Participant handle. Compared by exact bytes, case-sensitive.
using NodeId = std::string;
using NodeSet = std::set<NodeId>;
using NodeIndex = std::uint32_t;
using EdgeList = std::vector<std::pair<NodeId, NodeId>>;

__extension__ using Wide = unsigned __int128;

// Exact non-negative fraction num/den, den > 0. Not normalized; comparisons
// cross-multiply.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Ratio& a, const Ratio& b) {
    return static_cast<Wide>(a.num) * b.den ==
           static_cast<Wide>(b.num) * a.den;
  }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    return static_cast<Wide>(a.num) * b.den <=>
           static_cast<Wide>(b.num) * a.den;
  }
};

// Immutable simple undirected graph. Nodes are stored sorted by NodeId, so
// NodeIndex order equals NodeId order; adjacency lists are sorted.
class Graph {
 public:
  Graph() = default;

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  const std::vector<NodeId>& nodes() const { return nodes_; }
  const NodeId& node(NodeIndex i) const { return nodes_[i]; }
  std::span<const NodeIndex> neighbors(NodeIndex i) const { return adjacency_[i]; }
  std::size_t degree(NodeIndex i) const { return adjacency_[i].size(); }

  bool contains(std::string_view id) const { return index_of(id).has_value(); }
  std::optional<NodeIndex> index_of(std::string_view id) const;
  // Throws Error(kUnknownNode).
  NodeIndex require_index(std::string_view id) const;

  bool has_edge(std::string_view a, std::string_view b) const;

  // Each edge once as (smaller, larger), sorted.
  EdgeList edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph build_graph(const NodeSet& nodes, const EdgeList& edges);
  friend Graph remove_nodes(const Graph& g, const NodeSet& s);

  std::vector<NodeId> nodes_;
  std::vector<std::vector<NodeIndex>> adjacency_;
  std::size_t edge_count_ = 0;
};

struct ComponentPartition {
  // Components ordered by smallest member; members sorted.
  std::vector<std::vector<NodeId>> components;
  std::vector<std::size_t> sizes;
};

// Duplicate and reversed edges collapse. Throws kUnknownEndpoint, kSelfLoop,
// kEmptyNodeId.
Graph build_graph(const NodeSet& nodes, const EdgeList& edges);

ComponentPartition connected_components(const Graph& g);

// Sizes of the connected components of g with the nodes flagged in `removed`
// deleted. `removed` is empty or has one entry per node.
std::vector<std::size_t> component_sizes(const Graph& g,
                                         std::span<const std::uint8_t> removed = {});

// Unordered unreachable pairs over all unordered pairs, from component sizes.
// Requires sum(sizes) >= 2.
Ratio fragmentation_from_sizes(std::span<const std::size_t> sizes);

// Throws kDegenerateGraph when n < 2.
Ratio fragmentation_exact(const Graph& g);
double fragmentation(const Graph& g);

std::map<NodeId, std::size_t> degree_centrality(const Graph& g);
// Descending degree, ascending NodeId on ties.
std::vector<NodeId> degree_ranking(const Graph& g);

// Throws kDegenerateGraph when n < 2.
double graph_density(const Graph& g);

// Hop distance from the nearest source; nullopt marks unreachable.
using Distance = std::optional<std::size_t>;
std::map<NodeId, Distance> bfs_distances(const Graph& g, const NodeSet& sources);

// Index-level multi-source BFS, ignoring nodes flagged in `removed`.
std::vector<Distance> bfs_distances_by_index(const Graph& g,
                                             std::span<const NodeIndex> sources,
                                             std::span<const std::uint8_t> removed = {});

// Residual graph on nodes \ s. Throws kUnknownNode.
Graph remove_nodes(const Graph& g, const NodeSet& s);

}  // namespace kpkit

#endif  // KPKIT_GRAPH_HPP_
