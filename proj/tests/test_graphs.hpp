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

// Small named graphs shared by the test suites.
#ifndef KPKIT_TESTS_TEST_GRAPHS_HPP_
#define KPKIT_TESTS_TEST_GRAPHS_HPP_

#include <string>
#include <vector>

#include "kpkit/graph.hpp"

namespace kpkit::testing {

inline Graph Path(const std::vector<NodeId>& ids) {
  EdgeList edges;
  for (std::size_t i = 1; i < ids.size(); ++i) edges.emplace_back(ids[i - 1], ids[i]);
  return build_graph(NodeSet(ids.begin(), ids.end()), edges);
}

// Center plus leaves "l0".."l<n-1>".
inline Graph Star(const NodeId& center, std::size_t leaves) {
  NodeSet nodes{center};
  EdgeList edges;
  for (std::size_t i = 0; i < leaves; ++i) {
    NodeId leaf = "l" + std::to_string(i);
    nodes.insert(leaf);
    edges.emplace_back(center, leaf);
  }
  return build_graph(nodes, edges);
}

inline Graph Complete(std::size_t n) {
  NodeSet nodes;
  EdgeList edges;
  for (std::size_t i = 0; i < n; ++i) {
    nodes.insert("k" + std::to_string(i));
    for (std::size_t j = 0; j < i; ++j) {
      edges.emplace_back("k" + std::to_string(j), "k" + std::to_string(i));
    }
  }
  return build_graph(nodes, edges);
}

// Triangles {a1,a2,a3} and {b1,b2,b3} joined through x via x-a1 and x-b1.
inline Graph Barbell() {
  return build_graph({"a1", "a2", "a3", "b1", "b2", "b3", "x"},
                     {{"a1", "a2"}, {"a2", "a3"}, {"a1", "a3"},
                      {"b1", "b2"}, {"b2", "b3"}, {"b1", "b3"},
                      {"x", "a1"}, {"x", "b1"}});
}

}  // namespace kpkit::testing

#endif  // KPKIT_TESTS_TEST_GRAPHS_HPP_
