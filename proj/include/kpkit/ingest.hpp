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

#ifndef KPKIT_INGEST_HPP_
#define KPKIT_INGEST_HPP_

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "kpkit/graph.hpp"

namespace kpkit {

enum class LogFormat { kCsv, kJsonl };
LogFormat ParseLogFormat(std::string_view name);  // "csv" | "jsonl"

struct PhotoRecord {
  std::string photo_id;
  std::vector<NodeId> participants;  // first-appearance order, no duplicates
  std::optional<std::string> timestamp;

  friend bool operator==(const PhotoRecord&, const PhotoRecord&) = default;
};

enum class InteractionKind { kWave, kLike, kComment, kTag, kRsvpOther };
std::string_view InteractionKindName(InteractionKind kind);
InteractionKind ParseInteractionKind(std::string_view name);  // throws kUnknownKind

struct InteractionRecord {
  NodeId source;
  NodeId target;
  InteractionKind kind = InteractionKind::kWave;
  std::optional<std::string> timestamp;

  friend bool operator==(const InteractionRecord&, const InteractionRecord&) = default;
};

enum class Role { kSeededDeveloper, kParticipant };
std::string_view RoleName(Role role);
Role ParseRole(std::string_view name);  // throws kUnknownRole

class RoleTable {
 public:
  RoleTable() = default;

  // Throws kDuplicateNode if `id` already maps to a different role.
  void assign(const NodeId& id, Role role);
  // Unlisted nodes are participants.
  Role role_of(std::string_view id) const;
  bool is_developer(std::string_view id) const { return role_of(id) == Role::kSeededDeveloper; }

  const std::map<NodeId, Role, std::less<>>& entries() const { return roles_; }
  std::size_t size() const { return roles_.size(); }

  friend bool operator==(const RoleTable&, const RoleTable&) = default;

 private:
  std::map<NodeId, Role, std::less<>> roles_;
};

struct Dataset {
  Graph graph;
  RoleTable roles;  // restricted to graph nodes
  std::string provenance;
};

// CSV rows sharing a photo_id merge into one record, in first-appearance
// order. Throws kParseError (with line), kEmptyParticipants.
std::vector<PhotoRecord> parse_photo_log(std::istream& in, LogFormat format);

// Throws kParseError, kSelfInteraction, kUnknownKind (all with line).
std::vector<InteractionRecord> parse_interaction_log(std::istream& in, LogFormat format);

// CSV with header node_id,role. Throws kParseError, kUnknownRole,
// kDuplicateNode.
RoleTable parse_roles(std::istream& in);

// One clique per photo; repeated co-appearances collapse.
Graph co_appearance_network(const std::vector<PhotoRecord>& photos);

// Directions, kinds and multiplicity are discarded.
Graph interaction_network(const std::vector<InteractionRecord>& records);

// Union of nodes and edges.
Graph merge_graphs(const Graph& a, const Graph& b);

// Drops role entries for nodes absent from the graph.
Dataset make_dataset(Graph graph, const RoleTable& roles, std::string provenance);

// Canonical CSV writers; output re-parses to equal records.
void write_photo_log_csv(std::ostream& out, const std::vector<PhotoRecord>& photos);
void write_interaction_log_csv(std::ostream& out, const std::vector<InteractionRecord>& records);
void write_roles_csv(std::ostream& out, const RoleTable& roles);

}  // namespace kpkit

#endif  // KPKIT_INGEST_HPP_
