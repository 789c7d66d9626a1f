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

#include "kpkit/ingest.hpp"

#include <algorithm>
#include <unordered_map>

#include "json.hpp"
#include "kpkit/csv.hpp"
#include "kpkit/error.hpp"

namespace kpkit {
namespace {

using nlohmann::json;

// Calls `fn(object, line)` for each non-blank JSONL line.
template <typename Fn>
void ForEachJsonLine(std::istream& in, Fn&& fn) {
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.find_first_not_of(" \t") == std::string::npos) continue;
    json object;
    try {
      object = json::parse(text);
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::kParseError, std::string("invalid JSON: ") + e.what(), line);
    }
    if (!object.is_object()) {
      throw Error(ErrorCode::kParseError, "expected a JSON object", line);
    }
    fn(object, line);
  }
}

std::string RequireString(const json& object, const char* key, std::size_t line) {
  auto it = object.find(key);
  if (it == object.end() || !it->is_string()) {
    throw Error(ErrorCode::kParseError, std::string("missing string field '") + key + "'", line);
  }
  return it->get<std::string>();
}

std::optional<std::string> OptionalString(const json& object, const char* key,
                                          std::size_t line) {
  auto it = object.find(key);
  if (it == object.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) {
    throw Error(ErrorCode::kParseError, std::string("field '") + key + "' must be a string", line);
  }
  auto value = it->get<std::string>();
  if (value.empty()) return std::nullopt;
  return value;
}

void CheckFieldCount(const csv::Record& r, std::size_t expected) {
  if (r.fields.size() != expected) {
    throw Error(ErrorCode::kParseError,
                "expected " + std::to_string(expected) + " fields, found " +
                    std::to_string(r.fields.size()),
                r.line);
  }
}

// Accumulates photo rows, merging by photo_id.
class PhotoCollector {
 public:
  void add(const std::string& photo_id, const std::vector<std::string>& participants,
           std::optional<std::string> timestamp, std::size_t line) {
    if (photo_id.empty()) throw Error(ErrorCode::kParseError, "empty photo_id", line);
    if (participants.empty()) {
      throw Error(ErrorCode::kEmptyParticipants, "photo '" + photo_id + "' has no participants",
                  line);
    }
    auto [it, inserted] = index_.try_emplace(photo_id, photos_.size());
    if (inserted) photos_.push_back(PhotoRecord{photo_id, {}, std::nullopt});
    PhotoRecord& photo = photos_[it->second];
    if (!photo.timestamp) photo.timestamp = std::move(timestamp);
    for (const auto& p : participants) {
      if (p.empty()) {
        throw Error(ErrorCode::kEmptyParticipants,
                    "photo '" + photo_id + "' has an empty participant", line);
      }
      if (std::find(photo.participants.begin(), photo.participants.end(), p) ==
          photo.participants.end()) {
        photo.participants.push_back(p);
      }
    }
  }

  std::vector<PhotoRecord> take() { return std::move(photos_); }

 private:
  std::vector<PhotoRecord> photos_;
  std::unordered_map<std::string, std::size_t> index_;
};

InteractionRecord MakeInteraction(std::string source, std::string target, std::string_view kind,
                                  std::optional<std::string> timestamp, std::size_t line) {
  if (source.empty() || target.empty()) {
    throw Error(ErrorCode::kParseError, "empty source or target", line);
  }
  if (source == target) {
    throw Error(ErrorCode::kSelfInteraction, "'" + source + "' interacts with itself", line);
  }
  InteractionRecord r;
  try {
    r.kind = ParseInteractionKind(kind);
  } catch (const Error& e) {
    throw Error(ErrorCode::kUnknownKind, e.what(), line);
  }
  r.source = std::move(source);
  r.target = std::move(target);
  r.timestamp = std::move(timestamp);
  return r;
}

}  // namespace

LogFormat ParseLogFormat(std::string_view name) {
  if (name == "csv") return LogFormat::kCsv;
  if (name == "jsonl") return LogFormat::kJsonl;
  throw Error(ErrorCode::kInvalidConfig, "unknown log format '" + std::string(name) + "'");
}

std::string_view InteractionKindName(InteractionKind kind) {
  switch (kind) {
    case InteractionKind::kWave: return "wave";
    case InteractionKind::kLike: return "like";
    case InteractionKind::kComment: return "comment";
    case InteractionKind::kTag: return "tag";
    case InteractionKind::kRsvpOther: return "rsvp_other";
  }
  return "wave";
}

InteractionKind ParseInteractionKind(std::string_view name) {
  for (auto kind : {InteractionKind::kWave, InteractionKind::kLike, InteractionKind::kComment,
                    InteractionKind::kTag, InteractionKind::kRsvpOther}) {
    if (InteractionKindName(kind) == name) return kind;
  }
  throw Error(ErrorCode::kUnknownKind, "unknown interaction kind '" + std::string(name) + "'");
}

std::string_view RoleName(Role role) {
  return role == Role::kSeededDeveloper ? "seeded_developer" : "participant";
}

Role ParseRole(std::string_view name) {
  if (name == "seeded_developer") return Role::kSeededDeveloper;
  if (name == "participant") return Role::kParticipant;
  throw Error(ErrorCode::kUnknownRole, "unknown role '" + std::string(name) + "'");
}

void RoleTable::assign(const NodeId& id, Role role) {
  if (id.empty()) throw Error(ErrorCode::kEmptyNodeId, "role entry with empty node id");
  auto [it, inserted] = roles_.try_emplace(id, role);
  if (!inserted && it->second != role) {
    throw Error(ErrorCode::kDuplicateNode, "conflicting roles for '" + id + "'");
  }
}

Role RoleTable::role_of(std::string_view id) const {
  auto it = roles_.find(id);
  return it == roles_.end() ? Role::kParticipant : it->second;
}

std::vector<PhotoRecord> parse_photo_log(std::istream& in, LogFormat format) {
  PhotoCollector photos;
  if (format == LogFormat::kCsv) {
    csv::Reader reader(in);
    csv::expect_header(reader, {"photo_id", "participant"});
    while (auto r = reader.next()) {
      CheckFieldCount(*r, 2);
      std::vector<std::string> one;
      if (!r->fields[1].empty()) one.push_back(r->fields[1]);
      photos.add(r->fields[0], one, std::nullopt, r->line);
    }
  } else {
    ForEachJsonLine(in, [&](const json& object, std::size_t line) {
      auto photo_id = RequireString(object, "photo_id", line);
      auto it = object.find("participants");
      if (it == object.end() || !it->is_array()) {
        throw Error(ErrorCode::kParseError, "missing array field 'participants'", line);
      }
      std::vector<std::string> participants;
      for (const auto& p : *it) {
        if (!p.is_string()) {
          throw Error(ErrorCode::kParseError, "participants must be strings", line);
        }
        participants.push_back(p.get<std::string>());
      }
      photos.add(photo_id, participants, OptionalString(object, "timestamp", line), line);
    });
  }
  return photos.take();
}

std::vector<InteractionRecord> parse_interaction_log(std::istream& in, LogFormat format) {
  std::vector<InteractionRecord> out;
  if (format == LogFormat::kCsv) {
    csv::Reader reader(in);
    csv::expect_header(reader, {"source", "target", "kind", "timestamp"});
    while (auto r = reader.next()) {
      CheckFieldCount(*r, 4);
      auto& f = r->fields;
      std::optional<std::string> ts;
      if (!f[3].empty()) ts = f[3];
      out.push_back(MakeInteraction(f[0], f[1], f[2], std::move(ts), r->line));
    }
  } else {
    ForEachJsonLine(in, [&](const json& object, std::size_t line) {
      out.push_back(MakeInteraction(RequireString(object, "source", line),
                                    RequireString(object, "target", line),
                                    RequireString(object, "kind", line),
                                    OptionalString(object, "timestamp", line), line));
    });
  }
  return out;
}

RoleTable parse_roles(std::istream& in) {
  RoleTable table;
  csv::Reader reader(in);
  csv::expect_header(reader, {"node_id", "role"});
  while (auto r = reader.next()) {
    CheckFieldCount(*r, 2);
    if (r->fields[0].empty()) throw Error(ErrorCode::kParseError, "empty node_id", r->line);
    Role role;
    try {
      role = ParseRole(r->fields[1]);
    } catch (const Error& e) {
      throw Error(ErrorCode::kUnknownRole, e.what(), r->line);
    }
    try {
      table.assign(r->fields[0], role);
    } catch (const Error& e) {
      throw Error(e.code(), e.what(), r->line);
    }
  }
  return table;
}

Graph co_appearance_network(const std::vector<PhotoRecord>& photos) {
  NodeSet nodes;
  EdgeList edges;
  for (const auto& photo : photos) {
    const auto& p = photo.participants;
    nodes.insert(p.begin(), p.end());
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        if (p[i] != p[j]) edges.emplace_back(p[i], p[j]);
      }
    }
  }
  return build_graph(nodes, edges);
}

Graph interaction_network(const std::vector<InteractionRecord>& records) {
  NodeSet nodes;
  EdgeList edges;
  for (const auto& r : records) {
    nodes.insert(r.source);
    nodes.insert(r.target);
    edges.emplace_back(r.source, r.target);
  }
  return build_graph(nodes, edges);
}

Graph merge_graphs(const Graph& a, const Graph& b) {
  NodeSet nodes(a.nodes().begin(), a.nodes().end());
  nodes.insert(b.nodes().begin(), b.nodes().end());
  EdgeList edges = a.edges();
  auto more = b.edges();
  edges.insert(edges.end(), more.begin(), more.end());
  return build_graph(nodes, edges);
}

Dataset make_dataset(Graph graph, const RoleTable& roles, std::string provenance) {
  Dataset d;
  for (const auto& [id, role] : roles.entries()) {
    if (graph.contains(id)) d.roles.assign(id, role);
  }
  d.graph = std::move(graph);
  d.provenance = std::move(provenance);
  return d;
}

void write_photo_log_csv(std::ostream& out, const std::vector<PhotoRecord>& photos) {
  out << "photo_id,participant\n";
  for (const auto& photo : photos) {
    for (const auto& p : photo.participants) {
      out << csv::format_row({photo.photo_id, p}) << '\n';
    }
  }
}

void write_interaction_log_csv(std::ostream& out, const std::vector<InteractionRecord>& records) {
  out << "source,target,kind,timestamp\n";
  for (const auto& r : records) {
    out << csv::format_row({r.source, r.target, std::string(InteractionKindName(r.kind)),
                            r.timestamp.value_or("")})
        << '\n';
  }
}

void write_roles_csv(std::ostream& out, const RoleTable& roles) {
  out << "node_id,role\n";
  for (const auto& [id, role] : roles.entries()) {
    out << csv::format_row({id, std::string(RoleName(role))}) << '\n';
  }
}

}  // namespace kpkit
