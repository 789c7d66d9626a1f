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
#include <random>
#include <sstream>

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "kpkit/csv.hpp"
#include "kpkit/error.hpp"

namespace kpkit {
namespace {

struct Failure {
  ErrorCode code;
  std::optional<std::size_t> line;
};

Failure FailureOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return {e.code(), e.line()};
  }
  FAIL("expected an Error");
  return {ErrorCode::kInvalidConfig, std::nullopt};
}

std::vector<PhotoRecord> Photos(const std::string& text, LogFormat f = LogFormat::kCsv) {
  std::istringstream in(text);
  return parse_photo_log(in, f);
}

std::vector<InteractionRecord> Interactions(const std::string& text,
                                            LogFormat f = LogFormat::kCsv) {
  std::istringstream in(text);
  return parse_interaction_log(in, f);
}

RoleTable Roles(const std::string& text) {
  std::istringstream in(text);
  return parse_roles(in);
}

TEST_CASE("csv reader handles RFC 4180 quoting") {
  std::istringstream in("a,\"b,c\",\"say \"\"hi\"\"\"\r\n\"multi\nline\",x,\n\nlast,,\"\"\n");
  csv::Reader reader(in);
  auto r1 = reader.next();
  REQUIRE(r1);
  CHECK(r1->fields == std::vector<std::string>{"a", "b,c", "say \"hi\""});
  CHECK(r1->line == 1);
  auto r2 = reader.next();
  REQUIRE(r2);
  CHECK(r2->fields == std::vector<std::string>{"multi\nline", "x", ""});
  CHECK(r2->line == 2);
  auto r3 = reader.next();
  REQUIRE(r3);
  CHECK(r3->fields == std::vector<std::string>{"last", "", ""});
  CHECK(r3->line == 5);
  CHECK_FALSE(reader.next());

  std::istringstream bad("ok\n\"open");
  csv::Reader bad_reader(bad);
  bad_reader.next();
  auto f = FailureOf([&] { bad_reader.next(); });
  CHECK(f.code == ErrorCode::kParseError);
  CHECK(f.line == 2);
}

TEST_CASE("parse_photo_log groups csv rows by photo") {
  auto photos = Photos("photo_id,participant\np1,alice\np1,bob\np1,carol\np1,bob\n");
  REQUIRE(photos.size() == 1);
  CHECK(photos[0].photo_id == "p1");
  CHECK(photos[0].participants == std::vector<NodeId>{"alice", "bob", "carol"});

  auto mixed = Photos("photo_id,participant\np2,x\np1,y\np2,z\n");
  REQUIRE(mixed.size() == 2);
  CHECK(mixed[0].participants == std::vector<NodeId>{"x", "z"});
}

TEST_CASE("parse_photo_log reads jsonl") {
  auto photos = Photos(
      "{\"photo_id\":\"p2\",\"participants\":[\"dan\"]}\n"
      "\n"
      "{\"photo_id\":\"p3\",\"participants\":[\"a\",\"b\",\"a\"],\"timestamp\":\"2014-07-11T10:00:00Z\"}\n",
      LogFormat::kJsonl);
  REQUIRE(photos.size() == 2);
  CHECK(photos[0] == PhotoRecord{"p2", {"dan"}, std::nullopt});
  CHECK(photos[1].participants == std::vector<NodeId>{"a", "b"});
  CHECK(photos[1].timestamp == "2014-07-11T10:00:00Z");
}

TEST_CASE("parse_photo_log errors") {
  auto empty = FailureOf([] { Photos("photo_id,participant\np1,a\np3,\"\"\n"); });
  CHECK(empty.code == ErrorCode::kEmptyParticipants);
  CHECK(empty.line == 3);

  CHECK(FailureOf([] { Photos("{\"photo_id\":\"p\",\"participants\":[]}\n", LogFormat::kJsonl); })
            .code == ErrorCode::kEmptyParticipants);
  auto bad_json = FailureOf([] { Photos("{\"photo_id\":\"p\",\"participants\":[\"a\"]}\n{oops\n",
                                        LogFormat::kJsonl); });
  CHECK(bad_json.code == ErrorCode::kParseError);
  CHECK(bad_json.line == 2);
  CHECK(FailureOf([] { Photos("photo,who\np1,a\n"); }).code == ErrorCode::kParseError);
  auto fields = FailureOf([] { Photos("photo_id,participant\np1,a,extra\n"); });
  CHECK(fields.code == ErrorCode::kParseError);
  CHECK(fields.line == 2);
}

TEST_CASE("parse_interaction_log") {
  auto records = Interactions(
      "source,target,kind,timestamp\nalice,bob,wave,2015-07-10T12:00:00Z\nbob,eve,tag,\n");
  REQUIRE(records.size() == 2);
  CHECK(records[0] ==
        InteractionRecord{"alice", "bob", InteractionKind::kWave, "2015-07-10T12:00:00Z"});
  CHECK_FALSE(records[1].timestamp.has_value());

  auto json = Interactions("{\"source\":\"bob\",\"target\":\"eve\",\"kind\":\"tag\"}\n",
                           LogFormat::kJsonl);
  REQUIRE(json.size() == 1);
  CHECK(json[0] == InteractionRecord{"bob", "eve", InteractionKind::kTag, std::nullopt});

  auto self = FailureOf([] { Interactions("source,target,kind,timestamp\nalice,alice,like,\n"); });
  CHECK(self.code == ErrorCode::kSelfInteraction);
  CHECK(self.line == 2);
  CHECK(FailureOf([] { Interactions("source,target,kind,timestamp\na,b,poke,\n"); }).code ==
        ErrorCode::kUnknownKind);
  CHECK(FailureOf([] {
          Interactions("{\"source\":\"a\",\"target\":\"b\"}\n", LogFormat::kJsonl);
        }).code == ErrorCode::kParseError);
}

TEST_CASE("parse_roles") {
  auto roles = Roles("node_id,role\ndev1,seeded_developer\nalice,participant\n");
  CHECK(roles.size() == 2);
  CHECK(roles.role_of("dev1") == Role::kSeededDeveloper);
  CHECK(roles.role_of("alice") == Role::kParticipant);
  CHECK(roles.role_of("stranger") == Role::kParticipant);

  auto dup = FailureOf([] { Roles("node_id,role\ndev1,seeded_developer\ndev1,participant\n"); });
  CHECK(dup.code == ErrorCode::kDuplicateNode);
  CHECK(dup.line == 3);
  CHECK_NOTHROW(Roles("node_id,role\ndev1,seeded_developer\ndev1,seeded_developer\n"));

  auto empty = Roles("node_id,role\n");
  CHECK(empty.size() == 0);
  CHECK(empty.role_of("anyone") == Role::kParticipant);

  CHECK(FailureOf([] { Roles("node_id,role\nx,boss\n"); }).code == ErrorCode::kUnknownRole);
}

TEST_CASE("co_appearance_network") {
  auto triad = co_appearance_network({{"s1", {"p1", "p2", "p3"}, std::nullopt}});
  CHECK(triad.node_count() == 3);
  CHECK(triad.edge_count() == 3);

  auto pendant = co_appearance_network(
      {{"s1", {"p1", "p2"}, std::nullopt}, {"s2", {"p2", "p4"}, std::nullopt}});
  CHECK(pendant.edges() == EdgeList{{"p1", "p2"}, {"p2", "p4"}});
  CHECK(pendant.degree(*pendant.index_of("p4")) == 1);

  auto solo = co_appearance_network({{"s1", {"solo"}, std::nullopt}});
  CHECK(solo.node_count() == 1);
  CHECK(solo.edge_count() == 0);
}

TEST_CASE("interaction_network symmetrizes and collapses") {
  auto pair = interaction_network({{"alice", "bob", InteractionKind::kWave, std::nullopt},
                                   {"bob", "alice", InteractionKind::kLike, std::nullopt}});
  CHECK(pair.edge_count() == 1);
  CHECK(pair.has_edge("alice", "bob"));

  CHECK(interaction_network({}).node_count() == 0);

  auto multi = interaction_network({{"a", "b", InteractionKind::kLike, std::nullopt},
                                    {"a", "b", InteractionKind::kLike, std::nullopt},
                                    {"a", "c", InteractionKind::kTag, std::nullopt}});
  CHECK(multi.edges() == EdgeList{{"a", "b"}, {"a", "c"}});
}

TEST_CASE("make_dataset drops roles for absent nodes") {
  auto g = interaction_network({{"a", "b", InteractionKind::kWave, std::nullopt}});
  RoleTable roles;
  roles.assign("a", Role::kSeededDeveloper);
  roles.assign("ghost", Role::kSeededDeveloper);
  auto d = make_dataset(g, roles, "test");
  CHECK(d.roles.size() == 1);
  CHECK(d.roles.is_developer("a"));
  CHECK(d.graph.node_count() == 2);
}

std::string RandomId(std::mt19937_64& rng) {
  static const std::string kAlphabet = "abXY01,\" \n_";
  std::string s;
  const std::size_t len = 1 + rng() % 6;
  for (std::size_t i = 0; i < len; ++i) s.push_back(kAlphabet[rng() % kAlphabet.size()]);
  return s;
}

TEST_CASE("property: canonical csv round-trips") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<InteractionRecord> records;
    for (std::size_t i = 0, n = rng() % 8; i < n; ++i) {
      InteractionRecord r{RandomId(rng), RandomId(rng),
                          static_cast<InteractionKind>(rng() % 5), std::nullopt};
      if (r.source == r.target) r.target += "!";
      if (rng() % 2) r.timestamp = "2015-07-1" + std::to_string(rng() % 10) + "T00:00:00Z";
      records.push_back(r);
    }
    std::ostringstream out;
    write_interaction_log_csv(out, records);
    CHECK(Interactions(out.str()) == records);

    std::vector<PhotoRecord> photos;
    for (std::size_t i = 0, n = rng() % 5; i < n; ++i) {
      PhotoRecord p{"photo" + std::to_string(i), {}, std::nullopt};
      for (std::size_t j = 0, m = 1 + rng() % 4; j < m; ++j) {
        auto id = RandomId(rng);
        if (std::find(p.participants.begin(), p.participants.end(), id) == p.participants.end()) {
          p.participants.push_back(id);
        }
      }
      photos.push_back(p);
    }
    std::ostringstream pout;
    write_photo_log_csv(pout, photos);
    CHECK(Photos(pout.str()) == photos);

    RoleTable roles;
    for (std::size_t i = 0, n = rng() % 6; i < n; ++i) {
      auto id = RandomId(rng);
      if (roles.entries().count(id) == 0) {
        roles.assign(id, rng() % 2 ? Role::kSeededDeveloper : Role::kParticipant);
      }
    }
    std::ostringstream rout;
    write_roles_csv(rout, roles);
    CHECK(Roles(rout.str()) == roles);
  }
}

TEST_CASE("property: co-appearance network is order independent") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<PhotoRecord> photos;
    NodeSet everyone;
    for (std::size_t i = 0, n = 1 + rng() % 6; i < n; ++i) {
      PhotoRecord p{"s" + std::to_string(i), {}, std::nullopt};
      for (std::size_t j = 0, m = 1 + rng() % 4; j < m; ++j) {
        NodeId id = "u" + std::to_string(rng() % 10);
        if (std::find(p.participants.begin(), p.participants.end(), id) == p.participants.end()) {
          p.participants.push_back(id);
          everyone.insert(id);
        }
      }
      photos.push_back(p);
    }
    auto g = co_appearance_network(photos);
    CHECK(g.node_count() == everyone.size());

    auto shuffled = photos;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (auto& p : shuffled) std::shuffle(p.participants.begin(), p.participants.end(), rng);
    CHECK(co_appearance_network(shuffled) == g);
  }
}

TEST_CASE("single photo yields a clique") {
  for (std::size_t p = 1; p <= 6; ++p) {
    PhotoRecord photo{"s", {}, std::nullopt};
    for (std::size_t i = 0; i < p; ++i) photo.participants.push_back("m" + std::to_string(i));
    auto g = co_appearance_network({photo});
    CHECK(g.node_count() == p);
    CHECK(g.edge_count() == p * (p - 1) / 2);
  }
}

}  // namespace
}  // namespace kpkit
