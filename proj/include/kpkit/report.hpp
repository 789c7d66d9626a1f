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

#ifndef KPKIT_REPORT_HPP_
#define KPKIT_REPORT_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kpkit/graph.hpp"
#include "kpkit/ingest.hpp"
#include "kpkit/keyplayer.hpp"

namespace kpkit {

enum class BreakdownMethod { kKppNeg, kKppPos, kDegreeTopK };
std::string_view BreakdownMethodName(BreakdownMethod method);  // "KPP-NEG", "KPP-POS", "degree_top_k"
BreakdownMethod ParseBreakdownMethod(std::string_view name);

// Key players split by affiliation. Anyone not labeled seeded_developer
// counts as an early adopter.
struct RoleBreakdown {
  BreakdownMethod method = BreakdownMethod::kKppNeg;
  std::size_t seeded_developers = 0;
  std::size_t early_adopters = 0;

  friend bool operator==(const RoleBreakdown&, const RoleBreakdown&) = default;
};

struct GroupFragmentationRow {
  std::string group_label;
  std::size_t group_size = 0;
  double initial = 0.0;
  double final = 0.0;
  double change = 0.0;

  friend bool operator==(const GroupFragmentationRow&, const GroupFragmentationRow&) = default;
};

struct NetworkStats {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t components = 0;
  std::size_t largest_component = 0;
  // Undefined (nullopt) below 2 nodes.
  std::optional<double> initial_fragmentation;
  std::optional<double> density;

  friend bool operator==(const NetworkStats&, const NetworkStats&) = default;
};

struct AnalysisReport {
  std::vector<RoleBreakdown> breakdowns;
  std::vector<GroupFragmentationRow> fragmentation_rows;
  std::vector<KeyPlayerResult> kp_results;
  NetworkStats network_stats;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

// Half-up rounding to 3 decimals, e.g. 0.09299999999999997 -> "0.093".
std::string format_fraction(double value);

// change == final - initial within `tolerance`, and the 3-decimal rendering
// of change matches that of final - initial.
bool row_is_consistent(const GroupFragmentationRow& row, double tolerance = 1e-9);

RoleBreakdown classify_nodes(BreakdownMethod method, std::span<const NodeId> chosen,
                             const RoleTable& roles);
RoleBreakdown classify_key_players(const KeyPlayerResult& result, const RoleTable& roles);

// Top k by degree, ties broken by NodeId.
std::vector<NodeId> degree_top_k(const Graph& g, std::size_t k);

// Developers-only, early-adopters-only and all-chosen removal, each measured
// against the full graph.
std::vector<GroupFragmentationRow> group_fragmentation_summary(const Graph& g,
                                                               const RoleTable& roles,
                                                               const KeyPlayerResult& kp);

// NEG, POS and degree_top_k, in that order.
std::vector<RoleBreakdown> compare_methods(const Graph& g, const RoleTable& roles,
                                           const KpConfig& cfg);

NetworkStats compute_network_stats(const Graph& g);

// Breakdown per result plus degree_top_k at the first result's k; the
// fragmentation rows come from the NEG result when present.
AnalysisReport build_report(const Graph& g, const RoleTable& roles,
                            std::span<const KeyPlayerResult> kp_results);

enum class ReportFormat { kText, kJson, kCsv };
ReportFormat ParseReportFormat(std::string_view name);

std::string render_report(const AnalysisReport& report, ReportFormat format);
// Inverse of the JSON rendering. Throws kParseError.
AnalysisReport parse_report_json(std::string_view text);

enum class GraphFormat { kDot, kGraphml };
GraphFormat ParseGraphFormat(std::string_view name);

// Highlighted developers are orange, other highlighted nodes green, the rest
// blue; node size scales with degree. Throws kUnknownNode.
std::string export_graph(const Graph& g, const RoleTable& roles, const NodeSet& highlight,
                         GraphFormat format);

}  // namespace kpkit

#endif  // KPKIT_REPORT_HPP_
