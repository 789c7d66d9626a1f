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

#include "kpkit/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "kpkit/csv.hpp"
#include "kpkit/error.hpp"

namespace kpkit {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double kUnitWidth = 0.25;

std::string FormatOptional(const std::optional<double>& v) {
  return v ? format_fraction(*v) : std::string("n/a");
}

std::string JoinIds(std::span<const NodeId> ids, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += sep;
    out += ids[i];
  }
  return out;
}

// Left-aligned columns padded to the widest cell.
std::string AlignedTable(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(widths[c] - row[c].size() + 2, ' ');
    }
    out += line + '\n';
  }
  return out;
}

ordered_json ToJson(const KeyPlayerResult& r) {
  return ordered_json{{"method", KpMethodName(r.method)},
                      {"chosen", r.chosen},
                      {"fit", r.fit},
                      {"restarts_run", r.restarts_run},
                      {"sweeps_per_restart", r.sweeps_per_restart},
                      {"seed_used", r.seed_used}};
}

ordered_json OptionalJson(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

std::optional<double> OptionalFromJson(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

std::string RenderText(const AnalysisReport& r) {
  std::ostringstream out;
  const auto& s = r.network_stats;
  out << "Network\n"
      << AlignedTable({{"  nodes", std::to_string(s.nodes)},
                       {"  edges", std::to_string(s.edges)},
                       {"  components", std::to_string(s.components)},
                       {"  largest component", std::to_string(s.largest_component)},
                       {"  initial fragmentation", FormatOptional(s.initial_fragmentation)},
                       {"  density", FormatOptional(s.density)}});

  out << "\nKey players\n";
  std::vector<std::vector<std::string>> kp_rows = {{"Method", "k", "Fit", "Chosen"}};
  for (const auto& kp : r.kp_results) {
    kp_rows.push_back({std::string(KpMethodName(kp.method)), std::to_string(kp.chosen.size()),
                       format_fraction(kp.fit), JoinIds(kp.chosen, ", ")});
  }
  out << AlignedTable(kp_rows);

  out << "\nSeeded developers and early adopters identified\n";
  std::vector<std::vector<std::string>> b_rows = {
      {"Method", "Seeded Developers", "Early Adopters"}};
  for (const auto& b : r.breakdowns) {
    b_rows.push_back({std::string(BreakdownMethodName(b.method)),
                      std::to_string(b.seeded_developers), std::to_string(b.early_adopters)});
  }
  out << AlignedTable(b_rows);

  out << "\nFragmentation\n";
  std::vector<std::vector<std::string>> f_rows = {
      {"Group", "Size", "Initial", "Final", "Change"}};
  for (const auto& row : r.fragmentation_rows) {
    f_rows.push_back({row.group_label, std::to_string(row.group_size),
                      format_fraction(row.initial), format_fraction(row.final),
                      format_fraction(row.change)});
  }
  out << AlignedTable(f_rows);
  return out.str();
}

std::string RenderJson(const AnalysisReport& r) {
  ordered_json j;
  const auto& s = r.network_stats;
  j["network_stats"] = {{"nodes", s.nodes},
                        {"edges", s.edges},
                        {"components", s.components},
                        {"largest_component", s.largest_component},
                        {"initial_fragmentation", OptionalJson(s.initial_fragmentation)},
                        {"density", OptionalJson(s.density)}};
  j["kp_results"] = ordered_json::array();
  for (const auto& kp : r.kp_results) j["kp_results"].push_back(ToJson(kp));
  j["breakdowns"] = ordered_json::array();
  for (const auto& b : r.breakdowns) {
    j["breakdowns"].push_back({{"method", BreakdownMethodName(b.method)},
                               {"seeded_developers", b.seeded_developers},
                               {"early_adopters", b.early_adopters}});
  }
  j["fragmentation_rows"] = ordered_json::array();
  for (const auto& row : r.fragmentation_rows) {
    j["fragmentation_rows"].push_back({{"group_label", row.group_label},
                                       {"group_size", row.group_size},
                                       {"initial", row.initial},
                                       {"final", row.final},
                                       {"change", row.change}});
  }
  return j.dump(2) + "\n";
}

std::string RenderCsv(const AnalysisReport& r) {
  std::ostringstream out;
  const auto& s = r.network_stats;
  out << "# network_stats\n"
      << "nodes,edges,components,largest_component,initial_fragmentation,density\n"
      << csv::format_row({std::to_string(s.nodes), std::to_string(s.edges),
                          std::to_string(s.components), std::to_string(s.largest_component),
                          s.initial_fragmentation ? format_fraction(*s.initial_fragmentation) : "",
                          s.density ? format_fraction(*s.density) : ""})
      << "\n\n# key_players\nmethod,k,fit,chosen\n";
  for (const auto& kp : r.kp_results) {
    out << csv::format_row({std::string(KpMethodName(kp.method)), std::to_string(kp.chosen.size()),
                            format_fraction(kp.fit), JoinIds(kp.chosen, ";")})
        << '\n';
  }
  out << "\n# role_breakdowns\nmethod,seeded_developers,early_adopters\n";
  for (const auto& b : r.breakdowns) {
    out << csv::format_row({std::string(BreakdownMethodName(b.method)),
                            std::to_string(b.seeded_developers), std::to_string(b.early_adopters)})
        << '\n';
  }
  out << "\n# fragmentation\ngroup,size,initial,final,change\n";
  for (const auto& row : r.fragmentation_rows) {
    out << csv::format_row({row.group_label, std::to_string(row.group_size),
                            format_fraction(row.initial), format_fraction(row.final),
                            format_fraction(row.change)})
        << '\n';
  }
  return out.str();
}

std::string XmlEscape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string DotQuote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out + "\"";
}

std::string FixedTwo(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string_view BreakdownMethodName(BreakdownMethod method) {
  switch (method) {
    case BreakdownMethod::kKppNeg: return "KPP-NEG";
    case BreakdownMethod::kKppPos: return "KPP-POS";
    case BreakdownMethod::kDegreeTopK: return "degree_top_k";
  }
  return "KPP-NEG";
}

BreakdownMethod ParseBreakdownMethod(std::string_view name) {
  for (auto m : {BreakdownMethod::kKppNeg, BreakdownMethod::kKppPos, BreakdownMethod::kDegreeTopK}) {
    if (BreakdownMethodName(m) == name) return m;
  }
  throw Error(ErrorCode::kParseError, "unknown breakdown method '" + std::string(name) + "'");
}

std::string format_fraction(double value) {
  // The nudge absorbs representation error such as 0.0925 -> 0.09249999...
  double scaled = std::floor(value * 1000.0 + 0.5 + 1e-9);
  if (scaled == 0.0) scaled = 0.0;  // no "-0.000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", scaled / 1000.0);
  return buf;
}

bool row_is_consistent(const GroupFragmentationRow& row, double tolerance) {
  const double expected = row.final - row.initial;
  return std::fabs(row.change - expected) <= tolerance &&
         format_fraction(row.change) == format_fraction(expected);
}

RoleBreakdown classify_nodes(BreakdownMethod method, std::span<const NodeId> chosen,
                             const RoleTable& roles) {
  RoleBreakdown b;
  b.method = method;
  for (const auto& id : chosen) {
    if (roles.is_developer(id)) {
      ++b.seeded_developers;
    } else {
      ++b.early_adopters;
    }
  }
  return b;
}

RoleBreakdown classify_key_players(const KeyPlayerResult& result, const RoleTable& roles) {
  return classify_nodes(
      result.method == KpMethod::kNeg ? BreakdownMethod::kKppNeg : BreakdownMethod::kKppPos,
      result.chosen, roles);
}

std::vector<NodeId> degree_top_k(const Graph& g, std::size_t k) {
  auto ranking = degree_ranking(g);
  if (ranking.size() > k) ranking.resize(k);
  return ranking;
}

std::vector<GroupFragmentationRow> group_fragmentation_summary(const Graph& g,
                                                               const RoleTable& roles,
                                                               const KeyPlayerResult& kp) {
  NodeSet developers;
  NodeSet adopters;
  for (const auto& id : kp.chosen) {
    g.require_index(id);
    (roles.is_developer(id) ? developers : adopters).insert(id);
  }
  NodeSet all(kp.chosen.begin(), kp.chosen.end());

  auto row = [&](std::string label, const NodeSet& removed) {
    auto delta = removal_impact(g, removed);
    return GroupFragmentationRow{std::move(label) + " (n = " + std::to_string(removed.size()) + ")",
                                 removed.size(), delta.initial, delta.final, delta.change};
  };
  // Labels name the group that was removed.
  return {row("Seeded developers removed", developers),
          row("Early adopters removed", adopters),
          row("All key players removed", all)};
}

std::vector<RoleBreakdown> compare_methods(const Graph& g, const RoleTable& roles,
                                           const KpConfig& cfg) {
  auto neg = select_key_players(g, KpMethod::kNeg, cfg);
  auto pos = select_key_players(g, KpMethod::kPos, cfg);
  auto top = degree_top_k(g, cfg.k);
  return {classify_key_players(neg, roles), classify_key_players(pos, roles),
          classify_nodes(BreakdownMethod::kDegreeTopK, top, roles)};
}

NetworkStats compute_network_stats(const Graph& g) {
  NetworkStats s;
  s.nodes = g.node_count();
  s.edges = g.edge_count();
  auto sizes = component_sizes(g);
  s.components = sizes.size();
  s.largest_component = sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
  if (s.nodes >= 2) {
    s.initial_fragmentation = fragmentation(g);
    s.density = graph_density(g);
  }
  return s;
}

AnalysisReport build_report(const Graph& g, const RoleTable& roles,
                            std::span<const KeyPlayerResult> kp_results) {
  AnalysisReport r;
  r.network_stats = compute_network_stats(g);
  r.kp_results.assign(kp_results.begin(), kp_results.end());
  for (const auto& kp : kp_results) r.breakdowns.push_back(classify_key_players(kp, roles));
  if (!kp_results.empty()) {
    auto top = degree_top_k(g, kp_results.front().chosen.size());
    r.breakdowns.push_back(classify_nodes(BreakdownMethod::kDegreeTopK, top, roles));
    const KeyPlayerResult* basis = &kp_results.front();
    for (const auto& kp : kp_results) {
      if (kp.method == KpMethod::kNeg) {
        basis = &kp;
        break;
      }
    }
    r.fragmentation_rows = group_fragmentation_summary(g, roles, *basis);
  }
  return r;
}

ReportFormat ParseReportFormat(std::string_view name) {
  if (name == "text") return ReportFormat::kText;
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  throw Error(ErrorCode::kInvalidConfig, "unknown report format '" + std::string(name) + "'");
}

std::string render_report(const AnalysisReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::kText: return RenderText(report);
    case ReportFormat::kJson: return RenderJson(report);
    case ReportFormat::kCsv: return RenderCsv(report);
  }
  return {};
}

AnalysisReport parse_report_json(std::string_view text) {
  AnalysisReport r;
  try {
    auto j = nlohmann::json::parse(text);
    const auto& s = j.at("network_stats");
    r.network_stats.nodes = s.at("nodes").get<std::size_t>();
    r.network_stats.edges = s.at("edges").get<std::size_t>();
    r.network_stats.components = s.at("components").get<std::size_t>();
    r.network_stats.largest_component = s.at("largest_component").get<std::size_t>();
    r.network_stats.initial_fragmentation = OptionalFromJson(s.at("initial_fragmentation"));
    r.network_stats.density = OptionalFromJson(s.at("density"));
    for (const auto& k : j.at("kp_results")) {
      KeyPlayerResult kp;
      kp.method = ParseKpMethod(k.at("method").get<std::string>());
      kp.chosen = k.at("chosen").get<std::vector<NodeId>>();
      kp.fit = k.at("fit").get<double>();
      kp.restarts_run = k.at("restarts_run").get<std::size_t>();
      kp.sweeps_per_restart = k.at("sweeps_per_restart").get<std::vector<std::size_t>>();
      kp.seed_used = k.at("seed_used").get<std::uint64_t>();
      r.kp_results.push_back(std::move(kp));
    }
    for (const auto& b : j.at("breakdowns")) {
      r.breakdowns.push_back({ParseBreakdownMethod(b.at("method").get<std::string>()),
                              b.at("seeded_developers").get<std::size_t>(),
                              b.at("early_adopters").get<std::size_t>()});
    }
    for (const auto& f : j.at("fragmentation_rows")) {
      r.fragmentation_rows.push_back({f.at("group_label").get<std::string>(),
                                      f.at("group_size").get<std::size_t>(),
                                      f.at("initial").get<double>(), f.at("final").get<double>(),
                                      f.at("change").get<double>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("malformed report JSON: ") + e.what());
  } catch (const Error& e) {
    throw Error(ErrorCode::kParseError, std::string("malformed report JSON: ") + e.what());
  }
  return r;
}

GraphFormat ParseGraphFormat(std::string_view name) {
  if (name == "dot") return GraphFormat::kDot;
  if (name == "graphml") return GraphFormat::kGraphml;
  throw Error(ErrorCode::kInvalidConfig, "unknown graph format '" + std::string(name) + "'");
}

std::string export_graph(const Graph& g, const RoleTable& roles, const NodeSet& highlight,
                         GraphFormat format) {
  for (const auto& id : highlight) g.require_index(id);

  struct NodeStyle {
    const NodeId* id;
    std::string_view role;
    std::string_view color;
    std::size_t degree;
    bool highlighted;
    double width;
  };
  std::vector<NodeStyle> styles;
  for (NodeIndex i = 0; i < g.node_count(); ++i) {
    const NodeId& id = g.node(i);
    const bool lit = highlight.contains(id);
    const Role role = roles.role_of(id);
    std::string_view color = "blue";
    if (lit) color = role == Role::kSeededDeveloper ? "orange" : "green";
    const std::size_t degree = g.degree(i);
    styles.push_back({&id, RoleName(role), color, degree, lit,
                      kUnitWidth * static_cast<double>(std::max<std::size_t>(degree, 1))});
  }

  std::ostringstream out;
  if (format == GraphFormat::kDot) {
    out << "graph kpkit {\n  node [shape=circle, style=filled, fixedsize=true, label=\"\"];\n";
    for (const auto& s : styles) {
      out << "  " << DotQuote(*s.id) << " [fillcolor=" << s.color
          << ", width=" << FixedTwo(s.width) << ", role=" << s.role << ", degree=" << s.degree
          << ", highlighted=" << (s.highlighted ? "true" : "false")
          << ", tooltip=" << DotQuote(*s.id) << "];\n";
    }
    for (const auto& [a, b] : g.edges()) {
      out << "  " << DotQuote(a) << " -- " << DotQuote(b) << ";\n";
    }
    out << "}\n";
  } else {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <key id=\"role\" for=\"node\" attr.name=\"role\" attr.type=\"string\"/>\n"
        << "  <key id=\"color\" for=\"node\" attr.name=\"color\" attr.type=\"string\"/>\n"
        << "  <key id=\"degree\" for=\"node\" attr.name=\"degree\" attr.type=\"int\"/>\n"
        << "  <key id=\"highlighted\" for=\"node\" attr.name=\"highlighted\" "
           "attr.type=\"boolean\"/>\n"
        << "  <key id=\"size\" for=\"node\" attr.name=\"size\" attr.type=\"double\"/>\n"
        << "  <graph id=\"G\" edgedefault=\"undirected\">\n";
    for (const auto& s : styles) {
      out << "    <node id=\"" << XmlEscape(*s.id) << "\">\n"
          << "      <data key=\"role\">" << s.role << "</data>\n"
          << "      <data key=\"color\">" << s.color << "</data>\n"
          << "      <data key=\"degree\">" << s.degree << "</data>\n"
          << "      <data key=\"highlighted\">" << (s.highlighted ? "true" : "false")
          << "</data>\n"
          << "      <data key=\"size\">" << FixedTwo(s.width) << "</data>\n"
          << "    </node>\n";
    }
    for (const auto& [a, b] : g.edges()) {
      out << "    <edge source=\"" << XmlEscape(a) << "\" target=\"" << XmlEscape(b) << "\"/>\n";
    }
    out << "  </graph>\n</graphml>\n";
  }
  return out.str();
}

}  // namespace kpkit
