#include "fdg/emit.hpp"

#include <sstream>

namespace fdg {

namespace {

constexpr const char* kSubsetConvention =
    "subset pairs with empty intersection are skipped: choices live in nonempty subsets";

std::string join_names(const NameTable& names, const std::vector<NodeId>& ids,
                       const char* separator = ",") {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out += separator;
    out += names.name(ids[i]);
  }
  return out;
}

Json name_array(const NameTable& names, const std::vector<NodeId>& ids) {
  Json array = Json::array();
  for (NodeId id : ids) array.push_back(names.name(id));
  return array;
}

Json arc_array(const Relation& rel) {
  Json array = Json::array();
  for (auto [from, to] : rel.arcs()) {
    array.push_back(Json::array({rel.universe().name(from), rel.universe().name(to)}));
  }
  return array;
}

}  // namespace

std::string analyze_text(const FdGame& game, const EquilibriumReport& report) {
  const NameTable& names = *game.situations;
  std::ostringstream out;
  out << "situations (" << names.size() << "):";
  for (const auto& name : names.names()) out << ' ' << name;
  out << '\n';
  out << "agents (" << game.agents.size() << "):";
  for (const auto& agent : game.agents) out << ' ' << agent;
  out << '\n';
  out << "fmdc arcs (" << report.fmdc.arc_count() << "):\n";
  for (auto [from, to] : report.fmdc.arcs()) {
    out << "  " << names.name(from) << " -> " << names.name(to) << '\n';
  }
  out << "abstract nash equilibria (" << report.abstract_nash.size() << "):";
  for (NodeId s : report.abstract_nash) out << ' ' << names.name(s);
  out << '\n';
  out << "fd equilibria (" << report.fd_equilibria.size() << "):\n";
  for (const auto& members : report.fd_equilibria) {
    out << "  {" << join_names(names, members) << "}\n";
  }
  return out.str();
}

Json analyze_json(const FdGame& game, const EquilibriumReport& report) {
  const NameTable& names = *game.situations;
  Json j;
  j["format_version"] = kJsonFormatVersion;
  j["situations"] = names.names();
  j["agents"] = game.agents;
  j["fmdc"] = Json{{"arcs", arc_array(report.fmdc)}};
  j["abstract_nash"] = name_array(names, report.abstract_nash);
  Json equilibria = Json::array();
  for (const auto& members : report.fd_equilibria) equilibria.push_back(name_array(names, members));
  j["fd_equilibria"] = equilibria;
  Json components = Json::array();
  for (const auto& members : report.reduced.partition.components) {
    components.push_back(name_array(names, members));
  }
  Json reduced_arcs = Json::array();
  for (auto [from, to] : report.reduced.graph.arcs()) {
    reduced_arcs.push_back(Json::array({from, to}));
  }
  j["reduced"] = Json{{"components", components}, {"arcs", reduced_arcs}};
  return j;
}

namespace {

std::string subset_names(const NameTable& names, SubsetMask mask) {
  return "{" + join_names(names, nodes_of(mask)) + "}";
}

void verdict_line(std::ostream& out, const NameTable& names, const char* label,
                  const PairVerdict& verdict) {
  out << label << ": " << (verdict.pass ? "pass" : "FAIL");
  if (!verdict.pass) {
    out << "  A=" << subset_names(names, verdict.a) << " B=" << subset_names(names, verdict.b)
        << " x=" << names.name(verdict.x);
  }
  out << '\n';
}

Json verdict_json(const NameTable& names, const PairVerdict& verdict) {
  Json j;
  j["pass"] = verdict.pass;
  if (!verdict.pass) {
    j["counterexample"] = Json{{"a", name_array(names, nodes_of(verdict.a))},
                               {"b", name_array(names, nodes_of(verdict.b))},
                               {"x", names.name(verdict.x)}};
  }
  return j;
}

}  // namespace

std::string audit_text(const Relation& rel, const ChoiceAuditReport& report) {
  const NameTable& names = *report.ground;
  std::ostringstream out;
  out << "ground set (" << names.size() << "):";
  for (const auto& name : names.names()) out << ' ' << name;
  out << '\n';
  out << "relation arcs (" << rel.arc_count() << "):";
  for (auto [from, to] : rel.arcs()) {
    out << ' ' << names.name(from) << "->" << names.name(to);
  }
  out << '\n';
  out << "convention: " << kSubsetConvention << '\n';
  out << "kappa: " << (report.kappa.pass ? "pass" : "FAIL");
  if (!report.kappa.pass) out << "  A=" << subset_names(names, report.kappa.set);
  out << '\n';
  verdict_line(out, names, "alpha", report.alpha);
  verdict_line(out, names, "iota", report.iota);
  out << "semilattice: " << (report.semilattice ? "yes" : "no") << '\n';
  out << "domain total: " << (report.domain_total ? "yes" : "no") << '\n';
  if (report.propositions.prop1_applicable) {
    verdict_line(out, names, "prop1 (kappa and iota imply C(A) cap C(B) within C(A cap B))",
                 report.propositions.prop1);
  } else {
    out << "prop1 (kappa and iota imply C(A) cap C(B) within C(A cap B)): not applicable\n";
  }
  out << "prop2.1 (iota implies alpha): "
      << (report.propositions.iota_implies_alpha ? "pass" : "FAIL") << '\n';
  out << "prop2.2 (kappa and alpha imply iota on semilattice domains): "
      << (report.propositions.kappa_alpha_imply_iota ? "pass" : "FAIL") << '\n';
  return out.str();
}

Json audit_json(const Relation& rel, const ChoiceAuditReport& report) {
  const NameTable& names = *report.ground;
  Json j;
  j["format_version"] = kJsonFormatVersion;
  j["ground"] = names.names();
  j["arcs"] = arc_array(rel);
  j["convention"] = kSubsetConvention;
  Json kappa;
  kappa["pass"] = report.kappa.pass;
  if (!report.kappa.pass) {
    kappa["counterexample"] = Json{{"a", name_array(names, nodes_of(report.kappa.set))}};
  }
  j["kappa"] = kappa;
  j["alpha"] = verdict_json(names, report.alpha);
  j["iota"] = verdict_json(names, report.iota);
  j["semilattice"] = report.semilattice;
  j["domain_total"] = report.domain_total;
  Json prop1 = verdict_json(names, report.propositions.prop1);
  prop1["applicable"] = report.propositions.prop1_applicable;
  j["prop1"] = prop1;
  j["prop2"] = Json{{"iota_implies_alpha", report.propositions.iota_implies_alpha},
                    {"kappa_alpha_imply_iota", report.propositions.kappa_alpha_imply_iota}};
  return j;
}

std::string evolve_text(const FdGame& game, NodeId start, const AbsorptionStats& stats) {
  const NameTable& names = *game.situations;
  std::ostringstream out;
  out << "start: " << names.name(start) << '\n';
  out << "trials: " << stats.trials << '\n';
  out << "seed: " << stats.base_seed << '\n';
  out << "max steps: " << stats.max_steps << '\n';
  for (std::size_t i = 0; i < stats.equilibria.size(); ++i) {
    out << "equilibrium {" << join_names(names, stats.equilibria[i]) << "}: " << stats.hits[i]
        << '/' << stats.trials << '\n';
  }
  out << "non-absorbed: " << stats.non_absorbed << '/' << stats.trials << '\n';
  return out.str();
}

Json evolve_json(const FdGame& game, NodeId start, const AbsorptionStats& stats) {
  const NameTable& names = *game.situations;
  Json j;
  j["format_version"] = kJsonFormatVersion;
  j["start"] = names.name(start);
  j["trials"] = stats.trials;
  j["seed"] = stats.base_seed;
  j["max_steps"] = stats.max_steps;
  Json equilibria = Json::array();
  for (std::size_t i = 0; i < stats.equilibria.size(); ++i) {
    equilibria.push_back(Json{
        {"members", name_array(names, stats.equilibria[i])},
        {"hits", stats.hits[i]},
        {"frequency", std::to_string(stats.hits[i]) + "/" + std::to_string(stats.trials)}});
  }
  j["equilibria"] = equilibria;
  j["non_absorbed"] = stats.non_absorbed;
  return j;
}

std::string trajectory_line(const FdGame& game, const Trajectory& walk) {
  std::string out;
  for (std::size_t i = 0; i < walk.steps.size(); ++i) {
    if (i > 0) out += ' ';
    out += game.situations->name(walk.steps[i]);
  }
  return out;
}

std::string emit_dot(const EquilibriumReport& report, const DotOptions& options) {
  const NameTable& names = report.fmdc.universe();
  const std::size_t n = names.size();

  std::vector<bool> nash(n, false);
  for (NodeId s : report.abstract_nash) nash[s] = true;
  // cluster index per node; single-member equilibria stay inline
  constexpr std::size_t kNoCluster = static_cast<std::size_t>(-1);
  std::vector<std::size_t> cluster(n, kNoCluster);
  std::vector<std::size_t> cluster_ids;
  for (std::size_t i = 0; i < report.fd_equilibria.size(); ++i) {
    if (report.fd_equilibria[i].size() < 2) continue;
    cluster_ids.push_back(i);
    for (NodeId member : report.fd_equilibria[i]) cluster[member] = cluster_ids.size() - 1;
  }

  auto quoted = [&](const std::string& name) { return "\"" + name + "\""; };
  auto node_line = [&](NodeId id, const char* indent) {
    std::string line = std::string(indent) + quoted(names.name(id));
    if (nash[id]) line += " [peripheries=2]";
    return line + ";\n";
  };

  std::ostringstream out;
  out << "digraph fmdc {\n";
  for (std::size_t c = 0; c < cluster_ids.size(); ++c) {
    const auto& members = report.fd_equilibria[cluster_ids[c]];
    out << "  subgraph cluster_" << c << " {\n";
    out << "    label=\"FD equilibrium {" << join_names(names, members) << "}\";\n";
    for (NodeId member : members) out << node_line(member, "    ");
    out << "  }\n";
  }
  for (NodeId id = 0; id < n; ++id) {
    if (cluster[id] == kNoCluster) out << node_line(id, "  ");
  }
  for (auto [from, to] : report.fmdc.arcs()) {
    out << "  " << quoted(names.name(from)) << " -> " << quoted(names.name(to)) << ";\n";
  }
  out << "}\n";

  if (options.include_reduced) {
    const Relation& reduced = report.reduced.graph;
    std::vector<NodeId> terminal = sinks(reduced);
    std::vector<bool> is_terminal(reduced.node_count(), false);
    for (NodeId comp : terminal) is_terminal[comp] = true;
    out << "digraph reduced {\n";
    for (NodeId comp = 0; comp < reduced.node_count(); ++comp) {
      out << "  \"" << reduced.universe().name(comp) << "\"";
      if (is_terminal[comp]) out << " [peripheries=2]";
      out << ";\n";
    }
    for (auto [from, to] : reduced.arcs()) {
      out << "  \"" << reduced.universe().name(from) << "\" -> \""
          << reduced.universe().name(to) << "\";\n";
    }
    out << "}\n";
  }
  return out.str();
}

}  // namespace fdg
