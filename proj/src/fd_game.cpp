#include "fdg/fd_game.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <unordered_set>

namespace fdg {

const char* to_string(Diagnostic::Kind kind) {
  switch (kind) {
    case Diagnostic::Kind::empty_universe: return "EmptyUniverse";
    case Diagnostic::Kind::duplicate_situation: return "DuplicateSituation";
    case Diagnostic::Kind::unknown_situation: return "UnknownSituation";
    case Diagnostic::Kind::duplicate_agent: return "DuplicateAgent";
    case Diagnostic::Kind::no_agents: return "NoAgents";
    case Diagnostic::Kind::missing_relation: return "MissingRelation";
    case Diagnostic::Kind::universe_mismatch: return "UniverseMismatch";
  }
  return "Diagnostic";
}

std::vector<Diagnostic> validate(const GameSketch& sketch) {
  std::vector<Diagnostic> out;
  if (sketch.situations.empty()) {
    out.push_back({Diagnostic::Kind::empty_universe, "no situations declared"});
  }
  std::unordered_set<std::string> situations;
  for (const auto& name : sketch.situations) {
    if (!situations.insert(name).second) {
      out.push_back({Diagnostic::Kind::duplicate_situation, name});
    }
  }
  if (sketch.agents.empty()) {
    out.push_back({Diagnostic::Kind::no_agents, "a game needs at least one agent"});
  }
  std::unordered_set<std::string> agents;
  // report each unknown situation name once, in first-appearance order
  std::unordered_set<std::string> reported_unknown;
  auto check_endpoint = [&](const std::string& name) {
    if (!situations.count(name) && reported_unknown.insert(name).second) {
      out.push_back({Diagnostic::Kind::unknown_situation, name});
    }
  };
  for (const auto& agent : sketch.agents) {
    if (!agents.insert(agent.name).second) {
      out.push_back({Diagnostic::Kind::duplicate_agent, agent.name});
    }
    for (const auto& [from, to] : agent.feasible) {
      check_endpoint(from);
      check_endpoint(to);
    }
    for (const auto& [from, to] : agent.desire) {
      check_endpoint(from);
      check_endpoint(to);
    }
  }
  return out;
}

std::vector<Diagnostic> validate(const FdGame& game) {
  std::vector<Diagnostic> out;
  if (!game.situations || game.situations->size() == 0) {
    out.push_back({Diagnostic::Kind::empty_universe, "no situations"});
    return out;
  }
  if (game.agents.empty()) {
    out.push_back({Diagnostic::Kind::no_agents, "a game needs at least one agent"});
  }
  std::unordered_set<std::string> agents;
  for (const auto& name : game.agents) {
    if (!agents.insert(name).second) {
      out.push_back({Diagnostic::Kind::duplicate_agent, name});
    }
  }
  if (game.feasibility.size() != game.agents.size() ||
      game.desirability.size() != game.agents.size()) {
    out.push_back({Diagnostic::Kind::missing_relation,
                   "each agent needs one feasibility and one desirability relation"});
  }
  for (const auto& rel : game.feasibility) {
    if (!(rel.universe() == *game.situations)) {
      out.push_back({Diagnostic::Kind::universe_mismatch, "feasibility universe differs"});
    }
  }
  for (const auto& rel : game.desirability) {
    if (!(rel.universe() == *game.situations)) {
      out.push_back({Diagnostic::Kind::universe_mismatch, "desirability universe differs"});
    }
  }
  return out;
}

FdGame build_game(const GameSketch& sketch) {
  auto diagnostics = validate(sketch);
  if (!diagnostics.empty()) {
    std::string message = "invalid game:";
    for (const auto& d : diagnostics) {
      message += std::string(" ") + to_string(d.kind) + "(" + d.detail + ")";
    }
    throw Error(errc::validation_failed, message);
  }

  FdGame game;
  game.situations = intern_universe(sketch.situations);
  auto resolve = [&](const std::vector<std::pair<std::string, std::string>>& named) {
    std::vector<std::pair<NodeId, NodeId>> arcs;
    arcs.reserve(named.size());
    for (const auto& [from, to] : named) {
      arcs.emplace_back(game.situations->id_of(from), game.situations->id_of(to));
    }
    return arcs;
  };
  for (const auto& agent : sketch.agents) {
    game.agents.push_back(agent.name);
    game.feasibility.emplace_back(game.situations, resolve(agent.feasible));
    game.desirability.emplace_back(game.situations, resolve(agent.desire));
  }
  return game;
}

Relation fmdc_agent(const FdGame& game, AgentId agent) {
  if (agent >= game.agents.size()) {
    throw Error(errc::unknown_agent, "agent index " + std::to_string(agent) + " out of range");
  }
  const Relation& feasible = game.feasibility[agent];
  const Relation& desire = game.desirability[agent];
  std::vector<std::pair<NodeId, NodeId>> arcs;
  for (auto [from, to] : feasible.arcs()) {
    if (desire.has_arc(from, to)) arcs.emplace_back(from, to);
  }
  return Relation(game.situations, std::move(arcs));
}

Relation fmdc(const FdGame& game) {
  std::vector<std::pair<NodeId, NodeId>> arcs;
  for (AgentId agent = 0; agent < game.agents.size(); ++agent) {
    for (auto arc : fmdc_agent(game, agent).arcs()) arcs.push_back(arc);
  }
  return Relation(game.situations, std::move(arcs));
}

namespace {

#ifndef NDEBUG
// The definitional characterization, checked against the sink one.
bool nash_by_definition(const FdGame& game, NodeId s) {
  for (AgentId agent = 0; agent < game.agents.size(); ++agent) {
    for (NodeId to : game.feasibility[agent].out(s)) {
      if (to != s && game.desirability[agent].has_arc(s, to)) return false;
    }
  }
  return true;
}
#endif

}  // namespace

std::vector<NodeId> abstract_nash(const FdGame& game) {
  std::vector<NodeId> result = sinks(fmdc(game));
#ifndef NDEBUG
  for (NodeId s = 0; s < game.situations->size(); ++s) {
    bool as_sink = std::binary_search(result.begin(), result.end(), s);
    assert(as_sink == nash_by_definition(game, s));
  }
#endif
  return result;
}

std::vector<std::vector<NodeId>> fd_equilibria(const FdGame& game) {
  Relation relation = fmdc(game);
  ReducedGraph reduced = condense(relation, scc(relation));
  std::vector<std::vector<NodeId>> terminal;
  for (NodeId comp : sinks(reduced.graph)) {
    terminal.push_back(reduced.partition.components[comp]);
  }
  std::sort(terminal.begin(), terminal.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return terminal;
}

EquilibriumReport analyze(const FdGame& game) {
  Relation relation = fmdc(game);
  ReducedGraph reduced = condense(relation, scc(relation));
  std::vector<std::vector<NodeId>> terminal;
  for (NodeId comp : sinks(reduced.graph)) {
    terminal.push_back(reduced.partition.components[comp]);
  }
  std::sort(terminal.begin(), terminal.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  EquilibriumReport report{std::move(relation), std::move(reduced), abstract_nash(game),
                           std::move(terminal)};
  return report;
}

}  // namespace fdg
