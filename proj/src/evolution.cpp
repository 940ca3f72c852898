#include "fdg/evolution.hpp"

#include <algorithm>
#include <array>

namespace fdg {

const char* to_string(Tactic tactic) {
  switch (tactic) {
    case Tactic::foresight: return "foresight";
    case Tactic::hindsight: return "hindsight";
    case Tactic::omnisight: return "omnisight";
    case Tactic::defeatism: return "defeatism";
  }
  return "tactic";
}

std::optional<Tactic> tactic_from_string(std::string_view name) {
  if (name == "foresight") return Tactic::foresight;
  if (name == "hindsight") return Tactic::hindsight;
  if (name == "omnisight") return Tactic::omnisight;
  if (name == "defeatism") return Tactic::defeatism;
  return std::nullopt;
}

FdGame blink_game(Tactic tactic) {
  GameSketch sketch;
  sketch.situations = {"L", "C", "R"};
  GameSketch::Agent left{"Left", {}, {{"R", "C"}, {"C", "L"}}};
  GameSketch::Agent right{"Right", {}, {{"L", "C"}, {"C", "R"}}};
  switch (tactic) {
    case Tactic::foresight:
      left.feasible = {{"C", "L"}};
      right.feasible = {{"C", "R"}};
      break;
    case Tactic::hindsight:
      left.feasible = {{"R", "C"}};
      right.feasible = {{"L", "C"}};
      break;
    case Tactic::omnisight:
      left.feasible = {{"C", "L"}, {"R", "C"}};
      right.feasible = {{"C", "R"}, {"L", "C"}};
      break;
    case Tactic::defeatism:
      // Left returns the token rather than face Right: giving it away is
      // both her only move and, in this tactic, what she wants.
      left.feasible = {{"L", "C"}};
      left.desire.push_back({"L", "C"});
      right.feasible = {{"C", "R"}};
      break;
  }
  sketch.agents = {left, right};
  return build_game(sketch);
}

std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t index) {
  SplitMix64 rng(base_seed);
  std::uint64_t seed = 0;
  for (std::uint64_t i = 0; i <= index; ++i) seed = rng.next();
  return seed;
}

namespace {

NodeId step_on(const Relation& relation, NodeId s, SplitMix64& rng) {
  const auto& succ = relation.out(s);
  // candidates exclude s itself; a lone self-loop means staying put
  std::vector<NodeId> candidates;
  candidates.reserve(succ.size());
  for (NodeId to : succ) {
    if (to != s) candidates.push_back(to);
  }
  if (candidates.empty()) return s;
  if (candidates.size() == 1) return candidates.front();
  return candidates[static_cast<std::size_t>(rng.below(candidates.size()))];
}

bool is_sink_node(const Relation& relation, NodeId s) {
  for (NodeId to : relation.out(s)) {
    if (to != s) return false;
  }
  return true;
}

}  // namespace

NodeId step(const FdGame& game, NodeId s, SplitMix64& rng) {
  if (s >= game.situations->size()) {
    throw Error(errc::unknown_name, "situation index out of range");
  }
  return step_on(fmdc(game), s, rng);
}

Trajectory trajectory(const FdGame& game, NodeId start, std::size_t max_steps,
                      std::uint64_t seed) {
  if (start >= game.situations->size()) {
    throw Error(errc::unknown_name, "start situation out of range");
  }
  Relation relation = fmdc(game);
  SccPartition part = scc(relation);
  ReducedGraph reduced = condense(relation, part);
  std::vector<bool> terminal_component(part.components.size(), false);
  for (NodeId comp : sinks(reduced.graph)) terminal_component[comp] = true;

  Trajectory walk;
  walk.start = start;
  walk.seed = seed;
  walk.steps.push_back(start);
  SplitMix64 rng(seed);

  NodeId current = start;
  for (std::size_t moves = 0;; ++moves) {
    if (is_sink_node(relation, current)) {
      // trailing repeat marks the stay-put move
      walk.steps.push_back(current);
      walk.terminal = Trajectory::Terminal::absorbed_at_nash;
      walk.nash = current;
      return walk;
    }
    std::uint32_t comp = part.component_of[current];
    if (terminal_component[comp] && part.components[comp].size() > 1) {
      walk.terminal = Trajectory::Terminal::cycling_in_fd_equilibrium;
      walk.component = part.components[comp];
      return walk;
    }
    if (moves == max_steps) {
      walk.terminal = Trajectory::Terminal::budget_exhausted;
      return walk;
    }
    current = step_on(relation, current, rng);
    walk.steps.push_back(current);
  }
}

AbsorptionStats absorption_stats(const FdGame& game, NodeId start, std::size_t trials,
                                 std::uint64_t base_seed, std::size_t max_steps) {
  const std::size_t situations = game.situations->size();
  AbsorptionStats stats;
  stats.trials = trials;
  stats.base_seed = base_seed;
  stats.max_steps = max_steps == 0 ? situations * situations : max_steps;
  stats.equilibria = fd_equilibria(game);
  stats.hits.assign(stats.equilibria.size(), 0);

  SplitMix64 seeder(base_seed);  // seed for trial i is the (i+1)-th output
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Trajectory walk = trajectory(game, start, stats.max_steps, seeder.next());
    if (walk.terminal == Trajectory::Terminal::budget_exhausted) {
      ++stats.non_absorbed;
      continue;
    }
    std::vector<NodeId> reached = walk.terminal == Trajectory::Terminal::absorbed_at_nash
                                      ? std::vector<NodeId>{walk.nash}
                                      : walk.component;
    auto it = std::find(stats.equilibria.begin(), stats.equilibria.end(), reached);
    ++stats.hits[static_cast<std::size_t>(it - stats.equilibria.begin())];
  }
  return stats;
}

const char* to_string(EvolutionOutcome outcome) {
  switch (outcome) {
    case EvolutionOutcome::dominance: return "dominance";
    case EvolutionOutcome::bistability: return "bistability";
    case EvolutionOutcome::coexistence: return "coexistence";
    case EvolutionOutcome::neutrality: return "neutrality";
    case EvolutionOutcome::unclassified: return "unclassified";
  }
  return "outcome";
}

EvolutionOutcome classify_two_strategy(const FdGame& game) {
  if (game.situations->size() != 3) {
    throw Error(errc::shape_mismatch, "classification needs exactly three situations");
  }
  Relation relation = fmdc(game);

  // interior node: the unique one adjacent (ignoring direction and
  // self-loops) to both of the others
  std::array<std::array<bool, 3>, 3> adjacent{};
  for (NodeId from = 0; from < 3; ++from) {
    for (NodeId to : relation.out(from)) {
      if (from != to) adjacent[from][to] = adjacent[to][from] = true;
    }
  }
  std::optional<NodeId> interior;
  for (NodeId node = 0; node < 3; ++node) {
    NodeId other1 = (node + 1) % 3;
    NodeId other2 = (node + 2) % 3;
    if (adjacent[node][other1] && adjacent[node][other2]) {
      if (interior) throw Error(errc::shape_mismatch, "no unique interior node");
      interior = node;
    }
  }
  if (!interior) throw Error(errc::shape_mismatch, "situations do not form a line");

  NodeId center = *interior;
  NodeId p = (center + 1) % 3;
  NodeId q = (center + 2) % 3;
  bool cp = relation.has_arc(center, p);
  bool cq = relation.has_arc(center, q);
  bool pc = relation.has_arc(p, center);
  bool qc = relation.has_arc(q, center);
  int arc_count = static_cast<int>(relation.arc_count());

  if (arc_count == 2 && cp && cq) return EvolutionOutcome::bistability;
  if (arc_count == 2 && pc && qc) return EvolutionOutcome::coexistence;
  if (arc_count == 4 && cp && cq && pc && qc) return EvolutionOutcome::neutrality;
  if (arc_count == 2 && ((pc && cq) || (qc && cp))) return EvolutionOutcome::dominance;
  return EvolutionOutcome::unclassified;
}

}  // namespace fdg
