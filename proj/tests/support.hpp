#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fdg/evolution.hpp"
#include "fdg/fd_game.hpp"
#include "fdg/relation.hpp"

namespace fdg::test {

using NamedArcs = std::vector<std::pair<std::string, std::string>>;

inline Relation make_relation(std::vector<std::string> names, const NamedArcs& named_arcs) {
  auto universe = intern_universe(std::move(names));
  std::vector<std::pair<NodeId, NodeId>> arcs;
  for (const auto& [from, to] : named_arcs) {
    arcs.emplace_back(universe->id_of(from), universe->id_of(to));
  }
  return Relation(universe, std::move(arcs));
}

inline std::vector<NodeId> ids(const NameTable& names, const std::vector<std::string>& wanted) {
  std::vector<NodeId> out;
  for (const auto& name : wanted) out.push_back(names.id_of(name));
  return out;
}

inline std::vector<std::string> names_of(const NameTable& names, const std::vector<NodeId>& nodes) {
  std::vector<std::string> out;
  for (NodeId node : nodes) out.push_back(names.name(node));
  return out;
}

// deterministic generators for the property suites

inline std::vector<std::string> numbered_names(std::size_t count, const std::string& prefix = "n") {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

inline Relation random_relation(SplitMix64& rng, std::size_t node_count, int arc_percent,
                                bool allow_self_loops = true) {
  std::vector<std::pair<NodeId, NodeId>> arcs;
  for (NodeId from = 0; from < node_count; ++from) {
    for (NodeId to = 0; to < node_count; ++to) {
      if (!allow_self_loops && from == to) continue;
      if (rng.below(100) < static_cast<std::uint64_t>(arc_percent)) arcs.emplace_back(from, to);
    }
  }
  return Relation(intern_universe(numbered_names(node_count)), std::move(arcs));
}

// arcs only from earlier to later nodes of a random permutation
inline Relation random_acyclic_relation(SplitMix64& rng, std::size_t node_count, int arc_percent) {
  std::vector<NodeId> order(node_count);
  for (NodeId i = 0; i < node_count; ++i) order[i] = i;
  for (std::size_t i = node_count; i > 1; --i) {
    std::swap(order[i - 1], order[static_cast<std::size_t>(rng.below(i))]);
  }
  std::vector<std::pair<NodeId, NodeId>> arcs;
  for (std::size_t i = 0; i < node_count; ++i) {
    for (std::size_t j = i + 1; j < node_count; ++j) {
      if (rng.below(100) < static_cast<std::uint64_t>(arc_percent)) {
        arcs.emplace_back(order[i], order[j]);
      }
    }
  }
  return Relation(intern_universe(numbered_names(node_count)), std::move(arcs));
}

inline FdGame random_game(SplitMix64& rng, std::size_t max_situations = 12,
                          std::size_t max_agents = 4) {
  std::size_t situations = 1 + static_cast<std::size_t>(rng.below(max_situations));
  std::size_t agents = 1 + static_cast<std::size_t>(rng.below(max_agents));
  FdGame game;
  game.situations = intern_universe(numbered_names(situations, "s"));
  for (std::size_t a = 0; a < agents; ++a) {
    game.agents.push_back("a" + std::to_string(a));
    std::vector<std::pair<NodeId, NodeId>> feasible;
    std::vector<std::pair<NodeId, NodeId>> desire;
    for (NodeId from = 0; from < situations; ++from) {
      for (NodeId to = 0; to < situations; ++to) {
        if (rng.below(100) < 25) feasible.emplace_back(from, to);
        if (rng.below(100) < 25) desire.emplace_back(from, to);
      }
    }
    game.feasibility.emplace_back(game.situations, std::move(feasible));
    game.desirability.emplace_back(game.situations, std::move(desire));
  }
  return game;
}

// paper games built straight from the figures, independent of the parser

inline FdGame pd_game() {
  GameSketch sketch;
  sketch.situations = {"QQ", "QF", "FQ", "FF"};
  sketch.agents = {
      {"row",
       {{"QQ", "FQ"}, {"FQ", "QQ"}, {"QF", "FF"}, {"FF", "QF"}},
       {{"QF", "QQ"}, {"FF", "FQ"}, {"QQ", "FQ"}, {"QF", "FF"}, {"FF", "QQ"}, {"QF", "FQ"}}},
      {"col",
       {{"QQ", "QF"}, {"QF", "QQ"}, {"FQ", "FF"}, {"FF", "FQ"}},
       {{"QQ", "QF"}, {"FQ", "FF"}, {"FQ", "QQ"}, {"FF", "QF"}, {"FF", "QQ"}, {"FQ", "QF"}}}};
  return build_game(sketch);
}

inline FdGame matching_pennies_game() {
  GameSketch sketch;
  sketch.situations = {"HH", "HT", "TH", "TT"};
  sketch.agents = {
      {"row",
       {{"HH", "TH"}, {"TH", "HH"}, {"HT", "TT"}, {"TT", "HT"}},
       {{"TH", "HH"}, {"HT", "TT"}, {"HT", "HH"}, {"TH", "TT"}}},
      {"col",
       {{"HH", "HT"}, {"HT", "HH"}, {"TH", "TT"}, {"TT", "TH"}},
       {{"HH", "HT"}, {"TT", "TH"}, {"HH", "TH"}, {"TT", "HT"}}}};
  return build_game(sketch);
}

inline FdGame bos_game() {
  GameSketch sketch;
  sketch.situations = {"BB", "BS", "SB", "SS"};
  sketch.agents = {
      {"row",
       {{"BB", "SB"}, {"SB", "BB"}, {"BS", "SS"}, {"SS", "BS"}},
       {{"BS", "BB"}, {"SB", "SS"}, {"SB", "BB"}, {"BS", "SS"}, {"BB", "SS"}}},
      {"col",
       {{"BB", "BS"}, {"BS", "BB"}, {"SB", "SS"}, {"SS", "SB"}},
       {{"BS", "BB"}, {"SB", "SS"}, {"SB", "BB"}, {"BS", "SS"}, {"SS", "BB"}}}};
  return build_game(sketch);
}

inline FdGame wonderland_game() {
  GameSketch sketch;
  sketch.situations = {"D", "H", "B", "E", "A", "F", "C", "G"};
  sketch.agents = {
      {"redship",
       {{"A", "B"}, {"B", "D"}, {"C", "B"}, {"F", "G"}, {"H", "E"}},
       {{"A", "B"}, {"B", "D"}, {"B", "E"}, {"H", "E"}, {"C", "G"}, {"F", "G"}}},
      {"blueship",
       {{"C", "F"}, {"A", "C"}, {"G", "C"}, {"B", "E"}, {"B", "C"}, {"E", "H"}, {"H", "E"}},
       {{"A", "C"}, {"B", "E"}, {"E", "H"}, {"G", "C"}, {"C", "F"}, {"B", "C"}}}};
  return build_game(sketch);
}

// FMDC of the hidden-coins game, given directly as a one-agent game whose
// feasibility and desirability coincide (handy for dynamics tests)
inline FdGame hidden_coins_fmdc_game() {
  GameSketch sketch;
  sketch.situations = {"NN", "NH", "NT", "HN", "HH", "HT", "TN", "TH", "TT"};
  NamedArcs arcs = {{"NH", "NN"}, {"HN", "NN"}, {"NH", "HH"}, {"HN", "HH"},
                    {"NT", "HT"}, {"TN", "TH"}, {"TT", "TH"}, {"TH", "HH"},
                    {"HH", "HT"}, {"HT", "TT"}, {"NT", "NN"}, {"TN", "NN"}};
  sketch.agents = {{"walker", arcs, arcs}};
  return build_game(sketch);
}

}  // namespace fdg::test
