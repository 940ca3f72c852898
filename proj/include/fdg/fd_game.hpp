#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fdg/relation.hpp"

namespace fdg {

using AgentId = std::uint32_t;

// The game is a plain value: agents plus one feasibility and one
// desirability relation per agent, all over a shared situation universe.
struct FdGame {
  std::shared_ptr<const NameTable> situations;
  std::vector<std::string> agents;
  std::vector<Relation> feasibility;   // indexed by AgentId
  std::vector<Relation> desirability;  // indexed by AgentId
};

// Name-level description before interning; what parsers and programmatic
// builders produce. Arcs may reference situations that do not exist —
// validate() reports that instead of crashing.
struct GameSketch {
  struct Agent {
    std::string name;
    std::vector<std::pair<std::string, std::string>> feasible;
    std::vector<std::pair<std::string, std::string>> desire;
  };
  std::vector<std::string> situations;
  std::vector<Agent> agents;
};

struct Diagnostic {
  enum class Kind {
    empty_universe,
    duplicate_situation,
    unknown_situation,
    duplicate_agent,
    no_agents,
    missing_relation,
    universe_mismatch,
  };
  Kind kind;
  std::string detail;
};

const char* to_string(Diagnostic::Kind kind);

std::vector<Diagnostic> validate(const GameSketch& sketch);
std::vector<Diagnostic> validate(const FdGame& game);

// Interns the sketch; throws Error(validation_failed) listing every
// diagnostic if the sketch is not clean.
FdGame build_game(const GameSketch& sketch);

// Per-agent feasible-and-more-desirable-choice: feasibility ∩ desirability.
Relation fmdc_agent(const FdGame& game, AgentId agent);

// Union of every agent's FMDC; the single relation all analysis runs on.
Relation fmdc(const FdGame& game);

// Sinks of the FMDC relation: situations no agent can profitably leave.
std::vector<NodeId> abstract_nash(const FdGame& game);

// Terminal SCCs of the FMDC relation, sorted by smallest member index.
std::vector<std::vector<NodeId>> fd_equilibria(const FdGame& game);

struct EquilibriumReport {
  Relation fmdc;
  ReducedGraph reduced;
  std::vector<NodeId> abstract_nash;
  std::vector<std::vector<NodeId>> fd_equilibria;
};

EquilibriumReport analyze(const FdGame& game);

}  // namespace fdg
