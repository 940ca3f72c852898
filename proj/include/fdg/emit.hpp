#pragma once

#include <string>

#include "json.hpp"

#include "fdg/choice.hpp"
#include "fdg/evolution.hpp"
#include "fdg/fd_game.hpp"

namespace fdg {

using Json = nlohmann::ordered_json;

// Every JSON document carries "format_version": 1.
inline constexpr int kJsonFormatVersion = 1;

std::string analyze_text(const FdGame& game, const EquilibriumReport& report);
Json analyze_json(const FdGame& game, const EquilibriumReport& report);

std::string audit_text(const Relation& rel, const ChoiceAuditReport& report);
Json audit_json(const Relation& rel, const ChoiceAuditReport& report);

std::string evolve_text(const FdGame& game, NodeId start, const AbsorptionStats& stats);
Json evolve_json(const FdGame& game, NodeId start, const AbsorptionStats& stats);

std::string trajectory_line(const FdGame& game, const Trajectory& walk);

struct DotOptions {
  bool include_reduced = false;  // append a second digraph of the condensation
};

// DOT rendering of the FMDC relation: abstract Nash nodes get a doubled
// periphery, each multi-node FD equilibrium becomes a labeled cluster.
std::string emit_dot(const EquilibriumReport& report, const DotOptions& options = {});

}  // namespace fdg
