#pragma once

#include <string>
#include <string_view>

#include "fdg/fd_game.hpp"
#include "fdg/normal_form.hpp"

namespace fdg {

// Line-oriented game description:
//
//   situations <name>+
//   agent <name>
//   feasible <name> -> <name>     (or <->, which expands to both arcs)
//   desire <name> -> <name>       (or <->)
//   # comment
//
// Names match [A-Za-z0-9_,()]+. The situations line comes first and
// appears once; arc lines attach to the most recent agent line.
FdGame parse_fdg(std::string_view text);

// Canonical form: one situations line, then per agent its feasible and
// desire arcs in index order, "->" only. parse(serialize(g)) == g.
std::string serialize_fdg(const FdGame& game);

// Payoff-matrix text:
//
//   players <name>+
//   strategies <player> <name>+
//   payoff <strat>,<strat>[,<strat>...] = <int>[ <int>...]
//
// One payoff line per profile, integers in player order; every profile in
// the cartesian product must appear exactly once.
NormalFormGame parse_nfg(std::string_view text);

bool valid_name(std::string_view token);

}  // namespace fdg
