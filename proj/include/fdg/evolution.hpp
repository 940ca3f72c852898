#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "fdg/fd_game.hpp"

namespace fdg {

// The four feasibility shapes of the three-position token game.
enum class Tactic { foresight, hindsight, omnisight, defeatism };

const char* to_string(Tactic tactic);
std::optional<Tactic> tactic_from_string(std::string_view name);

FdGame blink_game(Tactic tactic);

// Portable seedable generator (SplitMix64). Fixed here and documented in
// the README so simulations reproduce bit-for-bit across platforms.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, n); n > 0. Remainder method: the bias at these n is
  // far below anything the tests can see, and the rule stays one line.
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

// Stream derivation: trial i uses the (i+1)-th output of SplitMix64
// seeded with the base seed.
std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t index);

// One move along the FMDC relation: a uniformly random out-neighbor other
// than s itself; s when nothing leaves s.
NodeId step(const FdGame& game, NodeId s, SplitMix64& rng);

struct Trajectory {
  enum class Terminal { absorbed_at_nash, cycling_in_fd_equilibrium, budget_exhausted };

  NodeId start = 0;
  std::vector<NodeId> steps;  // visited nodes, steps.front() == start
  Terminal terminal = Terminal::budget_exhausted;
  NodeId nash = 0;                 // set when absorbed
  std::vector<NodeId> component;   // set when cycling
  std::uint64_t seed = 0;

  bool operator==(const Trajectory&) const = default;
};

Trajectory trajectory(const FdGame& game, NodeId start, std::size_t max_steps,
                      std::uint64_t seed);

struct AbsorptionStats {
  std::size_t trials = 0;
  std::uint64_t base_seed = 0;
  std::size_t max_steps = 0;
  std::vector<std::vector<NodeId>> equilibria;  // fd_equilibria order
  std::vector<std::size_t> hits;                // aligned with equilibria
  std::size_t non_absorbed = 0;
};

// Runs `trials` independent trajectories with derived seeds and tallies
// which FD equilibrium absorbed each one. max_steps == 0 means |S|².
AbsorptionStats absorption_stats(const FdGame& game, NodeId start, std::size_t trials,
                                 std::uint64_t base_seed, std::size_t max_steps = 0);

enum class EvolutionOutcome { dominance, bistability, coexistence, neutrality, unclassified };

const char* to_string(EvolutionOutcome outcome);

// Classifies a three-situation line game by its FMDC arc pattern around
// the interior node. Throws ShapeMismatch when there is no unique
// interior node adjacent to both others.
EvolutionOutcome classify_two_strategy(const FdGame& game);

}  // namespace fdg
