#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fdg/fd_game.hpp"

namespace fdg {

// Exact rational payoff. Comparisons must be exact because desirability is
// ordinal: a float tie that isn't a tie would invent or drop arcs.
struct Rational {
  long long num = 0;
  long long den = 1;  // always > 0, gcd(num, den) == 1

  Rational() = default;
  Rational(long long n, long long d = 1);

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string str() const;
};

struct NormalFormGame {
  std::vector<std::string> players;
  std::vector<std::vector<std::string>> strategies;  // per player, nonempty
  // payoffs[profile][player]; profiles are row-major (player 0 varies slowest)
  std::vector<std::vector<Rational>> payoffs;

  std::size_t profile_count() const;
  std::size_t profile_index(std::span<const std::size_t> coords) const;
  std::vector<std::size_t> profile_coords(std::size_t index) const;
  std::string profile_name(std::size_t index) const;  // strategy names joined with ","
};

// Throws Error(malformed_game) on structural problems (empty strategy
// sets, duplicate names, payoff table of the wrong shape).
void check_well_formed(const NormalFormGame& nf);

// Abstraction into an FD game: situations are profiles; an agent can move
// between profiles differing only in its own coordinate; it desires any
// profile paying it strictly more, feasible or not.
FdGame to_fd_game(const NormalFormGame& nf);

// Pure Nash profiles by direct best-response scan; deliberately does not
// touch the FdGame path so the two can check each other.
std::vector<std::size_t> pure_nash_oracle(const NormalFormGame& nf);

}  // namespace fdg
