#include "fdg/normal_form.hpp"

#include <numeric>
#include <unordered_set>

namespace fdg {

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw Error(errc::malformed_game, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  // denominators are positive, so cross-multiplication keeps the order
  auto lhs = static_cast<__int128>(a.num) * b.den;
  auto rhs = static_cast<__int128>(b.num) * a.den;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::size_t NormalFormGame::profile_count() const {
  std::size_t count = 1;
  for (const auto& set : strategies) count *= set.size();
  return count;
}

std::size_t NormalFormGame::profile_index(std::span<const std::size_t> coords) const {
  std::size_t index = 0;
  for (std::size_t player = 0; player < strategies.size(); ++player) {
    index = index * strategies[player].size() + coords[player];
  }
  return index;
}

std::vector<std::size_t> NormalFormGame::profile_coords(std::size_t index) const {
  std::vector<std::size_t> coords(strategies.size());
  for (std::size_t player = strategies.size(); player-- > 0;) {
    coords[player] = index % strategies[player].size();
    index /= strategies[player].size();
  }
  return coords;
}

std::string NormalFormGame::profile_name(std::size_t index) const {
  auto coords = profile_coords(index);
  std::string name;
  for (std::size_t player = 0; player < coords.size(); ++player) {
    if (player > 0) name += ",";
    name += strategies[player][coords[player]];
  }
  return name;
}

void check_well_formed(const NormalFormGame& nf) {
  if (nf.players.empty()) throw Error(errc::malformed_game, "game has no players");
  if (nf.strategies.size() != nf.players.size()) {
    throw Error(errc::malformed_game, "one strategy set per player required");
  }
  for (std::size_t player = 0; player < nf.players.size(); ++player) {
    if (nf.strategies[player].empty()) {
      throw Error(errc::malformed_game,
                  "player '" + nf.players[player] + "' has an empty strategy set");
    }
    std::unordered_set<std::string> unique(nf.strategies[player].begin(),
                                           nf.strategies[player].end());
    if (unique.size() != nf.strategies[player].size()) {
      throw Error(errc::malformed_game,
                  "player '" + nf.players[player] + "' has duplicate strategy names");
    }
  }
  if (nf.payoffs.size() != nf.profile_count()) {
    throw Error(errc::malformed_game, "payoff table does not cover every profile");
  }
  for (const auto& row : nf.payoffs) {
    if (row.size() != nf.players.size()) {
      throw Error(errc::malformed_game, "payoff vector arity differs from player count");
    }
  }
}

FdGame to_fd_game(const NormalFormGame& nf) {
  check_well_formed(nf);
  const std::size_t profiles = nf.profile_count();

  std::vector<std::string> situation_names;
  situation_names.reserve(profiles);
  for (std::size_t p = 0; p < profiles; ++p) situation_names.push_back(nf.profile_name(p));

  FdGame game;
  game.situations = intern_universe(std::move(situation_names));
  game.agents = nf.players;

  // stride of player a's coordinate in the row-major profile index
  std::vector<std::size_t> stride(nf.players.size(), 1);
  for (std::size_t player = nf.players.size(); player-- > 1;) {
    stride[player - 1] = stride[player] * nf.strategies[player].size();
  }

  for (std::size_t agent = 0; agent < nf.players.size(); ++agent) {
    const std::size_t options = nf.strategies[agent].size();
    std::vector<std::pair<NodeId, NodeId>> feasible;
    for (std::size_t p = 0; p < profiles; ++p) {
      std::size_t own = (p / stride[agent]) % options;
      for (std::size_t alt = 0; alt < options; ++alt) {
        if (alt == own) continue;
        std::size_t q = p + (alt - own) * stride[agent];
        feasible.emplace_back(static_cast<NodeId>(p), static_cast<NodeId>(q));
      }
    }
    std::vector<std::pair<NodeId, NodeId>> desire;
    for (std::size_t p = 0; p < profiles; ++p) {
      for (std::size_t q = 0; q < profiles; ++q) {
        if (p != q && nf.payoffs[q][agent] > nf.payoffs[p][agent]) {
          desire.emplace_back(static_cast<NodeId>(p), static_cast<NodeId>(q));
        }
      }
    }
    game.feasibility.emplace_back(game.situations, std::move(feasible));
    game.desirability.emplace_back(game.situations, std::move(desire));
  }
  return game;
}

std::vector<std::size_t> pure_nash_oracle(const NormalFormGame& nf) {
  check_well_formed(nf);
  const std::size_t profiles = nf.profile_count();
  std::vector<std::size_t> stride(nf.players.size(), 1);
  for (std::size_t player = nf.players.size(); player-- > 1;) {
    stride[player - 1] = stride[player] * nf.strategies[player].size();
  }

  std::vector<std::size_t> result;
  for (std::size_t p = 0; p < profiles; ++p) {
    bool improvable = false;
    for (std::size_t player = 0; player < nf.players.size() && !improvable; ++player) {
      const std::size_t options = nf.strategies[player].size();
      std::size_t own = (p / stride[player]) % options;
      for (std::size_t alt = 0; alt < options; ++alt) {
        if (alt == own) continue;
        std::size_t q = p + (alt - own) * stride[player];
        if (nf.payoffs[q][player] > nf.payoffs[p][player]) {
          improvable = true;
          break;
        }
      }
    }
    if (!improvable) result.push_back(p);
  }
  return result;
}

}  // namespace fdg
