#include "fdg/formats.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace fdg {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

[[noreturn]] void fail(errc code, std::size_t line, std::size_t column, const std::string& what) {
  throw Error(code, "line " + std::to_string(line) + ", col " + std::to_string(column) + ": " + what);
}

}  // namespace

bool valid_name(std::string_view token) {
  if (token.empty()) return false;
  for (char c : token) {
    bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
              c == '_' || c == ',' || c == '(' || c == ')';
    if (!ok) return false;
  }
  return true;
}

FdGame parse_fdg(std::string_view text) {
  GameSketch sketch;
  bool saw_situations = false;
  std::unordered_set<std::string> situations;
  std::unordered_set<std::string> agent_names;

  auto require_name = [](const Token& token, std::size_t line) {
    if (!valid_name(token.text)) {
      fail(errc::parse_error, line, token.column,
           "name '" + std::string(token.text) + "' has characters outside [A-Za-z0-9_,()]");
    }
  };

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view line = text.substr(
        start, end == std::string_view::npos ? text.size() - start : end - start);
    ++line_no;
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;

    std::vector<Token> tokens = tokenize(line);
    if (tokens.empty() || tokens.front().text.front() == '#') continue;
    std::string_view keyword = tokens.front().text;

    if (keyword == "situations") {
      if (saw_situations) {
        fail(errc::duplicate_situations_line, line_no, tokens.front().column,
             "a game has a single situations line");
      }
      saw_situations = true;
      if (tokens.size() < 2) {
        fail(errc::parse_error, line_no, tokens.front().column, "situations line needs names");
      }
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        require_name(tokens[i], line_no);
        std::string name(tokens[i].text);
        if (!situations.insert(name).second) {
          fail(errc::duplicate_name, line_no, tokens[i].column,
               "duplicate situation '" + name + "'");
        }
        sketch.situations.push_back(std::move(name));
      }
    } else if (keyword == "agent") {
      if (tokens.size() != 2) {
        fail(errc::parse_error, line_no, tokens.front().column, "agent line needs one name");
      }
      require_name(tokens[1], line_no);
      std::string name(tokens[1].text);
      if (!agent_names.insert(name).second) {
        fail(errc::duplicate_name, line_no, tokens[1].column, "duplicate agent '" + name + "'");
      }
      sketch.agents.push_back({std::move(name), {}, {}});
    } else if (keyword == "feasible" || keyword == "desire") {
      if (tokens.size() != 4 || (tokens[2].text != "->" && tokens[2].text != "<->")) {
        fail(errc::parse_error, line_no, tokens.front().column,
             std::string(keyword) + " line must be '" + std::string(keyword) +
                 " <name> -> <name>' or with '<->'");
      }
      if (!saw_situations) {
        fail(errc::parse_error, line_no, tokens.front().column,
             "the situations line must precede arcs");
      }
      if (sketch.agents.empty()) {
        fail(errc::arc_before_agent, line_no, tokens.front().column,
             "arc line before any agent line");
      }
      require_name(tokens[1], line_no);
      require_name(tokens[3], line_no);
      for (std::size_t i : {std::size_t{1}, std::size_t{3}}) {
        if (!situations.count(std::string(tokens[i].text))) {
          fail(errc::unknown_name, line_no, tokens[i].column,
               "unknown situation '" + std::string(tokens[i].text) + "'");
        }
      }
      auto& agent = sketch.agents.back();
      auto& arcs = keyword == "feasible" ? agent.feasible : agent.desire;
      std::string from(tokens[1].text);
      std::string to(tokens[3].text);
      arcs.emplace_back(from, to);
      if (tokens[2].text == "<->") arcs.emplace_back(to, from);
    } else {
      fail(errc::parse_error, line_no, tokens.front().column,
           "unknown keyword '" + std::string(keyword) + "'");
    }
  }

  if (!saw_situations) {
    fail(errc::parse_error, line_no, 1, "missing situations line");
  }
  if (sketch.agents.empty()) {
    fail(errc::parse_error, line_no, 1, "missing agent line");
  }
  return build_game(sketch);
}

std::string serialize_fdg(const FdGame& game) {
  std::ostringstream out;
  out << "situations";
  for (const auto& name : game.situations->names()) out << ' ' << name;
  out << '\n';
  for (AgentId agent = 0; agent < game.agents.size(); ++agent) {
    out << "agent " << game.agents[agent] << '\n';
    for (auto [from, to] : game.feasibility[agent].arcs()) {
      out << "feasible " << game.situations->name(from) << " -> " << game.situations->name(to)
          << '\n';
    }
    for (auto [from, to] : game.desirability[agent].arcs()) {
      out << "desire " << game.situations->name(from) << " -> " << game.situations->name(to)
          << '\n';
    }
  }
  return out.str();
}

namespace {

long long parse_integer(const Token& token, std::size_t line) {
  long long value = 0;
  const char* first = token.text.data();
  const char* last = first + token.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    fail(errc::parse_error, line, token.column,
         "expected an integer, got '" + std::string(token.text) + "'");
  }
  return value;
}

std::vector<std::string> split_profile(std::string_view text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) {
      parts.emplace_back(text.substr(start));
      return parts;
    }
    parts.emplace_back(text.substr(start, comma - start));
    start = comma + 1;
  }
}

}  // namespace

NormalFormGame parse_nfg(std::string_view text) {
  NormalFormGame nf;
  std::unordered_map<std::string, std::size_t> player_index;
  std::vector<std::unordered_map<std::string, std::size_t>> strategy_index;
  std::vector<bool> payoff_seen;
  std::vector<std::vector<Rational>> payoffs;
  bool saw_players = false;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view line = text.substr(
        start, end == std::string_view::npos ? text.size() - start : end - start);
    ++line_no;
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;

    std::vector<Token> tokens = tokenize(line);
    if (tokens.empty() || tokens.front().text.front() == '#') continue;
    std::string_view keyword = tokens.front().text;

    if (keyword == "players") {
      if (saw_players) {
        fail(errc::parse_error, line_no, tokens.front().column, "duplicate players line");
      }
      saw_players = true;
      if (tokens.size() < 2) {
        fail(errc::parse_error, line_no, tokens.front().column, "players line needs names");
      }
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        std::string name(tokens[i].text);
        if (!player_index.emplace(name, nf.players.size()).second) {
          fail(errc::parse_error, line_no, tokens[i].column, "duplicate player '" + name + "'");
        }
        nf.players.push_back(std::move(name));
      }
      nf.strategies.resize(nf.players.size());
      strategy_index.resize(nf.players.size());
    } else if (keyword == "strategies") {
      if (!saw_players) {
        fail(errc::parse_error, line_no, tokens.front().column,
             "players line must precede strategies");
      }
      if (tokens.size() < 3) {
        fail(errc::parse_error, line_no, tokens.front().column,
             "strategies line needs a player and names");
      }
      auto it = player_index.find(std::string(tokens[1].text));
      if (it == player_index.end()) {
        fail(errc::parse_error, line_no, tokens[1].column,
             "unknown player '" + std::string(tokens[1].text) + "'");
      }
      std::size_t player = it->second;
      if (!nf.strategies[player].empty()) {
        fail(errc::parse_error, line_no, tokens[1].column,
             "duplicate strategies line for '" + nf.players[player] + "'");
      }
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        std::string name(tokens[i].text);
        if (!strategy_index[player].emplace(name, nf.strategies[player].size()).second) {
          fail(errc::parse_error, line_no, tokens[i].column,
               "duplicate strategy '" + name + "'");
        }
        nf.strategies[player].push_back(std::move(name));
      }
    } else if (keyword == "payoff") {
      if (!saw_players) {
        fail(errc::parse_error, line_no, tokens.front().column,
             "players line must precede payoffs");
      }
      for (std::size_t player = 0; player < nf.players.size(); ++player) {
        if (nf.strategies[player].empty()) {
          fail(errc::parse_error, line_no, tokens.front().column,
               "strategies for '" + nf.players[player] + "' must precede payoffs");
        }
      }
      if (payoff_seen.empty()) {
        payoff_seen.assign(nf.profile_count(), false);
        payoffs.assign(nf.profile_count(), {});
      }
      if (tokens.size() < 3 || tokens[2].text != "=") {
        fail(errc::parse_error, line_no, tokens.front().column,
             "payoff line must be 'payoff <profile> = <int>+'");
      }
      std::vector<std::string> parts = split_profile(tokens[1].text);
      if (parts.size() != nf.players.size()) {
        fail(errc::arity_mismatch, line_no, tokens[1].column,
             "profile has " + std::to_string(parts.size()) + " coordinates for " +
                 std::to_string(nf.players.size()) + " players");
      }
      std::vector<std::size_t> coords(parts.size());
      for (std::size_t player = 0; player < parts.size(); ++player) {
        auto strat = strategy_index[player].find(parts[player]);
        if (strat == strategy_index[player].end()) {
          fail(errc::parse_error, line_no, tokens[1].column,
               "unknown strategy '" + parts[player] + "' for player '" + nf.players[player] +
                   "'");
        }
        coords[player] = strat->second;
      }
      if (tokens.size() - 3 != nf.players.size()) {
        fail(errc::arity_mismatch, line_no, tokens.front().column,
             "expected " + std::to_string(nf.players.size()) + " payoffs, got " +
                 std::to_string(tokens.size() - 3));
      }
      std::size_t profile = nf.profile_index(coords);
      if (payoff_seen[profile]) {
        fail(errc::parse_error, line_no, tokens[1].column,
             "duplicate payoff line for profile '" + std::string(tokens[1].text) + "'");
      }
      payoff_seen[profile] = true;
      for (std::size_t player = 0; player < nf.players.size(); ++player) {
        payoffs[profile].emplace_back(parse_integer(tokens[3 + player], line_no));
      }
    } else {
      fail(errc::parse_error, line_no, tokens.front().column,
           "unknown keyword '" + std::string(keyword) + "'");
    }
  }

  if (!saw_players) fail(errc::parse_error, line_no, 1, "missing players line");
  for (std::size_t player = 0; player < nf.players.size(); ++player) {
    if (nf.strategies[player].empty()) {
      fail(errc::parse_error, line_no, 1,
           "missing strategies line for '" + nf.players[player] + "'");
    }
  }
  if (payoff_seen.empty()) payoff_seen.assign(nf.profile_count(), false);
  for (std::size_t profile = 0; profile < payoff_seen.size(); ++profile) {
    if (!payoff_seen[profile]) {
      throw Error(errc::missing_profile,
                  "missing payoff line for profile '" + nf.profile_name(profile) + "'");
    }
  }
  nf.payoffs = std::move(payoffs);
  check_well_formed(nf);
  return nf;
}

}  // namespace fdg
