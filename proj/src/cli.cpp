#include "fdg/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "fdg/emit.hpp"
#include "fdg/formats.hpp"

namespace fdg {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(errc::io_error, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(errc::io_error, "cannot read '" + path + "'");
  return buffer.str();
}

std::uint64_t default_seed() {
  const char* env = std::getenv("FDGAME_SEED");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  unsigned long long value = std::strtoull(env, &end, 10);
  if (end == nullptr || *end != '\0') {
    throw Error(errc::parse_error, std::string("FDGAME_SEED is not an integer: '") + env + "'");
  }
  return value;
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void write_analysis(std::ostream& out, const FdGame& game, const EquilibriumReport& report,
                    const std::string& format, bool dot_reduced) {
  if (format == "json") {
    print_json(out, analyze_json(game, report));
  } else if (format == "dot") {
    out << emit_dot(report, DotOptions{dot_reduced});
  } else {
    out << analyze_text(game, report);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"feasibility/desirability games: equilibria, choice audits, dynamics"};
  app.name("fdgame");
  app.require_subcommand(1);

  std::string game_path;
  std::string format = "text";
  bool dot_reduced = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "equilibrium report for a .fdg game");
  analyze_cmd->add_option("file", game_path, "game file (.fdg)")->required();
  analyze_cmd->add_option("--format", format, "text|json|dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  analyze_cmd->add_flag("--reduced", dot_reduced, "with --format dot: also emit the reduced graph");

  bool emit_fdg = false;
  auto* from_nfg_cmd =
      app.add_subcommand("from-nfg", "abstract a normal-form game and report its equilibria");
  from_nfg_cmd->add_option("file", game_path, "game file (.nfg)")->required();
  from_nfg_cmd->add_flag("--emit-fdg", emit_fdg, "print the converted game in .fdg form instead");
  from_nfg_cmd->add_option("--format", format, "text|json|dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));

  std::size_t max_nodes = 12;
  auto* audit_cmd =
      app.add_subcommand("choice-audit", "exhaustive choice-axiom audit of a game's fmdc relation");
  audit_cmd->add_option("file", game_path, "game file (.fdg)")->required();
  audit_cmd->add_option("--max-nodes", max_nodes, "largest universe the audit accepts (default 12)");
  audit_cmd->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

  std::string start_name;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::size_t max_steps = 0;
  bool dump_trajectories = false;
  auto* evolve_cmd = app.add_subcommand("evolve", "random walks along fmdc arcs, absorption tallies");
  evolve_cmd->add_option("file", game_path, "game file (.fdg)")->required();
  evolve_cmd->add_option("--start", start_name, "start situation")->required();
  evolve_cmd->add_option("--trials", trials, "number of trajectories (default 1000)");
  evolve_cmd->add_option("--seed", seed, "base seed (default: FDGAME_SEED env, then 0)")
      ->each([&seed_given](const std::string&) { seed_given = true; });
  evolve_cmd->add_option("--max-steps", max_steps,
                         "step budget per trajectory (default: situations squared)");
  evolve_cmd->add_flag("--dump-trajectories", dump_trajectories,
                       "print every trajectory as a node-name sequence");
  evolve_cmd->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

  std::string tactic_name;
  auto* blink_cmd = app.add_subcommand("blink", "analyze one tactic of the three-position token game");
  blink_cmd->add_option("--tactic", tactic_name, "foresight|hindsight|omnisight|defeatism")
      ->required()
      ->check(CLI::IsMember({"foresight", "hindsight", "omnisight", "defeatism"}));
  blink_cmd->add_option("--format", format, "text|json|dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));

  std::vector<const char*> argv;
  argv.push_back("fdgame");
  for (const auto& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (analyze_cmd->parsed()) {
      FdGame game = parse_fdg(read_file(game_path));
      write_analysis(out, game, analyze(game), format, dot_reduced);
    } else if (from_nfg_cmd->parsed()) {
      NormalFormGame nf = parse_nfg(read_file(game_path));
      FdGame game = to_fd_game(nf);
      if (emit_fdg) {
        out << serialize_fdg(game);
      } else {
        write_analysis(out, game, analyze(game), format, dot_reduced);
      }
    } else if (audit_cmd->parsed()) {
      FdGame game = parse_fdg(read_file(game_path));
      Relation relation = fmdc(game);
      ChoiceAuditReport report = audit(relation, max_nodes);
      if (format == "json") {
        print_json(out, audit_json(relation, report));
      } else {
        out << audit_text(relation, report);
      }
    } else if (evolve_cmd->parsed()) {
      FdGame game = parse_fdg(read_file(game_path));
      NodeId start = game.situations->id_of(start_name);
      if (!seed_given) seed = default_seed();
      AbsorptionStats stats = absorption_stats(game, start, trials, seed, max_steps);
      Json trajectories = Json::array();
      std::vector<std::string> lines;
      if (dump_trajectories) {
        SplitMix64 seeder(seed);
        for (std::size_t trial = 0; trial < trials; ++trial) {
          Trajectory walk = trajectory(game, start, stats.max_steps, seeder.next());
          if (format == "json") {
            Json names = Json::array();
            for (NodeId s : walk.steps) names.push_back(game.situations->name(s));
            trajectories.push_back(names);
          } else {
            lines.push_back(trajectory_line(game, walk));
          }
        }
      }
      if (format == "json") {
        Json j = evolve_json(game, start, stats);
        if (dump_trajectories) j["trajectories"] = trajectories;
        print_json(out, j);
      } else {
        for (const auto& line : lines) out << line << '\n';
        out << evolve_text(game, start, stats);
      }
    } else if (blink_cmd->parsed()) {
      FdGame game = blink_game(*tactic_from_string(tactic_name));
      EquilibriumReport report = analyze(game);
      EvolutionOutcome outcome = classify_two_strategy(game);
      if (format == "json") {
        Json j;
        j["format_version"] = kJsonFormatVersion;
        j["tactic"] = tactic_name;
        j["classification"] = to_string(outcome);
        Json analysis = analyze_json(game, report);
        for (auto& [key, value] : analysis.items()) {
          if (key != "format_version") j[key] = value;
        }
        print_json(out, j);
      } else if (format == "dot") {
        out << emit_dot(report, DotOptions{dot_reduced});
      } else {
        out << "tactic: " << tactic_name << '\n';
        out << "classification: " << to_string(outcome) << '\n';
        out << analyze_text(game, report);
      }
    }
  } catch (const Error& e) {
    err << to_string(e.code()) << ": " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace fdg
