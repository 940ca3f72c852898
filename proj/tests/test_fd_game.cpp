#include <algorithm>
#include <set>

#include "doctest.h"
#include "fdg/fd_game.hpp"
#include "support.hpp"

using namespace fdg;
using fdg::test::bos_game;
using fdg::test::hidden_coins_fmdc_game;
using fdg::test::matching_pennies_game;
using fdg::test::names_of;
using fdg::test::pd_game;
using fdg::test::random_game;
using fdg::test::wonderland_game;

namespace {

std::set<std::pair<std::string, std::string>> named_arcs(const Relation& rel) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [from, to] : rel.arcs()) {
    out.insert({rel.universe().name(from), rel.universe().name(to)});
  }
  return out;
}

std::vector<std::vector<std::string>> named_sets(const NameTable& names,
                                                 const std::vector<std::vector<NodeId>>& sets) {
  std::vector<std::vector<std::string>> out;
  for (const auto& set : sets) {
    auto named = names_of(names, set);
    std::sort(named.begin(), named.end());
    out.push_back(named);
  }
  return out;
}

// direct reading of the equilibrium definition, bypassing fmdc(): no agent
// has a feasible move it desires
bool nash_by_scan(const FdGame& game, NodeId s) {
  for (AgentId a = 0; a < game.agents.size(); ++a) {
    for (NodeId to : game.feasibility[a].out(s)) {
      if (to != s && game.desirability[a].has_arc(s, to)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("fd-game") {

TEST_CASE("per-agent choice relation is the feasibility/desirability intersection") {
  FdGame pd = pd_game();
  Relation row = fmdc_agent(pd, 0);
  CHECK(named_arcs(row) ==
        std::set<std::pair<std::string, std::string>>{{"QQ", "FQ"}, {"QF", "FF"}});

  SUBCASE("empty desirability gives an empty relation") {
    FdGame game = pd;
    game.desirability[0] = Relation(game.situations, {});
    CHECK(fmdc_agent(game, 0).arc_count() == 0);
  }

  SUBCASE("desirability inside feasibility is absorbed") {
    FdGame game = pd;
    game.feasibility[0] = reflexive_transitive_closure(
        Relation(game.situations, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
    Relation desire(game.situations, {{0, 3}, {2, 1}});
    game.desirability[0] = desire;
    CHECK(fmdc_agent(game, 0) == desire);
  }

  CHECK_THROWS_AS(fmdc_agent(pd, 9), Error);
}

TEST_CASE("global choice relation on the worked two-player games") {
  CHECK(named_arcs(fmdc(pd_game())) ==
        std::set<std::pair<std::string, std::string>>{
            {"QQ", "QF"}, {"QQ", "FQ"}, {"QF", "FF"}, {"FQ", "FF"}});
  CHECK(named_arcs(fmdc(matching_pennies_game())) ==
        std::set<std::pair<std::string, std::string>>{
            {"HH", "HT"}, {"HT", "TT"}, {"TT", "TH"}, {"TH", "HH"}});

  FdGame solo = pd_game();
  solo.agents.pop_back();
  solo.feasibility.pop_back();
  solo.desirability.pop_back();
  CHECK(fmdc(solo) == fmdc_agent(solo, 0));
}

TEST_CASE("abstract nash equilibria of the worked games") {
  FdGame pd = pd_game();
  CHECK(names_of(*pd.situations, abstract_nash(pd)) == std::vector<std::string>{"FF"});

  FdGame bos = bos_game();
  CHECK(names_of(*bos.situations, abstract_nash(bos)) == std::vector<std::string>{"BB", "SS"});

  CHECK(abstract_nash(matching_pennies_game()).empty());
}

TEST_CASE("fd equilibria are the terminal components, smallest member first") {
  FdGame hidden = hidden_coins_fmdc_game();
  CHECK(named_sets(*hidden.situations, fd_equilibria(hidden)) ==
        std::vector<std::vector<std::string>>{{"NN"}, {"HH", "HT", "TH", "TT"}});

  FdGame quest = wonderland_game();
  CHECK(named_sets(*quest.situations, fd_equilibria(quest)) ==
        std::vector<std::vector<std::string>>{{"D"}, {"E", "H"}, {"C", "F", "G"}});
  // universe follows the map layout, so {D} sorts first
  CHECK(fd_equilibria(quest)[0] == std::vector<NodeId>{0});

  FdGame pd = pd_game();
  for (AgentId a = 0; a < pd.agents.size(); ++a) {
    std::vector<std::pair<NodeId, NodeId>> extra = {{3, 0}, {0, 3}};
    for (auto arc : pd.feasibility[a].arcs()) extra.push_back(arc);
    pd.feasibility[a] = Relation(pd.situations, std::move(extra));
  }
  CHECK(named_sets(*pd.situations, fd_equilibria(pd)) ==
        std::vector<std::vector<std::string>>{{"FF", "FQ", "QF", "QQ"}});
}

TEST_CASE("analyze bundles the constituent operations consistently") {
  FdGame quest = wonderland_game();
  EquilibriumReport report = analyze(quest);
  CHECK(report.fmdc == fmdc(quest));
  CHECK(report.abstract_nash == abstract_nash(quest));
  CHECK(report.fd_equilibria == fd_equilibria(quest));
  CHECK(names_of(*quest.situations, report.abstract_nash) == std::vector<std::string>{"D"});

  SUBCASE("no desirability anywhere makes every situation an equilibrium") {
    FdGame inert = quest;
    for (auto& rel : inert.desirability) rel = Relation(inert.situations, {});
    CHECK(abstract_nash(inert).size() == inert.situations->size());
  }
}

TEST_CASE("validate flags unknown situations, duplicate agents, empty games") {
  GameSketch pd_sketch;
  pd_sketch.situations = {"QQ", "QF", "FQ", "FF"};
  pd_sketch.agents = {{"row", {{"QQ", "FQ"}}, {{"QQ", "FQ"}}}};
  CHECK(validate(pd_sketch).empty());

  GameSketch broken = pd_sketch;
  broken.agents[0].desire.push_back({"QQ", "Z"});
  auto diagnostics = validate(broken);
  REQUIRE(diagnostics.size() == 1);
  CHECK(diagnostics[0].kind == Diagnostic::Kind::unknown_situation);
  CHECK(diagnostics[0].detail == "Z");
  CHECK_THROWS_AS(build_game(broken), Error);

  GameSketch twice = pd_sketch;
  twice.agents.push_back({"row", {}, {}});
  auto dup = validate(twice);
  REQUIRE(dup.size() == 1);
  CHECK(dup[0].kind == Diagnostic::Kind::duplicate_agent);

  GameSketch empty;
  auto missing = validate(empty);
  CHECK(missing.size() == 2);  // no situations, no agents

  CHECK(validate(pd_game()).empty());
  FdGame mangled = pd_game();
  mangled.desirability.pop_back();
  CHECK(validate(mangled).size() == 1);
}

TEST_CASE("random games: the sink and definitional equilibrium views agree") {
  SplitMix64 rng(0x90991u);
  for (int round = 0; round < 300; ++round) {
    FdGame game = random_game(rng);
    Relation choice = fmdc(game);

    for (AgentId a = 0; a < game.agents.size(); ++a) {
      for (auto [from, to] : fmdc_agent(game, a).arcs()) {
        CHECK(game.feasibility[a].has_arc(from, to));
        CHECK(game.desirability[a].has_arc(from, to));
      }
    }

    std::vector<NodeId> nash = abstract_nash(game);
    CHECK(nash == sinks(choice));
    for (NodeId s = 0; s < game.situations->size(); ++s) {
      CHECK(std::binary_search(nash.begin(), nash.end(), s) == nash_by_scan(game, s));
    }
  }
}

TEST_CASE("random games: equilibrium structure") {
  SplitMix64 rng(0x90992u);
  for (int round = 0; round < 300; ++round) {
    FdGame game = random_game(rng);
    std::vector<NodeId> nash = abstract_nash(game);
    auto equilibria = fd_equilibria(game);

    // an equilibrium set always exists
    CHECK(!equilibria.empty());

    // pairwise disjoint
    std::set<NodeId> all_members;
    std::size_t total = 0;
    for (const auto& members : equilibria) {
      all_members.insert(members.begin(), members.end());
      total += members.size();
    }
    CHECK(all_members.size() == total);

    // singleton equilibria are exactly the abstract nash situations
    std::vector<NodeId> singletons;
    for (const auto& members : equilibria) {
      if (members.size() == 1) singletons.push_back(members.front());
    }
    std::sort(singletons.begin(), singletons.end());
    CHECK(singletons == nash);

    // every situation reaches some equilibrium along the choice relation
    Relation reach = reflexive_transitive_closure(fmdc(game));
    for (NodeId s = 0; s < game.situations->size(); ++s) {
      bool reaches = false;
      for (const auto& members : equilibria) {
        for (NodeId target : members) {
          if (reach.has_arc(s, target)) {
            reaches = true;
            break;
          }
        }
        if (reaches) break;
      }
      CHECK(reaches);
    }
  }
}

}  // TEST_SUITE
