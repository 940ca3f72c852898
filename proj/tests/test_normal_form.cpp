#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "fdg/normal_form.hpp"
#include "support.hpp"

using namespace fdg;
using fdg::test::names_of;

namespace {

NormalFormGame pd_nf() {
  return NormalFormGame{{"row", "col"},
                        {{"Q", "F"}, {"Q", "F"}},
                        {{{2}, {2}}, {{0}, {3}}, {{3}, {0}}, {{1}, {1}}}};
}

NormalFormGame bos_nf() {
  return NormalFormGame{{"row", "col"},
                        {{"B", "S"}, {"B", "S"}},
                        {{{2}, {1}}, {{0}, {0}}, {{0}, {0}}, {{1}, {2}}}};
}

NormalFormGame matching_pennies_nf() {
  return NormalFormGame{{"row", "col"},
                        {{"H", "T"}, {"H", "T"}},
                        {{{1}, {-1}}, {{-1}, {1}}, {{-1}, {1}}, {{1}, {-1}}}};
}

NormalFormGame random_nf(SplitMix64& rng) {
  std::size_t players = 1 + static_cast<std::size_t>(rng.below(3));
  NormalFormGame nf;
  for (std::size_t p = 0; p < players; ++p) {
    nf.players.push_back("p" + std::to_string(p));
    std::size_t options = 1 + static_cast<std::size_t>(rng.below(3));
    std::vector<std::string> names;
    for (std::size_t s = 0; s < options; ++s) names.push_back("s" + std::to_string(s));
    nf.strategies.push_back(std::move(names));
  }
  nf.payoffs.resize(nf.profile_count());
  for (auto& row : nf.payoffs) {
    for (std::size_t p = 0; p < players; ++p) {
      row.emplace_back(static_cast<long long>(rng.below(11)) - 5);
    }
  }
  return nf;
}

}  // namespace

TEST_SUITE("normal-form") {

TEST_CASE("rationals compare exactly") {
  CHECK(Rational(1, 2) == Rational(2, 4));
  CHECK(Rational(-1, 2) == Rational(1, -2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-3) < Rational(2, 7));
  CHECK(Rational(0).str() == "0");
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("profile naming joins strategies with commas in player order") {
  NormalFormGame nf = pd_nf();
  CHECK(nf.profile_count() == 4);
  CHECK(nf.profile_name(0) == "Q,Q");
  CHECK(nf.profile_name(1) == "Q,F");
  CHECK(nf.profile_name(2) == "F,Q");
  CHECK(nf.profile_name(3) == "F,F");
  FdGame game = to_fd_game(nf);
  CHECK(game.situations->names() ==
        std::vector<std::string>{"Q,Q", "Q,F", "F,Q", "F,F"});
  CHECK(game.agents == std::vector<std::string>{"row", "col"});
}

TEST_CASE("the worked payoff tables induce the expected equilibria") {
  FdGame pd = to_fd_game(pd_nf());
  CHECK(names_of(*pd.situations, abstract_nash(pd)) == std::vector<std::string>{"F,F"});
  CHECK(pure_nash_oracle(pd_nf()) == std::vector<std::size_t>{3});

  FdGame bos = to_fd_game(bos_nf());
  CHECK(names_of(*bos.situations, abstract_nash(bos)) ==
        std::vector<std::string>{"B,B", "S,S"});

  FdGame pennies = to_fd_game(matching_pennies_nf());
  CHECK(abstract_nash(pennies).empty());
  auto equilibria = fd_equilibria(pennies);
  REQUIRE(equilibria.size() == 1);
  CHECK(equilibria[0] == std::vector<NodeId>{0, 1, 2, 3});
}

TEST_CASE("oracle on degenerate games") {
  NormalFormGame solo{{"only"}, {{"a", "b", "c"}}, {{{1}}, {{7}}, {{7}}}};
  CHECK(pure_nash_oracle(solo) == std::vector<std::size_t>{1, 2});

  NormalFormGame flat{{"row", "col"},
                      {{"x", "y"}, {"x", "y"}},
                      {{{1}, {1}}, {{1}, {1}}, {{1}, {1}}, {{1}, {1}}}};
  CHECK(pure_nash_oracle(flat) == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("well-formedness is enforced") {
  NormalFormGame missing_row = pd_nf();
  missing_row.payoffs.pop_back();
  CHECK_THROWS_AS(to_fd_game(missing_row), Error);

  NormalFormGame duplicate = pd_nf();
  duplicate.strategies[0] = {"Q", "Q"};
  CHECK_THROWS_AS(pure_nash_oracle(duplicate), Error);

  NormalFormGame empty_set = pd_nf();
  empty_set.strategies[1].clear();
  CHECK_THROWS_AS(to_fd_game(empty_set), Error);
}

TEST_CASE("abstraction agrees with the direct best-response scan") {
  SplitMix64 rng(0x0f00du);
  for (int round = 0; round < 200; ++round) {
    NormalFormGame nf = random_nf(rng);
    std::vector<std::size_t> expected = pure_nash_oracle(nf);
    std::vector<NodeId> got = abstract_nash(to_fd_game(nf));
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(static_cast<std::size_t>(got[i]) == expected[i]);
    }
  }
}

TEST_CASE("strictly increasing payoff relabelings leave the abstraction unchanged") {
  SplitMix64 rng(0x51abu);
  for (int round = 0; round < 100; ++round) {
    NormalFormGame nf = random_nf(rng);
    std::size_t player = static_cast<std::size_t>(rng.below(nf.players.size()));

    // order-preserving table: payoff v becomes 3v^3 + v (strictly increasing)
    NormalFormGame relabeled = nf;
    for (auto& row : relabeled.payoffs) {
      long long v = row[player].num;  // generated payoffs are integers
      row[player] = Rational(3 * v * v * v + v);
    }

    FdGame before = to_fd_game(nf);
    FdGame after = to_fd_game(relabeled);
    for (AgentId a = 0; a < before.agents.size(); ++a) {
      CHECK(before.desirability[a] == after.desirability[a]);
      CHECK(before.feasibility[a] == after.feasibility[a]);
    }
    CHECK(abstract_nash(before) == abstract_nash(after));
    CHECK(fd_equilibria(before) == fd_equilibria(after));
  }
}

TEST_CASE("feasibility forms disjoint cliques over own-coordinate variants") {
  SplitMix64 rng(0xc11523u);
  for (int round = 0; round < 60; ++round) {
    NormalFormGame nf = random_nf(rng);
    FdGame game = to_fd_game(nf);
    for (std::size_t player = 0; player < nf.players.size(); ++player) {
      const Relation& feasible = game.feasibility[player];
      for (std::size_t p = 0; p < nf.profile_count(); ++p) {
        auto p_coords = nf.profile_coords(p);
        for (std::size_t q = 0; q < nf.profile_count(); ++q) {
          auto q_coords = nf.profile_coords(q);
          bool only_own_differs = p != q;
          for (std::size_t other = 0; other < nf.players.size() && only_own_differs; ++other) {
            if (other != player && p_coords[other] != q_coords[other]) only_own_differs = false;
          }
          CHECK(feasible.has_arc(static_cast<NodeId>(p), static_cast<NodeId>(q)) ==
                only_own_differs);
        }
      }
    }
  }
}

}  // TEST_SUITE
