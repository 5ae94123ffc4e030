#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "doctest.h"
#include "staghunt/solver.hpp"
#include "staghunt/stag_hunt.hpp"
#include "test_util.hpp"

using namespace staghunt;

namespace {

BimatrixGame table2() { return neuromorphic_codesign_game(); }

BimatrixGame prisoners_dilemma() {
  return BimatrixGame("r", "c", {"coop", "defect"}, {"coop", "defect"},
                      {{3, 0}, {5, 1}}, {{3, 5}, {0, 1}});
}

BimatrixGame matching_pennies() {
  return BimatrixGame("r", "c", {"heads", "tails"}, {"heads", "tails"},
                      {{1, -1}, {-1, 1}}, {{-1, 1}, {1, -1}});
}

// coordination game with identical diagonal payoffs for both players
BimatrixGame diagonal_coordination(const std::vector<double>& values) {
  const std::size_t n = values.size();
  std::vector<std::vector<double>> cells(n, std::vector<double>(n, 0.0));
  std::vector<std::string> actions;
  for (std::size_t i = 0; i < n; ++i) {
    cells[i][i] = values[i];
    actions.push_back("a" + std::to_string(i));
  }
  return BimatrixGame("r", "c", actions, actions, cells, cells);
}

}  // namespace

bool plays(const Equilibrium& eq, std::size_t row, std::size_t col) {
  return eq.kind == EquilibriumKind::Pure &&
         eq.row_support == std::vector<std::size_t>{row} &&
         eq.col_support == std::vector<std::size_t>{col};
}

TEST_CASE("pure equilibria of the benchmark games") {
  const auto hunt = pure_nash(table2());
  REQUIRE(hunt.size() == 2);
  CHECK(plays(hunt[0], 0, 0));
  CHECK(plays(hunt[1], 1, 1));

  const auto dilemma = pure_nash(prisoners_dilemma());
  REQUIRE(dilemma.size() == 1);
  CHECK(plays(dilemma[0], 1, 1));

  CHECK(pure_nash(matching_pennies()).empty());
}

TEST_CASE("2x2 interior equilibrium matches the closed form") {
  const auto mixed = mixed_nash_2x2(table2());
  REQUIRE(mixed.has_value());
  CHECK(mixed->kind == EquilibriumKind::Mixed);
  CHECK(std::abs(mixed->profile.row_strategy[0] - 1.0 / 3.0) <= 1e-15);
  CHECK(std::abs(mixed->profile.col_strategy[0] - 1.0 / 3.0) <= 1e-15);
  CHECK(std::abs(mixed->payoffs.row - 7.0 / 3.0) <= 1e-12);
  CHECK(std::abs(mixed->payoffs.col - 7.0 / 3.0) <= 1e-12);

  const auto skew = mixed_nash_2x2(to_bimatrix({10, 5, 1, 2}));
  REQUIRE(skew.has_value());
  CHECK(std::abs(skew->profile.row_strategy[0] - 1.0 / 6.0) <= 1e-15);

  // strictly dominant strategies leave no interior equilibrium
  CHECK(!mixed_nash_2x2(prisoners_dilemma()).has_value());
  CHECK_THROWS_AS(mixed_nash_2x2(diagonal_coordination({1, 2, 3})), InputError);
}

TEST_CASE("support enumeration recovers all three stag hunt equilibria") {
  const SupportEnumerationResult result = support_enumeration(table2());
  CHECK(!result.degenerate);
  CHECK(result.singular_pairs == 0);
  REQUIRE(result.equilibria.size() == 3);

  const Equilibrium& both_stag = result.equilibria[0];
  CHECK(both_stag.kind == EquilibriumKind::Pure);
  CHECK(both_stag.row_support == std::vector<std::size_t>{0});
  CHECK(both_stag.col_support == std::vector<std::size_t>{0});
  CHECK(both_stag.profile.row_strategy[0] == 1.0);
  CHECK(both_stag.payoffs.row == 5.0);

  const Equilibrium& both_hare = result.equilibria[1];
  CHECK(both_hare.kind == EquilibriumKind::Pure);
  CHECK(both_hare.row_support == std::vector<std::size_t>{1});
  CHECK(both_hare.payoffs.row == 2.0);
  CHECK(both_hare.payoffs.col == 2.0);

  const Equilibrium& mixed = result.equilibria[2];
  CHECK(mixed.kind == EquilibriumKind::Mixed);
  CHECK(mixed.row_support == std::vector<std::size_t>{0, 1});
  CHECK(mixed.col_support == std::vector<std::size_t>{0, 1});
  CHECK(std::abs(mixed.profile.row_strategy[0] - 1.0 / 3.0) <= 1e-9);
  CHECK(std::abs(mixed.profile.col_strategy[0] - 1.0 / 3.0) <= 1e-9);
  CHECK(std::abs(mixed.payoffs.row - 7.0 / 3.0) <= 1e-9);
}

TEST_CASE("diagonal coordination games have one equilibrium per support") {
  // every nonempty subset of the diagonal supports exactly one equilibrium,
  // so a 3-action game yields 2^3 - 1 = 7 of them
  const SupportEnumerationResult result = support_enumeration(diagonal_coordination({1, 2, 3}));
  CHECK(result.equilibria.size() == 7);
  std::size_t pure = 0;
  for (const Equilibrium& eq : result.equilibria) {
    if (eq.kind == EquilibriumKind::Pure) ++pure;
    CHECK(eq.row_support == eq.col_support);
    const VerificationResult check = verify_equilibrium(diagonal_coordination({1, 2, 3}),
                                                        eq.profile, 1e-7);
    CHECK(check.is_equilibrium);
  }
  CHECK(pure == 3);
}

TEST_CASE("support enumeration agrees with the pure-strategy scan") {
  std::mt19937 gen(21);
  for (int trial = 0; trial < 60; ++trial) {
    const BimatrixGame game = testutil::random_game(gen, 3, 3);
    const auto pure = pure_nash(game);
    const SupportEnumerationResult result = support_enumeration(game);
    std::size_t found_pure = 0;
    for (const Equilibrium& eq : result.equilibria)
      if (eq.kind == EquilibriumKind::Pure) {
        ++found_pure;
        const bool scanned = std::any_of(pure.begin(), pure.end(), [&](const Equilibrium& p) {
          return plays(p, eq.row_support[0], eq.col_support[0]);
        });
        CHECK(scanned);
      }
    CHECK(found_pure == pure.size());
  }
}

TEST_CASE("reported equilibria survive independent verification") {
  std::mt19937 gen(22);
  for (int trial = 0; trial < 60; ++trial) {
    const BimatrixGame game = testutil::random_game(gen, 4, 3);
    for (const Equilibrium& eq : support_enumeration(game).equilibria) {
      const VerificationResult check = verify_equilibrium(game, eq.profile, 1e-7);
      CHECK(check.is_equilibrium);
      CHECK(check.max_regret <= 1e-7);
    }
  }
}

TEST_CASE("verification quantifies the regret of a bad profile") {
  // row defects while the column player hunts: both wish they had switched
  const MixedProfile off{{0.0, 1.0}, {1.0, 0.0}};
  const VerificationResult check = verify_equilibrium(table2(), off, 1e-7);
  CHECK(!check.is_equilibrium);
  CHECK(check.row_regret == 2.0);  // 5 against a hunter beats the 3 earned now
  CHECK(check.col_regret == 1.0);  // 2 from following suit beats the 1 earned now
  CHECK(check.max_regret == 2.0);
  CHECK(verify_equilibrium(table2(), off, 2.0).is_equilibrium);
  CHECK_THROWS_AS(verify_equilibrium(table2(), off, -1.0), InputError);
}

TEST_CASE("flat payoff games are flagged as degenerate") {
  const BimatrixGame flat("r", "c", {"x", "y"}, {"u", "v"}, {{1, 1}, {1, 1}},
                          {{1, 1}, {1, 1}});
  const SupportEnumerationResult result = support_enumeration(flat);
  CHECK(result.degenerate);
  CHECK(result.singular_pairs == 1);
  CHECK(result.equilibria.size() == 4);  // every pure profile is an equilibrium
}

TEST_CASE("oversized games are refused with a size limit error") {
  std::mt19937 gen(23);
  const BimatrixGame big = testutil::random_game(gen, 7, 7);
  try {
    support_enumeration(big);
    FAIL("7x7 must exceed the support enumeration limit");
  } catch (const SizeLimitError& e) {
    CHECK(std::string(e.what()).find("6") != std::string::npos);
    CHECK(std::string(e.what()).find("7x7") != std::string::npos);
  }
  CHECK_NOTHROW(support_enumeration(testutil::random_game(gen, 6, 2)));
}

TEST_CASE("stag hunt solving matches the closed form across random games") {
  std::mt19937 gen(24);
  for (int trial = 0; trial < 200; ++trial) {
    const StagHuntPayoffs params = testutil::random_stag_hunt(gen);
    const BimatrixGame game = to_bimatrix(params);
    const SupportEnumerationResult result = support_enumeration(game);
    REQUIRE(result.equilibria.size() == 3);
    const double p = mixed_equilibrium(params);
    const Equilibrium& interior = result.equilibria[2];
    CHECK(interior.kind == EquilibriumKind::Mixed);
    CHECK(std::abs(interior.profile.row_strategy[0] - p) <= 1e-9);
    CHECK(std::abs(interior.profile.col_strategy[0] - p) <= 1e-9);
  }
}
