#pragma once

#include <string>

#include "staghunt/game.hpp"

namespace staghunt {

// Payoffs of a symmetric 2x2 coordination game obeying a > b >= d > c:
//   a - both play Stag            b - defect to Hare against a Stag player
//   c - play Stag against a Hare  d - both play Hare
// The action labels are carried as data so the same machinery serves any
// domain reading of the game (the bundled example uses SNN/ANN).
struct StagHuntPayoffs {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  std::string stag_label = "SNN";
  std::string hare_label = "ANN";

  bool operator==(const StagHuntPayoffs&) const = default;
};

enum class EquilibriumTag { StagStag, HareHare, Tie };

std::string to_string(EquilibriumTag tag);

// Which pure equilibrium dominates, by payoff and by the product of
// deviation losses (risk dominance).
struct DominanceReport {
  EquilibriumTag payoff_dominant = EquilibriumTag::Tie;
  EquilibriumTag risk_dominant = EquilibriumTag::Tie;
  double stag_deviation_loss_product = 0.0;  // (a-b)^2
  double hare_deviation_loss_product = 0.0;  // (d-c)^2
};

// Checks a > b >= d > c with exact comparisons (no tolerance) and returns
// the parameters unchanged. Throws StagHuntStructureError naming the
// violated comparison, or ValidationError for non-finite values.
StagHuntPayoffs validate(const StagHuntPayoffs& params);

// Expands the four parameters into the symmetric bimatrix form:
// row payoffs [[a, c], [b, d]], column payoffs [[a, b], [c, d]].
BimatrixGame to_bimatrix(const StagHuntPayoffs& params,
                         std::string row_player_name = "Row Player",
                         std::string col_player_name = "Column Player");

// Reads a 2x2 symmetric bimatrix game back into Stag Hunt parameters.
// Requires the column matrix to be the exact transpose of the row matrix
// and the ordering constraint to hold.
StagHuntPayoffs from_bimatrix(const BimatrixGame& game);

// Probability of the Stag action in the symmetric interior equilibrium
// where both pure strategies earn equal expected payoff:
//   p* = (d - c) / (a - b - c + d)
// computed as (d - c) / ((a - b) + (d - c)) so that p* is exactly 1/2 when
// the two deviation losses coincide. Throws InputError when the
// denominator is zero (degenerate parameters outside the valid ordering).
double mixed_equilibrium(const StagHuntPayoffs& params);

// Deviation-loss classification; defined for any finite parameters.
// For valid Stag Hunts payoff dominance is always StagStag and risk
// dominance is never Tie unless (a-b)^2 == (d-c)^2 exactly.
DominanceReport dominance(const StagHuntPayoffs& params);

// The co-design example bundled with the library: a=5, b=3, c=1, d=2 with
// SNN/ANN action labels.
StagHuntPayoffs neuromorphic_codesign();
BimatrixGame neuromorphic_codesign_game();

}  // namespace staghunt
