#include "staghunt/stag_hunt.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace staghunt {

namespace {

std::string values_text(const StagHuntPayoffs& p) {
  auto num = [](double v) {
    std::string s = std::to_string(v);
    // trim trailing zeros from the default %f rendering
    while (s.find('.') != std::string::npos && (s.back() == '0' || s.back() == '.'))
      s.pop_back();
    return s;
  };
  return "a=" + num(p.a) + ", b=" + num(p.b) + ", c=" + num(p.c) + ", d=" + num(p.d);
}

}  // namespace

std::string to_string(EquilibriumTag tag) {
  switch (tag) {
    case EquilibriumTag::StagStag: return "StagStag";
    case EquilibriumTag::HareHare: return "HareHare";
    case EquilibriumTag::Tie: return "Tie";
  }
  return "Tie";
}

StagHuntPayoffs validate(const StagHuntPayoffs& params) {
  for (double v : {params.a, params.b, params.c, params.d})
    if (!std::isfinite(v))
      throw ValidationError("payoff parameters must be finite (" + values_text(params) + ")");
  if (!(params.a > params.b))
    throw StagHuntStructureError(
        "a > b", "not a Stag Hunt: a > b violated (" + values_text(params) + ")");
  if (!(params.b >= params.d))
    throw StagHuntStructureError(
        "b >= d", "not a Stag Hunt: b >= d violated (" + values_text(params) + ")");
  if (!(params.d > params.c))
    throw StagHuntStructureError(
        "d > c", "not a Stag Hunt: d > c violated (" + values_text(params) + ")");
  return params;
}

BimatrixGame to_bimatrix(const StagHuntPayoffs& params, std::string row_player_name,
                         std::string col_player_name) {
  const StagHuntPayoffs p = validate(params);
  return BimatrixGame(std::move(row_player_name), std::move(col_player_name),
                      {p.stag_label, p.hare_label}, {p.stag_label, p.hare_label},
                      {{p.a, p.c}, {p.b, p.d}}, {{p.a, p.b}, {p.c, p.d}});
}

StagHuntPayoffs from_bimatrix(const BimatrixGame& game) {
  if (game.rows() != 2 || game.cols() != 2)
    throw StagHuntStructureError(
        "2x2 shape", "not a Stag Hunt: game is " + std::to_string(game.rows()) + "x" +
                         std::to_string(game.cols()) + ", expected 2x2");
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      if (game.col_payoff(i, j) != game.row_payoff(j, i))
        throw StagHuntStructureError("symmetry",
                                     "not a Stag Hunt: symmetry violated (column payoffs "
                                     "are not the transpose of row payoffs)");
  StagHuntPayoffs params;
  params.a = game.row_payoff(0, 0);
  params.c = game.row_payoff(0, 1);
  params.b = game.row_payoff(1, 0);
  params.d = game.row_payoff(1, 1);
  params.stag_label = game.row_actions()[0];
  params.hare_label = game.row_actions()[1];
  return validate(params);
}

double mixed_equilibrium(const StagHuntPayoffs& params) {
  const double stag_loss = params.a - params.b;
  const double hare_loss = params.d - params.c;
  const double denominator = stag_loss + hare_loss;
  if (denominator == 0.0 || !std::isfinite(denominator))
    throw InputError("degenerate parameters: indifference denominator is zero (" +
                     values_text(params) + ")");
  return hare_loss / denominator;
}

DominanceReport dominance(const StagHuntPayoffs& params) {
  DominanceReport report;
  report.stag_deviation_loss_product = (params.a - params.b) * (params.a - params.b);
  report.hare_deviation_loss_product = (params.d - params.c) * (params.d - params.c);
  if (params.a > params.d)
    report.payoff_dominant = EquilibriumTag::StagStag;
  else if (params.a < params.d)
    report.payoff_dominant = EquilibriumTag::HareHare;
  else
    report.payoff_dominant = EquilibriumTag::Tie;
  if (report.stag_deviation_loss_product > report.hare_deviation_loss_product)
    report.risk_dominant = EquilibriumTag::StagStag;
  else if (report.stag_deviation_loss_product < report.hare_deviation_loss_product)
    report.risk_dominant = EquilibriumTag::HareHare;
  else
    report.risk_dominant = EquilibriumTag::Tie;
  return report;
}

StagHuntPayoffs neuromorphic_codesign() {
  return StagHuntPayoffs{5.0, 3.0, 1.0, 2.0, "SNN", "ANN"};
}

BimatrixGame neuromorphic_codesign_game() {
  return to_bimatrix(neuromorphic_codesign(), "Architecture Player (P1)",
                     "Algorithm Player (P2)");
}

}  // namespace staghunt
