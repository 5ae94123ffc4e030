#include "staghunt/game.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace staghunt {

namespace {

std::string dim_text(std::size_t rows, std::size_t cols) {
  return std::to_string(rows) + "x" + std::to_string(cols);
}

}  // namespace

bool is_distribution(std::span<const double> values) {
  if (values.empty()) return false;
  double sum = 0.0;
  for (double v : values) {
    if (!(v >= 0.0 && v <= 1.0)) return false;  // also rejects NaN
    sum += v;
  }
  return std::abs(sum - 1.0) <= kDistributionTolerance;
}

std::vector<double> one_hot(std::size_t size, std::size_t index) {
  if (index >= size) throw InputError("one_hot: index out of range");
  std::vector<double> v(size, 0.0);
  v[index] = 1.0;
  return v;
}

BimatrixGame::BimatrixGame(std::string row_player_name, std::string col_player_name,
                           std::vector<std::string> row_actions,
                           std::vector<std::string> col_actions,
                           const std::vector<std::vector<double>>& row_payoffs,
                           const std::vector<std::vector<double>>& col_payoffs)
    : row_player_name_(std::move(row_player_name)),
      col_player_name_(std::move(col_player_name)),
      row_actions_(std::move(row_actions)),
      col_actions_(std::move(col_actions)),
      rows_(row_actions_.size()),
      cols_(col_actions_.size()) {
  if (rows_ == 0 || cols_ == 0)
    throw InputError("game must have at least one action per player");
  for (const auto* matrix : {&row_payoffs, &col_payoffs}) {
    const char* name = matrix == &row_payoffs ? "row_payoffs" : "col_payoffs";
    if (matrix->size() != rows_)
      throw InputError(std::string(name) + " has " + std::to_string(matrix->size()) +
                       " rows, expected " + dim_text(rows_, cols_));
    for (std::size_t i = 0; i < rows_; ++i) {
      if ((*matrix)[i].size() != cols_)
        throw InputError(std::string(name) + " row " + std::to_string(i) + " has " +
                         std::to_string((*matrix)[i].size()) + " entries, expected " +
                         std::to_string(cols_));
      for (double v : (*matrix)[i])
        if (!std::isfinite(v))
          throw InputError(std::string(name) + " contains a non-finite value");
    }
  }
  row_payoffs_.reserve(rows_ * cols_);
  col_payoffs_.reserve(rows_ * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    row_payoffs_.insert(row_payoffs_.end(), row_payoffs[i].begin(), row_payoffs[i].end());
    col_payoffs_.insert(col_payoffs_.end(), col_payoffs[i].begin(), col_payoffs[i].end());
  }
}

std::vector<std::vector<double>> BimatrixGame::row_payoff_rows() const {
  std::vector<std::vector<double>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    out[i].assign(row_payoffs_.begin() + i * cols_, row_payoffs_.begin() + (i + 1) * cols_);
  return out;
}

std::vector<std::vector<double>> BimatrixGame::col_payoff_rows() const {
  std::vector<std::vector<double>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    out[i].assign(col_payoffs_.begin() + i * cols_, col_payoffs_.begin() + (i + 1) * cols_);
  return out;
}

std::vector<double> action_payoffs(const BimatrixGame& game, Player player,
                                   std::span<const double> opponent_strategy) {
  const std::size_t own = player == Player::Row ? game.rows() : game.cols();
  const std::size_t opp = player == Player::Row ? game.cols() : game.rows();
  if (opponent_strategy.size() != opp)
    throw InputError("opponent strategy has " + std::to_string(opponent_strategy.size()) +
                     " entries, expected " + std::to_string(opp));
  if (!is_distribution(opponent_strategy))
    throw ValidationError("opponent strategy is not a probability distribution");
  std::vector<double> payoffs(own, 0.0);
  for (std::size_t k = 0; k < own; ++k) {
    double u = 0.0;
    for (std::size_t o = 0; o < opp; ++o)
      u += (player == Player::Row ? game.row_payoff(k, o) : game.col_payoff(o, k)) *
           opponent_strategy[o];
    payoffs[k] = u;
  }
  return payoffs;
}

PayoffPair expected_payoff(const BimatrixGame& game, const MixedProfile& profile) {
  if (profile.row_strategy.size() != game.rows())
    throw InputError("row strategy has " + std::to_string(profile.row_strategy.size()) +
                     " entries, expected " + std::to_string(game.rows()));
  if (profile.col_strategy.size() != game.cols())
    throw InputError("col strategy has " + std::to_string(profile.col_strategy.size()) +
                     " entries, expected " + std::to_string(game.cols()));
  if (!is_distribution(profile.row_strategy))
    throw ValidationError("row strategy is not a probability distribution");
  if (!is_distribution(profile.col_strategy))
    throw ValidationError("col strategy is not a probability distribution");
  const std::vector<double> row_values = action_payoffs(game, Player::Row, profile.col_strategy);
  const std::vector<double> col_values = action_payoffs(game, Player::Col, profile.row_strategy);
  PayoffPair result;
  for (std::size_t i = 0; i < game.rows(); ++i)
    result.row += profile.row_strategy[i] * row_values[i];
  for (std::size_t j = 0; j < game.cols(); ++j)
    result.col += profile.col_strategy[j] * col_values[j];
  return result;
}

PayoffPair pure_payoff(const BimatrixGame& game, std::size_t row_action,
                       std::size_t col_action) {
  if (row_action >= game.rows())
    throw InputError("row action " + std::to_string(row_action) + " out of range");
  if (col_action >= game.cols())
    throw InputError("col action " + std::to_string(col_action) + " out of range");
  return {game.row_payoff(row_action, col_action), game.col_payoff(row_action, col_action)};
}

std::vector<std::size_t> best_responses(const BimatrixGame& game, Player player,
                                        std::span<const double> opponent_strategy) {
  const std::vector<double> payoffs = action_payoffs(game, player, opponent_strategy);
  const double best = *std::max_element(payoffs.begin(), payoffs.end());
  std::vector<std::size_t> responses;
  for (std::size_t k = 0; k < payoffs.size(); ++k)
    if (payoffs[k] >= best - kTieTolerance) responses.push_back(k);
  return responses;
}

}  // namespace staghunt
