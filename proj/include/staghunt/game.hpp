#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "staghunt/errors.hpp"

namespace staghunt {

// Absolute tolerance for payoff comparisons and best-response ties.
inline constexpr double kTieTolerance = 1e-9;

// Probability vectors must have entries in [0, 1] and sum to 1 within this.
inline constexpr double kDistributionTolerance = 1e-9;

enum class Player { Row, Col };

// Utility received by each player at a joint outcome.
struct PayoffPair {
  double row = 0.0;
  double col = 0.0;
};

// One probability distribution over actions per player.
struct MixedProfile {
  std::vector<double> row_strategy;
  std::vector<double> col_strategy;

  bool operator==(const MixedProfile&) const = default;
};

// True iff every entry lies in [0, 1] and the entries sum to 1 within
// kDistributionTolerance.
bool is_distribution(std::span<const double> values);

std::vector<double> one_hot(std::size_t size, std::size_t index);

// A finite two-player normal-form game: player names, action labels, and
// one payoff matrix per player stored row-major. Both matrices always have
// identical dimensions matching the label lists, and every entry is finite.
class BimatrixGame {
 public:
  BimatrixGame(std::string row_player_name, std::string col_player_name,
               std::vector<std::string> row_actions,
               std::vector<std::string> col_actions,
               const std::vector<std::vector<double>>& row_payoffs,
               const std::vector<std::vector<double>>& col_payoffs);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double row_payoff(std::size_t i, std::size_t j) const {
    return row_payoffs_[i * cols_ + j];
  }
  double col_payoff(std::size_t i, std::size_t j) const {
    return col_payoffs_[i * cols_ + j];
  }

  const std::string& row_player_name() const { return row_player_name_; }
  const std::string& col_player_name() const { return col_player_name_; }
  const std::vector<std::string>& row_actions() const { return row_actions_; }
  const std::vector<std::string>& col_actions() const { return col_actions_; }

  std::vector<std::vector<double>> row_payoff_rows() const;
  std::vector<std::vector<double>> col_payoff_rows() const;

  bool operator==(const BimatrixGame&) const = default;

 private:
  std::string row_player_name_;
  std::string col_player_name_;
  std::vector<std::string> row_actions_;
  std::vector<std::string> col_actions_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> row_payoffs_;
  std::vector<double> col_payoffs_;
};

// Expected payoff of each pure action of `player` against the opponent mix.
std::vector<double> action_payoffs(const BimatrixGame& game, Player player,
                                   std::span<const double> opponent_strategy);

// Bilinear expected payoff for both players under a mixed profile.
PayoffPair expected_payoff(const BimatrixGame& game, const MixedProfile& profile);

PayoffPair pure_payoff(const BimatrixGame& game, std::size_t row_action,
                       std::size_t col_action);

// All actions of `player` achieving the maximal expected payoff against
// `opponent_strategy` within kTieTolerance. Sorted ascending; never empty.
std::vector<std::size_t> best_responses(const BimatrixGame& game, Player player,
                                        std::span<const double> opponent_strategy);

}  // namespace staghunt
