#include "staghunt/solver.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace staghunt {

namespace {

// Lexicographic successor of a k-subset of {0..n-1}; false once exhausted.
bool advance_subset(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(idx);
  } while (advance_subset(idx, n));
  return out;
}

struct IndifferenceSolution {
  std::vector<double> probabilities;  // over the support, may be slightly negative
  double value = 0.0;
};

// Mix for the player opposite to `indifferent` that equalizes the payoffs of
// the supported actions of `indifferent`: k indifference equations plus the
// normalization row. Returns nothing when the system is singular.
std::optional<IndifferenceSolution> solve_indifference(
    const BimatrixGame& game, const std::vector<std::size_t>& row_support,
    const std::vector<std::size_t>& col_support, Player indifferent) {
  const std::size_t k = row_support.size();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(k + 1, k + 1);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k + 1);
  for (std::size_t e = 0; e < k; ++e) {
    for (std::size_t u = 0; u < k; ++u)
      m(e, u) = indifferent == Player::Row
                    ? game.row_payoff(row_support[e], col_support[u])
                    : game.col_payoff(row_support[u], col_support[e]);
    m(e, k) = -1.0;
  }
  for (std::size_t u = 0; u < k; ++u) m(k, u) = 1.0;
  rhs(k) = 1.0;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  if (!lu.isInvertible()) return std::nullopt;
  const Eigen::VectorXd sol = lu.solve(rhs);
  IndifferenceSolution out;
  out.probabilities.assign(sol.data(), sol.data() + k);
  out.value = sol(k);
  return out;
}

// Zero-padded full-length strategy: support probabilities clamped into
// [0, 1] and renormalized.
std::vector<double> expand_strategy(std::size_t size,
                                    const std::vector<std::size_t>& support,
                                    const std::vector<double>& probabilities) {
  std::vector<double> full(size, 0.0);
  double sum = 0.0;
  for (std::size_t u = 0; u < support.size(); ++u) {
    const double p = std::clamp(probabilities[u], 0.0, 1.0);
    full[support[u]] = p;
    sum += p;
  }
  for (double& p : full) p /= sum;
  return full;
}

std::vector<std::size_t> played_support(const std::vector<double>& strategy) {
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < strategy.size(); ++i)
    if (strategy[i] > kTieTolerance) support.push_back(i);
  return support;
}

double profile_distance(const MixedProfile& lhs, const MixedProfile& rhs) {
  double dist = 0.0;
  for (std::size_t i = 0; i < lhs.row_strategy.size(); ++i)
    dist = std::max(dist, std::abs(lhs.row_strategy[i] - rhs.row_strategy[i]));
  for (std::size_t j = 0; j < lhs.col_strategy.size(); ++j)
    dist = std::max(dist, std::abs(lhs.col_strategy[j] - rhs.col_strategy[j]));
  return dist;
}

// No action outside the support may beat the supported payoff level by more
// than the tie tolerance.
bool no_profitable_deviation(const std::vector<double>& action_values,
                             const std::vector<std::size_t>& support) {
  double reference = -std::numeric_limits<double>::infinity();
  for (std::size_t s : support) reference = std::max(reference, action_values[s]);
  for (std::size_t i = 0; i < action_values.size(); ++i) {
    if (std::binary_search(support.begin(), support.end(), i)) continue;
    if (action_values[i] > reference + kTieTolerance) return false;
  }
  return true;
}

void evaluate_support_pair(const BimatrixGame& game,
                           const std::vector<std::size_t>& row_support,
                           const std::vector<std::size_t>& col_support,
                           SupportEnumerationResult& result) {
  const auto col_mix = solve_indifference(game, row_support, col_support, Player::Row);
  if (!col_mix) {
    ++result.singular_pairs;
    result.degenerate = true;
    return;
  }
  const auto row_mix = solve_indifference(game, row_support, col_support, Player::Col);
  if (!row_mix) {
    ++result.singular_pairs;
    result.degenerate = true;
    return;
  }
  for (double p : col_mix->probabilities)
    if (p < kNegativeProbabilityTolerance) return;
  for (double p : row_mix->probabilities)
    if (p < kNegativeProbabilityTolerance) return;

  MixedProfile profile{expand_strategy(game.rows(), row_support, row_mix->probabilities),
                       expand_strategy(game.cols(), col_support, col_mix->probabilities)};
  if (!no_profitable_deviation(action_payoffs(game, Player::Row, profile.col_strategy),
                               row_support))
    return;
  if (!no_profitable_deviation(action_payoffs(game, Player::Col, profile.row_strategy),
                               col_support))
    return;

  for (const Equilibrium& seen : result.equilibria)
    if (profile_distance(seen.profile, profile) < kDeduplicationRadius) return;

  Equilibrium eq;
  eq.row_support = played_support(profile.row_strategy);
  eq.col_support = played_support(profile.col_strategy);
  eq.kind = eq.row_support.size() == 1 && eq.col_support.size() == 1
                ? EquilibriumKind::Pure
                : EquilibriumKind::Mixed;
  eq.payoffs = expected_payoff(game, profile);
  eq.profile = std::move(profile);
  result.equilibria.push_back(std::move(eq));
}

}  // namespace

std::vector<Equilibrium> pure_nash(const BimatrixGame& game) {
  // row_is_br[j][i]: row action i is a best response to column action j
  std::vector<std::vector<bool>> row_is_br(game.cols(),
                                           std::vector<bool>(game.rows(), false));
  for (std::size_t j = 0; j < game.cols(); ++j)
    for (std::size_t i : best_responses(game, Player::Row, one_hot(game.cols(), j)))
      row_is_br[j][i] = true;
  std::vector<std::vector<bool>> col_is_br(game.rows(),
                                           std::vector<bool>(game.cols(), false));
  for (std::size_t i = 0; i < game.rows(); ++i)
    for (std::size_t j : best_responses(game, Player::Col, one_hot(game.rows(), i)))
      col_is_br[i][j] = true;

  std::vector<Equilibrium> out;
  for (std::size_t i = 0; i < game.rows(); ++i)
    for (std::size_t j = 0; j < game.cols(); ++j) {
      if (!row_is_br[j][i] || !col_is_br[i][j]) continue;
      Equilibrium eq;
      eq.profile = {one_hot(game.rows(), i), one_hot(game.cols(), j)};
      eq.kind = EquilibriumKind::Pure;
      eq.payoffs = pure_payoff(game, i, j);
      eq.row_support = {i};
      eq.col_support = {j};
      out.push_back(std::move(eq));
    }
  return out;
}

std::optional<Equilibrium> mixed_nash_2x2(const BimatrixGame& game) {
  if (game.rows() != 2 || game.cols() != 2)
    throw InputError("mixed_nash_2x2 requires a 2x2 game, got " +
                     std::to_string(game.rows()) + "x" + std::to_string(game.cols()));
  // The row mix x equalizes the column player's two actions and vice versa.
  const double den_x = (game.col_payoff(0, 0) - game.col_payoff(0, 1)) +
                       (game.col_payoff(1, 1) - game.col_payoff(1, 0));
  const double den_y = (game.row_payoff(0, 0) - game.row_payoff(1, 0)) +
                       (game.row_payoff(1, 1) - game.row_payoff(0, 1));
  if (den_x == 0.0 || den_y == 0.0) return std::nullopt;
  const double x = (game.col_payoff(1, 1) - game.col_payoff(1, 0)) / den_x;
  const double y = (game.row_payoff(1, 1) - game.row_payoff(0, 1)) / den_y;
  if (!(x > 0.0 && x < 1.0 && y > 0.0 && y < 1.0)) return std::nullopt;
  Equilibrium eq;
  eq.profile = {{x, 1.0 - x}, {y, 1.0 - y}};
  eq.kind = EquilibriumKind::Mixed;
  eq.payoffs = expected_payoff(game, eq.profile);
  eq.row_support = {0, 1};
  eq.col_support = {0, 1};
  return eq;
}

SupportEnumerationResult support_enumeration(const BimatrixGame& game) {
  if (game.rows() > kMaxSupportActions || game.cols() > kMaxSupportActions)
    throw SizeLimitError("support enumeration handles at most " +
                         std::to_string(kMaxSupportActions) +
                         " actions per player, got " + std::to_string(game.rows()) +
                         "x" + std::to_string(game.cols()));
  SupportEnumerationResult result;
  const std::size_t max_k = std::min(game.rows(), game.cols());
  for (std::size_t k = 1; k <= max_k; ++k)
    for (const auto& row_support : k_subsets(game.rows(), k))
      for (const auto& col_support : k_subsets(game.cols(), k))
        evaluate_support_pair(game, row_support, col_support, result);

  std::stable_sort(result.equilibria.begin(), result.equilibria.end(),
                   [](const Equilibrium& lhs, const Equilibrium& rhs) {
                     if (lhs.row_support.size() != rhs.row_support.size())
                       return lhs.row_support.size() < rhs.row_support.size();
                     if (lhs.row_support != rhs.row_support)
                       return lhs.row_support < rhs.row_support;
                     return lhs.col_support < rhs.col_support;
                   });
  return result;
}

VerificationResult verify_equilibrium(const BimatrixGame& game,
                                      const MixedProfile& profile, double epsilon) {
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon))
    throw InputError("verification epsilon must be a finite non-negative value");
  const PayoffPair current = expected_payoff(game, profile);
  const std::vector<double> row_values =
      action_payoffs(game, Player::Row, profile.col_strategy);
  const std::vector<double> col_values =
      action_payoffs(game, Player::Col, profile.row_strategy);
  VerificationResult result;
  result.row_regret = std::max(
      0.0, *std::max_element(row_values.begin(), row_values.end()) - current.row);
  result.col_regret = std::max(
      0.0, *std::max_element(col_values.begin(), col_values.end()) - current.col);
  result.max_regret = std::max(result.row_regret, result.col_regret);
  result.is_equilibrium = result.max_regret <= epsilon;
  return result;
}

}  // namespace staghunt
