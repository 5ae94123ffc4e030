#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "staghunt/game.hpp"

namespace staghunt {

// Support enumeration rejects games with more actions per side than this.
inline constexpr std::size_t kMaxSupportActions = 6;

// Solutions with probabilities above this (slightly negative) floor are
// kept, clamped into [0, 1], and renormalized.
inline constexpr double kNegativeProbabilityTolerance = -1e-9;

// Two profiles within this max-norm distance count as the same equilibrium.
inline constexpr double kDeduplicationRadius = 1e-7;

enum class EquilibriumKind { Pure, Mixed };

struct Equilibrium {
  MixedProfile profile;
  EquilibriumKind kind = EquilibriumKind::Pure;
  PayoffPair payoffs;
  // Actions played with probability > kTieTolerance, sorted ascending.
  std::vector<std::size_t> row_support;
  std::vector<std::size_t> col_support;
};

struct SupportEnumerationResult {
  std::vector<Equilibrium> equilibria;
  // Support pairs skipped because their indifference system was singular.
  int singular_pairs = 0;
  bool degenerate = false;
};

struct VerificationResult {
  bool is_equilibrium = false;
  double max_regret = 0.0;
  double row_regret = 0.0;
  double col_regret = 0.0;
};

// All pure-strategy Nash equilibria in row-major cell order: a cell is kept
// when each action is a best response (within kTieTolerance) to the other.
std::vector<Equilibrium> pure_nash(const BimatrixGame& game);

// The interior mixed equilibrium of a 2x2 game, where each player's mix
// makes the opponent indifferent between both actions. Returns nothing when
// an indifference denominator is zero or the solution is not strictly
// inside (0, 1). Throws InputError for games that are not 2x2.
std::optional<Equilibrium> mixed_nash_2x2(const BimatrixGame& game);

// Enumerates every pair of equal-cardinality supports, solves the per-player
// indifference systems, and keeps solutions that are valid distributions
// with no profitable deviation outside the support. Results are
// deduplicated (kDeduplicationRadius) and sorted by (row support size,
// row support, col support). Throws SizeLimitError beyond kMaxSupportActions.
SupportEnumerationResult support_enumeration(const BimatrixGame& game);

// Regret check: for each player, the gap between the best pure response
// payoff and the payoff of the profile as played. An equilibrium within
// epsilon has max regret <= epsilon.
VerificationResult verify_equilibrium(const BimatrixGame& game,
                                      const MixedProfile& profile,
                                      double epsilon);

}  // namespace staghunt
