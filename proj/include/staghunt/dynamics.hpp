#pragma once

#include <string>
#include <vector>

#include "staghunt/game.hpp"

namespace staghunt {

// Shares of the first action in the row and column populations.
struct PopulationState {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const PopulationState&) const = default;
};

struct DynamicsConfig {
  double step_size = 0.01;
  int max_steps = 100000;
  // Convergence is declared when the max-norm per-step change drops
  // below this.
  double convergence_epsilon = 1e-6;
};

enum class TerminalStatus { Converged, MaxSteps };

struct Trajectory {
  // The start state plus every subsequent state actually taken.
  std::vector<PopulationState> states;
  TerminalStatus status = TerminalStatus::MaxSteps;
};

enum class BasinLabel { StagStag, HareHare, Interior };

// "Interior/Unconverged" for BasinLabel::Interior.
std::string to_string(BasinLabel label);

// Terminal states within this distance of a corner are attributed to it.
inline constexpr double kCornerTolerance = 1e-3;

// Labels for an inclusive uniform lattice over [0,1]^2, row-major with the
// x index outermost: labels[ix * resolution + iy] is the start point
// (ix/(resolution-1), iy/(resolution-1)).
struct BasinMap {
  int resolution = 0;
  std::vector<BasinLabel> labels;

  BasinLabel at(int ix, int iy) const {
    return labels[static_cast<std::size_t>(ix) * resolution + iy];
  }
};

enum class Execution { Sequential, Parallel };

// Discrete-time two-population replicator update for a 2x2 game:
//   x' = clamp(x + h x (1-x) (f_S(y) - f_H(y)), 0, 1)
// and symmetrically for y via the column payoffs, both from the old state.
// Throws InputError for non-2x2 games or states outside [0,1]^2.
PopulationState replicator_step(const BimatrixGame& game, PopulationState state,
                                double step_size);

// Iterates replicator_step until the per-step change falls below
// convergence_epsilon or max_steps is reached. The state that triggers
// convergence duplicates its predecessor to within epsilon and is not
// recorded, so a start at a fixed point yields a length-1 trajectory.
Trajectory simulate(const BimatrixGame& game, PopulationState start,
                    const DynamicsConfig& config = {});

// Runs every lattice point to its terminal state and labels it StagStag or
// HareHare when that state lies within kCornerTolerance of (1,1) or (0,0),
// Interior otherwise. grid_resolution >= 2. Parallel execution partitions
// the grid by x index and is bit-identical to sequential evaluation.
BasinMap basin_map(const BimatrixGame& game, int grid_resolution,
                   const DynamicsConfig& config = {},
                   Execution execution = Execution::Sequential);

}  // namespace staghunt
