#include "staghunt/dynamics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <string>
#include <thread>

namespace staghunt {

namespace {

void require_2x2(const BimatrixGame& game) {
  if (game.rows() != 2 || game.cols() != 2)
    throw InputError("replicator dynamics require a 2x2 game, got " +
                     std::to_string(game.rows()) + "x" + std::to_string(game.cols()));
}

void check_config(const DynamicsConfig& config) {
  if (!(config.step_size > 0.0) || !std::isfinite(config.step_size))
    throw InputError("step size must be positive and finite");
  if (config.max_steps <= 0) throw InputError("max steps must be positive");
  if (!(config.convergence_epsilon > 0.0) || !std::isfinite(config.convergence_epsilon))
    throw InputError("convergence epsilon must be positive and finite");
}

void check_state(PopulationState state) {
  if (!(state.x >= 0.0 && state.x <= 1.0 && state.y >= 0.0 && state.y <= 1.0))
    throw InputError("population state must lie in the unit square");
}

// Both coordinates update from the old state. With x == y and column
// payoffs the exact transpose of row payoffs the two expressions are
// term-for-term identical, so symmetric starts stay bit-identical.
PopulationState step_unchecked(const BimatrixGame& game, PopulationState s, double h) {
  const double stag_fitness_row =
      game.row_payoff(0, 0) * s.y + game.row_payoff(0, 1) * (1.0 - s.y);
  const double hare_fitness_row =
      game.row_payoff(1, 0) * s.y + game.row_payoff(1, 1) * (1.0 - s.y);
  const double stag_fitness_col =
      game.col_payoff(0, 0) * s.x + game.col_payoff(1, 0) * (1.0 - s.x);
  const double hare_fitness_col =
      game.col_payoff(0, 1) * s.x + game.col_payoff(1, 1) * (1.0 - s.x);
  const double nx = s.x + h * s.x * (1.0 - s.x) * (stag_fitness_row - hare_fitness_row);
  const double ny = s.y + h * s.y * (1.0 - s.y) * (stag_fitness_col - hare_fitness_col);
  return {std::clamp(nx, 0.0, 1.0), std::clamp(ny, 0.0, 1.0)};
}

struct TerminalState {
  PopulationState state;
  TerminalStatus status = TerminalStatus::MaxSteps;
};

TerminalState run_to_terminal(const BimatrixGame& game, PopulationState start,
                              const DynamicsConfig& config) {
  PopulationState current = start;
  for (int step = 0; step < config.max_steps; ++step) {
    const PopulationState next = step_unchecked(game, current, config.step_size);
    const double change =
        std::max(std::abs(next.x - current.x), std::abs(next.y - current.y));
    if (change < config.convergence_epsilon)
      return {current, TerminalStatus::Converged};
    current = next;
  }
  return {current, TerminalStatus::MaxSteps};
}

BasinLabel classify_terminal(PopulationState state) {
  if (std::abs(state.x - 1.0) <= kCornerTolerance &&
      std::abs(state.y - 1.0) <= kCornerTolerance)
    return BasinLabel::StagStag;
  if (state.x <= kCornerTolerance && state.y <= kCornerTolerance)
    return BasinLabel::HareHare;
  return BasinLabel::Interior;
}

}  // namespace

std::string to_string(BasinLabel label) {
  switch (label) {
    case BasinLabel::StagStag: return "StagStag";
    case BasinLabel::HareHare: return "HareHare";
    case BasinLabel::Interior: return "Interior/Unconverged";
  }
  return "Interior/Unconverged";
}

PopulationState replicator_step(const BimatrixGame& game, PopulationState state,
                                double step_size) {
  require_2x2(game);
  if (!(step_size > 0.0) || !std::isfinite(step_size))
    throw InputError("step size must be positive and finite");
  check_state(state);
  return step_unchecked(game, state, step_size);
}

Trajectory simulate(const BimatrixGame& game, PopulationState start,
                    const DynamicsConfig& config) {
  require_2x2(game);
  check_config(config);
  check_state(start);
  Trajectory trajectory;
  trajectory.states.push_back(start);
  PopulationState current = start;
  for (int step = 0; step < config.max_steps; ++step) {
    const PopulationState next = step_unchecked(game, current, config.step_size);
    const double change =
        std::max(std::abs(next.x - current.x), std::abs(next.y - current.y));
    if (change < config.convergence_epsilon) {
      trajectory.status = TerminalStatus::Converged;
      return trajectory;
    }
    trajectory.states.push_back(next);
    current = next;
  }
  trajectory.status = TerminalStatus::MaxSteps;
  return trajectory;
}

BasinMap basin_map(const BimatrixGame& game, int grid_resolution,
                   const DynamicsConfig& config, Execution execution) {
  require_2x2(game);
  check_config(config);
  if (grid_resolution < 2)
    throw InputError("grid resolution must be at least 2, got " +
                     std::to_string(grid_resolution));
  const int res = grid_resolution;
  BasinMap map;
  map.resolution = res;
  map.labels.assign(static_cast<std::size_t>(res) * res, BasinLabel::Interior);

  auto label_row = [&](int ix) {
    const double x0 = static_cast<double>(ix) / (res - 1);
    for (int iy = 0; iy < res; ++iy) {
      const double y0 = static_cast<double>(iy) / (res - 1);
      const TerminalState end = run_to_terminal(game, {x0, y0}, config);
      map.labels[static_cast<std::size_t>(ix) * res + iy] = classify_terminal(end.state);
    }
  };

  if (execution == Execution::Sequential) {
    for (int ix = 0; ix < res; ++ix) label_row(ix);
    return map;
  }

  // Each task claims whole x-rows; every grid point is independent, so the
  // result does not depend on how rows land on threads.
  std::atomic<int> next_row{0};
  const unsigned workers =
      std::max(1u, std::min(std::thread::hardware_concurrency(),
                            static_cast<unsigned>(res)));
  std::vector<std::future<void>> tasks;
  tasks.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    tasks.push_back(std::async(std::launch::async, [&] {
      for (int ix = next_row.fetch_add(1); ix < res; ix = next_row.fetch_add(1))
        label_row(ix);
    }));
  for (auto& task : tasks) task.get();
  return map;
}

}  // namespace staghunt
