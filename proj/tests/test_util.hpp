#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "staghunt/stag_hunt.hpp"

namespace testutil {

// Valid parameters with comfortable margins: c < d <= b < a, gaps >= 0.01.
inline staghunt::StagHuntPayoffs random_stag_hunt(std::mt19937& gen) {
  std::uniform_real_distribution<double> base(-10.0, 10.0);
  std::uniform_real_distribution<double> gap(0.01, 10.0);
  std::uniform_real_distribution<double> slack(0.0, 10.0);
  staghunt::StagHuntPayoffs p;
  p.c = base(gen);
  p.d = p.c + gap(gen);
  p.b = p.d + slack(gen);
  p.a = p.b + gap(gen);
  return p;
}

// Small-integer parameters, exact in floating point. With `tie` the two
// deviation losses coincide exactly: a - b == d - c.
inline staghunt::StagHuntPayoffs integer_stag_hunt(std::mt19937& gen, bool tie) {
  std::uniform_int_distribution<int> small(-5, 5);
  std::uniform_int_distribution<int> positive(1, 5);
  std::uniform_int_distribution<int> nonnegative(0, 5);
  staghunt::StagHuntPayoffs p;
  p.c = small(gen);
  p.d = p.c + positive(gen);
  p.b = p.d + nonnegative(gen);
  p.a = p.b + (tie ? (p.d - p.c) : positive(gen));
  return p;
}

// Keeps the deviation losses separated so classification labels cannot flip
// under rounding.
inline staghunt::StagHuntPayoffs random_stag_hunt_no_tie(std::mt19937& gen) {
  while (true) {
    const staghunt::StagHuntPayoffs p = random_stag_hunt(gen);
    if (std::abs((p.a - p.b) - (p.d - p.c)) > 1e-6) return p;
  }
}

inline staghunt::BimatrixGame random_game(std::mt19937& gen, std::size_t rows,
                                          std::size_t cols) {
  std::uniform_real_distribution<double> payoff(-100.0, 100.0);
  std::vector<std::string> row_actions, col_actions;
  for (std::size_t i = 0; i < rows; ++i) row_actions.push_back("r" + std::to_string(i));
  for (std::size_t j = 0; j < cols; ++j) col_actions.push_back("c" + std::to_string(j));
  std::vector<std::vector<double>> a(rows, std::vector<double>(cols));
  std::vector<std::vector<double>> b(rows, std::vector<double>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      a[i][j] = payoff(gen);
      b[i][j] = payoff(gen);
    }
  return staghunt::BimatrixGame("Row Player", "Column Player", row_actions, col_actions,
                                a, b);
}

inline std::vector<double> random_distribution(std::mt19937& gen, std::size_t size) {
  std::uniform_real_distribution<double> uniform(1e-3, 1.0);
  std::vector<double> weights(size);
  double sum = 0.0;
  for (double& w : weights) {
    w = -std::log(uniform(gen));
    sum += w;
  }
  for (double& w : weights) w /= sum;
  return weights;
}

}  // namespace testutil
