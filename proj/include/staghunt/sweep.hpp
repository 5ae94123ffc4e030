#pragma once

#include <optional>
#include <vector>

#include "staghunt/stag_hunt.hpp"

namespace staghunt {

enum class SweepParameter { A, B, C, D };

char to_char(SweepParameter parameter);

enum class Spacing { Linear, Log };

// One-parameter family of Stag Hunt games: the chosen parameter takes each
// entry of `values` in turn while the other three stay at their base value.
// `spacing` records how the values were generated (charts use it to pick
// the x-axis scale).
struct SweepSpec {
  StagHuntPayoffs base;
  SweepParameter parameter = SweepParameter::A;
  std::vector<double> values;
  Spacing spacing = Spacing::Linear;
};

// count >= 2; endpoints are exact. Log spacing requires positive endpoints.
std::vector<double> linear_range(double start, double stop, int count);
std::vector<double> log_range(double start, double stop, int count);

// One evaluated point of a sweep. Points whose parameters violate the
// structural ordering are kept as rows with valid=false and empty analysis
// fields; they never abort the sweep.
struct SweepRow {
  double parameter_value = 0.0;
  bool valid = false;
  std::optional<double> p_stag;
  std::optional<EquilibriumTag> risk_dominant;
  std::optional<EquilibriumTag> payoff_dominant;
};

// Evaluates every value in order: structural validation, then the mixed
// equilibrium and dominance report for valid points. Throws InputError on
// an empty value list.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

// Reward-for-cooperation scan: base (a=5, b=3, c=1, d=2), parameter a
// log-spaced from 5 to 500 over 50 points, with 5, 50, and 500 inserted
// if absent so the anchor games appear exactly.
SweepSpec scenario_increasing_snn_value();

// Compromise scan: base (a=10, c=1, d=2), parameter b over 3, 4, ..., 9.
SweepSpec scenario_compromise();

}  // namespace staghunt
