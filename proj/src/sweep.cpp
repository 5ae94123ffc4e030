#include "staghunt/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace staghunt {

namespace {

void set_parameter(StagHuntPayoffs& params, SweepParameter parameter, double value) {
  switch (parameter) {
    case SweepParameter::A: params.a = value; return;
    case SweepParameter::B: params.b = value; return;
    case SweepParameter::C: params.c = value; return;
    case SweepParameter::D: params.d = value; return;
  }
}

void check_count(int count) {
  if (count < 2)
    throw InputError("range needs at least 2 points, got " + std::to_string(count));
}

}  // namespace

char to_char(SweepParameter parameter) {
  switch (parameter) {
    case SweepParameter::A: return 'a';
    case SweepParameter::B: return 'b';
    case SweepParameter::C: return 'c';
    case SweepParameter::D: return 'd';
  }
  return '?';
}

std::vector<double> linear_range(double start, double stop, int count) {
  check_count(count);
  if (!std::isfinite(start) || !std::isfinite(stop))
    throw InputError("range endpoints must be finite");
  std::vector<double> values(count);
  for (int i = 1; i + 1 < count; ++i)
    values[i] = start + (stop - start) * (static_cast<double>(i) / (count - 1));
  values.front() = start;  // endpoints exact, untouched by interpolation
  values.back() = stop;
  return values;
}

std::vector<double> log_range(double start, double stop, int count) {
  check_count(count);
  if (!(start > 0.0) || !(stop > 0.0) || !std::isfinite(start) || !std::isfinite(stop))
    throw InputError("log range endpoints must be positive finite values");
  std::vector<double> values(count);
  const double log_start = std::log(start);
  const double log_stop = std::log(stop);
  for (int i = 1; i + 1 < count; ++i)
    values[i] =
        std::exp(log_start + (log_stop - log_start) * (static_cast<double>(i) / (count - 1)));
  values.front() = start;
  values.back() = stop;
  return values;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  if (spec.values.empty()) throw InputError("sweep has no parameter values");
  std::vector<SweepRow> rows;
  rows.reserve(spec.values.size());
  for (double value : spec.values) {
    StagHuntPayoffs params = spec.base;
    set_parameter(params, spec.parameter, value);
    SweepRow row;
    row.parameter_value = value;
    try {
      validate(params);
      row.valid = true;
      row.p_stag = mixed_equilibrium(params);
      const DominanceReport report = dominance(params);
      row.risk_dominant = report.risk_dominant;
      row.payoff_dominant = report.payoff_dominant;
    } catch (const Error&) {
      // structurally invalid point: flagged row, the sweep continues
      row.valid = false;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

SweepSpec scenario_increasing_snn_value() {
  SweepSpec spec;
  spec.base = StagHuntPayoffs{5.0, 3.0, 1.0, 2.0, "SNN", "ANN"};
  spec.parameter = SweepParameter::A;
  spec.values = log_range(5.0, 500.0, 50);
  spec.spacing = Spacing::Log;
  for (double anchor : {5.0, 50.0, 500.0}) {
    if (std::find(spec.values.begin(), spec.values.end(), anchor) != spec.values.end())
      continue;
    spec.values.insert(
        std::lower_bound(spec.values.begin(), spec.values.end(), anchor), anchor);
  }
  return spec;
}

SweepSpec scenario_compromise() {
  SweepSpec spec;
  spec.base = StagHuntPayoffs{10.0, 3.0, 1.0, 2.0, "SNN", "ANN"};
  spec.parameter = SweepParameter::B;
  spec.values = {3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0};
  spec.spacing = Spacing::Linear;
  return spec;
}

}  // namespace staghunt
