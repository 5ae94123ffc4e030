#pragma once

#include <string>
#include <variant>
#include <vector>

#include "staghunt/dynamics.hpp"
#include "staghunt/solver.hpp"
#include "staghunt/sweep.hpp"

namespace staghunt {

// A game document holds either a full bimatrix description or the
// {"stag_hunt": {...}} shorthand.
using ParsedGame = std::variant<BimatrixGame, StagHuntPayoffs>;

// Accepts either document form:
//   {"row_player": ..., "col_player": ..., "row_actions": [...],
//    "col_actions": [...], "row_payoffs": [[...]], "col_payoffs": [[...]]}
// or
//   {"stag_hunt": {"a": ..., "b": ..., "c": ..., "d": ...,
//                  "stag_label": ..., "hare_label": ...}}
// Exactly one form must be present. Shorthand parameters are structurally
// validated here, so documents violating a > b >= d > c throw
// StagHuntStructureError straight from the parse.
ParsedGame parse_game(const std::string& text);

// The bimatrix view of a parsed document (shorthand goes through
// to_bimatrix).
BimatrixGame as_bimatrix(const ParsedGame& parsed);

// The Stag Hunt view of a parsed document (full documents go through
// from_bimatrix, which requires the 2x2 symmetric shape).
StagHuntPayoffs as_stag_hunt(const ParsedGame& parsed);

// Inverse of parse_game: parse_game(serialize(g)) reproduces g exactly,
// including every payoff bit.
std::string serialize(const BimatrixGame& game);
std::string serialize(const StagHuntPayoffs& params);

// Sweep description document:
//   {"base": {"a": ..., "b": ..., "c": ..., "d": ...},
//    "parameter": "a",
//    "values": [...]}                                  -- explicit list, or
//    "range": {"start": ..., "stop": ..., "count": ..., "spacing": "log"}}
// The base block is not validated structurally: the swept parameter is
// overwritten per point and out-of-order points become invalid rows.
SweepSpec parse_sweep_spec(const std::string& text);

// CSV emitters. All floating-point fields are written with 12 significant
// digits; identical inputs produce identical bytes.
std::string emit_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows);
std::string emit_csv(const Trajectory& trajectory);
std::string emit_csv(const BasinMap& map);
std::string emit_csv(const SupportEnumerationResult& result);

// JSON report of a solver run (equilibria plus degeneracy metadata).
std::string emit_json(const SupportEnumerationResult& result);

struct ChartOptions {
  std::string title;
  std::string x_label = "parameter";
  std::string y_label = "P(Stag)";
  Spacing x_scale = Spacing::Linear;
};

// Minimal self-contained SVG line chart of p_stag against the swept
// parameter: one polyline through the valid rows, axes, and tick labels.
// Requires at least two valid rows; log scale requires positive values.
std::string emit_svg_chart(const std::vector<SweepRow>& rows,
                           const ChartOptions& options);

// Shortest-width formatting with the given number of significant digits,
// locale-independent.
std::string format_significant(double value, int digits);

// Fixed-point formatting (display rounding; analysis values keep full
// precision elsewhere).
std::string format_fixed(double value, int decimals);

}  // namespace staghunt
