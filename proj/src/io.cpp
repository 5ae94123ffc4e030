#include "staghunt/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace staghunt {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& message) { throw ParseError(message); }

void require_object(const json& value, const std::string& context) {
  if (!value.is_object()) fail(context + " must be a JSON object");
}

void reject_unknown_keys(const json& object, const std::string& context,
                         std::initializer_list<const char*> allowed) {
  for (const auto& item : object.items()) {
    const bool known = std::any_of(allowed.begin(), allowed.end(),
                                   [&](const char* key) { return item.key() == key; });
    if (!known) fail(context + ": unknown field \"" + item.key() + "\"");
  }
}

double number_field(const json& object, const std::string& context, const char* key) {
  if (!object.contains(key)) fail(context + ": missing field \"" + key + "\"");
  const json& value = object.at(key);
  if (!value.is_number()) fail(context + ": field \"" + key + "\" must be a number");
  return value.get<double>();
}

std::string string_field(const json& object, const std::string& context, const char* key,
                         const std::string& fallback) {
  if (!object.contains(key)) return fallback;
  const json& value = object.at(key);
  if (!value.is_string()) fail(context + ": field \"" + key + "\" must be a string");
  return value.get<std::string>();
}

StagHuntPayoffs parse_payoffs(const json& object, const std::string& context) {
  require_object(object, context);
  reject_unknown_keys(object, context, {"a", "b", "c", "d", "stag_label", "hare_label"});
  StagHuntPayoffs params;
  params.a = number_field(object, context, "a");
  params.b = number_field(object, context, "b");
  params.c = number_field(object, context, "c");
  params.d = number_field(object, context, "d");
  params.stag_label = string_field(object, context, "stag_label", params.stag_label);
  params.hare_label = string_field(object, context, "hare_label", params.hare_label);
  return params;
}

std::vector<std::string> action_list(const json& object, const char* key) {
  if (!object.contains(key)) fail(std::string("game document: missing field \"") + key + "\"");
  const json& value = object.at(key);
  if (!value.is_array() || value.empty())
    fail(std::string(key) + " must be a non-empty array of strings");
  std::vector<std::string> actions;
  actions.reserve(value.size());
  for (const json& entry : value) {
    if (!entry.is_string()) fail(std::string(key) + " entries must be strings");
    actions.push_back(entry.get<std::string>());
  }
  return actions;
}

std::vector<std::vector<double>> payoff_matrix(const json& object, const char* key) {
  if (!object.contains(key)) fail(std::string("game document: missing field \"") + key + "\"");
  const json& value = object.at(key);
  if (!value.is_array()) fail(std::string(key) + " must be an array of rows");
  std::vector<std::vector<double>> matrix;
  matrix.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    const json& row = value.at(i);
    if (!row.is_array())
      fail(std::string(key) + " row " + std::to_string(i) + " must be an array of numbers");
    std::vector<double> entries;
    entries.reserve(row.size());
    for (const json& cell : row) {
      if (!cell.is_number())
        fail(std::string(key) + " row " + std::to_string(i) + " has a non-numeric entry");
      entries.push_back(cell.get<double>());
    }
    matrix.push_back(std::move(entries));
  }
  return matrix;
}

constexpr std::array<const char*, 6> kFullFormKeys = {
    "row_player", "col_player", "row_actions", "col_actions", "row_payoffs", "col_payoffs"};

ordered_json payoffs_document(const StagHuntPayoffs& params) {
  ordered_json inner;
  inner["a"] = params.a;
  inner["b"] = params.b;
  inner["c"] = params.c;
  inner["d"] = params.d;
  inner["stag_label"] = params.stag_label;
  inner["hare_label"] = params.hare_label;
  return inner;
}

std::string join_probabilities(const std::vector<double>& strategy) {
  std::string out;
  for (std::size_t i = 0; i < strategy.size(); ++i) {
    if (i != 0) out += ';';
    out += format_significant(strategy[i], 12);
  }
  return out;
}

std::string xml_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

ParsedGame parse_game(const std::string& text) {
  json document;
  try {
    document = json::parse(text);
  } catch (const json::exception& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!document.is_object()) fail("game document must be a JSON object");

  const bool shorthand = document.contains("stag_hunt");
  const bool full = std::any_of(kFullFormKeys.begin(), kFullFormKeys.end(),
                                [&](const char* key) { return document.contains(key); });
  if (shorthand && full)
    fail("game document mixes the stag_hunt shorthand with bimatrix fields");
  if (!shorthand && !full)
    fail("game document has neither a stag_hunt block nor bimatrix fields");

  if (shorthand) {
    reject_unknown_keys(document, "game document", {"stag_hunt"});
    // shorthand parameters are structurally validated at the parse boundary
    return validate(parse_payoffs(document.at("stag_hunt"), "stag_hunt"));
  }

  reject_unknown_keys(document, "game document",
                      {"row_player", "col_player", "row_actions", "col_actions",
                       "row_payoffs", "col_payoffs"});
  return BimatrixGame(string_field(document, "game document", "row_player", "Row Player"),
                      string_field(document, "game document", "col_player", "Column Player"),
                      action_list(document, "row_actions"),
                      action_list(document, "col_actions"),
                      payoff_matrix(document, "row_payoffs"),
                      payoff_matrix(document, "col_payoffs"));
}

BimatrixGame as_bimatrix(const ParsedGame& parsed) {
  if (const auto* game = std::get_if<BimatrixGame>(&parsed)) return *game;
  return to_bimatrix(std::get<StagHuntPayoffs>(parsed));
}

StagHuntPayoffs as_stag_hunt(const ParsedGame& parsed) {
  if (const auto* params = std::get_if<StagHuntPayoffs>(&parsed)) return *params;
  return from_bimatrix(std::get<BimatrixGame>(parsed));
}

std::string serialize(const BimatrixGame& game) {
  ordered_json document;
  document["row_player"] = game.row_player_name();
  document["col_player"] = game.col_player_name();
  document["row_actions"] = game.row_actions();
  document["col_actions"] = game.col_actions();
  document["row_payoffs"] = game.row_payoff_rows();
  document["col_payoffs"] = game.col_payoff_rows();
  return document.dump(2) + "\n";
}

std::string serialize(const StagHuntPayoffs& params) {
  ordered_json document;
  document["stag_hunt"] = payoffs_document(params);
  return document.dump(2) + "\n";
}

SweepSpec parse_sweep_spec(const std::string& text) {
  json document;
  try {
    document = json::parse(text);
  } catch (const json::exception& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  require_object(document, "sweep spec");
  reject_unknown_keys(document, "sweep spec", {"base", "parameter", "values", "range"});
  if (!document.contains("base")) fail("sweep spec: missing field \"base\"");

  SweepSpec spec;
  // base is deliberately not validated: the swept parameter is replaced per
  // point, and out-of-order points surface as invalid rows
  spec.base = parse_payoffs(document.at("base"), "sweep spec base");

  const std::string parameter = string_field(document, "sweep spec", "parameter", "");
  if (parameter == "a") spec.parameter = SweepParameter::A;
  else if (parameter == "b") spec.parameter = SweepParameter::B;
  else if (parameter == "c") spec.parameter = SweepParameter::C;
  else if (parameter == "d") spec.parameter = SweepParameter::D;
  else fail("sweep spec: field \"parameter\" must be one of \"a\", \"b\", \"c\", \"d\"");

  const bool has_values = document.contains("values");
  const bool has_range = document.contains("range");
  if (has_values == has_range)
    fail("sweep spec: exactly one of \"values\" and \"range\" is required");

  if (has_values) {
    const json& values = document.at("values");
    if (!values.is_array() || values.empty())
      fail("sweep spec: \"values\" must be a non-empty array of numbers");
    for (const json& entry : values) {
      if (!entry.is_number()) fail("sweep spec: \"values\" entries must be numbers");
      spec.values.push_back(entry.get<double>());
    }
    spec.spacing = Spacing::Linear;
    return spec;
  }

  const json& range = document.at("range");
  require_object(range, "sweep spec range");
  reject_unknown_keys(range, "sweep spec range", {"start", "stop", "count", "spacing"});
  const double start = number_field(range, "sweep spec range", "start");
  const double stop = number_field(range, "sweep spec range", "stop");
  if (!range.contains("count") || !range.at("count").is_number_integer())
    fail("sweep spec range: field \"count\" must be an integer");
  const int count = range.at("count").get<int>();
  const std::string spacing = string_field(range, "sweep spec range", "spacing", "linear");
  if (spacing == "linear") {
    spec.values = linear_range(start, stop, count);
    spec.spacing = Spacing::Linear;
  } else if (spacing == "log") {
    spec.values = log_range(start, stop, count);
    spec.spacing = Spacing::Log;
  } else {
    fail("sweep spec range: field \"spacing\" must be \"linear\" or \"log\"");
  }
  return spec;
}

std::string emit_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows) {
  std::string out = "parameter,value,valid,p_stag,risk_dominant,payoff_dominant\n";
  const char parameter = to_char(spec.parameter);
  for (const SweepRow& row : rows) {
    out += parameter;
    out += ',';
    out += format_significant(row.parameter_value, 12);
    out += ',';
    out += row.valid ? "true" : "false";
    out += ',';
    if (row.p_stag) out += format_significant(*row.p_stag, 12);
    out += ',';
    if (row.risk_dominant) out += to_string(*row.risk_dominant);
    out += ',';
    if (row.payoff_dominant) out += to_string(*row.payoff_dominant);
    out += '\n';
  }
  return out;
}

std::string emit_csv(const Trajectory& trajectory) {
  std::string out = "step,x,y\n";
  for (std::size_t step = 0; step < trajectory.states.size(); ++step) {
    out += std::to_string(step);
    out += ',';
    out += format_significant(trajectory.states[step].x, 12);
    out += ',';
    out += format_significant(trajectory.states[step].y, 12);
    out += '\n';
  }
  return out;
}

std::string emit_csv(const BasinMap& map) {
  std::string out = "x0,y0,label\n";
  for (int ix = 0; ix < map.resolution; ++ix) {
    const double x0 = static_cast<double>(ix) / (map.resolution - 1);
    for (int iy = 0; iy < map.resolution; ++iy) {
      const double y0 = static_cast<double>(iy) / (map.resolution - 1);
      out += format_significant(x0, 12);
      out += ',';
      out += format_significant(y0, 12);
      out += ',';
      out += to_string(map.at(ix, iy));
      out += '\n';
    }
  }
  return out;
}

std::string emit_csv(const SupportEnumerationResult& result) {
  std::string out = "kind,row_strategy,col_strategy,row_payoff,col_payoff\n";
  for (const Equilibrium& eq : result.equilibria) {
    out += eq.kind == EquilibriumKind::Pure ? "pure" : "mixed";
    out += ',';
    out += join_probabilities(eq.profile.row_strategy);
    out += ',';
    out += join_probabilities(eq.profile.col_strategy);
    out += ',';
    out += format_significant(eq.payoffs.row, 12);
    out += ',';
    out += format_significant(eq.payoffs.col, 12);
    out += '\n';
  }
  return out;
}

std::string emit_json(const SupportEnumerationResult& result) {
  ordered_json document;
  document["equilibria"] = ordered_json::array();
  for (const Equilibrium& eq : result.equilibria) {
    ordered_json entry;
    entry["kind"] = eq.kind == EquilibriumKind::Pure ? "pure" : "mixed";
    entry["row_strategy"] = eq.profile.row_strategy;
    entry["col_strategy"] = eq.profile.col_strategy;
    entry["row_support"] = eq.row_support;
    entry["col_support"] = eq.col_support;
    entry["row_payoff"] = eq.payoffs.row;
    entry["col_payoff"] = eq.payoffs.col;
    document["equilibria"].push_back(std::move(entry));
  }
  document["degenerate"] = result.degenerate;
  document["singular_support_pairs"] = result.singular_pairs;
  document["tolerances"] = {{"tie", kTieTolerance},
                            {"probability_clamping", kNegativeProbabilityTolerance},
                            {"dedup_radius", kDeduplicationRadius}};
  return document.dump(2) + "\n";
}

std::string emit_svg_chart(const std::vector<SweepRow>& rows, const ChartOptions& options) {
  std::vector<std::pair<double, double>> points;
  for (const SweepRow& row : rows)
    if (row.valid && row.p_stag) points.emplace_back(row.parameter_value, *row.p_stag);
  if (points.size() < 2)
    throw InputError("chart requires at least 2 valid rows, got " +
                     std::to_string(points.size()));

  double x_min = points.front().first;
  double x_max = points.front().first;
  double p_max = 0.0;
  for (const auto& [value, p] : points) {
    if (options.x_scale == Spacing::Log && !(value > 0.0))
      throw InputError("log-scale chart requires positive parameter values");
    x_min = std::min(x_min, value);
    x_max = std::max(x_max, value);
    p_max = std::max(p_max, p);
  }
  if (x_min == x_max)
    throw InputError("chart requires at least two distinct parameter values");
  if (p_max <= 0.0) p_max = 1.0;
  const double y_max = p_max * 1.05;

  constexpr double kLeft = 70.0, kRight = 690.0, kTop = 46.0, kBottom = 430.0;
  auto x_pos = [&](double value) {
    const double t = options.x_scale == Spacing::Log
                         ? (std::log10(value) - std::log10(x_min)) /
                               (std::log10(x_max) - std::log10(x_min))
                         : (value - x_min) / (x_max - x_min);
    return kLeft + t * (kRight - kLeft);
  };
  auto y_pos = [&](double p) { return kBottom - (p / y_max) * (kBottom - kTop); };
  auto coord = [](double v) { return format_fixed(v, 2); };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"480\" "
         "viewBox=\"0 0 720 480\">\n";
  svg += "<rect width=\"720\" height=\"480\" fill=\"#ffffff\"/>\n";
  svg += "<text x=\"380\" y=\"26\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"16\">" + xml_escape(options.title) + "</text>\n";

  // axes
  svg += "<line x1=\"" + coord(kLeft) + "\" y1=\"" + coord(kBottom) + "\" x2=\"" +
         coord(kRight) + "\" y2=\"" + coord(kBottom) + "\" stroke=\"#000000\"/>\n";
  svg += "<line x1=\"" + coord(kLeft) + "\" y1=\"" + coord(kTop) + "\" x2=\"" +
         coord(kLeft) + "\" y2=\"" + coord(kBottom) + "\" stroke=\"#000000\"/>\n";

  // y ticks at 0, 1/4, 1/2, 3/4, 1 of the axis range
  for (int i = 0; i <= 4; ++i) {
    const double p = y_max * i / 4.0;
    const double y = y_pos(p);
    svg += "<line x1=\"" + coord(kLeft - 5.0) + "\" y1=\"" + coord(y) + "\" x2=\"" +
           coord(kLeft) + "\" y2=\"" + coord(y) + "\" stroke=\"#000000\"/>\n";
    svg += "<text x=\"" + coord(kLeft - 9.0) + "\" y=\"" + coord(y + 4.0) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
           format_significant(p, 3) + "</text>\n";
  }

  // x ticks: evenly spaced for linear scale, decades plus endpoints for log
  std::vector<double> x_ticks;
  if (options.x_scale == Spacing::Linear) {
    for (int i = 0; i <= 4; ++i) x_ticks.push_back(x_min + (x_max - x_min) * i / 4.0);
  } else {
    x_ticks.push_back(x_min);
    for (int k = static_cast<int>(std::ceil(std::log10(x_min) - 1e-9)) ;
         k <= static_cast<int>(std::floor(std::log10(x_max) + 1e-9)); ++k) {
      const double tick = std::pow(10.0, k);
      if (tick > x_min && tick < x_max) x_ticks.push_back(tick);
    }
    x_ticks.push_back(x_max);
  }
  for (double tick : x_ticks) {
    const double x = x_pos(tick);
    svg += "<line x1=\"" + coord(x) + "\" y1=\"" + coord(kBottom) + "\" x2=\"" + coord(x) +
           "\" y2=\"" + coord(kBottom + 5.0) + "\" stroke=\"#000000\"/>\n";
    svg += "<text x=\"" + coord(x) + "\" y=\"" + coord(kBottom + 20.0) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
           format_significant(tick, 4) + "</text>\n";
  }

  svg += "<text x=\"" + coord((kLeft + kRight) / 2.0) + "\" y=\"" + coord(kBottom + 42.0) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" +
         xml_escape(options.x_label) + "</text>\n";
  svg += "<text x=\"20\" y=\"" + coord((kTop + kBottom) / 2.0) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
         "transform=\"rotate(-90 20 " + coord((kTop + kBottom) / 2.0) + ")\">" +
         xml_escape(options.y_label) + "</text>\n";

  svg += "<polyline fill=\"none\" stroke=\"#2a6fb0\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i != 0) svg += ' ';
    svg += coord(x_pos(points[i].first)) + "," + coord(y_pos(points[i].second));
  }
  svg += "\"/>\n";
  svg += "</svg>\n";
  return svg;
}

std::string format_significant(double value, int digits) {
  std::array<char, 64> buffer;
  const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value,
                                    std::chars_format::general, digits);
  return std::string(buffer.data(), result.ptr);
}

std::string format_fixed(double value, int decimals) {
  std::array<char, 64> buffer;
  const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value,
                                    std::chars_format::fixed, decimals);
  return std::string(buffer.data(), result.ptr);
}

}  // namespace staghunt
