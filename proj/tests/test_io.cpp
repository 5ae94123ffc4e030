#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "staghunt/io.hpp"
#include "test_util.hpp"

using namespace staghunt;

TEST_CASE("the shorthand document parses and validates in one step") {
  const ParsedGame parsed = parse_game(
      R"({"stag_hunt": {"a": 5, "b": 3, "c": 1, "d": 2,
          "stag_label": "SNN", "hare_label": "ANN"}})");
  REQUIRE(std::holds_alternative<StagHuntPayoffs>(parsed));
  const StagHuntPayoffs params = as_stag_hunt(parsed);
  CHECK(params.a == 5.0);
  CHECK(params.b == 3.0);
  CHECK(params.c == 1.0);
  CHECK(params.d == 2.0);
  CHECK(params.stag_label == "SNN");
  CHECK(params.hare_label == "ANN");

  // structural violations surface at the parse boundary
  CHECK_THROWS_AS(parse_game(R"({"stag_hunt": {"a": 2, "b": 3, "c": 1, "d": 2}})"),
                  StagHuntStructureError);
  // the bimatrix view uses the embedding with default player names
  const BimatrixGame game = as_bimatrix(parsed);
  CHECK(game.row_player_name() == "Row Player");
  CHECK(game.col_player_name() == "Column Player");
  CHECK(game.row_payoff(1, 0) == 3.0);
}

TEST_CASE("the full document form builds an arbitrary bimatrix game") {
  const ParsedGame parsed = parse_game(
      R"({"row_player": "P1", "col_player": "P2",
          "row_actions": ["u", "m", "d"], "col_actions": ["l", "r"],
          "row_payoffs": [[1, 2], [3, 4], [5, 6]],
          "col_payoffs": [[6, 5], [4, 3], [2, 1]]})");
  REQUIRE(std::holds_alternative<BimatrixGame>(parsed));
  const BimatrixGame game = as_bimatrix(parsed);
  CHECK(game.rows() == 3);
  CHECK(game.cols() == 2);
  CHECK(game.row_payoff(2, 1) == 6.0);
  CHECK(game.col_payoff(0, 0) == 6.0);
  CHECK(game.row_actions()[1] == "m");

  // player names are optional
  const ParsedGame unnamed = parse_game(
      R"({"row_actions": ["s", "h"], "col_actions": ["s", "h"],
          "row_payoffs": [[5, 1], [3, 2]], "col_payoffs": [[5, 3], [1, 2]]})");
  CHECK(as_bimatrix(unnamed).row_player_name() == "Row Player");
  // and this one is symmetric, so the stag hunt view works too
  CHECK(as_stag_hunt(unnamed).b == 3.0);
}

TEST_CASE("malformed documents raise parse errors") {
  CHECK_THROWS_AS(parse_game("not json at all"), ParseError);
  CHECK_THROWS_AS(parse_game("[1, 2, 3]"), ParseError);
  CHECK_THROWS_AS(parse_game("{}"), ParseError);
  // mixing the two forms
  CHECK_THROWS_AS(parse_game(R"({"stag_hunt": {"a": 5, "b": 3, "c": 1, "d": 2},
                                 "row_actions": ["s"]})"),
                  ParseError);
  // unknown fields
  CHECK_THROWS_AS(parse_game(R"({"stag_hunt": {"a": 5, "b": 3, "c": 1, "d": 2,
                                               "e": 7}})"),
                  ParseError);
  CHECK_THROWS_AS(parse_game(R"({"stag_hunt": {"a": 5, "b": 3, "c": 1, "d": 2},
                                 "comment": "hi"})"),
                  ParseError);
  // missing and mistyped fields
  CHECK_THROWS_AS(parse_game(R"({"stag_hunt": {"a": 5, "b": 3, "c": 1}})"), ParseError);
  CHECK_THROWS_AS(parse_game(R"({"stag_hunt": {"a": "five", "b": 3, "c": 1, "d": 2}})"),
                  ParseError);
  CHECK_THROWS_AS(parse_game(R"({"row_actions": ["s", "h"], "col_actions": ["s", "h"],
                                 "row_payoffs": [[5, "x"], [3, 2]],
                                 "col_payoffs": [[5, 3], [1, 2]]})"),
                  ParseError);
  // ragged matrices pass parsing but fail game construction
  CHECK_THROWS_AS(parse_game(R"({"row_actions": ["s", "h"], "col_actions": ["s", "h"],
                                 "row_payoffs": [[5, 1, 9], [3, 2]],
                                 "col_payoffs": [[5, 3], [1, 2]]})"),
                  InputError);
  // the stag hunt view of a non-symmetric document is a structure error
  CHECK_THROWS_AS(as_stag_hunt(parse_game(
                      R"({"row_actions": ["s", "h"], "col_actions": ["s", "h"],
                          "row_payoffs": [[5, 1], [3, 2]],
                          "col_payoffs": [[5, 4], [1, 2]]})")),
                  StagHuntStructureError);
}

TEST_CASE("serialization round-trips every payoff bit") {
  std::mt19937 gen(41);
  for (int trial = 0; trial < 100; ++trial) {
    const BimatrixGame game = testutil::random_game(gen, 3, 2);
    const ParsedGame back = parse_game(serialize(game));
    REQUIRE(std::holds_alternative<BimatrixGame>(back));
    CHECK(std::get<BimatrixGame>(back) == game);
  }

  // awkward magnitudes survive the trip too
  const BimatrixGame awkward("r", "c", {"x", "y"}, {"u", "v"},
                             {{0.1, 1.0 / 3.0}, {1e300, 1e-300}},
                             {{2.0 / 3.0, 0.2}, {-1e-17, 7.0}});
  CHECK(std::get<BimatrixGame>(parse_game(serialize(awkward))) == awkward);

  for (int trial = 0; trial < 100; ++trial) {
    StagHuntPayoffs params = testutil::random_stag_hunt(gen);
    params.stag_label = "spiking";
    const StagHuntPayoffs back = as_stag_hunt(parse_game(serialize(params)));
    CHECK(back.a == params.a);
    CHECK(back.b == params.b);
    CHECK(back.c == params.c);
    CHECK(back.d == params.d);
    CHECK(back.stag_label == params.stag_label);
    CHECK(back.hare_label == params.hare_label);
  }
}

TEST_CASE("sweep specs accept a value list or a generated range") {
  const SweepSpec listed = parse_sweep_spec(
      R"({"base": {"a": 5, "b": 3, "c": 1, "d": 2},
          "parameter": "b", "values": [3, 4, 4.5]})");
  CHECK(listed.parameter == SweepParameter::B);
  CHECK(listed.spacing == Spacing::Linear);
  CHECK(listed.values == std::vector<double>{3.0, 4.0, 4.5});

  const SweepSpec ranged = parse_sweep_spec(
      R"({"base": {"a": 5, "b": 3, "c": 1, "d": 2},
          "parameter": "a",
          "range": {"start": 5, "stop": 500, "count": 4, "spacing": "log"}})");
  CHECK(ranged.parameter == SweepParameter::A);
  CHECK(ranged.spacing == Spacing::Log);
  REQUIRE(ranged.values.size() == 4);
  CHECK(ranged.values.front() == 5.0);
  CHECK(ranged.values.back() == 500.0);

  // a base that is not itself a stag hunt still parses; the sweep decides
  const SweepSpec loose = parse_sweep_spec(
      R"({"base": {"a": 1, "b": 3, "c": 1, "d": 2},
          "parameter": "a", "values": [5, 2]})");
  const std::vector<SweepRow> rows = run_sweep(loose);
  CHECK(rows[0].valid);
  CHECK(!rows[1].valid);
}

TEST_CASE("malformed sweep specs raise parse errors") {
  const std::string base = R"("base": {"a": 5, "b": 3, "c": 1, "d": 2})";
  CHECK_THROWS_AS(parse_sweep_spec("{" + base + R"(, "parameter": "a"})"), ParseError);
  CHECK_THROWS_AS(parse_sweep_spec("{" + base +
                                   R"(, "parameter": "a", "values": [1],
                                       "range": {"start": 1, "stop": 2, "count": 2}})"),
                  ParseError);
  CHECK_THROWS_AS(parse_sweep_spec("{" + base + R"(, "parameter": "e", "values": [1]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_sweep_spec("{" + base + R"(, "parameter": "a", "values": []})"),
                  ParseError);
  CHECK_THROWS_AS(parse_sweep_spec("{" + base +
                                   R"(, "parameter": "a",
                                       "range": {"start": 1, "stop": 2, "count": 2.5}})"),
                  ParseError);
  CHECK_THROWS_AS(parse_sweep_spec("{" + base +
                                   R"(, "parameter": "a",
                                       "range": {"start": 1, "stop": 2, "count": 2,
                                                 "spacing": "cubic"}})"),
                  ParseError);
  CHECK_THROWS_AS(parse_sweep_spec("{" + base + R"(, "parameter": "a", "values": [1],
                                       "extra": 1})"),
                  ParseError);
  CHECK_THROWS_AS(parse_sweep_spec(R"({"parameter": "a", "values": [1]})"), ParseError);
  // range generation errors propagate as input errors
  CHECK_THROWS_AS(parse_sweep_spec("{" + base +
                                   R"(, "parameter": "a",
                                       "range": {"start": -1, "stop": 2, "count": 2,
                                                 "spacing": "log"}})"),
                  InputError);
}

TEST_CASE("the compromise sweep renders to an exact CSV") {
  const SweepSpec spec = scenario_compromise();
  const std::string csv = emit_csv(spec, run_sweep(spec));
  CHECK(csv ==
        "parameter,value,valid,p_stag,risk_dominant,payoff_dominant\n"
        "b,3,true,0.125,StagStag,StagStag\n"
        "b,4,true,0.142857142857,StagStag,StagStag\n"
        "b,5,true,0.166666666667,StagStag,StagStag\n"
        "b,6,true,0.2,StagStag,StagStag\n"
        "b,7,true,0.25,StagStag,StagStag\n"
        "b,8,true,0.333333333333,StagStag,StagStag\n"
        "b,9,true,0.5,Tie,StagStag\n");
}

TEST_CASE("invalid sweep rows leave their analysis columns empty") {
  SweepSpec spec;
  spec.base = {10, 3, 1, 2};
  spec.parameter = SweepParameter::B;
  spec.values = {4.0, 11.0};
  const std::string csv = emit_csv(spec, run_sweep(spec));
  CHECK(csv ==
        "parameter,value,valid,p_stag,risk_dominant,payoff_dominant\n"
        "b,4,true,0.142857142857,StagStag,StagStag\n"
        "b,11,false,,,\n");
}

TEST_CASE("trajectory CSV lists the start and each recorded step") {
  DynamicsConfig config;
  config.max_steps = 2;
  const Trajectory t = simulate(neuromorphic_codesign_game(), {0.5, 0.5}, config);
  const std::string csv = emit_csv(t);
  REQUIRE(t.states.size() == 3);
  const std::string expected_prefix = "step,x,y\n0,0.5,0.5\n1,0.50125,0.50125\n2,";
  CHECK(csv.substr(0, expected_prefix.size()) == expected_prefix);
  CHECK(csv.back() == '\n');
}

TEST_CASE("the coarse basin map renders to an exact CSV") {
  const std::string csv = emit_csv(basin_map(neuromorphic_codesign_game(), 2));
  CHECK(csv ==
        "x0,y0,label\n"
        "0,0,HareHare\n"
        "0,1,Interior/Unconverged\n"
        "1,0,Interior/Unconverged\n"
        "1,1,StagStag\n");
}

TEST_CASE("the solver report renders to an exact CSV") {
  const std::string csv = emit_csv(support_enumeration(neuromorphic_codesign_game()));
  CHECK(csv ==
        "kind,row_strategy,col_strategy,row_payoff,col_payoff\n"
        "pure,1;0,1;0,5,5\n"
        "pure,0;1,0;1,2,2\n"
        "mixed,0.333333333333;0.666666666667,0.333333333333;0.666666666667,"
        "2.33333333333,2.33333333333\n");
}

TEST_CASE("the solver JSON report carries profiles and degeneracy metadata") {
  const std::string text = emit_json(support_enumeration(neuromorphic_codesign_game()));
  const nlohmann::json document = nlohmann::json::parse(text);
  REQUIRE(document.at("equilibria").size() == 3);
  CHECK(document.at("equilibria").at(0).at("kind") == "pure");
  CHECK(document.at("equilibria").at(2).at("kind") == "mixed");
  CHECK(document.at("equilibria").at(2).at("row_support") == nlohmann::json({0, 1}));
  const double p = document.at("equilibria").at(2).at("row_strategy").at(0).get<double>();
  CHECK(std::abs(p - 1.0 / 3.0) <= 1e-9);
  CHECK(document.at("degenerate") == false);
  CHECK(document.at("singular_support_pairs") == 0);
  CHECK(document.at("tolerances").contains("tie"));
}

TEST_CASE("sweep charts are self-contained SVG documents") {
  const SweepSpec spec = scenario_compromise();
  ChartOptions options;
  options.title = "compromise <scan> & more";
  options.x_label = "b";
  options.y_label = "P(SNN)";
  const std::string svg = emit_svg_chart(run_sweep(spec), options);
  CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\"") == 0);
  CHECK(svg.find("compromise &lt;scan&gt; &amp; more") != std::string::npos);
  CHECK(svg.find("P(SNN)") != std::string::npos);
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
  // seven points on the polyline
  const std::size_t points_at = svg.find("points=\"");
  REQUIRE(points_at != std::string::npos);
  const std::string points = svg.substr(points_at + 8, svg.find('"', points_at + 8) -
                                                           points_at - 8);
  CHECK(std::count(points.begin(), points.end(), ',') == 7);

  // a log-scale chart gets decade ticks between its endpoints
  const SweepSpec log_spec = scenario_increasing_snn_value();
  ChartOptions log_options;
  log_options.x_scale = Spacing::Log;
  const std::string log_svg = emit_svg_chart(run_sweep(log_spec), log_options);
  CHECK(log_svg.find(">10<") != std::string::npos);
  CHECK(log_svg.find(">100<") != std::string::npos);
  CHECK(log_svg.find(">500<") != std::string::npos);
}

TEST_CASE("charts reject inputs they cannot draw") {
  SweepSpec spec;
  spec.base = {5, 3, 1, 2};
  spec.parameter = SweepParameter::A;

  spec.values = {5.0};
  CHECK_THROWS_AS(emit_svg_chart(run_sweep(spec), {}), InputError);

  // two identical parameter values cannot span an axis
  spec.values = {5.0, 5.0};
  CHECK_THROWS_AS(emit_svg_chart(run_sweep(spec), {}), InputError);

  // log scale cannot place a non-positive value
  SweepSpec negative;
  negative.base = {5, 3, -4, -2};
  negative.parameter = SweepParameter::C;
  negative.values = {-5.0, -6.0};  // both rows valid, both values non-positive
  ChartOptions log_options;
  log_options.x_scale = Spacing::Log;
  CHECK_THROWS_AS(emit_svg_chart(run_sweep(negative), log_options), InputError);
}

TEST_CASE("numeric formatting is stable and round-trippable") {
  CHECK(format_significant(0.125, 12) == "0.125");
  CHECK(format_significant(1.0 / 3.0, 12) == "0.333333333333");
  CHECK(format_significant(3.0, 12) == "3");
  CHECK(format_significant(1234567.0, 4) == "1.235e+06");
  CHECK(format_fixed(3.14159, 2) == "3.14");
  CHECK(format_fixed(2.0, 2) == "2.00");
  CHECK(format_fixed(-0.005, 1) == "-0.0");
}
