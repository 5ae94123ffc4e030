#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "staghunt/dynamics.hpp"
#include "staghunt/io.hpp"
#include "staghunt/solver.hpp"
#include "staghunt/stag_hunt.hpp"
#include "staghunt/sweep.hpp"

namespace py = pybind11;
using namespace staghunt;

namespace {

std::string payoffs_repr(const StagHuntPayoffs& p) {
  return "StagHuntPayoffs(a=" + format_significant(p.a, 12) +
         ", b=" + format_significant(p.b, 12) + ", c=" + format_significant(p.c, 12) +
         ", d=" + format_significant(p.d, 12) + ", stag_label='" + p.stag_label +
         "', hare_label='" + p.hare_label + "')";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Stag Hunt coordination game analysis";
  m.attr("__version__") = "0.1.0";

  // base classes first: translators run newest-first, so leaf exception
  // types are matched before their bases
  auto error = py::register_exception<Error>(m, "Error");
  auto input_error = py::register_exception<InputError>(m, "InputError", error);
  py::register_exception<ValidationError>(m, "ValidationError", input_error);
  py::register_exception<ParseError>(m, "ParseError", input_error);
  py::register_exception<StagHuntStructureError>(m, "StagHuntStructureError", error);
  py::register_exception<SizeLimitError>(m, "SizeLimitError", error);

  py::enum_<Player>(m, "Player")
      .value("Row", Player::Row)
      .value("Col", Player::Col);

  py::enum_<EquilibriumTag>(m, "EquilibriumTag")
      .value("StagStag", EquilibriumTag::StagStag)
      .value("HareHare", EquilibriumTag::HareHare)
      .value("Tie", EquilibriumTag::Tie);

  py::enum_<EquilibriumKind>(m, "EquilibriumKind")
      .value("Pure", EquilibriumKind::Pure)
      .value("Mixed", EquilibriumKind::Mixed);

  py::enum_<SweepParameter>(m, "SweepParameter")
      .value("A", SweepParameter::A)
      .value("B", SweepParameter::B)
      .value("C", SweepParameter::C)
      .value("D", SweepParameter::D);

  py::enum_<Spacing>(m, "Spacing")
      .value("Linear", Spacing::Linear)
      .value("Log", Spacing::Log);

  py::enum_<TerminalStatus>(m, "TerminalStatus")
      .value("Converged", TerminalStatus::Converged)
      .value("MaxSteps", TerminalStatus::MaxSteps);

  py::enum_<BasinLabel>(m, "BasinLabel")
      .value("StagStag", BasinLabel::StagStag)
      .value("HareHare", BasinLabel::HareHare)
      .value("Interior", BasinLabel::Interior);

  py::enum_<Execution>(m, "Execution")
      .value("Sequential", Execution::Sequential)
      .value("Parallel", Execution::Parallel);

  py::class_<PayoffPair>(m, "PayoffPair")
      .def(py::init([](double row, double col) { return PayoffPair{row, col}; }),
           py::arg("row") = 0.0, py::arg("col") = 0.0)
      .def_readwrite("row", &PayoffPair::row)
      .def_readwrite("col", &PayoffPair::col)
      .def("__repr__", [](const PayoffPair& p) {
        return "PayoffPair(row=" + format_significant(p.row, 12) +
               ", col=" + format_significant(p.col, 12) + ")";
      });

  py::class_<MixedProfile>(m, "MixedProfile")
      .def(py::init([](std::vector<double> row, std::vector<double> col) {
             return MixedProfile{std::move(row), std::move(col)};
           }),
           py::arg("row_strategy"), py::arg("col_strategy"))
      .def_readwrite("row_strategy", &MixedProfile::row_strategy)
      .def_readwrite("col_strategy", &MixedProfile::col_strategy);

  py::class_<StagHuntPayoffs>(m, "StagHuntPayoffs")
      .def(py::init([](double a, double b, double c, double d, std::string stag_label,
                       std::string hare_label) {
             return StagHuntPayoffs{a, b, c, d, std::move(stag_label),
                                    std::move(hare_label)};
           }),
           py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"),
           py::arg("stag_label") = "SNN", py::arg("hare_label") = "ANN")
      .def_readwrite("a", &StagHuntPayoffs::a)
      .def_readwrite("b", &StagHuntPayoffs::b)
      .def_readwrite("c", &StagHuntPayoffs::c)
      .def_readwrite("d", &StagHuntPayoffs::d)
      .def_readwrite("stag_label", &StagHuntPayoffs::stag_label)
      .def_readwrite("hare_label", &StagHuntPayoffs::hare_label)
      .def("__repr__", &payoffs_repr);

  py::class_<BimatrixGame>(m, "BimatrixGame")
      .def(py::init<std::string, std::string, std::vector<std::string>,
                    std::vector<std::string>, const std::vector<std::vector<double>>&,
                    const std::vector<std::vector<double>>&>(),
           py::arg("row_player_name"), py::arg("col_player_name"), py::arg("row_actions"),
           py::arg("col_actions"), py::arg("row_payoffs"), py::arg("col_payoffs"))
      .def_property_readonly("rows", &BimatrixGame::rows)
      .def_property_readonly("cols", &BimatrixGame::cols)
      .def("row_payoff", &BimatrixGame::row_payoff, py::arg("i"), py::arg("j"))
      .def("col_payoff", &BimatrixGame::col_payoff, py::arg("i"), py::arg("j"))
      .def_property_readonly("row_player_name", &BimatrixGame::row_player_name)
      .def_property_readonly("col_player_name", &BimatrixGame::col_player_name)
      .def_property_readonly("row_actions", &BimatrixGame::row_actions)
      .def_property_readonly("col_actions", &BimatrixGame::col_actions)
      .def_property_readonly("row_payoffs", &BimatrixGame::row_payoff_rows)
      .def_property_readonly("col_payoffs", &BimatrixGame::col_payoff_rows);

  py::class_<DominanceReport>(m, "DominanceReport")
      .def_readonly("payoff_dominant", &DominanceReport::payoff_dominant)
      .def_readonly("risk_dominant", &DominanceReport::risk_dominant)
      .def_readonly("stag_deviation_loss_product",
                    &DominanceReport::stag_deviation_loss_product)
      .def_readonly("hare_deviation_loss_product",
                    &DominanceReport::hare_deviation_loss_product);

  py::class_<Equilibrium>(m, "Equilibrium")
      .def_readonly("profile", &Equilibrium::profile)
      .def_readonly("kind", &Equilibrium::kind)
      .def_readonly("payoffs", &Equilibrium::payoffs)
      .def_readonly("row_support", &Equilibrium::row_support)
      .def_readonly("col_support", &Equilibrium::col_support);

  py::class_<SupportEnumerationResult>(m, "SupportEnumerationResult")
      .def_readonly("equilibria", &SupportEnumerationResult::equilibria)
      .def_readonly("singular_pairs", &SupportEnumerationResult::singular_pairs)
      .def_readonly("degenerate", &SupportEnumerationResult::degenerate);

  py::class_<VerificationResult>(m, "VerificationResult")
      .def_readonly("is_equilibrium", &VerificationResult::is_equilibrium)
      .def_readonly("max_regret", &VerificationResult::max_regret)
      .def_readonly("row_regret", &VerificationResult::row_regret)
      .def_readonly("col_regret", &VerificationResult::col_regret);

  py::class_<SweepSpec>(m, "SweepSpec")
      .def(py::init([](StagHuntPayoffs base, SweepParameter parameter,
                       std::vector<double> values, Spacing spacing) {
             return SweepSpec{std::move(base), parameter, std::move(values), spacing};
           }),
           py::arg("base"), py::arg("parameter"), py::arg("values"),
           py::arg("spacing") = Spacing::Linear)
      .def_readwrite("base", &SweepSpec::base)
      .def_readwrite("parameter", &SweepSpec::parameter)
      .def_readwrite("values", &SweepSpec::values)
      .def_readwrite("spacing", &SweepSpec::spacing);

  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("parameter_value", &SweepRow::parameter_value)
      .def_readonly("valid", &SweepRow::valid)
      .def_readonly("p_stag", &SweepRow::p_stag)
      .def_readonly("risk_dominant", &SweepRow::risk_dominant)
      .def_readonly("payoff_dominant", &SweepRow::payoff_dominant);

  py::class_<PopulationState>(m, "PopulationState")
      .def(py::init([](double x, double y) { return PopulationState{x, y}; }),
           py::arg("x"), py::arg("y"))
      .def_readwrite("x", &PopulationState::x)
      .def_readwrite("y", &PopulationState::y)
      .def("__repr__", [](const PopulationState& s) {
        return "PopulationState(x=" + format_significant(s.x, 12) +
               ", y=" + format_significant(s.y, 12) + ")";
      });

  py::class_<DynamicsConfig>(m, "DynamicsConfig")
      .def(py::init([](double step_size, int max_steps, double convergence_epsilon) {
             return DynamicsConfig{step_size, max_steps, convergence_epsilon};
           }),
           py::arg("step_size") = 0.01, py::arg("max_steps") = 100000,
           py::arg("convergence_epsilon") = 1e-6)
      .def_readwrite("step_size", &DynamicsConfig::step_size)
      .def_readwrite("max_steps", &DynamicsConfig::max_steps)
      .def_readwrite("convergence_epsilon", &DynamicsConfig::convergence_epsilon);

  py::class_<Trajectory>(m, "Trajectory")
      .def_readonly("states", &Trajectory::states)
      .def_readonly("status", &Trajectory::status);

  py::class_<BasinMap>(m, "BasinMap")
      .def_readonly("resolution", &BasinMap::resolution)
      .def_readonly("labels", &BasinMap::labels)
      .def("at", &BasinMap::at, py::arg("ix"), py::arg("iy"));

  py::class_<ChartOptions>(m, "ChartOptions")
      .def(py::init([](std::string title, std::string x_label, std::string y_label,
                       Spacing x_scale) {
             return ChartOptions{std::move(title), std::move(x_label),
                                 std::move(y_label), x_scale};
           }),
           py::arg("title") = "", py::arg("x_label") = "parameter",
           py::arg("y_label") = "P(Stag)", py::arg("x_scale") = Spacing::Linear)
      .def_readwrite("title", &ChartOptions::title)
      .def_readwrite("x_label", &ChartOptions::x_label)
      .def_readwrite("y_label", &ChartOptions::y_label)
      .def_readwrite("x_scale", &ChartOptions::x_scale);

  // game fundamentals
  m.def("one_hot", &one_hot, py::arg("size"), py::arg("index"));
  m.def("is_distribution",
        [](const std::vector<double>& values) { return is_distribution(values); },
        py::arg("values"));
  m.def("action_payoffs",
        [](const BimatrixGame& game, Player player, const std::vector<double>& opponent) {
          return action_payoffs(game, player, opponent);
        },
        py::arg("game"), py::arg("player"), py::arg("opponent_strategy"));
  m.def("expected_payoff", &expected_payoff, py::arg("game"), py::arg("profile"));
  m.def("pure_payoff", &pure_payoff, py::arg("game"), py::arg("row_action"),
        py::arg("col_action"));
  m.def("best_responses",
        [](const BimatrixGame& game, Player player, const std::vector<double>& opponent) {
          return best_responses(game, player, opponent);
        },
        py::arg("game"), py::arg("player"), py::arg("opponent_strategy"));

  // stag hunt structure and analysis
  m.def("validate", &validate, py::arg("params"));
  m.def("to_bimatrix", &to_bimatrix, py::arg("params"),
        py::arg("row_player_name") = "Row Player",
        py::arg("col_player_name") = "Column Player");
  m.def("from_bimatrix", &from_bimatrix, py::arg("game"));
  m.def("mixed_equilibrium", &mixed_equilibrium, py::arg("params"));
  m.def("dominance", &dominance, py::arg("params"));
  m.def("neuromorphic_codesign", &neuromorphic_codesign);
  m.def("neuromorphic_codesign_game", &neuromorphic_codesign_game);

  // solvers
  m.def("pure_nash", &pure_nash, py::arg("game"));
  m.def("mixed_nash_2x2", &mixed_nash_2x2, py::arg("game"));
  m.def("support_enumeration", &support_enumeration, py::arg("game"));
  m.def("verify_equilibrium", &verify_equilibrium, py::arg("game"), py::arg("profile"),
        py::arg("epsilon"));

  // sweeps
  m.def("linear_range", &linear_range, py::arg("start"), py::arg("stop"), py::arg("count"));
  m.def("log_range", &log_range, py::arg("start"), py::arg("stop"), py::arg("count"));
  m.def("run_sweep", &run_sweep, py::arg("spec"));
  m.def("scenario_increasing_snn_value", &scenario_increasing_snn_value);
  m.def("scenario_compromise", &scenario_compromise);

  // dynamics
  m.def("replicator_step", &replicator_step, py::arg("game"), py::arg("state"),
        py::arg("step_size"));
  m.def("simulate", &simulate, py::arg("game"), py::arg("start"),
        py::arg("config") = DynamicsConfig{});
  m.def("basin_map", &basin_map, py::arg("game"), py::arg("grid_resolution"),
        py::arg("config") = DynamicsConfig{},
        py::arg("execution") = Execution::Sequential);

  // documents and reports; the C++ API hands back a variant, which maps to
  // "whichever type the document contained" here
  m.def("parse_game",
        [](const std::string& text) -> py::object {
          ParsedGame parsed = parse_game(text);
          if (std::holds_alternative<BimatrixGame>(parsed))
            return py::cast(std::get<BimatrixGame>(std::move(parsed)));
          return py::cast(std::get<StagHuntPayoffs>(std::move(parsed)));
        },
        py::arg("text"));
  m.def("as_bimatrix",
        [](const BimatrixGame& game) { return as_bimatrix(ParsedGame{game}); },
        py::arg("parsed"));
  m.def("as_bimatrix",
        [](const StagHuntPayoffs& params) { return as_bimatrix(ParsedGame{params}); },
        py::arg("parsed"));
  m.def("as_stag_hunt",
        [](const BimatrixGame& game) { return as_stag_hunt(ParsedGame{game}); },
        py::arg("parsed"));
  m.def("as_stag_hunt",
        [](const StagHuntPayoffs& params) { return as_stag_hunt(ParsedGame{params}); },
        py::arg("parsed"));
  m.def("serialize", [](const BimatrixGame& game) { return serialize(game); },
        py::arg("game"));
  m.def("serialize", [](const StagHuntPayoffs& params) { return serialize(params); },
        py::arg("params"));
  m.def("parse_sweep_spec", &parse_sweep_spec, py::arg("text"));
  m.def("emit_sweep_csv",
        [](const SweepSpec& spec, const std::vector<SweepRow>& rows) {
          return emit_csv(spec, rows);
        },
        py::arg("spec"), py::arg("rows"));
  m.def("emit_trajectory_csv",
        [](const Trajectory& trajectory) { return emit_csv(trajectory); },
        py::arg("trajectory"));
  m.def("emit_basin_csv", [](const BasinMap& map) { return emit_csv(map); },
        py::arg("map"));
  m.def("emit_equilibria_csv",
        [](const SupportEnumerationResult& result) { return emit_csv(result); },
        py::arg("result"));
  m.def("emit_equilibria_json",
        [](const SupportEnumerationResult& result) { return emit_json(result); },
        py::arg("result"));
  m.def("emit_svg_chart", &emit_svg_chart, py::arg("rows"),
        py::arg("options") = ChartOptions{});
  m.def("format_significant", &format_significant, py::arg("value"), py::arg("digits"));
  m.def("format_fixed", &format_fixed, py::arg("value"), py::arg("decimals"));
}
