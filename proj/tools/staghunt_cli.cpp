#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "staghunt/io.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw staghunt::InputError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw staghunt::InputError("cannot write file: " + path);
  out << content;
  if (!out.flush()) throw staghunt::InputError("failed writing file: " + path);
}

std::string strategy_text(const std::vector<double>& strategy) {
  std::string out = "[";
  for (std::size_t i = 0; i < strategy.size(); ++i) {
    if (i != 0) out += ", ";
    out += staghunt::format_significant(strategy[i], 12);
  }
  return out + "]";
}

void run_solve(const std::string& path, bool as_json, bool as_csv) {
  const staghunt::BimatrixGame game =
      staghunt::as_bimatrix(staghunt::parse_game(read_file(path)));
  const staghunt::SupportEnumerationResult result = staghunt::support_enumeration(game);
  if (as_json) {
    std::cout << staghunt::emit_json(result);
    return;
  }
  if (as_csv) {
    std::cout << staghunt::emit_csv(result);
    return;
  }
  std::cout << result.equilibria.size() << " equilibria";
  if (result.degenerate)
    std::cout << " (degenerate: " << result.singular_pairs
              << " singular support pairs skipped)";
  std::cout << '\n';
  for (std::size_t i = 0; i < result.equilibria.size(); ++i) {
    const staghunt::Equilibrium& eq = result.equilibria[i];
    std::cout << '[' << i + 1 << "] ";
    if (eq.kind == staghunt::EquilibriumKind::Pure) {
      std::cout << "pure: (" << game.row_actions()[eq.row_support.front()] << ", "
                << game.col_actions()[eq.col_support.front()] << ")";
    } else {
      std::cout << "mixed: row=" << strategy_text(eq.profile.row_strategy)
                << " col=" << strategy_text(eq.profile.col_strategy);
    }
    std::cout << " payoffs=(" << staghunt::format_significant(eq.payoffs.row, 12) << ", "
              << staghunt::format_significant(eq.payoffs.col, 12) << ")\n";
  }
}

void run_classify(const std::string& path) {
  const staghunt::StagHuntPayoffs params =
      staghunt::as_stag_hunt(staghunt::parse_game(read_file(path)));
  const double p_stag = staghunt::mixed_equilibrium(params);
  const staghunt::DominanceReport report = staghunt::dominance(params);
  auto sig = [](double v) { return staghunt::format_significant(v, 12); };
  std::cout << "valid Stag Hunt (a=" << sig(params.a) << ", b=" << sig(params.b)
            << ", c=" << sig(params.c) << ", d=" << sig(params.d)
            << "; stag=" << params.stag_label << ", hare=" << params.hare_label << ")\n";
  std::cout << "pure equilibria: (" << params.stag_label << ", " << params.stag_label
            << "), (" << params.hare_label << ", " << params.hare_label << ")\n";
  std::cout << "mixed equilibrium p_stag = " << sig(p_stag) << " ("
            << params.stag_label << " " << staghunt::format_fixed(p_stag, 3) << " / "
            << params.hare_label << " " << staghunt::format_fixed(1.0 - p_stag, 3)
            << ")\n";
  std::cout << "payoff dominant: " << staghunt::to_string(report.payoff_dominant) << '\n';
  std::cout << "risk dominant: " << staghunt::to_string(report.risk_dominant)
            << " (deviation loss products: stag "
            << sig(report.stag_deviation_loss_product) << ", hare "
            << sig(report.hare_deviation_loss_product) << ")\n";
}

void run_sweep_command(const std::string& scenario, const std::string& spec_path,
                       const std::string& csv_path, const std::string& svg_path) {
  staghunt::SweepSpec spec;
  std::string title;
  if (!scenario.empty()) {
    if (scenario == "increasing-a") {
      spec = staghunt::scenario_increasing_snn_value();
    } else if (scenario == "compromise-b") {
      spec = staghunt::scenario_compromise();
    } else {
      throw staghunt::InputError(
          "unknown scenario \"" + scenario +
          "\" (available: increasing-a, compromise-b)");
    }
    title = scenario + " sweep";
  } else {
    spec = staghunt::parse_sweep_spec(read_file(spec_path));
    title = "parameter sweep";
  }
  const std::vector<staghunt::SweepRow> rows = staghunt::run_sweep(spec);
  const std::string csv = staghunt::emit_csv(spec, rows);
  if (!svg_path.empty()) {
    staghunt::ChartOptions options;
    options.title = title;
    options.x_label = std::string(1, staghunt::to_char(spec.parameter));
    options.y_label = "P(" + spec.base.stag_label + ")";
    options.x_scale = spec.spacing;
    write_file(svg_path, staghunt::emit_svg_chart(rows, options));
  }
  if (!csv_path.empty())
    write_file(csv_path, csv);
  else if (svg_path.empty())
    std::cout << csv;
}

void run_evolve(const std::string& path, double x0, double y0, double step,
                int max_steps) {
  const staghunt::BimatrixGame game =
      staghunt::as_bimatrix(staghunt::parse_game(read_file(path)));
  staghunt::DynamicsConfig config;
  config.step_size = step;
  config.max_steps = max_steps;
  const staghunt::Trajectory trajectory = staghunt::simulate(game, {x0, y0}, config);
  std::cout << staghunt::emit_csv(trajectory);
  std::cerr << (trajectory.status == staghunt::TerminalStatus::Converged
                    ? "converged"
                    : "max steps reached")
            << " after " << trajectory.states.size() - 1 << " recorded steps\n";
}

void run_basin(const std::string& path, int grid) {
  const staghunt::BimatrixGame game =
      staghunt::as_bimatrix(staghunt::parse_game(read_file(path)));
  const staghunt::BasinMap map = staghunt::basin_map(
      game, grid, staghunt::DynamicsConfig{}, staghunt::Execution::Parallel);
  std::cout << staghunt::emit_csv(map);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stag Hunt coordination game analysis"};
  app.require_subcommand(1);

  std::string solve_path;
  bool solve_json = false;
  bool solve_csv = false;
  CLI::App* solve = app.add_subcommand("solve", "Enumerate all Nash equilibria");
  solve->add_option("game-file", solve_path, "JSON game document")->required();
  CLI::Option* json_flag = solve->add_flag("--json", solve_json, "emit a JSON report");
  CLI::Option* csv_flag = solve->add_flag("--csv", solve_csv, "emit a CSV listing");
  json_flag->excludes(csv_flag);
  csv_flag->excludes(json_flag);

  std::string classify_path;
  CLI::App* classify =
      app.add_subcommand("classify", "Validate a Stag Hunt and report its equilibria");
  classify->add_option("game-file", classify_path, "JSON game document")->required();

  std::string sweep_scenario;
  std::string sweep_spec_path;
  std::string sweep_csv_path;
  std::string sweep_svg_path;
  CLI::App* sweep = app.add_subcommand("sweep", "Evaluate a one-parameter game family");
  CLI::Option* scenario_opt = sweep->add_option(
      "--scenario", sweep_scenario, "built-in scenario: increasing-a or compromise-b");
  CLI::Option* spec_opt =
      sweep->add_option("--spec", sweep_spec_path, "JSON sweep description file");
  scenario_opt->excludes(spec_opt);
  spec_opt->excludes(scenario_opt);
  sweep->add_option("--csv", sweep_csv_path, "write the CSV table to this file");
  sweep->add_option("--svg", sweep_svg_path, "write an SVG chart to this file");

  std::string evolve_path;
  double x0 = 0.0;
  double y0 = 0.0;
  double step_size = 0.01;
  int max_steps = 100000;
  CLI::App* evolve = app.add_subcommand("evolve", "Run the replicator dynamics");
  evolve->add_option("game-file", evolve_path, "JSON game document")->required();
  evolve->add_option("--x0", x0, "initial share of the first row action")->required();
  evolve->add_option("--y0", y0, "initial share of the first column action")->required();
  evolve->add_option("--step", step_size, "step size")->capture_default_str();
  evolve->add_option("--max-steps", max_steps, "step limit")->capture_default_str();

  std::string basin_path;
  int grid = 101;
  CLI::App* basin = app.add_subcommand("basin", "Label basins of attraction on a grid");
  basin->add_option("game-file", basin_path, "JSON game document")->required();
  basin->add_option("--grid", grid, "lattice resolution per axis")->capture_default_str();

  try {
    app.parse(argc, argv);
    if (solve->parsed()) run_solve(solve_path, solve_json, solve_csv);
    if (classify->parsed()) run_classify(classify_path);
    if (sweep->parsed()) {
      if (sweep_scenario.empty() && sweep_spec_path.empty())
        throw staghunt::InputError("sweep needs either --scenario or --spec");
      run_sweep_command(sweep_scenario, sweep_spec_path, sweep_csv_path, sweep_svg_path);
    }
    if (evolve->parsed()) run_evolve(evolve_path, x0, y0, step_size, max_steps);
    if (basin->parsed()) run_basin(basin_path, grid);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const staghunt::StagHuntStructureError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const staghunt::SizeLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
