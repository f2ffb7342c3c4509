#include <CLI11.hpp>
#include <sstream>
#include <functional>
#include <cmath>
#include <filesystem>
#include <iostream>

#include "composig/io.hpp"
#include "composig/scenario.hpp"

namespace {

using namespace composig;

struct CommonOptions {
  std::string scenario;
  std::string out_dir;
  bool svg = false;
  int grid = 0;
  double tol = 0.0;

  QuadratureOptions quadrature() const {
    QuadratureOptions q;
    if (tol > 0.0) q.rel_tol = tol;
    return q;
  }
};

void emit(const CommonOptions& opt, const std::string& stem, const Table& table,
          const std::string& title) {
  if (opt.out_dir.empty()) {
    std::cout << render_csv(table);
    return;
  }
  std::filesystem::create_directories(opt.out_dir);
  const std::string base = opt.out_dir + "/" + stem;
  write_file(base + ".csv", render_csv(table));
  std::cout << "wrote " << base << ".csv\n";
  if (opt.svg) {
    write_file(base + ".svg", render_svg(table, title));
    std::cout << "wrote " << base << ".svg\n";
  }
}

Scenario load(const CommonOptions& opt) {
  Scenario s = resolve_scenario(opt.scenario);
  if (opt.grid > 0) s.lambda_grid = opt.grid;
  return s;
}

int cmd_verify(const CommonOptions& opt) {
  const Scenario scenario = load(opt);
  const PreparedScenario prepared = prepare(scenario);
  std::string report = classification_report(prepared.classification);
  if (const auto* probe = std::get_if<FrequencyProbeRecipe>(&prepared.design.recipe())) {
    // spectrum of the probe value: its preimages in Omega drive the recovery
    std::ostringstream os;
    os << "z0 = " << format_double(probe->z0.real());
    if (probe->z0.imag() != 0.0) os << " + " << format_double(probe->z0.imag()) << "i";
    os << "\nz0_preimages =";
    for (const auto& q : preimages_in_omega(prepared.classification.h, probe->z0,
                                            prepared.classification.samples.closed_d())) {
      os << " (" << format_double(q.location.real());
      if (std::abs(q.location.imag()) > 1e-12)
        os << (q.location.imag() > 0 ? "+" : "") << format_double(q.location.imag()) << "i";
      os << ", p=" << q.multiplicity << ", wind=" << q.winding << ")";
    }
    os << "\n";
    report += os.str();
  }
  std::cout << report;
  if (!opt.out_dir.empty()) {
    std::filesystem::create_directories(opt.out_dir);
    write_file(opt.out_dir + "/" + scenario.name + "_classification.txt", report);
  }
  return 0;
}

int cmd_design(const CommonOptions& opt) {
  const Scenario scenario = load(opt);
  const PreparedScenario prepared = prepare(scenario);
  TimeSeries input;
  input.times = scenario.times;
  input.values = prepared.design.synthesize_input(scenario.times, opt.quadrature());
  emit(opt, scenario.name + "_input", series_table(input, "re_u"),
       scenario.name + ": input signal Re u(t)");
  return 0;
}

int cmd_simulate(const CommonOptions& opt) {
  const Scenario scenario = load(opt);
  const PreparedScenario prepared = prepare(scenario);
  const TimeSeries response =
      simulate_response(prepared.context, scenario.times, opt.quadrature());
  emit(opt, scenario.name + "_response", series_table(response, "re_v"),
       scenario.name + ": response Re v(t)");
  return 0;
}

int cmd_bounds(const CommonOptions& opt) {
  const Scenario scenario = load(opt);
  const PreparedScenario prepared = prepare(scenario);
  MomentConstraints constraints{scenario.mass, scenario.m1};
  BoundOptions options;
  options.lambda_grid = scenario.lambda_grid;
  options.a0_known = scenario.a0_known;
  const BoundEnvelope env =
      bounds_over_measures(prepared.context, scenario.times, constraints, options);
  emit(opt, scenario.name + "_bounds", envelope_table(env),
       scenario.name + ": response bounds over admissible measures");
  return 0;
}

int cmd_recover(const CommonOptions& opt) {
  const Scenario scenario = load(opt);
  const PreparedScenario prepared = prepare(scenario);
  if (scenario.measurements.empty())
    throw InvalidScenario("recover needs at least one measurement = (t, value) line");

  std::string report;
  if (const auto* vf = std::get_if<VolumeFractionRecipe>(&scenario.recipe)) {
    if (vf->k == 0.0) {
      const RecoveryResult r = recover_volume_fraction(
          prepared.classification, prepared.design, scenario.measurements, scenario.epsilon);
      report = recovery_report(r);
    } else {
      const double m1 = recover_first_moment(prepared.classification, prepared.design, scenario.a0,
                                             scenario.measurements.front());
      report = "m1 = " + format_double(m1) + "\n";
    }
  } else {
    const FrequencyRecovery r = recover_frequency_response(
        prepared.classification, prepared.design, scenario.a0, scenario.measurements);
    report = frequency_recovery_report(r);
  }
  std::cout << report;
  if (!opt.out_dir.empty()) {
    std::filesystem::create_directories(opt.out_dir);
    write_file(opt.out_dir + "/" + scenario.name + "_recovery.txt", report);
  }
  return 0;
}

// ---- figure reproduction ------------------------------------------------

Scenario figure_base(const std::string& example, double k, std::optional<double> m1) {
  Scenario s = builtin_scenario(example);
  s.recipe = VolumeFractionRecipe{k};
  s.m1 = m1;
  return s;
}

Table moment_figure(const Scenario& scenario, double k,
                    const std::function<double(double)>& exact, const CommonOptions& opt) {
  const PreparedScenario prepared = prepare(scenario);
  BoundOptions options;
  options.lambda_grid = opt.grid > 0 ? opt.grid : scenario.lambda_grid;

  // Inner envelope: all constraints known. Outer: drop the last piece of
  // information (the first moment for k = 1, the volume fraction for k = 0).
  MomentConstraints inner{1.0, scenario.m1};
  const BoundEnvelope red = bounds_over_measures(prepared.context, scenario.times, inner, options);
  BoundEnvelope blue;
  if (k == 0.0) {
    BoundOptions unknown = options;
    unknown.a0_known = false;
    blue = bounds_over_measures(prepared.context, scenario.times, MomentConstraints{1.0, std::nullopt},
                                unknown);
  } else {
    blue = bounds_over_measures(prepared.context, scenario.times, MomentConstraints{1.0, std::nullopt},
                                options);
  }

  std::vector<double> exact_col(scenario.times.size());
  for (size_t i = 0; i < scenario.times.size(); ++i) exact_col[i] = exact(scenario.times[i]);
  return Table{{"t", "exact", "red_lower", "red_upper", "blue_lower", "blue_upper"},
               {scenario.times, exact_col, red.lower, red.upper, blue.lower, blue.upper}};
}

Table measure_dependent_figure(const Scenario& scenario, double k, const CommonOptions& opt) {
  const PreparedScenario prepared = prepare(scenario);
  BoundOptions options;
  options.lambda_grid = opt.grid > 0 ? opt.grid : scenario.lambda_grid;

  BoundEnvelope red, blue;
  if (k == 0.0) {
    red = bounds_over_measures(prepared.context, scenario.times, MomentConstraints{1.0, std::nullopt}, options);
    BoundOptions unknown = options;
    unknown.a0_known = false;
    blue = bounds_over_measures(prepared.context, scenario.times, MomentConstraints{1.0, std::nullopt},
                                unknown);
  } else {
    red = bounds_over_measures(prepared.context, scenario.times,
                               MomentConstraints{1.0, scenario.m1}, options);
    blue = bounds_over_measures(prepared.context, scenario.times, MomentConstraints{1.0, std::nullopt},
                                options);
  }
  return Table{{"t", "red_lower", "red_upper", "blue_lower", "blue_upper"},
               {scenario.times, red.lower, red.upper, blue.lower, blue.upper}};
}

Table reproduce_figure(const std::string& figure, const CommonOptions& opt) {
  const Complex omega0(0.0, 31.0 / 27.0);
  const double z0 = 30.0;

  if (figure == "fig2b")
    return moment_figure(figure_base("example1", 0.0, std::nullopt), 0.0,
                         [](double t) { return -0.6 * std::exp(t); }, opt);
  if (figure == "fig3b")
    return moment_figure(figure_base("example1", 1.0, 0.4), 1.0,
                         [](double t) { return -0.6 * std::exp(t) * (1.4 + 4.0 * t); }, opt);
  if (figure == "fig6a")
    return moment_figure(figure_base("example2", 0.0, std::nullopt), 0.0,
                         [](double t) { return -0.6 * std::exp(t); }, opt);
  if (figure == "fig6b")
    return moment_figure(figure_base("example2", 1.0, 0.4), 1.0,
                         [](double t) { return -0.6 * std::exp(t) * (1.4 + 4.0 * t); }, opt);
  if (figure == "fig8a")
    return measure_dependent_figure(figure_base("example3", 0.0, std::nullopt), 0.0, opt);
  if (figure == "fig8b")
    return measure_dependent_figure(figure_base("example3", 1.0, 0.4), 1.0, opt);

  if (figure == "fig4a" || figure == "fig4b") {
    Scenario s = builtin_scenario("example1");
    s.recipe = FrequencyProbeRecipe{Complex(z0)};
    if (figure == "fig4b") s.measure = SpectralMeasure::point(0.5);
    const PreparedScenario prepared = prepare(s);
    BoundOptions options;
    options.lambda_grid = opt.grid > 0 ? opt.grid : s.lambda_grid;

    if (figure == "fig4a") {
      const BoundEnvelope v =
          bounds_over_measures(prepared.context, s.times, MomentConstraints{1.0, std::nullopt}, options);
      const BoundEnvelope v0 =
          reference_bounds(s.a0, Complex(z0), omega0, s.times, MomentConstraints{1.0, std::nullopt}, options);
      return Table{{"t", "v_lower", "v_upper", "v0_lower", "v0_upper"},
                   {s.times, v.lower, v.upper, v0.lower, v0.upper}};
    }
    const TimeSeries v = predict_frequency_probe_response(prepared.context, Complex(z0), s.times);
    const TimeSeries v0 = reference_response(s.a0, *s.measure, Complex(z0), omega0, s.times);
    std::vector<double> exact(s.times.size());
    for (size_t i = 0; i < s.times.size(); ++i)
      exact[i] = s.a0 / (0.5 - z0) * std::exp(31.0 * s.times[i] / 27.0);
    return Table{{"t", "v", "v0", "exact"}, {s.times, v.values, v0.values, exact}};
  }
  throw InvalidScenario("unknown figure id: " + figure +
                        " (expected fig2b, fig3b, fig4a, fig4b, fig6a, fig6b, fig8a, fig8b)");
}

int cmd_reproduce(const std::string& figure, const CommonOptions& opt) {
  const Table table = reproduce_figure(figure, opt);
  emit(opt, figure, table, figure);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"designed time-varying signals for two-phase composites: verify trajectories, "
               "synthesize inputs, simulate and bound responses, invert measurements"};
  app.require_subcommand(1);

  CommonOptions opt;
  std::string figure;

  auto add_common = [&](CLI::App* cmd, bool needs_scenario) {
    if (needs_scenario)
      cmd->add_option("--scenario", opt.scenario, "scenario file or builtin name")->required();
    cmd->add_option("--out", opt.out_dir, "output directory (default: print CSV to stdout)");
    cmd->add_flag("--svg", opt.svg, "also write an SVG polyline plot");
    cmd->add_option("--grid", opt.grid, "lambda grid size override");
    cmd->add_option("--tol", opt.tol, "quadrature relative tolerance override");
  };

  add_common(app.add_subcommand("verify", "classify a trajectory and report admissibility"), true);
  add_common(app.add_subcommand("design", "synthesize the input signal Re u(t)"), true);
  add_common(app.add_subcommand("simulate", "simulate the response Re v(t) by quadrature"), true);
  add_common(app.add_subcommand("bounds", "extremal-measure response envelope"), true);
  add_common(app.add_subcommand("recover", "invert measurements for f1, M1, or the probe response"),
             true);
  auto* reproduce = app.add_subcommand("reproduce", "reproduce a figure-level result");
  reproduce->add_option("figure", figure, "fig2b fig3b fig4a fig4b fig6a fig6b fig8a fig8b")
      ->required();
  add_common(reproduce, false);

  try {
    app.parse(argc, argv);
    if (app.got_subcommand("verify")) return cmd_verify(opt);
    if (app.got_subcommand("design")) return cmd_design(opt);
    if (app.got_subcommand("simulate")) return cmd_simulate(opt);
    if (app.got_subcommand("bounds")) return cmd_bounds(opt);
    if (app.got_subcommand("recover")) return cmd_recover(opt);
    if (app.got_subcommand("reproduce")) return cmd_reproduce(figure, opt);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
