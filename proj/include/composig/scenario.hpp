#pragma once

#include <optional>
#include <string>

#include "composig/bounds.hpp"
#include "composig/recovery.hpp"

namespace composig {

/// One experiment: material system, trajectory, design, and the knobs the
/// commands need. Parsed from a key = value scenario file or taken from the
/// built-in case studies "example1", "example2", "example3".
struct Scenario {
  Scenario(std::string name_, MaterialSystem system_, Trajectory trajectory_, Recipe recipe_,
           std::vector<double> times_)
      : name(std::move(name_)),
        system(std::move(system_)),
        trajectory(std::move(trajectory_)),
        recipe(std::move(recipe_)),
        times(std::move(times_)) {}

  std::string name;
  MaterialSystem system;
  Trajectory trajectory;
  Recipe recipe;
  Duality duality = Duality::Direct;
  double a0 = 0.6;
  double t0 = 0.0;
  std::optional<SpectralMeasure> measure;
  std::optional<double> m1;
  double mass = 1.0;
  std::vector<double> times;
  int lambda_grid = 401;
  int probe_grid = 201;
  int samples = 2048;
  bool a0_known = true;
  std::optional<Complex> omega0;  ///< probe frequency when given directly
  std::vector<Measurement> measurements;
  double epsilon = 0.0;
};

bool is_builtin_scenario(const std::string& name);
Scenario builtin_scenario(const std::string& name);

/// Parse a scenario file; `builtin = exampleN` pulls in a base that later
/// keys override.
Scenario load_scenario(const std::string& path);

/// Resolve a --scenario argument: a file path if one exists, else a builtin name.
Scenario resolve_scenario(const std::string& path_or_name);

/// Classification plus a design and response context assembled from a scenario.
struct PreparedScenario {
  CurveClassification classification;
  SignalDesign design;
  ResponseContext context;
};

PreparedScenario prepare(const Scenario& scenario);

/// Parse helpers shared with the CLI; exposed for tests.
Complex parse_complex(const std::string& text);
std::vector<double> parse_time_grid(const std::string& text);

}  // namespace composig
