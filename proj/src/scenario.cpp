#include "composig/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace composig {

namespace {

std::string trimmed(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

double parse_double(const std::string& text) {
  try {
    size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size()) throw InvalidScenario("trailing characters in number: " + text);
    return v;
  } catch (const std::invalid_argument&) {
    throw InvalidScenario("not a number: " + text);
  } catch (const std::out_of_range&) {
    throw InvalidScenario("number out of range: " + text);
  }
}

int parse_int(const std::string& text) {
  const double v = parse_double(text);
  if (v != std::floor(v)) throw InvalidScenario("expected an integer: " + text);
  return static_cast<int>(v);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trimmed(item));
  return out;
}

Polynomial parse_real_coeffs(const std::string& text) {
  std::vector<double> coeffs;
  std::stringstream ss(text);
  std::string tok;
  while (ss >> tok) coeffs.push_back(parse_double(tok));
  if (coeffs.empty()) throw InvalidScenario("empty coefficient list");
  Eigen::VectorXd v = Eigen::Map<Eigen::VectorXd>(coeffs.data(), coeffs.size());
  return Polynomial(std::move(v));
}

std::vector<std::pair<double, double>> parse_pairs(const std::string& text) {
  std::vector<std::pair<double, double>> out;
  size_t pos = 0;
  while ((pos = text.find('(', pos)) != std::string::npos) {
    const size_t end = text.find(')', pos);
    if (end == std::string::npos) throw InvalidScenario("unbalanced parenthesis in pair list");
    const auto parts = split(text.substr(pos + 1, end - pos - 1), ',');
    if (parts.size() != 2) throw InvalidScenario("pair must have two entries");
    out.emplace_back(parse_double(parts[0]), parse_double(parts[1]));
    pos = end + 1;
  }
  if (out.empty()) throw InvalidScenario("expected a list of (a, b) pairs");
  return out;
}

}  // namespace

Complex parse_complex(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw InvalidScenario("empty complex number");

  // Split off a trailing +term / -term that is not an exponent sign.
  size_t cut = std::string::npos;
  for (size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      cut = i;
      break;
    }
  }
  auto parse_term = [](std::string term, double& re, double& im) {
    bool imag = false;
    if (!term.empty() && (term.back() == 'i' || term.back() == 'I' || term.back() == 'j')) {
      imag = true;
      term.pop_back();
      if (term.empty() || term == "+") term = "1";
      if (term == "-") term = "-1";
    }
    const double v = parse_double(term);
    (imag ? im : re) += v;
  };
  double re = 0.0, im = 0.0;
  if (cut == std::string::npos) {
    parse_term(s, re, im);
  } else {
    parse_term(s.substr(0, cut), re, im);
    parse_term(s.substr(cut), re, im);
  }
  return {re, im};
}

std::vector<double> parse_time_grid(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw InvalidScenario("time grid must be lo:hi:count");
  const double lo = parse_double(parts[0]);
  const double hi = parse_double(parts[1]);
  const int count = parse_int(parts[2]);
  if (count < 2 || hi <= lo) throw InvalidScenario("time grid must be increasing with count >= 2");
  std::vector<double> t(count);
  for (int i = 0; i < count; ++i) t[i] = lo + (hi - lo) * i / (count - 1);
  return t;
}

bool is_builtin_scenario(const std::string& name) {
  return name == "example1" || name == "example2" || name == "example3";
}

Scenario builtin_scenario(const std::string& name) {
  const Trajectory standard_arc(
      ComplexPolynomial{Complex(0.0, 1.5), Complex(2.0, 1.0), Complex(-2.0, -2.0)});
  if (name == "example1") {
    // mu1 = 1 + i/omega = (s + 1)/s, mu2 = 2.
    MaterialSystem system = MaterialSystem::phase_pair(
        RationalFunction(Polynomial{1.0, 1.0}, Polynomial{0.0, 1.0}),
        RationalFunction(Polynomial{2.0}, Polynomial{1.0}));
    return Scenario("example1", std::move(system), standard_arc, VolumeFractionRecipe{0.0},
                    parse_time_grid("-3:0:601"));
  }
  if (name == "example2") {
    // mu1 = 1 - 1/omega^2 = (s^2 + 1)/s^2, mu2 = 1 + i/omega = (s + 1)/s.
    MaterialSystem system = MaterialSystem::phase_pair(
        RationalFunction(Polynomial{1.0, 0.0, 1.0}, Polynomial{0.0, 0.0, 1.0}),
        RationalFunction(Polynomial{1.0, 1.0}, Polynomial{0.0, 1.0}));
    return Scenario("example2", std::move(system), standard_arc, VolumeFractionRecipe{0.0},
                    parse_time_grid("-3:0:601"));
  }
  if (name == "example3") {
    // z = (s - 5)/((s - 1)(s - 8)), traced by a shallow arc between 1.3i and 7.7i.
    MaterialSystem system = MaterialSystem::direct_z(
        RationalFunction(Polynomial{-5.0, 1.0}, Polynomial{8.0, -9.0, 1.0}));
    return Scenario("example3", std::move(system),
                    Trajectory(ComplexPolynomial{Complex(0.0, 1.3), Complex(2.0, 1.0),
                                                 Complex(-2.0, 5.4)}),
                    VolumeFractionRecipe{0.0}, parse_time_grid("-1:1:601"));
  }
  throw InvalidScenario("unknown builtin scenario: " + name);
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidScenario("cannot open scenario file: " + path);

  std::map<std::string, std::string> keys;
  std::vector<Measurement> measurements;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const size_t hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trimmed(line);
    if (line.empty()) continue;
    const size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw InvalidScenario(path + ":" + std::to_string(lineno) + ": expected key = value");
    const std::string key = trimmed(line.substr(0, eq));
    const std::string value = trimmed(line.substr(eq + 1));
    if (key == "measurement") {
      const auto pair = parse_pairs(value);
      for (const auto& [t, v] : pair) measurements.push_back({t, v});
    } else {
      keys[key] = value;
    }
  }

  auto take = [&](const std::string& key) -> std::optional<std::string> {
    auto it = keys.find(key);
    if (it == keys.end()) return std::nullopt;
    std::string v = it->second;
    keys.erase(it);
    return v;
  };

  std::optional<Scenario> scenario;
  if (auto base = take("builtin")) scenario = builtin_scenario(*base);
  if (auto mat = take("material")) {
    Scenario b = builtin_scenario(*mat);
    if (!scenario) scenario = b;
    scenario->system = b.system;
  }

  // Explicit material declaration overrides any builtin.
  const auto mu1n = take("mu1_num"), mu1d = take("mu1_den");
  const auto mu2n = take("mu2_num"), mu2d = take("mu2_den");
  const auto zn = take("z_num"), zd = take("z_den");
  std::optional<MaterialSystem> system;
  if (zn || zd) {
    if (!zn || !zd) throw InvalidScenario("z_num and z_den must both be given");
    system = MaterialSystem::direct_z(
        RationalFunction(parse_real_coeffs(*zn), parse_real_coeffs(*zd)));
  } else if (mu1n || mu1d || mu2n || mu2d) {
    if (!mu1n || !mu1d || !mu2n || !mu2d)
      throw InvalidScenario("phase pair needs mu1_num/mu1_den/mu2_num/mu2_den");
    system = MaterialSystem::phase_pair(
        RationalFunction(parse_real_coeffs(*mu1n), parse_real_coeffs(*mu1d)),
        RationalFunction(parse_real_coeffs(*mu2n), parse_real_coeffs(*mu2d)));
  }

  std::optional<Trajectory> trajectory;
  int samples = 2048;
  if (auto hint = take("samples")) samples = parse_int(*hint);
  if (auto traj = take("trajectory")) {
    const auto terms = split(*traj, ',');
    Eigen::VectorXcd coeffs(terms.size());
    for (size_t i = 0; i < terms.size(); ++i) coeffs[i] = parse_complex(terms[i]);
    trajectory = Trajectory(ComplexPolynomial(std::move(coeffs)), samples);
  }

  if (!scenario) {
    if (!system || !trajectory)
      throw InvalidScenario("scenario needs a material and a trajectory (or a builtin base)");
    scenario = Scenario("scenario", *system, *trajectory, VolumeFractionRecipe{0.0},
                        parse_time_grid("-3:0:601"));
  } else {
    if (system) scenario->system = *system;
    if (trajectory) scenario->trajectory = *trajectory;
  }
  Scenario& s = *scenario;
  s.samples = samples;

  if (auto name = take("name")) s.name = *name;
  if (auto duality = take("duality")) {
    if (*duality == "direct") s.duality = Duality::Direct;
    else if (*duality == "dual") s.duality = Duality::Dual;
    else throw InvalidScenario("duality must be direct or dual");
  }
  if (auto design = take("design")) {
    if (*design == "volume_fraction") s.recipe = VolumeFractionRecipe{0.0};
    else if (*design == "frequency_probe") s.recipe = FrequencyProbeRecipe{Complex(0.0)};
    else throw InvalidScenario("design must be volume_fraction or frequency_probe");
  }
  if (auto k = take("k")) {
    auto* vf = std::get_if<VolumeFractionRecipe>(&s.recipe);
    if (!vf) throw InvalidScenario("k applies to the volume_fraction design");
    vf->k = parse_double(*k);
  }
  if (auto z0 = take("z0")) {
    auto* probe = std::get_if<FrequencyProbeRecipe>(&s.recipe);
    if (!probe) throw InvalidScenario("z0 applies to the frequency_probe design");
    probe->z0 = parse_complex(*z0);
  }
  if (auto w0 = take("omega0")) s.omega0 = parse_complex(*w0);
  if (auto a0 = take("a0")) s.a0 = parse_double(*a0);
  if (auto t0 = take("t0")) s.t0 = parse_double(*t0);
  if (auto m1 = take("m1")) s.m1 = parse_double(*m1);
  if (auto mass = take("mass")) s.mass = parse_double(*mass);
  if (auto times = take("times")) s.times = parse_time_grid(*times);
  if (auto grid = take("grid")) s.lambda_grid = parse_int(*grid);
  if (auto probes = take("probe_grid")) s.probe_grid = parse_int(*probes);
  if (auto eps = take("epsilon")) s.epsilon = parse_double(*eps);
  if (auto known = take("a0_known")) {
    if (*known == "true") s.a0_known = true;
    else if (*known == "false") s.a0_known = false;
    else throw InvalidScenario("a0_known must be true or false");
  }
  if (auto measure = take("measure")) {
    std::vector<PointMass> masses;
    for (const auto& [l, w] : parse_pairs(*measure)) masses.push_back({l, w});
    s.measure = SpectralMeasure(std::move(masses));
  }
  s.measurements = std::move(measurements);

  if (!keys.empty()) throw InvalidScenario("unknown scenario key: " + keys.begin()->first);

  s.system = s.system.with_duality(s.duality);
  return s;
}

Scenario resolve_scenario(const std::string& path_or_name) {
  if (std::filesystem::exists(path_or_name)) return load_scenario(path_or_name);
  if (is_builtin_scenario(path_or_name)) return builtin_scenario(path_or_name);
  throw InvalidScenario("no such scenario file or builtin: " + path_or_name);
}

PreparedScenario prepare(const Scenario& scenario) {
  ClassifyOptions options;
  options.probe_count = scenario.probe_grid;
  options.samples = scenario.samples;
  CurveClassification cls = classify(scenario.system, scenario.trajectory, options);

  Recipe recipe = scenario.recipe;
  if (auto* probe = std::get_if<FrequencyProbeRecipe>(&recipe)) {
    if (scenario.omega0) probe->z0 = scenario.system.eval_z(*scenario.omega0);
  }

  SignalDesign design =
      std::holds_alternative<VolumeFractionRecipe>(recipe)
          ? make_volume_fraction_design(scenario.system, scenario.trajectory,
                                        std::get<VolumeFractionRecipe>(recipe).k, cls, scenario.t0)
          : make_frequency_probe_design(scenario.system, scenario.trajectory,
                                        std::get<FrequencyProbeRecipe>(recipe).z0, cls,
                                        scenario.t0);

  ResponseContext context(scenario.a0, scenario.system, scenario.trajectory, cls, design,
                          scenario.measure, scenario.m1);
  return PreparedScenario{std::move(cls), std::move(design), std::move(context)};
}

}  // namespace composig
