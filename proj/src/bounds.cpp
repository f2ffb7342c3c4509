#include "composig/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace composig {

namespace {

constexpr double kGolden = 0.6180339887498949;

/// A few golden-section steps on [a, b]; returns the best (x, f(x)) seen.
std::pair<double, double> golden_min(const std::function<double(double)>& f, double a, double b,
                                     int iterations) {
  double x1 = b - kGolden * (b - a);
  double x2 = a + kGolden * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < iterations; ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGolden * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGolden * (b - a);
      f2 = f(x2);
    }
  }
  return f1 < f2 ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

std::vector<double> lambda_grid(int n) {
  std::vector<double> grid(n);
  for (int i = 0; i < n; ++i) grid[i] = -1.0 + 2.0 * i / (n - 1);
  return grid;
}

/// Kernel value of a unit mass at lambda for one time index, via the shared
/// per-lambda column. Column evaluation is the dominant cost, so refinement
/// works on single (lambda, time) values.
class KernelProbe {
 public:
  explicit KernelProbe(const ResponseKernel& kernel) : kernel_(kernel) {}
  double operator()(double lambda, size_t i) const {
    if (lambda != cached_lambda_ || cache_.empty()) {
      cache_ = kernel_.at(lambda);
      cached_lambda_ = lambda;
    }
    return cache_[i];
  }

 private:
  const ResponseKernel& kernel_;
  mutable std::vector<double> cache_;
  mutable double cached_lambda_ = std::numeric_limits<double>::quiet_NaN();
};

BoundEnvelope single_mass_envelope(const ResponseKernel& kernel, double mass,
                                   const BoundOptions& options) {
  const auto grid = lambda_grid(std::max(3, options.lambda_grid));
  const size_t nt = kernel.times().size();

  std::vector<std::vector<double>> columns(grid.size());
  for (size_t g = 0; g < grid.size(); ++g) columns[g] = kernel.at(grid[g]);

  BoundEnvelope env;
  env.times.assign(kernel.times().begin(), kernel.times().end());
  env.lower.resize(nt);
  env.upper.resize(nt);
  env.argmin_lambda.resize(nt);
  env.argmax_lambda.resize(nt);

  KernelProbe probe(kernel);
  for (size_t i = 0; i < nt; ++i) {
    size_t imin = 0, imax = 0;
    for (size_t g = 1; g < grid.size(); ++g) {
      if (columns[g][i] < columns[imin][i]) imin = g;
      if (columns[g][i] > columns[imax][i]) imax = g;
    }
    auto refine = [&](size_t gbest, double direction) {
      const double lo = grid[gbest == 0 ? 0 : gbest - 1];
      const double hi = grid[std::min(gbest + 1, grid.size() - 1)];
      auto [x, fx] = golden_min([&](double l) { return direction * probe(l, i); }, lo, hi,
                                options.refine_iterations);
      const double grid_value = direction * columns[gbest][i];
      return fx < grid_value ? std::make_pair(x, direction * fx)
                             : std::make_pair(grid[gbest], columns[gbest][i]);
    };
    auto [lmin, vmin] = refine(imin, +1.0);
    auto [lmax, vmax] = refine(imax, -1.0);
    env.lower[i] = mass * vmin;
    env.upper[i] = mass * vmax;
    env.argmin_lambda[i] = lmin;
    env.argmax_lambda[i] = lmax;
  }
  return env;
}

struct PairWeights {
  double w0, w1;
  bool feasible;
};

PairWeights pair_weights(double l0, double l1, double mass, double m1) {
  if (l0 == l1) return {0.0, 0.0, false};
  const double w0 = (mass * l1 - m1) / (l1 - l0);
  const double w1 = mass - w0;
  if (w0 < -1e-12 || w1 < -1e-12) return {0.0, 0.0, false};
  return {std::max(w0, 0.0), std::max(w1, 0.0), true};
}

BoundEnvelope pair_envelope(const ResponseKernel& kernel, double mass, double m1,
                            const BoundOptions& options) {
  if (std::abs(m1) > mass * (1.0 + 1e-12))
    throw NoFeasibleMeasure("first moment exceeds the mass; no measure on [-1, 1] fits");
  const auto grid = lambda_grid(std::max(3, options.lambda_grid));
  const size_t nt = kernel.times().size();

  std::vector<std::vector<double>> columns(grid.size());
  for (size_t g = 0; g < grid.size(); ++g) columns[g] = kernel.at(grid[g]);

  BoundEnvelope env;
  env.times.assign(kernel.times().begin(), kernel.times().end());
  env.lower.assign(nt, std::numeric_limits<double>::infinity());
  env.upper.assign(nt, -std::numeric_limits<double>::infinity());
  env.argmin_lambda.assign(nt, 0.0);
  env.argmax_lambda.assign(nt, 0.0);
  std::vector<std::pair<size_t, size_t>> best_min(nt), best_max(nt);

  bool any_feasible = false;
  for (size_t g0 = 0; g0 < grid.size(); ++g0) {
    for (size_t g1 = g0 + 1; g1 < grid.size(); ++g1) {
      const PairWeights w = pair_weights(grid[g0], grid[g1], mass, m1);
      if (!w.feasible) continue;
      any_feasible = true;
      for (size_t i = 0; i < nt; ++i) {
        const double v = w.w0 * columns[g0][i] + w.w1 * columns[g1][i];
        if (v < env.lower[i]) {
          env.lower[i] = v;
          best_min[i] = {g0, g1};
          env.argmin_lambda[i] = w.w0 >= w.w1 ? grid[g0] : grid[g1];
        }
        if (v > env.upper[i]) {
          env.upper[i] = v;
          best_max[i] = {g0, g1};
          env.argmax_lambda[i] = w.w0 >= w.w1 ? grid[g0] : grid[g1];
        }
      }
    }
  }
  if (!any_feasible) throw NoFeasibleMeasure("no grid pair satisfies the moment constraints");

  // Coordinate-wise golden polish of each extreme pair.
  KernelProbe probe_a(kernel), probe_b(kernel);
  const double step = 2.0 / (grid.size() - 1);
  auto polish = [&](size_t i, std::pair<size_t, size_t> best, double direction, double& value,
                    double& arg) {
    double l0 = grid[best.first], l1 = grid[best.second];
    auto pair_value = [&](double a, double b) {
      const PairWeights w = pair_weights(a, b, mass, m1);
      if (!w.feasible) return std::numeric_limits<double>::infinity();
      return direction * (w.w0 * probe_a(a, i) + w.w1 * probe_b(b, i));
    };
    double cur = pair_value(l0, l1);
    for (int round = 0; round < 2; ++round) {
      auto [x0, f0] = golden_min([&](double l) { return pair_value(l, l1); },
                                 std::max(-1.0, l0 - step), std::min(1.0, l0 + step),
                                 options.refine_iterations);
      if (f0 < cur) {
        l0 = x0;
        cur = f0;
      }
      auto [x1, f1] = golden_min([&](double l) { return pair_value(l0, l); },
                                 std::max(-1.0, l1 - step), std::min(1.0, l1 + step),
                                 options.refine_iterations);
      if (f1 < cur) {
        l1 = x1;
        cur = f1;
      }
    }
    if (std::isfinite(cur) && cur < direction * value) {
      value = direction * cur;
      const PairWeights w = pair_weights(l0, l1, mass, m1);
      arg = w.w0 >= w.w1 ? l0 : l1;
    }
  };
  for (size_t i = 0; i < nt; ++i) {
    polish(i, best_min[i], +1.0, env.lower[i], env.argmin_lambda[i]);
    polish(i, best_max[i], -1.0, env.upper[i], env.argmax_lambda[i]);
  }
  return env;
}

void widen_for_unknown_a0(BoundEnvelope& env, double a0) {
  if (a0 <= 0.0)
    throw ValidationError("envelope over unknown a0 needs a positive reference a0 in the context");
  const double scale = 2.0 / a0;
  for (size_t i = 0; i < env.times.size(); ++i) {
    env.lower[i] = std::min(0.0, scale * env.lower[i]);
    env.upper[i] = std::max(0.0, scale * env.upper[i]);
  }
}

}  // namespace

BoundEnvelope bounds_over_measures(const ResponseContext& ctx, std::span<const double> times,
                                   const MomentConstraints& constraints,
                                   const BoundOptions& options) {
  if (constraints.mass < 0.0) throw NoFeasibleMeasure("negative mass constraint");
  const ResponseKernel kernel(ctx, times);
  BoundEnvelope env = constraints.m1
                          ? pair_envelope(kernel, constraints.mass, *constraints.m1, options)
                          : single_mass_envelope(kernel, constraints.mass, options);
  if (!options.a0_known) widen_for_unknown_a0(env, ctx.a0);
  return env;
}

BoundEnvelope reference_bounds(double a0, Complex z0, Complex omega0,
                               std::span<const double> times, const MomentConstraints& constraints,
                               const BoundOptions& options, double t0) {
  const auto grid = lambda_grid(std::max(3, options.lambda_grid));
  BoundEnvelope env;
  env.times.assign(times.begin(), times.end());
  const size_t nt = times.size();
  env.lower.assign(nt, std::numeric_limits<double>::infinity());
  env.upper.assign(nt, -std::numeric_limits<double>::infinity());
  env.argmin_lambda.assign(nt, 0.0);
  env.argmax_lambda.assign(nt, 0.0);

  auto column = [&](double lambda) {
    return reference_response(a0, SpectralMeasure::point(lambda, constraints.mass), z0, omega0,
                              times, t0)
        .values;
  };
  if (constraints.m1)
    throw ValidationError("reference bounds are defined for the mass-only constraint");
  for (double lambda : grid) {
    const auto col = column(lambda);
    for (size_t i = 0; i < nt; ++i) {
      if (col[i] < env.lower[i]) {
        env.lower[i] = col[i];
        env.argmin_lambda[i] = lambda;
      }
      if (col[i] > env.upper[i]) {
        env.upper[i] = col[i];
        env.argmax_lambda[i] = lambda;
      }
    }
  }
  if (!options.a0_known) widen_for_unknown_a0(env, a0);
  return env;
}

}  // namespace composig
