#include "composig/response.hpp"

#include <cmath>

namespace composig {

namespace {

Complex guarded_exp(Complex exponent) {
  if (std::abs(exponent.real()) > 700.0)
    throw OverflowGuard("exponential overflow in closed-form response");
  return std::exp(exponent);
}

/// sum over poles of w n e^{-beta t} and w b e^{-beta t}; real by conjugate
/// closure of the pole set.
struct PoleSums {
  double s;  // winding-weighted multiplicity sum
  double b;  // winding-weighted residue sum (simple poles)
};

PoleSums pole_sums(const std::vector<PolePoint>& poles, double t, bool need_residues) {
  Complex s(0.0), b(0.0);
  for (const auto& p : poles) {
    const Complex e = guarded_exp(-p.location * t);
    s += static_cast<double>(p.winding * p.multiplicity) * e;
    if (need_residues) {
      if (p.multiplicity != 1 || !p.residue)
        throw NonSimplePole("first-moment closed form requires simple poles of h");
      b += static_cast<double>(p.winding) * (*p.residue) * e;
    }
  }
  return {s.real(), b.real()};
}

double preimage_sum(const std::vector<Preimage>& pts, double t) {
  Complex acc(0.0);
  for (const auto& q : pts)
    acc += static_cast<double>(q.winding * q.multiplicity) * guarded_exp(-q.location * t);
  return acc.real();
}

void require_closed_domain(const ResponseContext& ctx) {
  if (!ctx.classification.omega_domain_closed)
    throw NotMeasureIndependent(
        "closed-form responses need trajectory endpoints on the imaginary axis");
}

}  // namespace

ResponseContext::ResponseContext(double a0_, MaterialSystem system_, Trajectory trajectory_,
                                 CurveClassification classification_, SignalDesign design_,
                                 std::optional<SpectralMeasure> measure_,
                                 std::optional<double> m1_)
    : a0(a0_),
      system(std::move(system_)),
      trajectory(std::move(trajectory_)),
      classification(std::move(classification_)),
      design(std::move(design_)),
      measure(std::move(measure_)),
      m1(m1_) {
  if (!(a0 >= 0.0 && a0 <= 2.0)) throw ValidationError("a0 = 2 f1 must lie in [0, 2]");
}

TimeSeries simulate_response(const ResponseContext& ctx, std::span<const double> times,
                             const QuadratureOptions& quad) {
  if (!ctx.measure) throw MissingMeasure("simulation requires a spectral measure");
  const SpectralMeasure& measure = *ctx.measure;
  const double t0 = ctx.design.t0();

  TimeSeries out;
  out.times.assign(times.begin(), times.end());
  out.values.resize(times.size());
  for (size_t i = 0; i < times.size(); ++i) {
    const double t = times[i];
    out.values[i] =
        integrate_adaptive(
            [&](double s) {
              const Complex w = ctx.trajectory.omega(s);
              return ctx.a0 * measure.markov_eval(ctx.system.eval_z(w)) * ctx.design.alpha(s) *
                     std::exp(Complex(0.0, -1.0) * w * (t - t0));
            },
            0.0, 1.0, quad)
            .real();
  }
  return out;
}

TimeSeries predict_volume_fraction_response(const ResponseContext& ctx, double k,
                                            std::span<const double> times) {
  if (k != 0.0 && k != 1.0) throw ValidationError("closed forms cover k = 0 and k = 1 only");
  const auto* vf = std::get_if<VolumeFractionRecipe>(&ctx.design.recipe());
  if (!vf || vf->k != k)
    throw ValidationError("design recipe does not match the requested k family");
  require_closed_domain(ctx);

  double mass = 1.0;
  std::optional<double> m1 = ctx.m1;
  if (ctx.measure) {
    mass = ctx.measure->moment(0);
    if (!m1) m1 = ctx.measure->moment(1);
  }
  if (k == 1.0 && !m1)
    throw MissingMeasure("k = 1 closed form needs the first moment or a measure");

  const bool need_m_terms = !ctx.classification.all_time_independent;
  if (need_m_terms && !ctx.measure)
    throw MissingMeasure("scenario is measure dependent; prediction needs the measure");

  const double sign = static_cast<double>(ctx.design.sign());
  const auto closed_d = ctx.classification.samples.closed_d();

  std::vector<std::pair<PointMass, std::vector<Preimage>>> mass_preimages;
  if (need_m_terms) {
    for (const auto& pm : ctx.measure->masses())
      mass_preimages.emplace_back(
          pm, preimages_in_omega(ctx.classification.h, Complex(pm.lambda), closed_d));
  }

  TimeSeries out;
  out.times.assign(times.begin(), times.end());
  out.values.resize(times.size());
  for (size_t i = 0; i < times.size(); ++i) {
    const double t = times[i];
    const PoleSums sums = pole_sums(ctx.classification.h_poles, t, k != 0.0);
    double v = (mass + k * m1.value_or(0.0)) * sums.s - k * t * mass * sums.b;
    for (const auto& [pm, pre] : mass_preimages)
      v -= pm.weight * (1.0 + k * pm.lambda) * preimage_sum(pre, t);
    out.values[i] = sign * ctx.a0 * v;
  }
  return out;
}

TimeSeries predict_frequency_probe_response(const ResponseContext& ctx, Complex z0,
                                            std::span<const double> times) {
  const auto* probe = std::get_if<FrequencyProbeRecipe>(&ctx.design.recipe());
  if (!probe || std::abs(probe->z0 - z0) > 1e-12)
    throw ValidationError("design recipe does not match the requested probe value");
  require_closed_domain(ctx);
  if (winding_number(ctx.classification.samples.closed_c(), z0) != 0)
    throw ProbeInsideCurve("z0 lies inside C u C-bar; Re v(t0) = 0 and recovery cannot proceed");
  if (!ctx.measure)
    throw MissingMeasure("probe closed form needs the measure for its Stieltjes factors");

  const auto closed_d = ctx.classification.samples.closed_d();
  const auto kappas = preimages_in_omega(ctx.classification.h, z0, closed_d);
  const Complex xi2 = ctx.measure->markov_eval(z0);

  std::vector<std::pair<PointMass, std::vector<Preimage>>> mass_preimages;
  if (!ctx.classification.all_time_independent) {
    for (const auto& pm : ctx.measure->masses())
      mass_preimages.emplace_back(
          pm, preimages_in_omega(ctx.classification.h, Complex(pm.lambda), closed_d));
  }

  const double sign = static_cast<double>(ctx.design.sign());
  TimeSeries out;
  out.times.assign(times.begin(), times.end());
  out.values.resize(times.size());
  for (size_t i = 0; i < times.size(); ++i) {
    const double t = times[i];
    Complex esum(0.0);
    for (const auto& q : kappas)
      esum += static_cast<double>(q.winding * q.multiplicity) * guarded_exp(-q.location * t);
    double v = -(xi2 * esum).real();
    for (const auto& [pm, pre] : mass_preimages)
      v += pm.weight * preimage_sum(pre, t) * (1.0 / (Complex(pm.lambda) - z0)).real();
    out.values[i] = sign * ctx.a0 * v;
  }
  return out;
}

TimeSeries reference_response(double a0, const SpectralMeasure& measure, Complex z0,
                              Complex omega0, std::span<const double> times, double t0) {
  const double re = std::clamp(z0.real(), -1.0, 1.0);
  if (std::abs(z0 - Complex(re)) < 1e-12)
    throw ValidationError("reference probe value z0 must lie off the interval [-1, 1]");
  const Complex base = a0 * measure.markov_eval(z0);
  TimeSeries out;
  out.times.assign(times.begin(), times.end());
  out.values.resize(times.size());
  for (size_t i = 0; i < times.size(); ++i)
    out.values[i] = (base * guarded_exp(Complex(0.0, -1.0) * omega0 * (times[i] - t0))).real();
  return out;
}

ResponseKernel::ResponseKernel(const ResponseContext& ctx, std::span<const double> times)
    : ctx_(ctx), times_(times.begin(), times.end()) {
  require_closed_domain(ctx);
  closed_d_ = ctx.classification.samples.closed_d();

  if (const auto* vf = std::get_if<VolumeFractionRecipe>(&ctx.design.recipe())) {
    recipe_k_ = vf->k;
  } else {
    probe_ = true;
    z0_ = std::get<FrequencyProbeRecipe>(ctx.design.recipe()).z0;
  }

  const double sign = static_cast<double>(ctx.design.sign());
  pole_term_.resize(times_.size());
  residue_term_.resize(times_.size());
  for (size_t i = 0; i < times_.size(); ++i) {
    const PoleSums sums =
        pole_sums(ctx.classification.h_poles, times_[i], !probe_ && recipe_k_ != 0.0);
    pole_term_[i] = sign * ctx.a0 * sums.s;
    residue_term_[i] = sign * ctx.a0 * times_[i] * sums.b;
  }
  if (probe_) {
    const auto kappas = preimages_in_omega(ctx.classification.h, z0_, closed_d_);
    probe_esum_.resize(times_.size());
    for (size_t i = 0; i < times_.size(); ++i) {
      Complex esum(0.0);
      for (const auto& q : kappas)
        esum +=
            static_cast<double>(q.winding * q.multiplicity) * guarded_exp(-q.location * times_[i]);
      probe_esum_[i] = esum;
    }
  }
}

std::vector<double> ResponseKernel::at(double lambda) const {
  const auto preimages = preimages_in_omega(ctx_.classification.h, Complex(lambda), closed_d_);
  const double sign = static_cast<double>(ctx_.design.sign());
  std::vector<double> out(times_.size());
  if (probe_) {
    const Complex inv = 1.0 / (Complex(lambda) - z0_);
    for (size_t i = 0; i < times_.size(); ++i) {
      const double m_part = preimage_sum(preimages, times_[i]) * inv.real();
      out[i] = sign * ctx_.a0 * (m_part - (inv * probe_esum_[i]).real());
    }
  } else {
    const double factor = 1.0 + recipe_k_ * lambda;
    for (size_t i = 0; i < times_.size(); ++i) {
      const double m_part = sign * ctx_.a0 * preimage_sum(preimages, times_[i]);
      out[i] = factor * (pole_term_[i] - m_part) - recipe_k_ * residue_term_[i];
    }
  }
  return out;
}

}  // namespace composig
