#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "vpsdof/constitutive.hpp"
#include "vpsdof/integrator.hpp"

namespace vpsdof {

struct ZeroForcing {
  friend bool operator==(const ZeroForcing&, const ZeroForcing&) = default;
};

struct ConstantForcing {
  double amplitude = 0.0;
  friend bool operator==(const ConstantForcing&,
                         const ConstantForcing&) = default;
};

/// A sin(omega t) exp(lambda t).
struct DampedSineForcing {
  double amplitude = 0.0;
  double angular_frequency = 0.0;
  double decay_rate = 0.0;
  friend bool operator==(const DampedSineForcing&,
                         const DampedSineForcing&) = default;
};

using ForcingSpec = std::variant<ZeroForcing, ConstantForcing, DampedSineForcing>;

double eval_forcing(const ForcingSpec& spec, double t);

struct RunConfig {
  SystemParams sys;
  DashpotParams dp;
  IntegratorParams ip;
  ForcingSpec forcing = ZeroForcing{};
  double u0 = 0.0;
  double v0 = 0.0;
  double t_end = 10.0;
  /// Keep every `storage_stride`-th state. Dissipation is still integrated
  /// over every step.
  std::size_t storage_stride = 1;

  void validate() const;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Uniformly sampled run. states[i].t == i * dt exactly; dissipated[i] is
/// E_d at the same instant. diagnostics[i] belongs to the step that
/// produced states[i + 1].
struct Trajectory {
  double dt = 0.0;
  std::vector<State> states;
  std::vector<double> dissipated;
  std::vector<StepDiagnostics> diagnostics;

  std::size_t size() const noexcept { return states.size(); }
};

/// Number of steps for [0, t_end] at step dt: ceil(t_end / dt), with ratios
/// within 1e-9 of an integer taken as that integer.
std::size_t step_count(double t_end, double dt);

/// Trapezoidal increment of the integral of v * f_d between two samples.
double dissipation_increment(const State& a, const State& b, double dt);

/// Running trapezoidal integral of v * f_d over uniformly spaced samples.
std::vector<double> cumulative_dissipation(std::span<const State> states,
                                           double dt);

/// Runs exactly `n_steps` steps (a multiple of the storage stride).
Trajectory run_steps(const RunConfig& config, std::size_t n_steps);

/// Full run. The step count is step_count(t_end, dt) rounded up to a
/// multiple of the storage stride. Step errors are rethrown as StepFailure.
Trajectory run(const RunConfig& config);

/// Runs `config` at its own time step and returns it sampled on the grid of
/// `coarse_dt` over [0, t_end]. Throws NotCommensurate unless config.ip.dt
/// divides coarse_dt to within 1 part in 1e9.
Trajectory run_on_grid(const RunConfig& config, double coarse_dt);

/// Implicit Euler (alpha = beta = 1) at `dt_ref`, sampled on the grid of
/// config.ip.dt.
Trajectory run_benchmark(const RunConfig& config, double dt_ref);

/// Every `factor`-th sample, restamped onto the grid t = i * traj.dt * factor.
Trajectory subsample(const Trajectory& traj, std::size_t factor);

/// Integer ratio coarse / fine, or NotCommensurate.
std::size_t commensurate_factor(double coarse, double fine);

}  // namespace vpsdof
