#include "vpsdof/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <type_traits>

#include "vpsdof/errors.hpp"

namespace vpsdof {

double eval_forcing(const ForcingSpec& spec, double t) {
  return std::visit(
      [t](const auto& f) -> double {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, ZeroForcing>) {
          return 0.0;
        } else if constexpr (std::is_same_v<F, ConstantForcing>) {
          return f.amplitude;
        } else {
          return f.amplitude * std::sin(f.angular_frequency * t) *
                 std::exp(f.decay_rate * t);
        }
      },
      spec);
}

void RunConfig::validate() const {
  sys.validate();
  dp.validate();
  ip.validate();
  if (!(t_end > 0.0) || !std::isfinite(t_end))
    throw ValidationError("run.t_end", "must be positive and finite");
  if (!std::isfinite(u0)) throw ValidationError("run.u0", "must be finite");
  if (!std::isfinite(v0)) throw ValidationError("run.v0", "must be finite");
  if (storage_stride < 1)
    throw ValidationError("run.storage_stride", "must be >= 1");
  std::visit(
      [](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, ConstantForcing>) {
          if (!std::isfinite(f.amplitude))
            throw ValidationError("forcing.amplitude", "must be finite");
        } else if constexpr (std::is_same_v<F, DampedSineForcing>) {
          if (!std::isfinite(f.amplitude))
            throw ValidationError("forcing.amplitude", "must be finite");
          if (!std::isfinite(f.angular_frequency))
            throw ValidationError("forcing.angular_frequency",
                                  "must be finite");
          if (!std::isfinite(f.decay_rate))
            throw ValidationError("forcing.decay_rate", "must be finite");
        }
      },
      forcing);
  step_count(t_end, ip.dt);
}

std::size_t step_count(double t_end, double dt) {
  const double ratio = t_end / dt;
  // Keep i * dt exact enough to index samples.
  if (!(ratio < 0x1p52))
    throw ValidationError("run.t_end", "t_end / dt exceeds the step range");
  const double nearest = std::round(ratio);
  if (std::abs(ratio - nearest) <= 1e-9 * std::max(1.0, nearest))
    return static_cast<std::size_t>(std::max(1.0, nearest));
  return static_cast<std::size_t>(std::ceil(ratio));
}

double dissipation_increment(const State& a, const State& b, double dt) {
  return 0.5 * dt * (a.v * a.f_d + b.v * b.f_d);
}

std::vector<double> cumulative_dissipation(std::span<const State> states,
                                           double dt) {
  std::vector<double> out;
  out.reserve(states.size());
  double total = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (i > 0) total += dissipation_increment(states[i - 1], states[i], dt);
    out.push_back(total);
  }
  return out;
}

Trajectory run_steps(const RunConfig& config, std::size_t n_steps) {
  config.validate();
  const std::size_t stride = config.storage_stride;
  if (n_steps % stride != 0)
    throw ValidationError("run.storage_stride",
                          "must divide the number of steps");

  const double dt = config.ip.dt;
  Trajectory traj;
  traj.dt = dt * static_cast<double>(stride);
  const std::size_t samples = n_steps / stride + 1;
  traj.states.reserve(samples);
  traj.dissipated.reserve(samples);
  traj.diagnostics.reserve(samples - 1);

  State s = initialize(config.sys, config.dp, config.u0, config.v0);
  traj.states.push_back(s);
  traj.dissipated.push_back(0.0);

  double energy = 0.0;
  double f_ext_n = eval_forcing(config.forcing, 0.0);
  for (std::size_t i = 0; i < n_steps; ++i) {
    const double t_np1 = static_cast<double>(i + 1) * dt;
    const double f_ext_np1 = eval_forcing(config.forcing, t_np1);
    StepResult r;
    try {
      r = step(config.sys, config.dp, config.ip, s, f_ext_n, f_ext_np1);
    } catch (const Error& e) {
      throw StepFailure(i + 1, e.what());
    }
    r.state.t = t_np1;
    energy += dissipation_increment(s, r.state, dt);
    s = r.state;
    f_ext_n = f_ext_np1;

    if ((i + 1) % stride == 0) {
      State stored = s;
      stored.t = static_cast<double>((i + 1) / stride) * traj.dt;
      traj.states.push_back(stored);
      traj.dissipated.push_back(energy);
      traj.diagnostics.push_back(r.diagnostics);
    }
  }
  return traj;
}

Trajectory run(const RunConfig& config) {
  config.validate();
  const std::size_t stride = config.storage_stride;
  std::size_t n = step_count(config.t_end, config.ip.dt);
  n = (n + stride - 1) / stride * stride;
  return run_steps(config, n);
}

std::size_t commensurate_factor(double coarse, double fine) {
  const double ratio = coarse / fine;
  const double nearest = std::round(ratio);
  if (!(nearest >= 1.0) || std::abs(ratio - nearest) > 1e-9 * nearest) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "time step " << fine << " does not divide " << coarse;
    throw NotCommensurate(msg.str());
  }
  return static_cast<std::size_t>(nearest);
}

Trajectory run_on_grid(const RunConfig& config, double coarse_dt) {
  const std::size_t factor = commensurate_factor(coarse_dt, config.ip.dt);
  RunConfig fine = config;
  fine.storage_stride = factor;
  Trajectory traj = run_steps(fine, step_count(config.t_end, coarse_dt) * factor);
  traj.dt = coarse_dt;
  for (std::size_t i = 0; i < traj.states.size(); ++i)
    traj.states[i].t = static_cast<double>(i) * coarse_dt;
  return traj;
}

Trajectory run_benchmark(const RunConfig& config, double dt_ref) {
  RunConfig bench = config;
  bench.ip.alpha = 1.0;
  bench.ip.beta = 1.0;
  bench.ip.dt = dt_ref;
  return run_on_grid(bench, config.ip.dt);
}

Trajectory subsample(const Trajectory& traj, std::size_t factor) {
  if (factor < 1) throw NotCommensurate("subsample factor must be >= 1");
  Trajectory out;
  out.dt = traj.dt * static_cast<double>(factor);
  for (std::size_t i = 0; i < traj.states.size(); i += factor) {
    State s = traj.states[i];
    s.t = static_cast<double>(i / factor) * out.dt;
    out.states.push_back(s);
    out.dissipated.push_back(traj.dissipated[i]);
    if (i > 0) out.diagnostics.push_back(traj.diagnostics[i - 1]);
  }
  return out;
}

}  // namespace vpsdof
