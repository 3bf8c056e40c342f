#include "vpsdof/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <sstream>

#include "vpsdof/errors.hpp"

namespace vpsdof {

namespace {

void check_same_grid(const Trajectory& a, const Trajectory& b) {
  std::ostringstream msg;
  msg.precision(17);
  if (a.size() != b.size()) {
    msg << "trajectories have " << a.size() << " and " << b.size()
        << " samples (dt " << a.dt << " and " << b.dt << ")";
    throw GridMismatch(msg.str());
  }
  if (std::abs(a.dt - b.dt) > 1e-9 * std::max(a.dt, b.dt)) {
    msg << "trajectories use dt " << a.dt << " and " << b.dt;
    throw GridMismatch(msg.str());
  }
  const double tol = 1e-9 * a.dt;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a.states[i].t - b.states[i].t) > tol) {
      msg << "sample " << i << " is at t = " << a.states[i].t << " and "
          << b.states[i].t;
      throw GridMismatch(msg.str());
    }
  }
}

}  // namespace

ErrorReport error_norm(const Trajectory& traj, const Trajectory& ref) {
  check_same_grid(traj, ref);
  if (traj.size() < 2)
    throw GridMismatch("error norm needs at least one step after t = 0");

  double sum_u = 0.0;
  double sum_v = 0.0;
  for (std::size_t i = 1; i < traj.size(); ++i) {
    const double du = traj.states[i].u - ref.states[i].u;
    const double dv = traj.states[i].v - ref.states[i].v;
    sum_u += du * du;
    sum_v += dv * dv;
  }
  ErrorReport r;
  r.M = traj.size() - 1;
  r.dt = traj.dt;
  const double M = static_cast<double>(r.M);
  r.e_u = std::sqrt(sum_u) / M;
  r.e_v = std::sqrt(sum_v) / M;
  r.rms_u = std::sqrt(sum_u / M);
  r.rms_v = std::sqrt(sum_v / M);
  return r;
}

double observed_order(std::span<const double> dts,
                      std::span<const double> errors) {
  if (dts.size() != errors.size() || dts.size() < 2)
    throw std::invalid_argument("observed_order needs two or more pairs");
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < dts.size(); ++i)
    total += std::log(errors[i] / errors[i + 1]) / std::log(dts[i] / dts[i + 1]);
  return total / static_cast<double>(dts.size() - 1);
}

ConvergenceReport make_convergence_report(
    std::vector<ConvergenceEntry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.dt > b.dt; });
  ConvergenceReport report;
  report.entries = std::move(entries);
  if (report.entries.size() < 2) return report;

  const auto column = [&](auto member) {
    std::vector<double> out;
    for (const auto& e : report.entries) out.push_back(e.*member);
    return out;
  };
  const std::vector<double> dts = column(&ConvergenceEntry::dt);
  report.observed_order_u = observed_order(dts, column(&ConvergenceEntry::e_u));
  report.observed_order_v = observed_order(dts, column(&ConvergenceEntry::e_v));
  report.rms_order_u = observed_order(dts, column(&ConvergenceEntry::rms_u));
  report.rms_order_v = observed_order(dts, column(&ConvergenceEntry::rms_v));
  report.has_order = true;
  return report;
}

ConvergenceReport convergence_study(const RunConfig& base,
                                    std::span<const double> dts,
                                    double dt_ref) {
  base.validate();
  if (dts.empty()) return {};

  std::vector<std::size_t> factors;
  std::vector<std::size_t> steps;
  std::size_t stride = 0;
  std::size_t ref_steps = 0;
  for (double dt : dts) {
    const std::size_t f = commensurate_factor(dt, dt_ref);
    const std::size_t n = step_count(base.t_end, dt);
    factors.push_back(f);
    steps.push_back(n);
    stride = std::gcd(stride, f);
    ref_steps = std::max(ref_steps, n * f);
  }

  RunConfig ref_config = base;
  ref_config.ip.alpha = 1.0;
  ref_config.ip.beta = 1.0;
  ref_config.ip.dt = dt_ref;
  ref_config.storage_stride = stride;
  auto ref_future = std::async(std::launch::async, [&] {
    return run_steps(ref_config, ref_steps);
  });

  std::vector<std::future<Trajectory>> runs;
  for (std::size_t i = 0; i < dts.size(); ++i) {
    RunConfig c = base;
    c.ip.dt = dts[i];
    c.storage_stride = 1;
    runs.push_back(std::async(std::launch::async, [c] { return run(c); }));
  }

  const Trajectory ref = ref_future.get();
  std::vector<ConvergenceEntry> entries;
  for (std::size_t i = 0; i < dts.size(); ++i) {
    Trajectory coarse_ref = subsample(ref, factors[i] / stride);
    coarse_ref.states.resize(steps[i] + 1);
    coarse_ref.dissipated.resize(steps[i] + 1);
    coarse_ref.diagnostics.resize(steps[i]);
    coarse_ref.dt = dts[i];
    for (std::size_t j = 0; j < coarse_ref.size(); ++j)
      coarse_ref.states[j].t = static_cast<double>(j) * dts[i];

    const ErrorReport e = error_norm(runs[i].get(), coarse_ref);
    entries.push_back({dts[i], e.e_u, e.e_v, e.rms_u, e.rms_v});
  }
  return make_convergence_report(std::move(entries));
}

double dissipated_energy_total(const Trajectory& traj) {
  return traj.dissipated.empty() ? 0.0 : traj.dissipated.back();
}

double energy_balance_residual(const Trajectory& traj,
                               const ForcingSpec& forcing,
                               const SystemParams& sys) {
  if (traj.states.empty()) return 0.0;
  const auto mechanical = [&](const State& s) {
    return 0.5 * sys.mass * s.v * s.v + 0.5 * sys.stiffness * s.u * s.u;
  };
  double work = 0.0;
  for (std::size_t i = 1; i < traj.size(); ++i) {
    const State& a = traj.states[i - 1];
    const State& b = traj.states[i];
    work += 0.5 * traj.dt *
            (eval_forcing(forcing, a.t) * a.v + eval_forcing(forcing, b.t) * b.v);
  }
  return std::abs(mechanical(traj.states.back()) -
                  mechanical(traj.states.front()) +
                  dissipated_energy_total(traj) - work);
}

}  // namespace vpsdof
