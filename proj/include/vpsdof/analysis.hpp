#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "vpsdof/simulate.hpp"

namespace vpsdof {

/// e_p = sqrt(sum_i (p_i - p_ref_i)^2) / M over the M samples after the
/// initial one. rms_* is the per-sample root mean square, e_p * sqrt(M).
struct ErrorReport {
  double e_u = 0.0;
  double e_v = 0.0;
  std::size_t M = 0;
  double dt = 0.0;
  double rms_u = 0.0;
  double rms_v = 0.0;
};

struct ConvergenceEntry {
  double dt = 0.0;
  double e_u = 0.0;
  double e_v = 0.0;
  double rms_u = 0.0;
  double rms_v = 0.0;
};

struct ConvergenceReport {
  std::vector<ConvergenceEntry> entries;  // decreasing dt
  double observed_order_u = 0.0;
  double observed_order_v = 0.0;
  bool has_order = false;
  // Same fit applied to the per-sample RMS errors.
  double rms_order_u = 0.0;
  double rms_order_v = 0.0;
};

/// Throws GridMismatch on differing lengths, time steps or time stamps.
ErrorReport error_norm(const Trajectory& traj, const Trajectory& ref);

/// Mean of log(e_k / e_{k+1}) / log(dt_k / dt_{k+1}) over successive
/// entries (log2 of the error ratio for halvings). Entries must be sorted by
/// decreasing dt and number at least two.
double observed_order(std::span<const double> dts,
                      std::span<const double> errors);

/// Sorts entries by decreasing dt and fits the orders when there are at
/// least two.
ConvergenceReport make_convergence_report(std::vector<ConvergenceEntry> entries);

/// One implicit Euler reference run at dt_ref, one run of `base` per dt.
/// The per-dt runs execute concurrently.
ConvergenceReport convergence_study(const RunConfig& base,
                                    std::span<const double> dts,
                                    double dt_ref);

double dissipated_energy_total(const Trajectory& traj);

/// |[m v^2 / 2 + k u^2 / 2] from 0 to T + E_d(T) - W_ext(T)| where W_ext is
/// the trapezoidal integral of f_ext * v over the stored samples.
double energy_balance_residual(const Trajectory& traj,
                               const ForcingSpec& forcing,
                               const SystemParams& sys);

}  // namespace vpsdof
