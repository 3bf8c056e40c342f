#pragma once

// Two-parameter generalized trapezoidal step for the index-reduced system
//
//   m dv/dt   = f_ext - f_s - f_d
//   df_s/dt   = k v
//   v         = phi(f_d)
//
// alpha weights the momentum balance, beta the spring rate equation.
// alpha = beta = 1 is implicit Euler; alpha = 1, beta = 0 treats the spring
// explicitly.

#include "vpsdof/constitutive.hpp"
#include "vpsdof/rootfind.hpp"

namespace vpsdof {

struct IntegratorParams {
  double dt = 1e-4;
  double alpha = 1.0;  // (0, 1]
  double beta = 1.0;   // [0, 1]
  SolverControls controls;

  /// Throws ValidationError naming "integrator.<field>".
  void validate() const;

  friend bool operator==(const IntegratorParams&, const IntegratorParams&) = default;
};

/// One time level. u is always recovered as f_s / k.
struct State {
  double t = 0.0;
  double u = 0.0;
  double v = 0.0;
  double f_s = 0.0;
  double f_d = 0.0;

  friend bool operator==(const State&, const State&) = default;
};

struct StepDiagnostics {
  double predictor = 0.0;
  bool yielded = false;
  int solver_iterations = 0;

  friend bool operator==(const StepDiagnostics&,
                         const StepDiagnostics&) = default;
};

struct StepResult {
  State state;
  StepDiagnostics diagnostics;
};

struct DashpotSolve {
  double force = 0.0;
  RootResult root;
};

/// Scaled defects of the discrete momentum balance, spring update and
/// constitutive relation for one step. Each is divided by one plus the
/// magnitudes of the terms entering it.
struct StepResiduals {
  double momentum = 0.0;
  double spring = 0.0;
  double constitutive = 0.0;
};

/// Purely elastic initial displacement; f_d chosen so that v0 = phi(f_d).
State initialize(const SystemParams& sys, const DashpotParams& dp, double u0,
                 double v0);

/// Trial force f_hat built from level-n data and the forcing at n and n+1.
/// Its magnitude against f_y decides between stick and slip.
double predictor(const SystemParams& sys, const IntegratorParams& ip,
                 const State& s, double f_ext_n, double f_ext_np1);

/// Closed-form dashpot force for N = 1 (requires |f_hat| > f_y).
/// Throws ValidationError for other exponents.
double solve_dashpot_linear(const SystemParams& sys, const DashpotParams& dp,
                            const IntegratorParams& ip, double f_hat);

/// Dashpot force for general N by safeguarded Newton on the bracket
/// [f_y sign(f_hat), f_hat], starting at f_y sign(f_hat).
/// The returned RootResult is expressed in force units.
DashpotSolve solve_dashpot_nonlinear(const SystemParams& sys,
                                     const DashpotParams& dp,
                                     const IntegratorParams& ip, double f_hat);

/// Advances `s` by one time step. The returned state carries t + dt.
StepResult step(const SystemParams& sys, const DashpotParams& dp,
                const IntegratorParams& ip, const State& s, double f_ext_n,
                double f_ext_np1);

StepResiduals discrete_residuals(const SystemParams& sys,
                                 const DashpotParams& dp,
                                 const IntegratorParams& ip, const State& s_n,
                                 const State& s_np1, double f_ext_n,
                                 double f_ext_np1);

}  // namespace vpsdof
