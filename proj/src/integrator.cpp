#include "vpsdof/integrator.hpp"

#include <algorithm>
#include <cmath>

#include "vpsdof/errors.hpp"

namespace vpsdof {

void IntegratorParams::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt))
    throw ValidationError("integrator.dt", "must be positive and finite");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw ValidationError("integrator.alpha", "must lie in (0, 1]");
  if (!(beta >= 0.0 && beta <= 1.0))
    throw ValidationError("integrator.beta", "must lie in [0, 1]");
  controls.validate();
}

namespace {

// The slip equation written for the plastic excess y = |f_d| - f_y >= 0:
//
//   lhs * gamma * y^N = rate * (|f_hat| - f_y - y)
//
// with lhs = 1 + alpha beta dt^2 k / m and rate = alpha dt / m.
struct SlipEquation {
  double lhs;
  double rate;
  double excess_max;  // |f_hat| - f_y

  SlipEquation(const SystemParams& sys, const DashpotParams& dp,
               const IntegratorParams& ip, double f_hat)
      : lhs(1.0 + ip.alpha * ip.beta * ip.dt * ip.dt * sys.stiffness /
                      sys.mass),
        rate(ip.alpha * ip.dt / sys.mass),
        excess_max(std::abs(f_hat) - dp.yield_force) {}
};

double linear_excess(const DashpotParams& dp, const SlipEquation& eq) {
  return eq.excess_max * eq.rate / (eq.lhs * dp.gamma + eq.rate);
}

struct ExcessSolve {
  double excess;
  RootResult root;
};

ExcessSolve nonlinear_excess(const SystemParams& sys, const DashpotParams& dp,
                             const IntegratorParams& ip, double f_hat,
                             const SlipEquation& eq) {
  const auto residual = [&](double y) {
    return eq.lhs * flow_rate(dp, y) - eq.rate * (eq.excess_max - y);
  };
  const auto derivative = [&](double y) {
    return eq.lhs * flow_rate_derivative(dp, y) + eq.rate;
  };

  SolverControls scaled = ip.controls;
  scaled.residual_tol *= 1.0 + std::abs(f_hat) * ip.alpha * ip.dt / sys.mass;
  scaled.step_tol *= 1.0 + std::abs(f_hat);
  // The guess y = 0 must never be accepted as a root: it would report a
  // yielded step with zero velocity.
  scaled.residual_tol =
      std::min(scaled.residual_tol, 0.5 * eq.rate * eq.excess_max);

  RootResult r =
      solve_bracketed(residual, derivative, 0.0, eq.excess_max, 0.0, scaled);
  return {r.root, r};
}

}  // namespace

State initialize(const SystemParams& sys, const DashpotParams& dp, double u0,
                 double v0) {
  return State{0.0, u0, v0, sys.stiffness * u0, invert_phi(dp, v0)};
}

double predictor(const SystemParams& sys, const IntegratorParams& ip,
                 const State& s, double f_ext_n, double f_ext_np1) {
  const double inv_alpha = 1.0 / ip.alpha;
  const double lag = inv_alpha - 1.0;
  const double k = sys.stiffness;
  return f_ext_np1 + lag * f_ext_n - inv_alpha * s.f_s - lag * s.f_d +
         (sys.mass / (ip.alpha * ip.dt) - k * ip.dt * (1.0 - ip.beta)) * s.v;
}

double solve_dashpot_linear(const SystemParams& sys, const DashpotParams& dp,
                            const IntegratorParams& ip, double f_hat) {
  if (dp.exponent != 1.0)
    throw ValidationError("dashpot.exponent",
                          "closed-form dashpot solve requires exponent 1");
  const SlipEquation eq(sys, dp, ip, f_hat);
  return sign(f_hat) * (dp.yield_force + linear_excess(dp, eq));
}

DashpotSolve solve_dashpot_nonlinear(const SystemParams& sys,
                                     const DashpotParams& dp,
                                     const IntegratorParams& ip,
                                     double f_hat) {
  const SlipEquation eq(sys, dp, ip, f_hat);
  if (!(eq.excess_max > 0.0))
    throw NoBracket("predictor does not exceed the yield force");
  ExcessSolve solved = nonlinear_excess(sys, dp, ip, f_hat, eq);
  const double s = sign(f_hat);
  RootResult root = solved.root;
  root.root = s * (dp.yield_force + solved.excess);
  root.final_residual *= s;
  return {root.root, root};
}

StepResult step(const SystemParams& sys, const DashpotParams& dp,
                const IntegratorParams& ip, const State& s, double f_ext_n,
                double f_ext_np1) {
  StepResult out;
  StepDiagnostics& diag = out.diagnostics;
  State& next = out.state;

  const double f_hat = predictor(sys, ip, s, f_ext_n, f_ext_np1);
  diag.predictor = f_hat;

  if (std::abs(f_hat) <= dp.yield_force) {
    next.v = 0.0;
    next.f_d = f_hat;
  } else {
    diag.yielded = true;
    const SlipEquation eq(sys, dp, ip, f_hat);
    double excess = 0.0;
    if (dp.exponent == 1.0) {
      excess = linear_excess(dp, eq);
    } else {
      const ExcessSolve solved = nonlinear_excess(sys, dp, ip, f_hat, eq);
      excess = solved.excess;
      diag.solver_iterations = solved.root.iterations;
    }
    const double dir = sign(f_hat);
    next.f_d = dir * (dp.yield_force + excess);
    next.v = dir * flow_rate(dp, excess);
  }

  const double k = sys.stiffness;
  next.f_s = s.f_s + k * ip.dt * ((1.0 - ip.beta) * s.v + ip.beta * next.v);
  next.u = next.f_s / k;
  next.t = s.t + ip.dt;
  return out;
}

StepResiduals discrete_residuals(const SystemParams& sys,
                                 const DashpotParams& dp,
                                 const IntegratorParams& ip, const State& s_n,
                                 const State& s_np1, double f_ext_n,
                                 double f_ext_np1) {
  const double a = ip.alpha;
  const double b = ip.beta;
  const double h = ip.dt;
  const double m = sys.mass;
  const double k = sys.stiffness;

  StepResiduals r;

  const double net_n = f_ext_n - s_n.f_s - s_n.f_d;
  const double net_np1 = f_ext_np1 - s_np1.f_s - s_np1.f_d;
  const double momentum =
      s_np1.v - s_n.v - h / m * ((1.0 - a) * net_n + a * net_np1);
  const double momentum_scale =
      1.0 + std::abs(s_np1.v) + std::abs(s_n.v) +
      h / m *
          ((1.0 - a) * (std::abs(f_ext_n) + std::abs(s_n.f_s) +
                        std::abs(s_n.f_d)) +
           a * (std::abs(f_ext_np1) + std::abs(s_np1.f_s) +
                std::abs(s_np1.f_d)));
  r.momentum = momentum / momentum_scale;

  const double spring =
      s_np1.f_s - s_n.f_s - k * h * ((1.0 - b) * s_n.v + b * s_np1.v);
  const double spring_scale = 1.0 + std::abs(s_np1.f_s) + std::abs(s_n.f_s) +
                              k * h * (std::abs(s_n.v) + std::abs(s_np1.v));
  r.spring = spring / spring_scale;

  r.constitutive =
      (s_np1.v - phi(dp, s_np1.f_d)) / (1.0 + std::abs(s_np1.v));
  return r;
}

}  // namespace vpsdof
